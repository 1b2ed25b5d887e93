#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sofic::{essentialize, parse_graph, Edge, LabelledGraph};

pub fn e1() -> LabelledGraph {
    parse_graph("alphabet: a\nvertices: q\nedge: q a q\n").unwrap()
}

pub fn e2() -> LabelledGraph {
    parse_graph("alphabet: a b\nvertices: p q\nedge: p a q\nedge: q b p\n").unwrap()
}

pub fn e3() -> LabelledGraph {
    parse_graph("alphabet: a\nvertices: u v\nedge: u a u\nedge: v a v\n").unwrap()
}

pub fn e4() -> LabelledGraph {
    parse_graph("alphabet: a b\nvertices: u v\nedge: u a u\nedge: v b v\n").unwrap()
}

pub fn e5() -> LabelledGraph {
    parse_graph("alphabet: a b c\nvertices: u v\nedge: u a u\nedge: u c v\nedge: v b v\n").unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn triples(edges: Vec<(usize, usize, usize)>) -> Vec<Edge> {
    edges.into_iter().map(|(source, label, target)| Edge { source, label, target }).collect()
}

fn letters(k: usize) -> Vec<String> {
    ["a", "b", "c", "d", "e"][..k].iter().map(|s| s.to_string()).collect()
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Random graph on `n` vertices over `k` letters, each possible edge kept
/// with probability `density`.
pub fn random_graph(rng: &mut impl Rng, n: usize, k: usize, density: f64) -> LabelledGraph {
    let mut edges = Vec::new();
    for s in 0..n {
        for a in 0..k {
            for t in 0..n {
                if rng.gen_bool(density) {
                    edges.push((s, a, t));
                }
            }
        }
    }
    LabelledGraph::from_indexed(letters(k), names("v", n), triples(edges)).unwrap()
}

/// Essential nonempty graph with at most `max_vertices` vertices and at most
/// `max_letters` letters.
pub fn random_essential(rng: &mut impl Rng, max_vertices: usize, max_letters: usize) -> LabelledGraph {
    loop {
        let n = rng.gen_range(1..=max_vertices);
        let k = rng.gen_range(1..=max_letters);
        let density = rng.gen_range(0.05..0.35);
        let g = essentialize(&random_graph(rng, n, k, density));
        if !g.is_empty() {
            return g;
        }
    }
}

/// Strongly connected graph: a labelled Hamiltonian cycle plus random chords.
pub fn random_strongly_connected(rng: &mut impl Rng, max_vertices: usize, max_letters: usize) -> LabelledGraph {
    let n = rng.gen_range(1..=max_vertices);
    let k = rng.gen_range(1..=max_letters);
    let mut edges: Vec<(usize, usize, usize)> = (0..n).map(|v| (v, rng.gen_range(0..k), (v + 1) % n)).collect();
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..k), rng.gen_range(0..n)));
    }
    LabelledGraph::from_indexed(letters(k), names("v", n), triples(edges)).unwrap()
}

/// Cycles of length `block_size`, each spelling powers of its own letter,
/// joined by random forward edges labelled with a shared connector letter.
/// Distinct blocks are never linked, so the quotient keeps `blocks`
/// components.
pub fn random_layered(rng: &mut impl Rng, blocks: usize, block_size: usize) -> LabelledGraph {
    let mut edges = Vec::new();
    let n = blocks * block_size;
    for b in 0..blocks {
        let base = b * block_size;
        for i in 0..block_size {
            edges.push((base + i, b + 1, base + (i + 1) % block_size));
        }
        for later in b + 1..blocks {
            if rng.gen_bool(0.3) {
                edges.push((base + rng.gen_range(0..block_size), 0, later * block_size));
            }
        }
    }
    let alphabet: Vec<String> = std::iter::once("x".to_string()).chain(names("c", blocks)).collect();
    LabelledGraph::from_indexed(alphabet, names("v", n), triples(edges)).unwrap()
}

/// All words over `k` letters of length `len`.
pub fn all_words(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// Whether some walk in `g` spells `word`, by depth-first enumeration.
pub fn naive_member(word: &[usize], g: &LabelledGraph) -> bool {
    fn go(g: &LabelledGraph, v: usize, rest: &[usize]) -> bool {
        match rest.split_first() {
            None => true,
            Some((&a, tail)) => g.out_edges(v).any(|e| e.label == a && go(g, e.target, tail)),
        }
    }
    word.is_empty() || (0..g.vertex_count()).any(|v| go(g, v, word))
}
