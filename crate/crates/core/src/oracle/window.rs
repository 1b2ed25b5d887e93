use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

pub const DEFAULT_BUDGET: usize = 200_000;

/// Words of length `m` in the language, with an edge `w -> w'` whenever
/// `w[1..] == w'[..m-1]` and the overlapped word `w · w'[m-1]` of length
/// `m + 1` is in the language too (the order-`m` de Bruijn graph of the
/// language).
///
/// A walk of length `n` from `u` to `v` spells a word of length `n + m`
/// with prefix `u`, suffix `v` and every factor of length `<= m + 1` in the
/// language; in particular it is a chain of length `n` from `u` to `v`.
#[derive(Debug, Clone)]
pub struct WindowGraph {
    m: usize,
    nodes: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    succ: Vec<Vec<usize>>,
}

/// Builds the window graph by extending language words one letter at a
/// time, so only the language (not `|A|^m`) is explored. Every attempted
/// extension counts against `budget`.
pub fn window_graph(g: &LabelledGraph, m: usize, budget: usize) -> Result<WindowGraph> {
    if m == 0 {
        return Err(Error::Precondition("window length must be positive".into()));
    }
    g.require_essential()?;
    let k = g.alphabet().len();
    let mut spent = 0usize;
    let mut level: Vec<(Vec<usize>, Vec<bool>)> = vec![(Vec::new(), vec![true; g.vertex_count()])];
    for _ in 0..m {
        let mut next = Vec::new();
        for (word, ends) in &level {
            for a in 0..k {
                spent += 1;
                if spent > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                let mut reached = vec![false; g.vertex_count()];
                let mut any = false;
                for e in g.edges() {
                    if e.label == a && ends[e.source] {
                        reached[e.target] = true;
                        any = true;
                    }
                }
                if any {
                    let mut w = word.clone();
                    w.push(a);
                    next.push((w, reached));
                }
            }
        }
        level = next;
    }

    let nodes: Vec<Vec<usize>> = level.iter().map(|(w, _)| w.clone()).collect();
    let index: HashMap<Vec<usize>, usize> = nodes.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let succ = level
        .iter()
        .map(|(w, ends)| {
            (0..k)
                .filter(|&a| g.edges().iter().any(|e| e.label == a && ends[e.source]))
                .filter_map(|a| {
                    let mut shifted = w[1..].to_vec();
                    shifted.push(a);
                    index.get(&shifted).copied()
                })
                .collect()
        })
        .collect();
    Ok(WindowGraph { m, nodes, index, succ })
}

/// Chain lengths from `u` to `v` found up to `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLengthSet {
    pub achievable: BTreeSet<usize>,
    pub bound: usize,
}

impl ChainLengthSet {
    pub fn nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        self.achievable.iter().copied().filter(|&n| n > 0)
    }
}

impl WindowGraph {
    pub fn window_len(&self) -> usize {
        self.m
    }

    /// Windows in lexicographic order of letter indices.
    pub fn nodes(&self) -> &[Vec<usize>] {
        &self.nodes
    }

    pub fn node_index(&self, w: &[usize]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.succ[node]
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    fn endpoints(&self, u: &[usize], v: &[usize]) -> Result<(usize, usize)> {
        if u.len() != self.m || v.len() != self.m {
            return Err(Error::Precondition(format!("chain endpoints must both have length {}", self.m)));
        }
        let lookup = |w: &[usize]| {
            self.node_index(w).ok_or_else(|| Error::Precondition("chain endpoint is not in the language".into()))
        };
        Ok((lookup(u)?, lookup(v)?))
    }

    /// Whether a chain of length exactly `n` leads from `u` to `v`.
    pub fn chain_exists(&self, u: &[usize], v: &[usize], n: usize) -> Result<bool> {
        let (s, t) = self.endpoints(u, v)?;
        let mut layer = vec![false; self.nodes.len()];
        layer[s] = true;
        for _ in 0..n {
            layer = self.step(&layer);
        }
        Ok(layer[t])
    }

    /// All chain lengths `0..=bound` from `u` to `v`.
    pub fn chain_lengths(&self, u: &[usize], v: &[usize], bound: usize) -> Result<ChainLengthSet> {
        let (s, t) = self.endpoints(u, v)?;
        let mut achievable = BTreeSet::new();
        let mut layer = vec![false; self.nodes.len()];
        layer[s] = true;
        for n in 0..=bound {
            if layer[t] {
                achievable.insert(n);
            }
            if n < bound {
                layer = self.step(&layer);
            }
        }
        Ok(ChainLengthSet { achievable, bound })
    }

    /// Windows reachable from `from` by a walk of length at least 1.
    pub fn reachable_nonzero(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes.len()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in &self.succ[from] {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &s in &self.succ[x] {
                if !seen[s] {
                    seen[s] = true;
                    queue.push_back(s);
                }
            }
        }
        seen
    }

    fn step(&self, layer: &[bool]) -> Vec<bool> {
        let mut next = vec![false; layer.len()];
        for (x, _) in layer.iter().enumerate().filter(|(_, &on)| on) {
            for &s in &self.succ[x] {
                next[s] = true;
            }
        }
        next
    }
}

pub fn chain_exists(u: &[usize], v: &[usize], n: usize, g: &LabelledGraph) -> Result<bool> {
    window_graph(g, u.len(), DEFAULT_BUDGET)?.chain_exists(u, v, n)
}

pub fn chain_lengths(u: &[usize], v: &[usize], bound: usize, g: &LabelledGraph) -> Result<ChainLengthSet> {
    window_graph(g, u.len(), DEFAULT_BUDGET)?.chain_lengths(u, v, bound)
}
