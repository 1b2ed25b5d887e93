//! Brute-force ground truth taken straight from the language-level
//! definitions: membership by walking the graph, linkage by searching for a
//! long common restricted follower word, and chains as walks in a graph of
//! overlapping windows. None of it goes through the linking graph.
//!
//! Words are sequences of letter indices of the graph's alphabet.

mod numeric;
mod suite;
mod window;

pub use numeric::cofinite_threshold;
pub use suite::{cross_validate, word_phase, CheckOutcome, OracleBounds, ValidationReport};
pub use window::{chain_exists, chain_lengths, window_graph, ChainLengthSet, WindowGraph, DEFAULT_BUDGET};

use crate::graph::LabelledGraph;
use crate::scc::scc;

/// Whether `word` has a presentation in `g` (meaningful for essential `g`).
/// The empty word is always a member; letters outside the alphabet make the
/// word a non-member.
pub fn member(word: &[usize], g: &LabelledGraph) -> bool {
    let mut ends = vec![true; g.vertex_count()];
    for &a in word {
        if a >= g.alphabet().len() {
            return false;
        }
        let mut next = vec![false; g.vertex_count()];
        let mut any = false;
        for e in g.edges() {
            if e.label == a && ends[e.source] {
                next[e.target] = true;
                any = true;
            }
        }
        if !any {
            return false;
        }
        ends = next;
    }
    true
}

/// Whether `F(u) ∩ F(v)` is infinite, decided by looking for a common word
/// of length `|C_u|·|C_v|` presented inside the two components: a word that
/// long visits some vertex pair twice, so it pumps.
pub fn linked_oracle(u: usize, v: usize, g: &LabelledGraph) -> bool {
    let d = scc(g);
    let (cu, cv) = (d.component_of(u), d.component_of(v));
    let length = d.component(cu).len() * d.component(cv).len();
    let n = g.vertex_count();
    let mut layer = vec![(u, v)];
    for _ in 0..length {
        let mut seen = vec![false; n * n];
        let mut next = Vec::new();
        for &(p, q) in &layer {
            for ep in g.out_edges(p).filter(|e| d.component_of(e.target) == cu) {
                for eq in g.out_edges(q).filter(|e| d.component_of(e.target) == cv) {
                    if ep.label == eq.label && !seen[ep.target * n + eq.target] {
                        seen[ep.target * n + eq.target] = true;
                        next.push((ep.target, eq.target));
                    }
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        layer = next;
    }
    true
}
