//! Strongly connected components, condensation, and periods.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

/// Partition of the vertices into strongly connected components together
/// with the condensation DAG.
///
/// Components are numbered in order of their smallest vertex index, so the
/// numbering depends only on the vertex order of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    component_of: Vec<usize>,
    components: Vec<Vec<usize>>,
    dag_edges: BTreeSet<(usize, usize)>,
    has_internal_edge: Vec<bool>,
}

impl SccDecomposition {
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn component_map(&self) -> &[usize] {
        &self.component_of
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &[usize] {
        &self.components[c]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Pairs `(i, j)`, `i != j`, such that an edge runs from component `i`
    /// into component `j`.
    pub fn dag_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.dag_edges
    }

    /// Whether component `c` contains an edge with both ends inside it, i.e.
    /// whether it carries a cycle.
    pub fn has_internal_edge(&self, c: usize) -> bool {
        self.has_internal_edge[c]
    }

    /// `reach[i][j]` is true iff component `j` can be reached from component
    /// `i` (reflexive).
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let k = self.len();
        let mut succ = vec![Vec::new(); k];
        for &(i, j) in &self.dag_edges {
            succ[i].push(j);
        }
        (0..k)
            .map(|start| {
                let mut seen = vec![false; k];
                seen[start] = true;
                let mut stack = vec![start];
                while let Some(c) = stack.pop() {
                    for &d in &succ[c] {
                        if !seen[d] {
                            seen[d] = true;
                            stack.push(d);
                        }
                    }
                }
                seen
            })
            .collect()
    }
}

/// Tarjan's algorithm without recursion. Returns the component of each
/// vertex, numbered by smallest member.
pub(crate) fn component_labels(adj: &[Vec<usize>]) -> (Vec<usize>, usize) {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw = vec![UNSEEN; n];
    let mut next_index = 0;
    let mut count = 0;
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, 0));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.1 < adj[v].len() {
                let w = adj[v][frame.1];
                frame.1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        raw[w] = count;
                        if w == v {
                            break;
                        }
                    }
                    count += 1;
                }
            }
        }
    }

    let mut renumber = vec![UNSEEN; count];
    let mut next = 0;
    let labels = raw
        .iter()
        .map(|&c| {
            if renumber[c] == UNSEEN {
                renumber[c] = next;
                next += 1;
            }
            renumber[c]
        })
        .collect();
    (labels, count)
}

pub(crate) fn decompose_adjacency(adj: &[Vec<usize>]) -> SccDecomposition {
    let (component_of, count) = component_labels(adj);
    let mut components = vec![Vec::new(); count];
    for (v, &c) in component_of.iter().enumerate() {
        components[c].push(v);
    }
    let mut dag_edges = BTreeSet::new();
    let mut has_internal_edge = vec![false; count];
    for (u, succ) in adj.iter().enumerate() {
        for &v in succ {
            let (cu, cv) = (component_of[u], component_of[v]);
            if cu == cv {
                has_internal_edge[cu] = true;
            } else {
                dag_edges.insert((cu, cv));
            }
        }
    }
    SccDecomposition { component_of, components, dag_edges, has_internal_edge }
}

pub fn scc(g: &LabelledGraph) -> SccDecomposition {
    decompose_adjacency(&g.adjacency())
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Period of a strongly connected component: the largest `n` admitting a
/// cyclic partition `V_0, ..., V_{n-1}` with every internal edge going from
/// some `V_k` to `V_{k+1 mod n}`. A result of 1 means aperiodic.
///
/// Computed from a BFS levelling as the gcd of `level(u) + 1 - level(v)`
/// over the internal edges `u -> v`.
pub fn period(g: &LabelledGraph, component: &[usize]) -> Result<u64> {
    let n = g.vertex_count();
    let Some(&start) = component.first() else {
        return Err(Error::NotStronglyConnected);
    };
    let mut inside = vec![false; n];
    for &v in component {
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        inside[v] = true;
    }
    let sub = g.induced(&inside);
    let (_, count) = component_labels(&sub.adjacency());
    if count != 1 {
        return Err(Error::NotStronglyConnected);
    }
    if sub.edge_count() == 0 {
        return Err(Error::NoInternalEdge);
    }

    let mut level = vec![u64::MAX; n];
    level[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for e in g.out_edges(u) {
            if inside[e.target] && level[e.target] == u64::MAX {
                level[e.target] = level[u] + 1;
                queue.push_back(e.target);
            }
        }
    }

    let p = g
        .edges()
        .iter()
        .filter(|e| inside[e.source] && inside[e.target])
        .fold(0, |acc, e| gcd(acc, (level[e.source] + 1).abs_diff(level[e.target])));
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn graph(text: &str) -> LabelledGraph {
        parse_graph(text).unwrap()
    }

    #[test]
    fn two_cycle_is_one_component() {
        let g = graph("alphabet: a b\nvertices: p q\nedge: p a q\nedge: q b p\n");
        let d = scc(&g);
        assert_eq!(d.components(), [vec![0, 1]]);
        assert!(d.dag_edges().is_empty());
        assert_eq!(period(&g, &[0, 1]), Ok(2));
    }

    #[test]
    fn chain_of_loops() {
        let g = graph("alphabet: a b c\nvertices: u v\nedge: u a u\nedge: u c v\nedge: v b v\n");
        let d = scc(&g);
        assert_eq!(d.components(), [vec![0], vec![1]]);
        assert_eq!(d.dag_edges().iter().copied().collect::<Vec<_>>(), [(0, 1)]);
        assert_eq!(d.reachability(), vec![vec![true, true], vec![false, true]]);
    }

    #[test]
    fn disjoint_loops() {
        let g = graph("alphabet: a b\nvertices: u v\nedge: u a u\nedge: v b v\n");
        let d = scc(&g);
        assert_eq!(d.len(), 2);
        assert!(d.dag_edges().is_empty());
    }

    #[test]
    fn loopless_singletons_are_components() {
        let g = graph("alphabet: a\nvertices: p q r\nedge: p a q\nedge: q a r\n");
        let d = scc(&g);
        assert_eq!(d.len(), 3);
        assert!((0..3).all(|c| !d.has_internal_edge(c)));
        assert_eq!(period(&g, &[1]), Err(Error::NoInternalEdge));
    }

    #[test]
    fn numbering_follows_vertex_order() {
        // vertex 2 sits in a sink reached first by Tarjan, still numbered last
        let g = graph("alphabet: a\nvertices: x y z\nedge: x a z\nedge: z a z\nedge: y a y\n");
        let d = scc(&g);
        assert_eq!(d.component_map(), [0, 1, 2]);
    }

    #[test]
    fn periods() {
        let loop1 = graph("alphabet: a\nvertices: q\nedge: q a q\n");
        assert_eq!(period(&loop1, &[0]), Ok(1));
        // triangle with a chord closing a 2-cycle
        let tri = graph("alphabet: a\nvertices: x y z\nedge: x a y\nedge: y a z\nedge: z a x\nedge: y a x\n");
        assert_eq!(period(&tri, &[0, 1, 2]), Ok(1));
        let six = graph(
            "alphabet: a\nvertices: 0 1 2 3 4 5\nedge: 0 a 1\nedge: 1 a 2\nedge: 2 a 3\nedge: 3 a 4\nedge: 4 a 5\nedge: 5 a 0\nedge: 2 a 0\n",
        );
        // cycles of length 6 and 3
        assert_eq!(period(&six, &[0, 1, 2, 3, 4, 5]), Ok(3));
    }

    #[test]
    fn period_rejects_non_components() {
        let g = graph("alphabet: a b c\nvertices: u v\nedge: u a u\nedge: u c v\nedge: v b v\n");
        assert_eq!(period(&g, &[0, 1]), Err(Error::NotStronglyConnected));
        assert_eq!(period(&g, &[]), Err(Error::NotStronglyConnected));
    }
}
