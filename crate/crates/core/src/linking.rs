//! Label products, the linked relation `~`, and the linking graph `G/≈`.
//!
//! Two vertices are linked when their restricted follower sets (words
//! presented by walks that never leave the vertex's own component) share
//! infinitely many words. For `u` in component `C_i` and `v` in `C_j` that
//! happens exactly when `(u, v)` reaches a cycle of the label product
//! `C_i * C_j`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Edge, LabelledGraph};
use crate::scc::{decompose_adjacency, scc, SccDecomposition};

/// Synchronised product of two graphs over a common alphabet: an edge
/// `(u, v) -a-> (u', v')` for every pair of `a`-edges `u -> u'`, `v -> v'`.
///
/// Vertex `(u, v)` has index `u * right_len + v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelProduct {
    left_len: usize,
    right_len: usize,
    edges: Vec<Edge>,
}

impl LabelProduct {
    pub fn vertex_count(&self) -> usize {
        self.left_len * self.right_len
    }

    pub fn index(&self, u: usize, v: usize) -> usize {
        u * self.right_len + v
    }

    pub fn pair(&self, index: usize) -> (usize, usize) {
        (index / self.right_len, index % self.right_len)
    }

    /// Edges between pair indices.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            adj[e.source].push(e.target);
        }
        adj
    }
}

pub fn label_product(a: &LabelledGraph, b: &LabelledGraph) -> Result<LabelProduct> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let mut by_label = vec![Vec::new(); b.alphabet().len()];
    for e in b.edges() {
        by_label[e.label].push(e);
    }
    let right_len = b.vertex_count();
    let edges = a
        .edges()
        .iter()
        .flat_map(|ea| {
            by_label[ea.label].iter().map(move |eb| {
                Edge::new(ea.source * right_len + eb.source, ea.label, ea.target * right_len + eb.target)
            })
        })
        .collect();
    Ok(LabelProduct { left_len: a.vertex_count(), right_len, edges })
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}

/// The relation `~` and its equivalence closure `≈`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkedRelation {
    pairs: BTreeSet<(usize, usize)>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl LinkedRelation {
    fn from_pairs(n: usize, pairs: BTreeSet<(usize, usize)>) -> Self {
        let mut uf = UnionFind::new(n);
        for &(u, v) in &pairs {
            uf.union(u, v);
        }
        // Classes are numbered by their smallest member.
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut root_class = vec![usize::MAX; n];
        for (v, class) in class_of.iter_mut().enumerate() {
            let r = uf.find(v);
            if root_class[r] == usize::MAX {
                root_class[r] = classes.len();
                classes.push(Vec::new());
            }
            *class = root_class[r];
            classes[root_class[r]].push(v);
        }
        LinkedRelation { pairs, class_of, classes }
    }

    /// Whether `u ~ v`.
    pub fn is_linked(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&(u.min(v), u.max(v)))
    }

    /// Linked pairs as `(u, v)` with `u <= v`; `(v, v)` appears only when
    /// `v ~ v` holds, i.e. when `v` lies on a cycle of its component.
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    /// Whether `u ≈ v`.
    pub fn equivalent(&self, u: usize, v: usize) -> bool {
        self.class_of[u] == self.class_of[v]
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }
}

fn reaches_a_cycle(adj: &[Vec<usize>]) -> Vec<bool> {
    let d = decompose_adjacency(adj);
    let mut reverse = vec![Vec::new(); adj.len()];
    for (u, succ) in adj.iter().enumerate() {
        for &v in succ {
            reverse[v].push(u);
        }
    }
    let mut good: Vec<bool> = (0..adj.len()).map(|v| d.has_internal_edge(d.component_of(v))).collect();
    let mut queue: VecDeque<usize> = (0..adj.len()).filter(|&v| good[v]).collect();
    while let Some(v) = queue.pop_front() {
        for &u in &reverse[v] {
            if !good[u] {
                good[u] = true;
                queue.push_back(u);
            }
        }
    }
    good
}

/// Computes `~` component pair by component pair (including each component
/// with itself) and closes it into `≈`.
pub fn linked_pairs(g: &LabelledGraph) -> Result<LinkedRelation> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let d = scc(g);
    let parts: Vec<LabelledGraph> = d
        .components()
        .iter()
        .map(|members| {
            let mut keep = vec![false; g.vertex_count()];
            for &v in members {
                keep[v] = true;
            }
            g.induced(&keep)
        })
        .collect();

    let mut pairs = BTreeSet::new();
    for i in 0..parts.len() {
        if !d.has_internal_edge(i) {
            continue;
        }
        for j in i..parts.len() {
            if !d.has_internal_edge(j) {
                continue;
            }
            let product = label_product(&parts[i], &parts[j])?;
            let good = reaches_a_cycle(&product.adjacency());
            for (idx, _) in good.iter().enumerate().filter(|(_, &ok)| ok) {
                let (lu, lv) = product.pair(idx);
                let (u, v) = (d.component(i)[lu], d.component(j)[lv]);
                pairs.insert((u.min(v), u.max(v)));
            }
        }
    }
    Ok(LinkedRelation::from_pairs(g.vertex_count(), pairs))
}

/// `G/≈` with the projection `π` and the reachability order on the
/// components of the quotient.
#[derive(Debug, Clone)]
pub struct LinkingGraph {
    quotient: LabelledGraph,
    relation: LinkedRelation,
    scc: SccDecomposition,
    reach: Vec<Vec<bool>>,
}

impl LinkingGraph {
    pub fn quotient(&self) -> &LabelledGraph {
        &self.quotient
    }

    pub fn relation(&self) -> &LinkedRelation {
        &self.relation
    }

    /// `π(v)`: the quotient vertex of the class of `v`.
    pub fn project(&self, v: usize) -> usize {
        self.relation.class_of(v)
    }

    pub fn projection(&self) -> &[usize] {
        &self.relation.class_of
    }

    /// `π⁻¹(x)`.
    pub fn members(&self, x: usize) -> &[usize] {
        &self.relation.classes()[x]
    }

    pub fn scc(&self) -> &SccDecomposition {
        &self.scc
    }

    /// Quotient component containing `π(v)`.
    pub fn component_of_vertex(&self, v: usize) -> usize {
        self.scc.component_of(self.project(v))
    }

    /// Whether component `to` can be reached from component `from`. In the
    /// paper's notation this is `from <= to`.
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        self.reach[from][to]
    }

    /// All `(i, j)` with component `j` reachable from component `i`,
    /// including `i == j`, in lexicographic order.
    pub fn component_order(&self) -> Vec<(usize, usize)> {
        let k = self.scc.len();
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).filter(|&(i, j)| self.reach[i][j]).collect()
    }
}

pub fn linking_graph(g: &LabelledGraph) -> Result<LinkingGraph> {
    let relation = linked_pairs(g)?;
    let names: Vec<String> = relation
        .classes()
        .iter()
        .map(|members| {
            let least = members.iter().map(|&v| g.vertex_name(v)).min().expect("empty class");
            format!("[{least}]")
        })
        .collect();
    let edges = g.edges().iter().map(|e| Edge::new(relation.class_of(e.source), e.label, relation.class_of(e.target)));
    let quotient = LabelledGraph::from_indexed(g.alphabet().to_vec(), names, edges)?;
    let scc = scc(&quotient);
    let reach = scc.reachability();
    Ok(LinkingGraph { quotient, relation, scc, reach })
}
