//! Decision procedures on the linking graph: chain-transitivity,
//! chain-mixing, attractors, and the chain relation between eventually
//! periodic points.
//!
//! Orientation: component `K` is "above" `L` (`L <= K`) when `K` can be
//! reached from `L`. Everything here is phrased through
//! [`LinkingGraph::reaches`] to avoid sign confusion, so `ω(x) <= α(y)` reads
//! "`α(y)` is reachable from `ω(x)`".

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;
use crate::linking::{linking_graph, LinkingGraph};
use crate::point::{shift_relation, EventuallyPeriodicPoint};
use crate::scc::period;

/// A nonempty terminal subgraph `H` of `G/≈` and its preimage `π⁻¹(H)`;
/// the attractor is the subshift presented by the preimage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttractorDescriptor {
    /// Quotient vertex indices, ascending.
    pub quotient_vertices: Vec<usize>,
    /// Vertex indices of `G`, ascending.
    pub preimage_vertices: Vec<usize>,
    pub is_whole: bool,
}

/// Quotient components where presentations of a point begin (`alpha`) and
/// end (`omega`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointEnds {
    pub alpha: usize,
    pub omega: usize,
}

/// An essential, nonempty graph together with its linking graph.
#[derive(Debug, Clone)]
pub struct Analysis {
    graph: LabelledGraph,
    linking: LinkingGraph,
}

impl Analysis {
    pub fn new(g: &LabelledGraph) -> Result<Self> {
        g.require_essential()?;
        Ok(Analysis { graph: g.clone(), linking: linking_graph(g)? })
    }

    pub fn graph(&self) -> &LabelledGraph {
        &self.graph
    }

    pub fn linking(&self) -> &LinkingGraph {
        &self.linking
    }

    /// `G/≈` is strongly connected.
    pub fn is_chain_transitive(&self) -> bool {
        self.linking.scc().len() == 1
    }

    /// Period of `G/≈` when it is strongly connected.
    pub fn quotient_period(&self) -> Option<u64> {
        if !self.is_chain_transitive() {
            return None;
        }
        let q = self.linking.quotient();
        let all: Vec<usize> = (0..q.vertex_count()).collect();
        // an essential nonempty G leaves an edge inside a connected quotient
        Some(period(q, &all).expect("connected quotient of an essential graph has an edge"))
    }

    /// `G/≈` is strongly connected and aperiodic.
    pub fn is_chain_mixing(&self) -> bool {
        self.quotient_period() == Some(1)
    }

    /// All nonempty terminal subgraphs of `G/≈`, i.e. the nonempty unions of
    /// quotient components closed under successors, ordered by size and then
    /// by vertex list.
    pub fn attractors(&self) -> Vec<AttractorDescriptor> {
        let d = self.linking.scc();
        let k = d.len();
        let mut succ = vec![Vec::new(); k];
        let mut indegree = vec![0usize; k];
        for &(i, j) in d.dag_edges() {
            succ[i].push(j);
            indegree[j] += 1;
        }
        // Kahn order, reversed so successors are decided first.
        let mut order = Vec::with_capacity(k);
        let mut ready: Vec<usize> = (0..k).filter(|&c| indegree[c] == 0).collect();
        while let Some(c) = ready.pop() {
            order.push(c);
            for &s in &succ[c] {
                indegree[s] -= 1;
                if indegree[s] == 0 {
                    ready.push(s);
                }
            }
        }
        order.reverse();

        let mut found = Vec::new();
        let mut chosen = vec![false; k];
        closed_sets(&order, &succ, &mut chosen, &mut found);

        let mut out: Vec<AttractorDescriptor> = found
            .into_iter()
            .map(|comps| {
                let mut quotient_vertices: Vec<usize> =
                    comps.iter().flat_map(|&c| d.component(c).iter().copied()).collect();
                quotient_vertices.sort_unstable();
                let mut preimage_vertices: Vec<usize> =
                    quotient_vertices.iter().flat_map(|&x| self.linking.members(x).iter().copied()).collect();
                preimage_vertices.sort_unstable();
                AttractorDescriptor { is_whole: comps.len() == k, quotient_vertices, preimage_vertices }
            })
            .collect();
        out.sort_by(|a, b| {
            (a.quotient_vertices.len(), &a.quotient_vertices).cmp(&(b.quotient_vertices.len(), &b.quotient_vertices))
        });
        out
    }

    /// Structural chain-invariance: every component reachable from a
    /// component meeting the attractor lies inside it.
    pub fn check_chain_invariance(&self, att: &AttractorDescriptor) -> bool {
        let q = self.linking.quotient().vertex_count();
        let mut inside = vec![false; q];
        for &x in &att.quotient_vertices {
            if x >= q {
                return false;
            }
            inside[x] = true;
        }
        let d = self.linking.scc();
        let touched: Vec<usize> = (0..d.len()).filter(|&c| d.component(c).iter().any(|&x| inside[x])).collect();
        touched.iter().all(|&c| {
            (0..d.len()).filter(|&e| self.linking.reaches(c, e)).all(|e| d.component(e).iter().all(|&x| inside[x]))
        })
    }

    /// `α(x)` and `ω(x)`, or [`Error::NotInShift`] if `x` has no
    /// biinfinite presentation.
    pub fn point_ends(&self, x: &EventuallyPeriodicPoint) -> Result<PointEnds> {
        let g = &self.graph;
        let encode = |w: &[String]| g.encode_word(w).ok_or(Error::NotInShift);
        let left = encode(x.left_period())?;
        let center = encode(x.center())?;
        let right = encode(x.right_period())?;

        let left_rel = word_relation(g, &left);
        let right_rel = word_relation(g, &right);
        let center_rel = word_relation(g, &center);
        let n = g.vertex_count();

        // q can start right^∞ iff it has a right-step into the set (greatest fixpoint)
        let right_ok = greatest_fixpoint(n, |q, set| (0..n).any(|r| set[r] && right_rel[q][r]));
        // q can end ...left left iff some left-step from the set arrives at q
        let left_ok = greatest_fixpoint(n, |q, set| (0..n).any(|r| set[r] && left_rel[r][q]));

        let (start, end) = (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .find(|&(p, q)| left_ok[p] && right_ok[q] && center_rel[p][q])
            .ok_or(Error::NotInShift)?;

        let omega_vertex = lasso_cycle_vertex(end, |cur| {
            (0..n).find(|&r| right_ok[r] && right_rel[cur][r]).expect("fixpoint has a successor")
        });
        let alpha_vertex = lasso_cycle_vertex(start, |cur| {
            (0..n).find(|&r| left_ok[r] && left_rel[r][cur]).expect("fixpoint has a predecessor")
        });
        Ok(PointEnds {
            alpha: self.linking.component_of_vertex(alpha_vertex),
            omega: self.linking.component_of_vertex(omega_vertex),
        })
    }

    /// `(x, y)` is in the chain relation iff `ω(x) <= α(y)` or `y = σⁿ(x)`
    /// for some `n > 0`. Note that a non-periodic `x` with `ω(x)` strictly
    /// below `α(x)` is therefore not chain related to itself.
    pub fn chain_related(&self, x: &EventuallyPeriodicPoint, y: &EventuallyPeriodicPoint) -> Result<bool> {
        let ex = self.point_ends(x)?;
        let ey = self.point_ends(y)?;
        Ok(self.linking.reaches(ex.omega, ey.alpha) || shift_relation(x, y).is_some())
    }
}

fn closed_sets(order: &[usize], succ: &[Vec<usize>], chosen: &mut [bool], out: &mut Vec<Vec<usize>>) {
    fn go(pos: usize, order: &[usize], succ: &[Vec<usize>], chosen: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let Some(&c) = order.get(pos) else {
            let set: Vec<usize> = (0..chosen.len()).filter(|&i| chosen[i]).collect();
            if !set.is_empty() {
                out.push(set);
            }
            return;
        };
        go(pos + 1, order, succ, chosen, out);
        if succ[c].iter().all(|&s| chosen[s]) {
            chosen[c] = true;
            go(pos + 1, order, succ, chosen, out);
            chosen[c] = false;
        }
    }
    go(0, order, succ, chosen, out)
}

/// `rel[p][q]`: some walk from `p` to `q` spells `word`.
fn word_relation(g: &LabelledGraph, word: &[usize]) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n)
        .map(|p| {
            let mut cur = vec![false; n];
            cur[p] = true;
            for &a in word {
                let mut next = vec![false; n];
                for (v, _) in cur.iter().enumerate().filter(|(_, &on)| on) {
                    for e in g.out_edges(v).filter(|e| e.label == a) {
                        next[e.target] = true;
                    }
                }
                cur = next;
            }
            cur
        })
        .collect()
}

fn greatest_fixpoint(n: usize, keep: impl Fn(usize, &[bool]) -> bool) -> Vec<bool> {
    let mut set = vec![true; n];
    loop {
        let mut changed = false;
        for q in 0..n {
            if set[q] && !keep(q, &set) {
                set[q] = false;
                changed = true;
            }
        }
        if !changed {
            return set;
        }
    }
}

/// Follows `step` from `start` until a vertex repeats; returns a vertex on
/// the cycle.
fn lasso_cycle_vertex(start: usize, step: impl Fn(usize) -> usize) -> usize {
    let mut seen = std::collections::HashSet::new();
    let mut cur = start;
    while seen.insert(cur) {
        cur = step(cur);
    }
    cur
}

pub fn is_chain_transitive(g: &LabelledGraph) -> Result<bool> {
    Ok(Analysis::new(g)?.is_chain_transitive())
}

pub fn is_chain_mixing(g: &LabelledGraph) -> Result<bool> {
    Ok(Analysis::new(g)?.is_chain_mixing())
}

pub fn enumerate_attractors(g: &LabelledGraph) -> Result<Vec<AttractorDescriptor>> {
    Ok(Analysis::new(g)?.attractors())
}

pub fn point_ends(x: &EventuallyPeriodicPoint, g: &LabelledGraph) -> Result<PointEnds> {
    Analysis::new(g)?.point_ends(x)
}

pub fn chain_related(x: &EventuallyPeriodicPoint, y: &EventuallyPeriodicPoint, g: &LabelledGraph) -> Result<bool> {
    Analysis::new(g)?.chain_related(x, y)
}

pub fn check_chain_invariance(att: &AttractorDescriptor, g: &LabelledGraph) -> Result<bool> {
    Ok(Analysis::new(g)?.check_chain_invariance(att))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn g(text: &str) -> LabelledGraph {
        parse_graph(text).unwrap()
    }
    fn e1() -> LabelledGraph {
        g("alphabet: a\nvertices: q\nedge: q a q\n")
    }
    fn e2() -> LabelledGraph {
        g("alphabet: a b\nvertices: p q\nedge: p a q\nedge: q b p\n")
    }
    fn e3() -> LabelledGraph {
        g("alphabet: a\nvertices: u v\nedge: u a u\nedge: v a v\n")
    }
    fn e4() -> LabelledGraph {
        g("alphabet: a b\nvertices: u v\nedge: u a u\nedge: v b v\n")
    }
    fn e5() -> LabelledGraph {
        g("alphabet: a b c\nvertices: u v\nedge: u a u\nedge: u c v\nedge: v b v\n")
    }

    fn periodic(s: &str) -> EventuallyPeriodicPoint {
        EventuallyPeriodicPoint::periodic(s.chars().map(String::from)).unwrap()
    }

    fn acb(origin: i64) -> EventuallyPeriodicPoint {
        EventuallyPeriodicPoint::new(["a"], ["c"], ["b"], origin).unwrap()
    }

    #[test]
    fn transitivity_and_mixing() {
        let cases =
            [(e1(), true, true), (e2(), true, false), (e3(), true, true), (e4(), false, false), (e5(), false, false)];
        for (graph, transitive, mixing) in cases {
            let a = Analysis::new(&graph).unwrap();
            assert_eq!(a.is_chain_transitive(), transitive, "{graph}");
            assert_eq!(a.is_chain_mixing(), mixing, "{graph}");
        }
        assert_eq!(Analysis::new(&e2()).unwrap().quotient_period(), Some(2));
    }

    #[test]
    fn rejects_empty_and_inessential() {
        let empty = crate::graph::essentialize(&g("alphabet: a\nvertices: p\n"));
        assert_eq!(is_chain_transitive(&empty), Err(Error::EmptyGraph));
        let path = g("alphabet: a\nvertices: p q\nedge: p a q\nedge: q a q\n");
        assert_eq!(is_chain_mixing(&path), Err(Error::NotEssential("p".into())));
    }

    #[test]
    fn attractor_examples() {
        let a = enumerate_attractors(&e1()).unwrap();
        assert_eq!(a.len(), 1);
        assert!(a[0].is_whole);

        let a = enumerate_attractors(&e4()).unwrap();
        let sets: Vec<_> = a.iter().map(|x| x.quotient_vertices.clone()).collect();
        assert_eq!(sets, [vec![0], vec![1], vec![0, 1]]);
        assert_eq!(a.iter().filter(|x| x.is_whole).count(), 1);

        let a = enumerate_attractors(&e5()).unwrap();
        let sets: Vec<_> = a.iter().map(|x| x.quotient_vertices.clone()).collect();
        assert_eq!(sets, [vec![1], vec![0, 1]]);
        assert_eq!(a[0].preimage_vertices, [1]);
    }

    #[test]
    fn attractor_preimages_follow_projection() {
        // u and v merge; w hangs below them
        let h = g("alphabet: a b\nvertices: u v w\nedge: u a u\nedge: v a v\nedge: v b w\nedge: w b w\n");
        let a = enumerate_attractors(&h).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a[0].preimage_vertices, [2]);
        assert_eq!(a[1].preimage_vertices, [0, 1, 2]);
    }

    #[test]
    fn chain_invariance() {
        let an = Analysis::new(&e5()).unwrap();
        for att in an.attractors() {
            assert!(an.check_chain_invariance(&att));
        }
        let forced = AttractorDescriptor { quotient_vertices: vec![0], preimage_vertices: vec![0], is_whole: false };
        assert!(!an.check_chain_invariance(&forced));
    }

    #[test]
    fn ends_of_points() {
        let an = Analysis::new(&e5()).unwrap();
        let cu = an.linking().component_of_vertex(0);
        let cv = an.linking().component_of_vertex(1);
        assert_eq!(an.point_ends(&periodic("a")).unwrap(), PointEnds { alpha: cu, omega: cu });
        assert_eq!(an.point_ends(&periodic("b")).unwrap(), PointEnds { alpha: cv, omega: cv });
        assert_eq!(an.point_ends(&acb(0)).unwrap(), PointEnds { alpha: cu, omega: cv });
    }

    #[test]
    fn points_outside_the_shift() {
        let an = Analysis::new(&e5()).unwrap();
        let bca = EventuallyPeriodicPoint::new(["b"], ["c"], ["a"], 0).unwrap();
        assert_eq!(an.point_ends(&bca), Err(Error::NotInShift));
        assert_eq!(an.point_ends(&periodic("c")), Err(Error::NotInShift));
        assert_eq!(an.point_ends(&periodic("z")), Err(Error::NotInShift));
        let an2 = Analysis::new(&e2()).unwrap();
        assert_eq!(an2.point_ends(&periodic("a")), Err(Error::NotInShift));
        assert!(an2.point_ends(&periodic("ab")).is_ok());
    }

    #[test]
    fn chain_relation_examples() {
        let an = Analysis::new(&e5()).unwrap();
        assert!(an.chain_related(&periodic("a"), &periodic("b")).unwrap());
        assert!(!an.chain_related(&periodic("b"), &periodic("a")).unwrap());
        // ω(x) is v's component, α(σx) is u's: only the shift branch applies
        let x = acb(0);
        assert!(an.chain_related(&x, &x.shifted(1)).unwrap());
        assert!(!an.chain_related(&x, &x).unwrap());
        assert!(!an.chain_related(&x.shifted(1), &x).unwrap());

        let an1 = Analysis::new(&e1()).unwrap();
        assert!(an1.chain_related(&periodic("a"), &periodic("a")).unwrap());
    }
}
