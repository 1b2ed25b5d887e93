//! Chain relation, chain-transitivity, chain-mixing and attractors of sofic
//! subshifts, computed from a labelled-graph presentation through its
//! linking graph `G/≈`.
//!
//! ```
//! use sofic::{parse_graph, Analysis};
//!
//! let g = parse_graph("alphabet: a b\nvertices: p q\nedge: p a q\nedge: q b p\n").unwrap();
//! let a = Analysis::new(&g).unwrap();
//! assert!(a.is_chain_transitive());
//! assert!(!a.is_chain_mixing()); // the quotient has period 2
//! assert_eq!(a.attractors().len(), 1);
//! ```

pub mod analysis;
pub mod error;
pub mod graph;
pub mod linking;
pub mod oracle;
pub mod point;
pub mod report;
pub mod scc;

pub use analysis::{
    chain_related, check_chain_invariance, enumerate_attractors, is_chain_mixing, is_chain_transitive, point_ends,
    Analysis, AttractorDescriptor, PointEnds,
};
pub use error::{Error, Result};
pub use graph::{essentialize, export_dot, is_terminal, parse_graph, Edge, LabelledGraph};
pub use linking::{label_product, linked_pairs, linking_graph, LabelProduct, LinkedRelation, LinkingGraph};
pub use point::{shift_relation, EventuallyPeriodicPoint};
pub use report::Report;
pub use scc::{period, scc, SccDecomposition};
