//! Serializable summary of an analysis, the JSON document printed by the CLI.

use serde::{Deserialize, Serialize};

use crate::analysis::{Analysis, AttractorDescriptor};
use crate::error::{Error, Result};
use crate::graph::{essentialize, LabelledGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Vertices dropped by essentialization, in input order.
    pub removed_vertices: Vec<String>,
    pub chain_transitive: bool,
    pub chain_mixing: bool,
    pub quotient: QuotientSection,
    pub attractors: Vec<AttractorEntry>,
    /// `[i, j]`: component `j` of the quotient is reachable from component `i`.
    pub component_order: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSection {
    pub vertices: Vec<String>,
    /// `[source, label, target]`
    pub edges: Vec<[String; 3]>,
    /// `[vertex of G, quotient vertex]`
    pub projection: Vec<[String; 2]>,
    /// Quotient components, indexed as in `component_order`.
    pub components: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttractorEntry {
    pub quotient_vertices: Vec<String>,
    pub preimage_vertices: Vec<String>,
}

impl AttractorEntry {
    pub fn new(att: &AttractorDescriptor, analysis: &Analysis) -> Self {
        let q = analysis.linking().quotient();
        let g = analysis.graph();
        AttractorEntry {
            quotient_vertices: att.quotient_vertices.iter().map(|&x| q.vertex_name(x).to_string()).collect(),
            preimage_vertices: att.preimage_vertices.iter().map(|&v| g.vertex_name(v).to_string()).collect(),
        }
    }
}

impl Report {
    /// Essentializes `g` and analyses what is left.
    pub fn from_graph(g: &LabelledGraph) -> Result<Self> {
        let ess = essentialize(g);
        if ess.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let removed = g.vertices().iter().filter(|v| ess.vertex_index(v).is_none()).cloned().collect();
        Ok(Self::from_analysis(&Analysis::new(&ess)?, removed))
    }

    pub fn from_analysis(analysis: &Analysis, removed_vertices: Vec<String>) -> Self {
        let lg = analysis.linking();
        let q = lg.quotient();
        let g = analysis.graph();
        let quotient = QuotientSection {
            vertices: q.vertices().to_vec(),
            edges: q
                .edges()
                .iter()
                .map(|e| {
                    [
                        q.vertex_name(e.source).to_string(),
                        q.letter_name(e.label).to_string(),
                        q.vertex_name(e.target).to_string(),
                    ]
                })
                .collect(),
            projection: (0..g.vertex_count())
                .map(|v| [g.vertex_name(v).to_string(), q.vertex_name(lg.project(v)).to_string()])
                .collect(),
            components: lg
                .scc()
                .components()
                .iter()
                .map(|c| c.iter().map(|&x| q.vertex_name(x).to_string()).collect())
                .collect(),
        };
        Report {
            removed_vertices,
            chain_transitive: analysis.is_chain_transitive(),
            chain_mixing: analysis.is_chain_mixing(),
            quotient,
            attractors: analysis.attractors().iter().map(|a| AttractorEntry::new(a, analysis)).collect(),
            component_order: lg.component_order().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
