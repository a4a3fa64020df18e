use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{ColoringError, EdgeColoring};
use crate::graph::Graph;
use crate::Color;

/// JSON form of a coloring: `{"n", "k", "edges": [[u, v], ...], "assignment"}`.
/// `assignment[i]` colors `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<[usize; 2]>,
    pub assignment: Vec<Color>,
}

impl ColoringDoc {
    pub fn from_json(text: &str) -> Result<Self, ColoringError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring document serializes")
    }

    pub fn graph(&self) -> Result<Graph, ColoringError> {
        Ok(Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)).collect())?)
    }

    pub fn into_coloring(self) -> Result<EdgeColoring, ColoringError> {
        let graph = Arc::new(self.graph()?);
        EdgeColoring::new(graph, self.k, self.assignment)
    }

    /// Builds the coloring over an existing graph, requiring the document's
    /// edge list to match it exactly.
    pub fn into_coloring_on(self, graph: Arc<Graph>) -> Result<EdgeColoring, ColoringError> {
        let same = self.n == graph.vertex_count()
            && self.edges.len() == graph.edge_count()
            && self
                .edges
                .iter()
                .zip(graph.edges())
                .all(|(&[u, v], &e)| (u.min(v), u.max(v)) == e);
        if !same {
            return Err(ColoringError::Graph(crate::graph::GraphError::InvalidFamily(
                "coloring document's graph differs from the selected graph".into(),
            )));
        }
        EdgeColoring::new(graph, self.k, self.assignment)
    }
}

impl From<&EdgeColoring> for ColoringDoc {
    fn from(c: &EdgeColoring) -> Self {
        ColoringDoc {
            n: c.graph().vertex_count(),
            k: c.k(),
            edges: c.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
            assignment: c.assignment().to_vec(),
        }
    }
}
