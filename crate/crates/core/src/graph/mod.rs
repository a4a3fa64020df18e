//! Immutable simple graphs with dense vertex and edge indices.

mod edge_list;
mod family;

pub use edge_list::{read_edge_list, write_edge_list};
pub use family::{generate, Family};

use std::collections::HashSet;

use thiserror::Error;

use crate::{EdgeId, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A simple undirected graph. Edge ids are positions in the edge list and
/// vertex ids are `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    incidence: Vec<Vec<(EdgeId, Vertex)>>,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph, keeping the input edge order. Each edge is stored as
    /// `(min, max)`.
    pub fn new(n: usize, mut edges: Vec<(Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut incidence = vec![Vec::new(); n];
        for (id, edge) in edges.iter_mut().enumerate() {
            let (u, v) = *edge;
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            *edge = (u.min(v), u.max(v));
            incidence[u].push((id, v));
            incidence[v].push((id, u));
        }
        let max_degree = incidence.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Self {
            n,
            edges,
            incidence,
            max_degree,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Endpoints of `e` as `(smaller, larger)`.
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Incident `(edge, neighbor)` pairs of `v`, in increasing edge-id order.
    pub fn incident(&self, v: Vertex) -> &[(EdgeId, Vertex)] {
        &self.incidence[v]
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let (small, other) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.incidence[small]
            .iter()
            .find(|&&(_, w)| w == other)
            .map(|&(e, _)| e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.incident(1), &[(0, 0), (1, 2)]);
        assert_eq!(g.edge_between(2, 0), Some(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(2, vec![(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(4, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange(0, 2, 2))
        );
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new(3, vec![]).unwrap();
        assert_eq!(g.max_degree(), 0);
        assert!(g.incident(2).is_empty());
    }
}
