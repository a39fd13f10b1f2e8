//! Recognizers for extremal classes and reducible configurations, plus
//! degree statistics and lemma-bound evaluators.

mod bad;
mod reducible;
mod stats;

use thiserror::Error;

use crate::graph::{threads, Graph, Vertex};

pub use bad::{find_bad_structure, in_class_h, BadStructureWitness, HWitness};
pub use reducible::{detect_reducible, ConfigurationFinding, Context, Rule};
pub use stats::{is_easy, lemma_bound, neighbors_with_degree, BoundKind, DegStats};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("wrong input: {0}")]
    WrongInput(String),
}

/// 2-vertices on threads anchored at the 3⁺-vertex `v`, ascending.
pub fn close_two_vertices(g: &Graph, v: Vertex) -> Result<Vec<Vertex>, StructureError> {
    if g.degree(v) < 3 {
        return Err(StructureError::Precondition(format!("vertex {v} has degree {} < 3", g.degree(v))));
    }
    Ok(threads(g).close_vertices(v))
}

/// Least girth g with 2g/(g−2) ≤ 4c/(c+2), i.e. ⌈4c/(c−2)⌉, for c ≥ 5.
///
/// Planar graphs of at least this girth satisfy the density bound of the
/// c-color results.
pub fn girth_threshold(c: usize) -> Result<usize, StructureError> {
    if c < 5 {
        return Err(StructureError::Precondition(format!("c = {c} < 5")));
    }
    Ok((4 * c).div_ceil(c - 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_thresholds() {
        assert_eq!(girth_threshold(5).unwrap(), 7);
        assert_eq!(girth_threshold(6).unwrap(), 6);
        assert_eq!(girth_threshold(10).unwrap(), 5);
        assert!(girth_threshold(4).is_err());
    }

    #[test]
    fn close_vertices_of_a_spider() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (0, 6)]).unwrap();
        assert_eq!(close_two_vertices(&g, 0).unwrap(), vec![1, 3, 4]);
        assert!(close_two_vertices(&g, 1).is_err());
    }
}
