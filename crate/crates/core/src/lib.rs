//! Odd and proper conflict-free colorings of sparse graphs: exact maximum
//! average degree, exact colorability solvers, constructive extension
//! procedures, extremal-class recognizers and a discharging engine.

pub mod coloring;
pub mod density;
pub mod discharging;
pub mod generators;
pub mod graph;
pub mod rational;
pub mod structures;

pub use graph::{Graph, GraphError, GraphRef, Multigraph, PlaneGraph, Vertex};
pub use rational::Rational;
