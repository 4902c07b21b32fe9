//! Symmetry breaking by edge colourings.
//!
//! This crate computes automorphism groups of small graphs, identifies the
//! *small* automorphisms (those moving some vertex onto a neighbour), and
//! determines the distinguishing index `D'` and the small distinguishing
//! index `D'_s`: the least number of edge colours needed so that no
//! non-trivial, respectively no small, automorphism maps every edge onto an
//! edge of the same colour.
//!
//! It also implements a constructive procedure producing a 2-colouring that
//! breaks every small automorphism of a connected graph of order at least
//! six, with every output checked, and a harness that runs these
//! computations over whole graph6 corpora.
//!
//! ```
//! use symbreak::{graph::parse_graph6, solver::{small_distinguishing_index, IndexValue, SolverConfig}};
//!
//! let c6 = parse_graph6("EhEG").unwrap();
//! let r = small_distinguishing_index(&c6, &SolverConfig::default()).unwrap();
//! assert_eq!(r.value, IndexValue::Finite(2));
//! ```

pub mod colouring;
pub mod construct;
pub mod error;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod symmetry;

pub use colouring::{EdgeColouring, EdgeIndex};
pub use error::{Error, GraphError, Result};
pub use graph::{Edge, Graph, VertexSet};
pub use solver::{IndexResult, IndexValue, Method, SolverConfig};
pub use symmetry::{AutGroup, Permutation};
