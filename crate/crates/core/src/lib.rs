//! Exact solvers for subset transversal problems on hereditary graph
//! classes. Given terminals `T`, each problem asks for a minimum vertex set
//! whose removal leaves no structure of some kind through `T`; see
//! [`Problem`] for the three variants.

pub mod blocks;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod set;
pub mod sfvs;
pub mod soct;
pub mod solve;
pub mod suites;
pub mod svc;
pub mod validity;

pub use error::{ClassViolation, Error, Result};
pub use graph::Graph;
pub use set::VertexSet;
pub use validity::{Instance, Problem, Solution};
