pub mod betti;
pub mod complex;
pub mod error;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod structure;
pub mod verify;

pub use betti::{BettiTable, Convention, StrandStats};
pub use complex::{Face, FVector, SimplicialComplex, DEFAULT_VERTEX_CAP, HARD_VERTEX_CAP};
pub use error::{Error, Result};
pub use generators::ComplexFamily;
pub use graph::Graph;
pub use linalg::{FieldSpec, SparseMatrix};
