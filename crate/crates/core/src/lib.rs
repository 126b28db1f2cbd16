pub mod classify;
pub mod cli;
pub mod corpus;
pub mod cut;
pub mod descriptor;
pub mod error;
pub mod graph;
pub mod koszul;
pub mod minor;
pub mod toric;

pub use cut::{cut_matrix, Cut, CutMatrix, SemigroupElement};
pub use error::{Error, Result};
pub use graph::{clique_sum, make_family, recognize_family, Graph, GraphFamily};
