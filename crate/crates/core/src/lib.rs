pub mod algebra;
pub mod checks;
pub mod combinatorics;
pub mod error;
pub mod immanants;
pub mod lattice;
pub mod poly;
pub mod symfun;
pub mod tableaux;

pub use error::{Error, Result};
