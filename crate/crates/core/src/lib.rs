pub mod apery;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod monomial;
pub mod regularity;
pub mod star;
