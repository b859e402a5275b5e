//! Exact arithmetic on the lattice of binary paths.
//!
//! Paths of length `n` ordered by "lies weakly below" form a finite
//! distributive lattice. This crate computes its order, joins and meets,
//! interval sizes, fillings and degrees, and counts minimal chains with small
//! intervals from a path to the top element, both by direct recursion and by
//! closed summation formulas. Brute-force oracles back every count.

pub mod acceptance;
pub mod chains;
pub mod cli;
pub mod counting;
pub mod error;
pub mod filling;
pub mod lattice;
pub mod oeis;
pub mod oracle;
pub mod path;

pub use chains::{f_eval, Evaluator, Method};
pub use counting::BigCount;
pub use error::{Error, Result};
pub use path::{parse_path, Path, Step};
