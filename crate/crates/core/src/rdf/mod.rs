//! Roman dominating functions: validation, exact solvers and exhaustive oracles.

mod domination;
mod function;
pub mod oracle;
mod solver;

pub use domination::{gamma_exact, is_dominating_set};
pub use function::{is_rdf, weight, RomanFunction};
pub use oracle::gamma_r_oracle;
pub use solver::{gamma_r_constrained, gamma_r_exact, roman_function_at_most, Constrained, SolveResult};
