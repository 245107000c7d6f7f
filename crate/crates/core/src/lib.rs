//! Exact computations in the degree-zero stable operation rings of p-local
//! K-theory and Brown-Peterson cohomology.
//!
//! The crate realizes the triangular bases of polynomials in Adams operations,
//! the Gaussian-polynomial congruences describing them, the BP right unit and
//! the evaluation of diagonal operations on `BP_*(BP)`, and a pipeline that
//! checks at finite level that diagonal BP operations are exactly the Adams
//! subalgebra.

pub mod adamsk;
pub mod arith;
pub mod centre;
pub mod cli;
pub mod fgl;
pub mod hopf;
pub mod lattice;
pub mod polyring;

pub use arith::{Prime, Rational};
pub use polyring::{GeneratorTable, GradedPoly, MuLinear};
