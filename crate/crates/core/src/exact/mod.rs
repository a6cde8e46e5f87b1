//! Exact scalars, sparse matrices and fraction-free linear algebra over
//! `ℚ(v)`, `v = q^{1/D}`.

pub mod laurent;
pub mod linalg;
pub mod matrix;
pub mod minpoly;
pub mod ratfn;
mod upoly;

pub use laurent::LaurentScalar;
pub use linalg::{nullspace, rank, Side};
pub use matrix::{PolyMatrix, SparseVec};
pub use minpoly::{minpoly_probe, signed_monomial_roots, KPoly, QMonomial};
pub use ratfn::{scalar_arith, ArithOp, RatScalar};
