//! Exact computer algebra for the symplectic Dirac operator.
//!
//! The crate models spinor-valued polynomials on `R^{2n}` — polynomials in
//! base variables `x1..x2n` with values in polynomials in spinor variables
//! `q1..qn` — over the Gaussian rationals, and implements:
//!
//! - the symplectic Clifford action `e_j = (q_j *)`, `f_j = -d/dq_j`;
//! - the operators `D_s`, `X_s`, the Euler operator and the sl2 Casimir,
//!   together with word-level operator expressions and commutators;
//! - the decomposition of homogeneous polynomials into symplectic monogenic
//!   components, through explicit-coefficient and Casimir projectors;
//! - exact bases and dimension tables for the polynomial kernel of `D_s`
//!   on truncated slices, via fraction-free elimination;
//! - weight bookkeeping (infinitesimal characters, Casimir eigenvalues);
//! - a bit-exact text format plus JSON emission, and a seeded verification
//!   suite checking every operator identity exactly.
//!
//! Everything is exact: coefficients are arbitrary-precision Gaussian
//! rationals and identities are asserted by structural equality.

pub mod error;
pub mod fischer;
pub mod kernel;
mod linalg;
pub mod ops;
pub mod poly;
pub mod scalar;
pub mod textio;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use poly::{Monomial, Parity, SPoly, VarBank};
pub use scalar::{Rational, Scalar, ScalarMode};
