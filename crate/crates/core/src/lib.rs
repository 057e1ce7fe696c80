//! Exact computations with block-graded multiple zeta values.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`] holds the arithmetic substrate: sparse commutative
//!   polynomials, word polynomials over an arbitrary alphabet and exact
//!   linear algebra. Everything there is generic over a [`Scalar`].
//! * [`blocks`] implements the alternating-block decomposition of binary
//!   words and the monomial encoding `pi_bl`.
//! * [`wordops`] has the Hopf-algebra operations on words, the linearised
//!   Ihara action and the formal infinitesimal coaction.
//! * [`blockpoly`] is the polynomial side: generators, both polynomial
//!   Ihara formulas, reduced polynomials and the relation operators.
//! * [`verify`] drives the relation suites and produces reports.
//!
//! The concrete aliases below fix the scalar to arbitrary-precision
//! rationals, which is what every relation check uses.

pub mod blockpoly;
pub mod blocks;
pub mod error;
pub mod exactalg;
pub mod scalar;
pub mod verify;
pub mod wordops;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

/// Sparse commutative polynomial with rational coefficients.
pub type QPoly = exactalg::CPoly<Rational>;
/// Rational linear combination of binary words.
pub type QWordPoly = exactalg::NCPoly<Rational>;
/// Rational linear combination of z-words.
pub type QZPoly = blockpoly::ZPoly<Rational>;
/// Block-graded element with rational coefficients.
pub type QBGElement = blockpoly::BGElement<Rational>;
/// Reduced block polynomial with rational coefficients.
pub type QReducedElement = blockpoly::ReducedElement<Rational>;
