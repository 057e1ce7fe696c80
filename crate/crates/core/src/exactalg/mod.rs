//! Arithmetic substrate: sparse commutative polynomials, word polynomials
//! and exact linear algebra, all generic over a [`Scalar`](crate::Scalar).

mod cpoly;
pub mod linalg;
mod ncpoly;
mod serial;

pub use cpoly::{parse_monomial, CPoly, Exponents, Slot};
pub use linalg::{in_span, nullspace, rank_over_q, Echelon};
pub use ncpoly::{shuffle_words, Coproduct, LetterDisplay, WordPoly};
pub use serial::{PolyRecord, TermRecord};

/// Rational combinations of binary words.
pub type NCPoly<S = crate::Rational> = WordPoly<crate::blocks::Letter, S>;
