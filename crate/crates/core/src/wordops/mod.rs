//! Hopf-algebra operations on binary words: shuffle, the coshuffle
//! coproduct and Lie test, the linearised Ihara action, the weight-one
//! part of the coproduct and the formal infinitesimal coaction.

mod coaction;
mod ihara;

pub use coaction::{
    delta1, graded_delta1, infinitesimal_coaction, FormalII, LetterTensor, TensorTerm,
};
pub use ihara::{ihara_bracket_word, ihara_word, insertion_action, letter_brackets};

use crate::blocks::{Letter, Word};
use crate::exactalg::NCPoly;
use crate::{Error, Result, Scalar};

/// Shuffle product of two words.
pub fn shuffle<S: Scalar>(u: &Word, v: &Word) -> NCPoly<S> {
    NCPoly::word(u.0.clone()).shuffle(&NCPoly::word(v.0.clone()))
}

/// `(a₁…aₙ)* = (−1)ⁿ aₙ…a₁`.
pub fn star<S: Scalar>(p: &NCPoly<S>) -> NCPoly<S> {
    p.star()
}

/// Whether a weight-homogeneous word polynomial is primitive for the
/// coshuffle coproduct, which characterises Lie polynomials.
pub fn is_lie_element<S: Scalar>(p: &NCPoly<S>) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    if p.homogeneous_length().is_none() {
        return Err(Error::NonHomogeneous);
    }
    Ok(p.is_primitive())
}

pub(crate) fn require_lie<S: Scalar>(p: &NCPoly<S>) -> Result<()> {
    match is_lie_element(p) {
        Ok(true) => Ok(()),
        Ok(false) | Err(Error::NonHomogeneous) => Err(Error::NotLie),
        Err(e) => Err(e),
    }
}

/// `e0` and `e1` as word polynomials.
pub fn letter<S: Scalar>(l: Letter) -> NCPoly<S> {
    NCPoly::word(vec![l])
}

/// Parses `"01"` style words into a word polynomial with coefficient one.
pub fn word_poly<S: Scalar>(w: &str) -> Result<NCPoly<S>> {
    Ok(NCPoly::word(w.parse::<Word>()?.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QWordPoly, Rational};

    fn w(s: &str) -> QWordPoly {
        word_poly(s).unwrap()
    }

    fn e0() -> QWordPoly {
        letter(Letter::E0)
    }

    fn e1() -> QWordPoly {
        letter(Letter::E1)
    }

    #[test]
    fn shuffle_examples() {
        let u: Word = "0".parse().unwrap();
        let v: Word = "1".parse().unwrap();
        assert_eq!(shuffle::<Rational>(&u, &v), &w("01") + &w("10"));
        assert_eq!(shuffle::<Rational>(&u, &u), w("00").scale(&Rational::from_integer(2.into())));
        assert_eq!(shuffle::<Rational>(&Word::empty(), &u), w("0"));
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&w("01")), w("10"));
        assert_eq!(star(&w("011")), -&w("110"));
    }

    #[test]
    fn lie_examples() {
        assert!(is_lie_element(&(&w("01") - &w("10"))).unwrap());
        assert!(!is_lie_element(&w("01")).unwrap());
        let nested = e0().commutator(&e0().commutator(&e1()));
        assert!(is_lie_element(&nested).unwrap());
        assert_eq!(
            is_lie_element(&(&w("0") + &w("01"))).unwrap_err(),
            Error::NonHomogeneous
        );
        assert!(is_lie_element(&QWordPoly::zero()).unwrap());
    }
}
