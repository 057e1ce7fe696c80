use std::fmt;

use crate::exactalg::{CPoly, LetterDisplay, WordPoly};
use crate::{Error, Result, Scalar};

/// Letter `z_i` of the z-alphabet, `i ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZLetter(pub u32);

impl LetterDisplay for ZLetter {
    fn fmt_word(word: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, z) in word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "z{}", z.0)?;
        }
        Ok(())
    }
}

/// Linear combination of z-words.
pub type ZPoly<S = crate::Rational> = WordPoly<ZLetter, S>;

/// `x₁^{i₁}⋯xₙ^{iₙ} ↦ z_{i₁}⋯z_{iₙ}`.
pub fn to_zword<S: Scalar>(f: &CPoly<S>) -> Result<ZPoly<S>> {
    let mut out = ZPoly::zero();
    for (e, c) in f.terms() {
        if e.contains(&0) {
            return Err(Error::ZeroExponent);
        }
        out.add_term(e.iter().map(|&i| ZLetter(i)).collect(), c.clone());
    }
    Ok(out)
}

/// `𝒞(z_{i₁}⋯z_{iₙ}) = Σ` over the `n` cyclic rotations.
pub fn cyclic_operator<S: Scalar>(p: &ZPoly<S>) -> ZPoly<S> {
    let mut out = ZPoly::zero();
    for (w, c) in p.terms() {
        for k in 0..w.len().max(1) {
            let mut r = w.clone();
            r.rotate_left(k);
            out.add_term(r, c.clone());
        }
    }
    out
}

/// Antipode of the coshuffle Hopf algebra: the antihomomorphism
/// `z_i ↦ −z_i`.
pub fn antipode<S: Scalar>(p: &ZPoly<S>) -> ZPoly<S> {
    p.star()
}

pub fn is_z_primitive<S: Scalar>(p: &ZPoly<S>) -> bool {
    p.is_primitive()
}
