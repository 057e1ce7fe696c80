use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::blocks::{degb, framed_block_degree, Letter, Word};
use crate::exactalg::NCPoly;
use crate::{Error, Result, Scalar};

/// Formal iterated-integral symbol `I(a₀; a₁,…,a_N; a_{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalII {
    pub lower: Letter,
    pub body: Vec<Letter>,
    pub upper: Letter,
}

impl FormalII {
    pub fn new(lower: Letter, body: Vec<Letter>, upper: Letter) -> Self {
        FormalII { lower, body, upper }
    }

    /// `I(0; w; 1)`.
    pub fn framed(w: &Word) -> Self {
        Self::new(Letter::E0, w.0.clone(), Letter::E1)
    }

    pub fn weight(&self) -> usize {
        self.body.len()
    }

    /// `a₀ a₁ … a_{N+1}` as one word.
    pub fn full_word(&self) -> Vec<Letter> {
        let mut v = Vec::with_capacity(self.body.len() + 2);
        v.push(self.lower);
        v.extend_from_slice(&self.body);
        v.push(self.upper);
        v
    }

    /// Block degree of the full word `a₀ a₁ … a_{N+1}`.
    pub fn block_degree(&self) -> usize {
        degb(&self.full_word())
    }
}

impl fmt::Display for FormalII {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_empty() {
            write!(f, "I({};{})", self.lower, self.upper)
        } else {
            write!(f, "I({}; {}; {})", self.lower, Word(self.body.clone()), self.upper)
        }
    }
}

impl Serialize for FormalII {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        s.collect_str(self)
    }
}

/// One term `coefficient · left ⊗ right` of an infinitesimal coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTerm<S> {
    pub left: FormalII,
    pub right: FormalII,
    pub coefficient: S,
}

impl<S: Scalar> fmt::Display for TensorTerm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.coefficient.is_one() {
            write!(f, "{} * ", self.coefficient)?;
        }
        write!(f, "{} ⊗ {}", self.left, self.right)
    }
}

/// `D_{2r+1}`: cut out every subsequence `a_{p+1} … a_{p+2r+1}` of length
/// `2r+1` as the left factor, bounded by its neighbours, and keep the rest
/// as the right factor. Left factors with equal endpoints vanish.
pub fn infinitesimal_coaction<S: Scalar>(r: usize, s: &FormalII) -> Result<Vec<TensorTerm<S>>> {
    if r == 0 {
        return Err(Error::Arity("the coaction index r must be at least 1".into()));
    }
    let n = s.weight();
    let len = 2 * r + 1;
    if n < len {
        return Err(Error::WeightTooSmall { weight: n, r });
    }
    let a = s.full_word();
    let mut out = Vec::new();
    for p in 0..=n - len {
        let (x, y) = (a[p], a[p + len + 1]);
        if x == y {
            continue;
        }
        let left = FormalII::new(x, a[p + 1..p + len + 1].to_vec(), y);
        let mut body = a[1..=p].to_vec();
        body.extend_from_slice(&a[p + len + 1..=n]);
        let right = FormalII::new(a[0], body, a[n + 1]);
        out.push(TensorTerm {
            left,
            right,
            coefficient: S::one(),
        });
    }
    Ok(out)
}

/// Weight-one part of the deconcatenation coproduct on a word: every
/// `(wᵢ, w with position i removed)`.
pub fn delta1(w: &Word) -> Result<Vec<(Letter, Word)>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((0..w.weight())
        .map(|i| {
            let mut rest = w.0.clone();
            let l = rest.remove(i);
            (l, Word(rest))
        })
        .collect())
}

/// Elements of `Q·e0 ⊕ Q·e1` tensored with word polynomials.
pub type LetterTensor<S> = BTreeMap<(Letter, Vec<Letter>), S>;

/// Associated graded of `delta1`: for input of framed block degree `n`,
/// the pairs whose right factor has framed block degree exactly `n − 1`,
/// summed with coefficients.
pub fn graded_delta1<S: Scalar>(p: &NCPoly<S>) -> Result<LetterTensor<S>> {
    let mut n = None;
    for (w, _) in p.terms() {
        let d = framed_block_degree(w);
        if *n.get_or_insert(d) != d {
            return Err(Error::MixedBlockDegree);
        }
    }
    let mut out = LetterTensor::new();
    let Some(n) = n.filter(|&n| n > 0) else {
        return Ok(out);
    };
    for (w, c) in p.terms() {
        for i in 0..w.len() {
            let mut rest = w.clone();
            let l = rest.remove(i);
            if framed_block_degree(&rest) != n - 1 {
                continue;
            }
            let key = (l, rest);
            let v = out.remove(&key).unwrap_or_else(S::zero) + c.clone();
            if !v.is_zero() {
                out.insert(key, v);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::block_decompose;
    use crate::wordops::word_poly;
    use crate::{QWordPoly, Rational};

    fn ii(s: &str) -> FormalII {
        let w: Word = s.parse().unwrap();
        FormalII::new(w.0[0], w.0[1..w.0.len() - 1].to_vec(), *w.0.last().unwrap())
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn coaction_examples() {
        let terms = infinitesimal_coaction::<Rational>(1, &ii("01011")).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].left, ii("01011"));
        assert_eq!(terms[0].right.to_string(), "I(0;1)");
        assert_eq!(terms[0].to_string(), "I(0; 101; 1) ⊗ I(0;1)");

        assert!(infinitesimal_coaction::<Rational>(1, &ii("00000")).unwrap().is_empty());
        assert_eq!(
            infinitesimal_coaction::<Rational>(2, &ii("01011")).unwrap_err(),
            Error::WeightTooSmall { weight: 3, r: 2 }
        );
    }

    #[test]
    fn coaction_is_block_graded() {
        for n in 1..=8 {
            for word in Word::all_of_length(n) {
                let s = FormalII::framed(&word);
                let total = block_decompose(&s.full_word()).unwrap().len() - 1;
                for r in 1..=(n - 1) / 2 {
                    for t in infinitesimal_coaction::<Rational>(r, &s).unwrap() {
                        assert_eq!(t.left.block_degree() + t.right.block_degree(), total);
                    }
                }
            }
        }
    }

    #[test]
    fn delta1_examples() {
        assert_eq!(
            delta1(&w("01")).unwrap(),
            vec![(Letter::E0, w("1")), (Letter::E1, w("0"))]
        );
        assert_eq!(
            delta1(&w("00")).unwrap(),
            vec![(Letter::E0, w("0")), (Letter::E0, w("0"))]
        );
        assert_eq!(delta1(&Word::empty()).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn delta1_drops_framed_degree_by_at_most_one() {
        for n in 1..=10 {
            for word in Word::all_of_length(n) {
                let d = framed_block_degree(&word.0);
                for (_, rest) in delta1(&word).unwrap() {
                    let e = framed_block_degree(&rest.0);
                    assert!(e + 1 >= d, "{word} -> {rest}");
                }
            }
        }
    }

    #[test]
    fn graded_delta1_bookkeeping() {
        // Both deletions from 01 land in framed degree 1.
        let g = graded_delta1(&word_poly::<Rational>("01").unwrap()).unwrap();
        assert_eq!(g.len(), 2);
        let mixed: QWordPoly = &word_poly("01").unwrap() + &word_poly("10").unwrap();
        assert_eq!(graded_delta1(&mixed).unwrap_err(), Error::MixedBlockDegree);
        // Linearity: the output for 2·w is twice the output for w.
        let p = word_poly::<Rational>("0110").unwrap();
        let two = Rational::from_integer(2.into());
        let lhs = graded_delta1(&p.scale(&two)).unwrap();
        let rhs: LetterTensor<Rational> = graded_delta1(&p)
            .unwrap()
            .into_iter()
            .map(|(k, v)| (k, v * two.clone()))
            .collect();
        assert_eq!(lhs, rhs);
    }
}
