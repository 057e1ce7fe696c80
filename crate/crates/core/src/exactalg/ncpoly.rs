use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::{Rational, Scalar};

/// Finite linear combination of words over an ordered alphabet `L`.
///
/// Multiplication is concatenation. The map never stores a zero
/// coefficient, so structural equality is equality of elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WordPoly<L, S = Rational> {
    terms: BTreeMap<Vec<L>, S>,
}

/// Coshuffle coproduct as a map from `(left, right)` tensor factors.
pub type Coproduct<L, S> = BTreeMap<(Vec<L>, Vec<L>), S>;

impl<L: Ord + Clone, S: Scalar> Default for WordPoly<L, S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<L: Ord + Clone, S: Scalar> WordPoly<L, S> {
    pub fn zero() -> Self {
        WordPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: Vec<L>) -> Self {
        Self::term(w, S::one())
    }

    /// The empty word, unit of concatenation.
    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn term(w: Vec<L>, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<L>, S)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as `is_zero`.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<L>, &S)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[L]) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, w: Vec<L>, c: S) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_terms(|w, x| (w.clone(), x.clone() * c.clone()))
    }

    /// Applies a term-wise map and re-collects, merging equal words.
    pub fn map_terms<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Vec<L>, &S) -> (Vec<L>, S),
    {
        Self::from_terms(self.terms.iter().map(|(w, c)| f(w, c)))
    }

    /// Keeps the terms whose word satisfies `keep`.
    pub fn filter<F: Fn(&[L]) -> bool>(&self, keep: F) -> Self {
        WordPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Common word length, `None` if the lengths differ or `self` is zero.
    pub fn homogeneous_length(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Vec::len);
        let n = it.next()?;
        it.all(|m| m == n).then_some(n)
    }

    /// `(a₁…aₙ) ↦ (−1)ⁿ aₙ…a₁`, extended linearly.
    pub fn star(&self) -> Self {
        self.map_terms(|w, c| {
            let r: Vec<L> = w.iter().rev().cloned().collect();
            let c = if w.len() % 2 == 1 { -c.clone() } else { c.clone() };
            (r, c)
        })
    }

    /// Word reversal without sign.
    pub fn reversed(&self) -> Self {
        self.map_terms(|w, c| (w.iter().rev().cloned().collect(), c.clone()))
    }

    /// Commutator `ab − ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Shuffle product.
    pub fn shuffle(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let c = a.clone() * b.clone();
                for w in shuffle_words(u, v) {
                    out.add_term(w, c.clone());
                }
            }
        }
        out
    }

    /// Coshuffle coproduct, the one for which every letter is primitive:
    /// `Δ(w) = Σ_I w_I ⊗ w_{I^c}` over all subsets of positions.
    pub fn coproduct(&self) -> Coproduct<L, S> {
        let mut out = Coproduct::new();
        for (w, c) in &self.terms {
            for ((l, r), k) in deshuffle(w) {
                add_to(&mut out, (l, r), c.clone() * S::from_int(k));
            }
        }
        out
    }

    /// Reduced coproduct `Δ(p) − p⊗1 − 1⊗p`, computed directly over the
    /// proper nonempty position subsets.
    pub fn reduced_coproduct(&self) -> Coproduct<L, S> {
        let mut out = Coproduct::new();
        for (w, c) in &self.terms {
            for ((l, r), k) in deshuffle(w) {
                if !l.is_empty() && !r.is_empty() {
                    add_to(&mut out, (l, r), c.clone() * S::from_int(k));
                }
            }
        }
        out
    }

    /// `Δ(p) = p⊗1 + 1⊗p` for the coshuffle coproduct. A polynomial with
    /// a nonzero constant term is never primitive.
    pub fn is_primitive(&self) -> bool {
        self.coeff(&[]).is_zero() && self.reduced_coproduct().is_empty()
    }
}

fn add_to<K: Ord, S: Scalar>(map: &mut BTreeMap<K, S>, key: K, c: S) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().clone() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// All interleavings of `u` and `v`, with multiplicity.
pub fn shuffle_words<L: Clone>(u: &[L], v: &[L]) -> Vec<Vec<L>> {
    fn go<L: Clone>(u: &[L], v: &[L], prefix: &mut Vec<L>, out: &mut Vec<Vec<L>>) {
        if u.is_empty() || v.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            out.push(w);
            return;
        }
        prefix.push(u[0].clone());
        go(&u[1..], v, prefix, out);
        prefix.pop();
        prefix.push(v[0].clone());
        go(u, &v[1..], prefix, out);
        prefix.pop();
    }
    let mut out = Vec::new();
    go(u, v, &mut Vec::new(), &mut out);
    out
}

/// Splits of `w` into complementary subsequences, with multiplicities.
fn deshuffle<L: Ord + Clone>(w: &[L]) -> BTreeMap<(Vec<L>, Vec<L>), i64> {
    assert!(w.len() < 63, "word too long for coproduct");
    let mut out = BTreeMap::new();
    for mask in 0u64..(1u64 << w.len()) {
        let mut l = Vec::new();
        let mut r = Vec::new();
        for (i, a) in w.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l.push(a.clone());
            } else {
                r.push(a.clone());
            }
        }
        *out.entry((l, r)).or_insert(0) += 1;
    }
    out
}

impl<L: Ord + Clone, S: Scalar> Add for &WordPoly<L, S> {
    type Output = WordPoly<L, S>;
    fn add(self, rhs: Self) -> WordPoly<L, S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<L: Ord + Clone, S: Scalar> Sub for &WordPoly<L, S> {
    type Output = WordPoly<L, S>;
    fn sub(self, rhs: Self) -> WordPoly<L, S> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<L: Ord + Clone, S: Scalar> Neg for &WordPoly<L, S> {
    type Output = WordPoly<L, S>;
    fn neg(self) -> WordPoly<L, S> {
        self.scale(&-S::one())
    }
}

/// Concatenation product.
impl<L: Ord + Clone, S: Scalar> Mul for &WordPoly<L, S> {
    type Output = WordPoly<L, S>;
    fn mul(self, rhs: Self) -> WordPoly<L, S> {
        let mut out = WordPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<L: Ord + Clone, S: Scalar> AddAssign<&WordPoly<L, S>> for WordPoly<L, S> {
    fn add_assign(&mut self, rhs: &WordPoly<L, S>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<L: Ord + Clone, S: Scalar> SubAssign<&WordPoly<L, S>> for WordPoly<L, S> {
    fn sub_assign(&mut self, rhs: &WordPoly<L, S>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

/// Letters that know how to print themselves inside a word.
pub trait LetterDisplay {
    fn fmt_word(word: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result
    where
        Self: Sized;
}

impl<L: Ord + Clone + LetterDisplay, S: Scalar> fmt::Display for WordPoly<L, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = *c < S::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            f.write_str("[")?;
            L::fmt_word(w, f)?;
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl<L: Ord + Clone + fmt::Debug, S: Scalar> fmt::Debug for WordPoly<L, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
