//! Binary words, their alternating-block decomposition and the monomial
//! encoding `pi_bl`.
//!
//! A word over `{e0, e1}` is written as a string of `0`s and `1`s. Its
//! blocks are the maximal alternating factors, where consecutive blocks
//! share their boundary letter: `01001011` splits as `010 | 0101 | 1`.
//! The block degree is one less than the number of blocks, equivalently
//! the number of adjacent equal letters. The framed block degree of `w`
//! is the block degree of `0w1`.

use std::fmt;
use std::str::FromStr;

use crate::exactalg::{CPoly, LetterDisplay, NCPoly, Slot};
use crate::{Error, Result, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    E0,
    E1,
}

impl Letter {
    pub fn flip(self) -> Self {
        match self {
            Letter::E0 => Letter::E1,
            Letter::E1 => Letter::E0,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::E0 => '0',
            Letter::E1 => '1',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Letter::E0),
            '1' => Some(Letter::E1),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl LetterDisplay for Letter {
    fn fmt_word(word: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        word.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

/// A word over `{e0, e1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn depth(&self) -> usize {
        depth(&self.0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All words of a given length, in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < 64);
        (0u64..1 << n).map(move |bits| {
            Word((0..n)
                .map(|i| {
                    if bits >> (n - 1 - i) & 1 == 1 {
                        Letter::E1
                    } else {
                        Letter::E0
                    }
                })
                .collect())
        })
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a string over `0`/`1`. The empty string gives the empty
    /// word; operations that need a letter reject it themselves.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Letter::from_char(c).ok_or_else(|| Error::parse(i, format!("`{c}` is not 0 or 1")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Letter::fmt_word(&self.0, f)
    }
}

pub fn depth(w: &[Letter]) -> usize {
    w.iter().filter(|&&l| l == Letter::E1).count()
}

/// First letter and block lengths of a word: `(ε; l₁,…,lₙ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockTuple {
    epsilon: Letter,
    lengths: Vec<usize>,
}

impl BlockTuple {
    pub fn new(epsilon: Letter, lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::EmptyWord);
        }
        if lengths.contains(&0) {
            return Err(Error::ZeroBlockLength);
        }
        Ok(BlockTuple { epsilon, lengths })
    }

    pub fn epsilon(&self) -> Letter {
        self.epsilon
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }
}

impl fmt::Display for BlockTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.epsilon)?;
        for (i, l) in self.lengths.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

fn nonempty(w: &[Letter]) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

fn block_lengths(w: &[Letter]) -> Vec<usize> {
    let mut lengths = vec![1];
    for pair in w.windows(2) {
        if pair[0] == pair[1] {
            lengths.push(1);
        } else {
            *lengths.last_mut().unwrap() += 1;
        }
    }
    lengths
}

/// Minimal factorisation into alternating words.
pub fn block_decompose(w: &[Letter]) -> Result<Vec<Word>> {
    nonempty(w)?;
    let mut out = vec![vec![w[0]]];
    for pair in w.windows(2) {
        if pair[0] == pair[1] {
            out.push(vec![pair[1]]);
        } else {
            out.last_mut().unwrap().push(pair[1]);
        }
    }
    Ok(out.into_iter().map(Word).collect())
}

/// Unchecked block degree; zero for the empty word.
pub(crate) fn degb(w: &[Letter]) -> usize {
    w.windows(2).filter(|p| p[0] == p[1]).count()
}

pub fn block_degree(w: &[Letter]) -> Result<usize> {
    nonempty(w)?;
    Ok(degb(w))
}

/// `e0·w·e1`.
pub fn framed(w: &[Letter]) -> Vec<Letter> {
    let mut v = Vec::with_capacity(w.len() + 2);
    v.push(Letter::E0);
    v.extend_from_slice(w);
    v.push(Letter::E1);
    v
}

/// Block degree of `e0·w·e1`; defined for every word, including empty.
pub fn framed_block_degree(w: &[Letter]) -> usize {
    let inner = degb(w);
    match (w.first(), w.last()) {
        (Some(&a), Some(&b)) => inner + (a == Letter::E0) as usize + (b == Letter::E1) as usize,
        _ => 0,
    }
}

pub fn bl(w: &[Letter]) -> Result<BlockTuple> {
    nonempty(w)?;
    Ok(BlockTuple {
        epsilon: w[0],
        lengths: block_lengths(w),
    })
}

fn bl_inverse_raw(epsilon: Letter, lengths: &[usize]) -> Vec<Letter> {
    let mut w: Vec<Letter> = Vec::with_capacity(lengths.iter().sum());
    for (i, &l) in lengths.iter().enumerate() {
        // Each block after the first starts with the last letter placed.
        let mut c = if i == 0 { epsilon } else { *w.last().unwrap() };
        for _ in 0..l {
            w.push(c);
            c = c.flip();
        }
    }
    w
}

pub fn bl_inverse(t: &BlockTuple) -> Word {
    Word(bl_inverse_raw(t.epsilon, &t.lengths))
}

/// Exponent vector of `pi_bl(w)`, defined for every word.
pub fn pi_bl_exponents(w: &[Letter]) -> Vec<u32> {
    block_lengths(&framed(w)).into_iter().map(|l| l as u32).collect()
}

/// The monomial `x₁^{l₁}⋯xₙ^{lₙ}` where `bl(0w1) = (0; l₁,…,lₙ)`.
pub fn pi_bl<S: Scalar>(w: &[Letter]) -> Result<CPoly<S>> {
    nonempty(w)?;
    Ok(CPoly::monomial(pi_bl_exponents(w), S::one()))
}

/// Word `w` with `pi_bl(w) = x^exps`, defined for every exponent vector in
/// the image (including `x₁²`, the image of the empty word).
pub fn word_of_exponents(exps: &[u32]) -> Result<Word> {
    if exps.is_empty() {
        return Err(Error::InvalidMonomial("constant monomial".into()));
    }
    if exps.contains(&0) {
        return Err(Error::InvalidMonomial(format!(
            "exponent vector {exps:?} has a zero entry"
        )));
    }
    let lengths: Vec<usize> = exps.iter().map(|&e| e as usize).collect();
    let full = bl_inverse_raw(Letter::E0, &lengths);
    if full.len() < 2 || full.last() != Some(&Letter::E1) {
        return Err(Error::InvalidMonomial(format!(
            "block lengths {exps:?} give a word ending in 0"
        )));
    }
    Ok(Word(full[1..full.len() - 1].to_vec()))
}

/// Inverse of [`pi_bl`] on a single-term polynomial. The coefficient is
/// ignored.
pub fn pi_bl_inverse<S: Scalar>(m: &CPoly<S>) -> Result<Word> {
    if m.len() != 1 {
        return Err(Error::InvalidMonomial(format!(
            "expected a single monomial, got {} terms",
            m.len()
        )));
    }
    let (e, _) = m.leading().unwrap();
    let w = word_of_exponents(e)?;
    nonempty(&w.0)?;
    Ok(w)
}

/// Reverse and exchange `e0 ↔ e1`.
pub fn duality(w: &[Letter]) -> Word {
    Word(w.iter().rev().map(|l| l.flip()).collect())
}

/// Depth (number of `e1`) of the word encoded by a monomial.
pub fn depth_of_monomial(exps: &[u32]) -> Result<usize> {
    Ok(word_of_exponents(exps)?.depth())
}

/// `(−1)^{⌈weight/2⌉} f(−x₁, x₂, −x₃, …)`: the image of `e1 ↦ −e1` under
/// `pi_bl` for polynomials of degree `weight + 2`.
pub fn depth_sign_transform<S: Scalar>(f: &CPoly<S>, weight: usize) -> Result<CPoly<S>> {
    if !f.is_zero() && f.homogeneous_degree() != Some(weight as u32 + 2) {
        return Err(Error::NonHomogeneous);
    }
    let n = f.vars();
    let slots: Vec<Slot> = (0..n).map(|j| Slot::signed(j, j % 2 == 0)).collect();
    let g = f.substitute_in(&slots, n)?;
    Ok(if weight.div_ceil(2) % 2 == 1 { -&g } else { g })
}

/// Compositions of `n` into parts 2 and 3 with exactly `m` threes.
pub fn hoffman_count(n: usize, m: usize) -> u128 {
    // c[n][m] = c[n-2][m] + c[n-3][m-1]
    let mut c = vec![vec![0u128; m + 1]; n + 1];
    c[0][0] = 1;
    for i in 1..=n {
        for j in 0..=m {
            let mut v = 0;
            if i >= 2 {
                v += c[i - 2][j];
            }
            if i >= 3 && j >= 1 {
                v += c[i - 3][j - 1];
            }
            c[i][j] = v;
        }
    }
    c[n][m]
}

/// Linear extension of `pi_bl` to a word polynomial whose words all have
/// the same framed block degree.
pub fn word_poly_to_cpoly<S: Scalar>(p: &NCPoly<S>) -> Result<CPoly<S>> {
    let mut vars = None;
    let mut out: Option<CPoly<S>> = None;
    for (w, c) in p.terms() {
        let e = pi_bl_exponents(w);
        if *vars.get_or_insert(e.len()) != e.len() {
            return Err(Error::MixedBlockDegree);
        }
        out.get_or_insert_with(|| CPoly::zero(e.len()))
            .add_term(e, c.clone());
    }
    Ok(out.unwrap_or_else(|| CPoly::zero(1)))
}

/// Pulls a polynomial back to words through `pi_bl`; every monomial must
/// lie in the image.
pub fn cpoly_to_word_poly<S: Scalar>(f: &CPoly<S>) -> Result<NCPoly<S>> {
    let mut out = NCPoly::zero();
    for (e, c) in f.terms() {
        out.add_term(word_of_exponents(e)?.0, c.clone());
    }
    Ok(out)
}

/// Component of framed block degree `b`.
pub fn framed_component<S: Scalar>(p: &NCPoly<S>, b: usize) -> NCPoly<S> {
    p.filter(|w| framed_block_degree(w) == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, Rational};
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn strs(ws: &[Word]) -> Vec<String> {
        ws.iter().map(Word::to_string).collect()
    }

    fn mono(e: &[u32]) -> QPoly {
        QPoly::monomial(e.to_vec(), Rational::from_integer(1.into()))
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(
            strs(&block_decompose(w("01001011").letters()).unwrap()),
            ["010", "0101", "1"]
        );
        assert_eq!(
            strs(&block_decompose(w("110101100").letters()).unwrap()),
            ["1", "10101", "10", "0"]
        );
        assert_eq!(strs(&block_decompose(w("0101").letters()).unwrap()), ["0101"]);
        assert_eq!(block_decompose(&[]).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn block_degree_examples() {
        assert_eq!(block_degree(w("0101").letters()).unwrap(), 0);
        assert_eq!(block_degree(w("01001011").letters()).unwrap(), 2);
        assert_eq!(block_degree(w("0011").letters()).unwrap(), 2);
        assert!(block_degree(&[]).is_err());
    }

    #[test]
    fn bl_examples() {
        assert_eq!(bl(w("01001011").letters()).unwrap().to_string(), "(0; 3,4,1)");
        assert_eq!(bl(w("110101100").letters()).unwrap().to_string(), "(1; 1,5,2,1)");
        let t = BlockTuple::new(Letter::E0, vec![2]).unwrap();
        assert_eq!(bl_inverse(&t).to_string(), "01");
        assert_eq!(
            BlockTuple::new(Letter::E0, vec![2, 0]).unwrap_err(),
            Error::ZeroBlockLength
        );
    }

    #[test]
    fn pi_bl_examples() {
        assert_eq!(pi_bl::<Rational>(w("10").letters()).unwrap(), mono(&[4]));
        assert_eq!(pi_bl::<Rational>(w("100").letters()).unwrap(), mono(&[3, 2]));
        assert_eq!(pi_bl::<Rational>(w("0").letters()).unwrap(), mono(&[1, 2]));
        assert_eq!(pi_bl_inverse(&mono(&[4])).unwrap(), w("10"));
        assert_eq!(pi_bl_inverse(&mono(&[3, 2])).unwrap(), w("100"));
        assert!(matches!(
            pi_bl_inverse(&mono(&[3])),
            Err(Error::InvalidMonomial(_))
        ));
        assert!(pi_bl_inverse(&mono(&[2, 0])).is_err());
    }

    #[test]
    fn duality_examples() {
        assert_eq!(duality(w("01").letters()), w("01"));
        assert_eq!(duality(w("001").letters()), w("011"));
        assert_eq!(degb(duality(w("0011").letters()).letters()), 2);
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth_of_monomial(&[4]).unwrap(), 1);
        assert_eq!(depth_of_monomial(&[3, 2]).unwrap(), 1);
        assert!(depth_of_monomial(&[3]).is_err());
    }

    #[test]
    fn depth_sign_transform_examples() {
        assert_eq!(depth_sign_transform(&mono(&[4]), 2).unwrap(), -&mono(&[4]));
        assert_eq!(depth_sign_transform(&mono(&[3, 2]), 3).unwrap(), -&mono(&[3, 2]));
        assert_eq!(
            depth_sign_transform(&mono(&[3, 2]), 4).unwrap_err(),
            Error::NonHomogeneous
        );
    }

    #[test]
    fn depth_sign_transform_is_minus_one_to_the_depth() {
        // On pi_bl(w) the transform multiplies by (−1)^depth(w).
        for n in 1..=9 {
            for word in Word::all_of_length(n) {
                let m: QPoly = pi_bl(word.letters()).unwrap();
                let t = depth_sign_transform(&m, n).unwrap();
                let expected = if word.depth() % 2 == 0 { m.clone() } else { -&m };
                assert_eq!(t, expected, "{word}");
                assert_eq!(depth_sign_transform(&t, n).unwrap(), m);
            }
        }
    }

    #[test]
    fn hoffman_examples() {
        assert_eq!(hoffman_count(8, 0), 1);
        assert_eq!(hoffman_count(7, 1), 3);
        assert_eq!(hoffman_count(5, 1), 2);
        assert_eq!(hoffman_count(0, 0), 1);
        assert_eq!(hoffman_count(1, 0), 0);
    }

    #[test]
    fn hoffman_matches_enumeration() {
        fn brute(n: i64, m: i64) -> u128 {
            if n == 0 {
                return (m == 0) as u128;
            }
            if n < 0 || m < 0 {
                return 0;
            }
            brute(n - 2, m) + brute(n - 3, m - 1)
        }
        // binomial form: with m threes and a twos, C(a+m, m) arrangements
        for n in 0..30usize {
            for m in 0..8usize {
                let rest = n as i64 - 3 * m as i64;
                let closed = if rest >= 0 && rest % 2 == 0 {
                    let a = (rest / 2) as u128;
                    (1..=m as u128).fold(1u128, |acc, i| acc * (a + i) / i)
                } else {
                    0
                };
                assert_eq!(hoffman_count(n, m), closed);
                assert_eq!(hoffman_count(n, m), brute(n as i64, m as i64));
            }
        }
    }

    #[test]
    fn bl_is_a_bijection_on_short_words() {
        for n in 1..=10 {
            let mut seen = std::collections::HashSet::new();
            for word in Word::all_of_length(n) {
                let t = bl(word.letters()).unwrap();
                assert_eq!(t.lengths().iter().sum::<usize>(), n);
                assert_eq!(bl_inverse(&t), word);
                let e = pi_bl_exponents(word.letters());
                assert!(seen.insert(e.clone()));
                assert_eq!(word_of_exponents(&e).unwrap(), word);
                assert_eq!(e.len(), framed_block_degree(word.letters()) + 1);
                assert_eq!(e.iter().sum::<u32>() as usize, n + 2);
            }
        }
    }

    #[test]
    fn word_polynomial_round_trip() {
        let p = cpoly_to_word_poly(&(&mono(&[3, 2]) - &mono(&[1, 4]))).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(word_poly_to_cpoly(&p).unwrap(), &mono(&[3, 2]) - &mono(&[1, 4]));
        let mixed = &p + &cpoly_to_word_poly(&mono(&[4])).unwrap();
        assert_eq!(word_poly_to_cpoly(&mixed).unwrap_err(), Error::MixedBlockDegree);
        assert_eq!(framed_component(&mixed, 0).len(), 1);
    }

    #[test]
    fn parse_reports_position() {
        match "0120".parse::<Word>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
    }

    fn arb_word(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::bool::ANY, 1..max).prop_map(|bs| {
            Word(bs.into_iter().map(|b| if b { Letter::E1 } else { Letter::E0 }).collect())
        })
    }

    proptest! {
        #[test]
        fn bl_round_trip(word in arb_word(24)) {
            let t = bl(word.letters()).unwrap();
            prop_assert_eq!(bl_inverse(&t), word.clone());
            prop_assert_eq!(bl(bl_inverse(&t).letters()).unwrap(), t);
        }

        #[test]
        fn decomposition_is_alternating_and_overlapping(word in arb_word(24)) {
            let blocks = block_decompose(word.letters()).unwrap();
            prop_assert_eq!(blocks.len() - 1, degb(word.letters()));
            for b in &blocks {
                prop_assert!(b.letters().windows(2).all(|p| p[0] != p[1]));
            }
            for pair in blocks.windows(2) {
                prop_assert_eq!(pair[0].letters().last(), pair[1].letters().first());
            }
            let joined: Vec<Letter> = blocks.iter().flat_map(|b| b.letters().to_vec()).collect();
            prop_assert_eq!(joined, word.0.clone());
        }

        #[test]
        fn endpoint_parity(word in arb_word(24)) {
            let l = word.letters();
            let differ = l.first() != l.last();
            prop_assert_eq!((degb(l) + l.len()).is_multiple_of(2), differ);
        }

        #[test]
        fn duality_invariants(word in arb_word(24)) {
            let d = duality(word.letters());
            prop_assert_eq!(degb(d.letters()), degb(word.letters()));
            prop_assert_eq!(d.depth(), word.weight() - word.depth());
            prop_assert_eq!(duality(d.letters()), word);
        }

        #[test]
        fn depth_parity_from_exponents(word in arb_word(20)) {
            let e = pi_bl_exponents(word.letters());
            let l = word.weight() as u32;
            let odd: u32 = e.iter().step_by(2).sum();
            prop_assert_eq!(depth_of_monomial(&e).unwrap() as u32 % 2, (l.div_ceil(2) + odd) % 2);
        }
    }
}
