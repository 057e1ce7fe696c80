use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::{Error, Rational, Result, Scalar};

/// Exponent vector of a monomial; entry `j` is the power of `x_{j+1}`.
pub type Exponents = Vec<u32>;

/// Sparse commutative polynomial in `vars` variables.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration is
/// in ascending lexicographic order and the leading term under lex order is
/// the last entry. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CPoly<S = Rational> {
    vars: usize,
    terms: BTreeMap<Exponents, S>,
}

/// Image of one variable under [`CPoly::substitute`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// `x_j ↦ ±x_index` (0-based `index`).
    Var { index: usize, negate: bool },
    /// `x_j ↦ 0`.
    Zero,
}

impl Slot {
    pub fn var(index: usize) -> Self {
        Slot::Var {
            index,
            negate: false,
        }
    }

    pub fn neg(index: usize) -> Self {
        Slot::Var {
            index,
            negate: true,
        }
    }

    pub fn signed(index: usize, negate: bool) -> Self {
        Slot::Var { index, negate }
    }
}

impl<S: Scalar> CPoly<S> {
    pub fn zero(vars: usize) -> Self {
        CPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: S) -> Self {
        Self::monomial(vec![0; vars], c)
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, S::one())
    }

    /// The variable `x_{index+1}`.
    pub fn var(vars: usize, index: usize) -> Self {
        assert!(index < vars, "variable index {index} out of range");
        let mut e = vec![0; vars];
        e[index] = 1;
        Self::monomial(e, S::one())
    }

    pub fn monomial(exps: Exponents, c: S) -> Self {
        let vars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        CPoly { vars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials. Panics if an exponent vector has the wrong length.
    pub fn from_terms<I>(vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, S)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as `is_zero`.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &S)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> S {
        self.terms.get(exps).cloned().unwrap_or_else(S::zero)
    }

    /// Leading term under lexicographic order.
    pub fn leading(&self) -> Option<(&Exponents, &S)> {
        self.terms.iter().next_back()
    }

    /// Maximum total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The common total degree when every term has the same degree.
    /// The zero polynomial counts as homogeneous of every degree and
    /// returns `None` here, like any non-homogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add_term(&mut self, exps: Exponents, c: S) {
        debug_assert_eq!(exps.len(), self.vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarCountMismatch {
                left: self.vars,
                right: other.vars,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        CPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the monomial `c · x^exps`.
    pub fn mul_monomial(&self, exps: &[u32], c: &S) -> Self {
        assert_eq!(exps.len(), self.vars);
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        CPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    (
                        e.iter().zip(exps).map(|(a, b)| a + b).collect(),
                        x.clone() * c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.vars), |acc, _| &acc * self)
    }

    /// Exact division: returns `q` with `q · den = self`.
    ///
    /// Runs leading-term elimination under lex order and fails with
    /// [`Error::InexactDivision`] as soon as a leading monomial of the
    /// remainder is not divisible by the leading monomial of `den`.
    pub fn divide_exact(&self, den: &Self) -> Result<Self> {
        self.check_vars(den)?;
        let (dlm, dlc) = match den.leading() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.vars);
        while let Some((lm, lc)) = rem.leading() {
            let qm: Exponents = lm
                .iter()
                .zip(&dlm)
                .map(|(a, b)| a.checked_sub(*b))
                .collect::<Option<_>>()
                .ok_or(Error::InexactDivision)?;
            let qc = lc.clone() / dlc.clone();
            for (e, c) in &den.terms {
                let m = e.iter().zip(&qm).map(|(a, b)| a + b).collect();
                rem.add_term(m, -(c.clone() * qc.clone()));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Divides by `x_{index+1}`; cheaper than [`CPoly::divide_exact`].
    pub fn divide_by_var(&self, index: usize) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[index] == 0 {
                return Err(Error::InexactDivision);
            }
            let mut e = e.clone();
            e[index] -= 1;
            terms.insert(e, c.clone());
        }
        Ok(CPoly {
            vars: self.vars,
            terms,
        })
    }

    /// Replaces each variable `x_j` by the image `slots[j]`. The result
    /// lives in `target_vars` variables.
    pub fn substitute_in(&self, slots: &[Slot], target_vars: usize) -> Result<Self> {
        if slots.len() != self.vars {
            return Err(Error::BadSubstitution(format!(
                "{} slots for {} variables",
                slots.len(),
                self.vars
            )));
        }
        for s in slots {
            if let Slot::Var { index, .. } = s {
                if *index >= target_vars {
                    return Err(Error::BadSubstitution(format!(
                        "source index {index} out of range for {target_vars} variables"
                    )));
                }
            }
        }
        let mut out = Self::zero(target_vars);
        'terms: for (e, c) in &self.terms {
            let mut m = vec![0u32; target_vars];
            let mut negative = false;
            for (&k, slot) in e.iter().zip(slots) {
                match *slot {
                    Slot::Zero if k > 0 => continue 'terms,
                    Slot::Zero => {}
                    Slot::Var { index, negate } => {
                        m[index] += k;
                        negative ^= negate && k % 2 == 1;
                    }
                }
            }
            out.add_term(m, if negative { -c.clone() } else { c.clone() });
        }
        Ok(out)
    }

    /// [`CPoly::substitute_in`] with the target variable count taken as
    /// one more than the largest source index.
    pub fn substitute(&self, slots: &[Slot]) -> Result<Self> {
        let target = slots
            .iter()
            .filter_map(|s| match s {
                Slot::Var { index, .. } => Some(index + 1),
                Slot::Zero => None,
            })
            .max()
            .unwrap_or(0);
        self.substitute_in(slots, target)
    }

    /// `f(x_{src[0]+1}, …)`: plain variable renaming into `target_vars`.
    pub fn rename(&self, src: &[usize], target_vars: usize) -> Result<Self> {
        let slots: Vec<Slot> = src.iter().map(|&i| Slot::var(i)).collect();
        self.substitute_in(&slots, target_vars)
    }

    /// `f(x_n, …, x_1)`.
    pub fn reversed(&self) -> Self {
        let n = self.vars;
        let src: Vec<usize> = (0..n).rev().collect();
        self.rename(&src, n).expect("reversal is a valid renaming")
    }

    /// Embeds into a ring with `vars ≥ self.vars()` variables.
    pub fn extend_vars(&self, vars: usize) -> Self {
        assert!(vars >= self.vars);
        CPoly {
            vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(vars, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `∂/∂x_{index+1}`.
    pub fn partial(&self, index: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            let k = e[index];
            if k == 0 {
                continue;
            }
            let mut e = e.clone();
            e[index] -= 1;
            out.add_term(e, c.clone() * S::from_int(k as i64));
        }
        out
    }

    /// Directional derivative `Σ_j dir[j] ∂/∂x_{j+1}`.
    pub fn directional(&self, dir: &[i64]) -> Self {
        assert_eq!(dir.len(), self.vars);
        let mut out = Self::zero(self.vars);
        for (j, &d) in dir.iter().enumerate() {
            if d != 0 {
                out += &self.partial(j).scale(&S::from_int(d));
            }
        }
        out
    }

    /// Product of all variables `x_1 ⋯ x_n`.
    pub fn var_product(vars: usize) -> Self {
        Self::monomial(vec![1; vars], S::one())
    }

    /// `x_{i+1} - x_{j+1}`.
    pub fn var_difference(vars: usize, i: usize, j: usize) -> Self {
        &Self::var(vars, i) - &Self::var(vars, j)
    }

    /// Evaluates at a point.
    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.vars);
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Coefficients as a dense row over the supplied monomial index.
    pub fn dense_row(&self, index: &BTreeMap<Exponents, usize>) -> Vec<S> {
        let mut row = vec![S::zero(); index.len()];
        for (e, c) in &self.terms {
            row[index[e]] = c.clone();
        }
        row
    }
}

impl<S: Scalar> Add for &CPoly<S> {
    type Output = CPoly<S>;
    fn add(self, rhs: &CPoly<S>) -> CPoly<S> {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<S: Scalar> Sub for &CPoly<S> {
    type Output = CPoly<S>;
    fn sub(self, rhs: &CPoly<S>) -> CPoly<S> {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<S: Scalar> Mul for &CPoly<S> {
    type Output = CPoly<S>;
    fn mul(self, rhs: &CPoly<S>) -> CPoly<S> {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl<S: Scalar> Neg for &CPoly<S> {
    type Output = CPoly<S>;
    fn neg(self) -> CPoly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> AddAssign<&CPoly<S>> for CPoly<S> {
    fn add_assign(&mut self, rhs: &CPoly<S>) {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl<S: Scalar> SubAssign<&CPoly<S>> for CPoly<S> {
    fn sub_assign(&mut self, rhs: &CPoly<S>) {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, e: &[u32]) -> fmt::Result {
    let mut first = true;
    for (j, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", j + 1)?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

/// Human-readable form, highest lex term first: `-2*x1^2 - 3*x1*x2`.
impl<S: Scalar> fmt::Display for CPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < S::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = e.iter().all(|&k| k == 0);
            if constant {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                fmt_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for CPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CPoly[{}]({})", self.vars, self)
    }
}

/// Parses a monomial such as `x1^3*x2^2` into its exponent vector. The
/// variable count is the largest index that appears.
pub fn parse_monomial(s: &str) -> Result<Exponents> {
    let bytes = s.as_bytes();
    let mut exps: Exponents = Vec::new();
    let mut pos = 0;
    let number = |pos: &mut usize| -> Option<u32> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        s[start..*pos].parse().ok()
    };
    if bytes.is_empty() {
        return Err(Error::parse(0, "empty monomial"));
    }
    loop {
        if bytes.get(pos) != Some(&b'x') {
            return Err(Error::parse(pos, "expected `x`"));
        }
        pos += 1;
        let at = pos;
        let index = number(&mut pos).filter(|&i| i >= 1).ok_or_else(|| {
            Error::parse(at, "expected a variable index ≥ 1")
        })? as usize;
        let mut power = 1;
        if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            let at = pos;
            power = number(&mut pos).ok_or_else(|| Error::parse(at, "expected an exponent"))?;
        }
        if exps.len() < index {
            exps.resize(index, 0);
        }
        exps[index - 1] += power;
        match bytes.get(pos) {
            None => break,
            Some(b'*') => pos += 1,
            Some(_) => return Err(Error::parse(pos, "expected `*` or end of input")),
        }
    }
    Ok(exps)
}
