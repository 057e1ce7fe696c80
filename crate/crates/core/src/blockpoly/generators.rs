use std::collections::BTreeMap;

use super::{reduction_factor, BGElement};
use crate::exactalg::{nullspace, CPoly, Slot};
use crate::{Error, Result, Scalar};

/// Scalar `λ` with `p_gen(k) = λ·(q(x₁,x₂) − q(x₂,x₁))`, the same for
/// every `k` checked.
pub const GENERATOR_SCALE: i64 = 2;

/// Coefficients of the two-variable sum form of a generator:
/// `q = Σᵢ cᵢ x₁^{2i+1} x₂^{2k+2−2i} + c₀ x₁ x₂^{2k+2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCoefficients<S> {
    pub k: usize,
    /// `c₀ = −2 Σᵢ cᵢ`.
    pub c0: S,
    /// `cᵢ` for `i = 1..=k`, at index `i − 1`.
    pub c: Vec<S>,
}

fn binomial<S: Scalar>(n: usize, r: usize) -> S {
    if r > n {
        return S::zero();
    }
    let r = r.min(n - r);
    (0..r).fold(S::one(), |acc, i| {
        acc * S::from_int((n - i) as i64) / S::from_int((i + 1) as i64)
    })
}

pub fn q_coefficients<S: Scalar>(k: usize) -> Result<QCoefficients<S>> {
    if k == 0 {
        return Err(Error::ZeroGeneratorIndex);
    }
    let two_k = 2 * k;
    let factor = S::one() - S::one() / S::pow_int(2, two_k as u32);
    let c: Vec<S> = (1..=k)
        .map(|i| binomial::<S>(two_k, 2 * i) - factor.clone() * binomial(two_k, two_k + 1 - 2 * i))
        .collect();
    let sum = c.iter().cloned().fold(S::zero(), |a, b| a + b);
    Ok(QCoefficients {
        k,
        c0: -(S::from_int(2) * sum),
        c,
    })
}

impl<S: Scalar> QCoefficients<S> {
    pub fn to_poly(&self) -> CPoly<S> {
        let k = self.k as u32;
        let mut q = CPoly::monomial(vec![1, 2 * k + 2], self.c0.clone());
        for (i, c) in (1..=k).zip(&self.c) {
            q.add_term(vec![2 * i + 1, 2 * k + 2 - 2 * i], c.clone());
        }
        q
    }

    /// Flips the sign of `cᵢ`; index 0 is `c₀`.
    pub fn flip(&mut self, i: usize) -> Result<()> {
        match i {
            0 => self.c0 = -self.c0.clone(),
            i if i <= self.k => self.c[i - 1] = -self.c[i - 1].clone(),
            _ => return Err(Error::Arity(format!("no coefficient c{i} for k = {}", self.k))),
        }
        Ok(())
    }
}

pub fn q_gen<S: Scalar>(k: usize) -> Result<CPoly<S>> {
    Ok(q_coefficients(k)?.to_poly())
}

/// `q_gen(k)` with the sign of one coefficient flipped.
pub fn q_gen_mutated<S: Scalar>(k: usize, flip: usize) -> Result<CPoly<S>> {
    let mut c = q_coefficients(k)?;
    c.flip(flip)?;
    Ok(c.to_poly())
}

/// Closed form `x₁x₂(x₁−x₂)((1−2^{2k+1})(x₁+x₂)^{2k} − (x₁−x₂)^{2k}) / 2^{2k}`.
pub fn p_gen<S: Scalar>(k: usize) -> Result<BGElement<S>> {
    if k == 0 {
        return Err(Error::ZeroGeneratorIndex);
    }
    let k32 = k as u32;
    let sum = &CPoly::var(2, 0) + &CPoly::var(2, 1);
    let diff = CPoly::var_difference(2, 0, 1);
    let a = sum.pow(2 * k32).scale(&(S::one() - S::pow_int(2, 2 * k32 + 1)));
    let inner = &a - &diff.pow(2 * k32);
    let p = (&reduction_factor(2) * &inner).scale(&(S::one() / S::pow_int(2, 2 * k32)));
    BGElement::new(p, 2 * k + 1)
}

/// `λ·(q(x₁,x₂) − q(x₂,x₁))` with `λ =` [`GENERATOR_SCALE`].
pub fn p_from_q<S: Scalar>(q: &CPoly<S>) -> Result<BGElement<S>> {
    if q.vars() != 2 {
        return Err(Error::Arity("generators have two variables".into()));
    }
    let swapped = q.substitute_in(&[Slot::var(1), Slot::var(0)], 2)?;
    let p = (q - &swapped).scale(&S::from_int(GENERATOR_SCALE));
    BGElement::from_poly(p)
}

/// One of the defining constraints of a generator, with its defect
/// polynomial (zero when satisfied).
#[derive(Clone)]
pub struct GeneratorConstraint<S> {
    pub name: &'static str,
    pub defect: CPoly<S>,
}

impl<S: Scalar> std::fmt::Debug for GeneratorConstraint<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.name, self.defect)
    }
}

fn r_constraints<S: Scalar>(r: &CPoly<S>) -> Result<(CPoly<S>, CPoly<S>)> {
    // r(0, x) − 2 r(x, −x), as a polynomial in x
    let at_zero = r.substitute_in(&[Slot::Zero, Slot::var(0)], 1)?;
    let anti = r.substitute_in(&[Slot::var(0), Slot::neg(0)], 1)?;
    let reg = &at_zero - &anti.scale(&S::from_int(2));
    let wave = &r.partial(0).partial(0) - &r.partial(1).partial(1);
    Ok((reg, wave))
}

/// The five constraints characterising a generator up to scale:
/// vanishing on both axes, antisymmetry, the regularisation condition
/// `r(0,x) = 2r(x,−x)` and `∂₁²r = ∂₂²r` on the reduced polynomial.
pub fn generator_constraints<S: Scalar>(p: &CPoly<S>) -> Result<Vec<GeneratorConstraint<S>>> {
    if p.vars() != 2 {
        return Err(Error::Arity("generators have two variables".into()));
    }
    let swapped = p.substitute_in(&[Slot::var(1), Slot::var(0)], 2)?;
    let r = p.divide_exact(&reduction_factor(2))?;
    let (reg, wave) = r_constraints(&r)?;
    Ok(vec![
        GeneratorConstraint {
            name: "p(x1,0)",
            defect: p.substitute_in(&[Slot::var(0), Slot::Zero], 1)?,
        },
        GeneratorConstraint {
            name: "p(0,x2)",
            defect: p.substitute_in(&[Slot::Zero, Slot::var(0)], 1)?,
        },
        GeneratorConstraint {
            name: "p(x1,x2)+p(x2,x1)",
            defect: p + &swapped,
        },
        GeneratorConstraint {
            name: "r(0,x)-2r(x,-x)",
            defect: reg,
        },
        GeneratorConstraint {
            name: "d1^2 r-d2^2 r",
            defect: wave,
        },
    ])
}

/// Solves the five generator constraints on homogeneous polynomials of
/// degree `2k+3` in two variables. Returns the dimension of the solution
/// space and a basis.
pub fn characterize_generator<S: Scalar>(k: usize) -> Result<(usize, Vec<CPoly<S>>)> {
    if k == 0 {
        return Err(Error::ZeroGeneratorIndex);
    }
    let d = 2 * k + 3;
    let mono = |a: usize| CPoly::<S>::monomial(vec![a as u32, (d - a) as u32], S::one());

    // Linear conditions on the coefficient vector (c_0, …, c_d) of x₁^a x₂^{d−a}.
    let unit = |a: usize| {
        let mut v = vec![S::zero(); d + 1];
        v[a] = S::one();
        v
    };
    let mut rows = vec![unit(d), unit(0)];
    for a in 0..=d / 2 {
        let mut v = unit(a);
        v[d - a] = v[d - a].clone() + S::one();
        rows.push(v);
    }
    let first = nullspace(&rows, d + 1);

    // Antisymmetric solutions vanishing on the axes are divisible by
    // x₁x₂(x₁−x₂); impose the conditions on the reduced polynomials.
    let polys: Vec<CPoly<S>> = first
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .fold(CPoly::zero(2), |acc, (a, c)| &acc + &mono(a).scale(c))
        })
        .collect();
    let mut conditions: Vec<(CPoly<S>, CPoly<S>)> = Vec::new();
    for p in &polys {
        let r = p.divide_exact(&reduction_factor(2))?;
        conditions.push(r_constraints(&r)?);
    }
    let mut eqs: BTreeMap<(usize, Vec<u32>), Vec<S>> = BTreeMap::new();
    for (j, (reg, wave)) in conditions.iter().enumerate() {
        for (tag, poly) in [(0, reg), (1, wave)] {
            for (e, c) in poly.terms() {
                eqs.entry((tag, e.clone()))
                    .or_insert_with(|| vec![S::zero(); polys.len()])[j] = c.clone();
            }
        }
    }
    let rows: Vec<Vec<S>> = eqs.into_values().collect();
    let basis: Vec<CPoly<S>> = nullspace(&rows, polys.len())
        .into_iter()
        .map(|t| {
            t.iter()
                .zip(&polys)
                .fold(CPoly::zero(2), |acc, (c, p)| &acc + &p.scale(c))
        })
        .collect();
    Ok((basis.len(), basis))
}
