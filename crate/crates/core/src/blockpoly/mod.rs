//! Block-graded elements as commutative polynomials.
//!
//! An element of block degree `n − 1` and weight `N` is a homogeneous
//! polynomial of degree `N + 2` in `n` variables; the word `w` corresponds
//! to the monomial `pi_bl(w)`. Every such element is divisible by
//! `x₁⋯xₙ(x₁ − xₙ)`, and the quotient is its reduced polynomial.

mod dims;
mod generators;
mod ihara;
mod relations;
mod zalphabet;

pub use dims::{bracket_span, lyndon_dim};
pub(crate) use dims::generator_sequences;
pub(crate) use relations::reduced_degree;
pub use generators::{
    characterize_generator, generator_constraints, p_from_q, p_gen, q_coefficients, q_gen,
    q_gen_mutated, GeneratorConstraint, QCoefficients, GENERATOR_SCALE,
};
pub use ihara::{bracket, ihara_poly_signed, ihara_poly_unsigned, left_nested, reduced_bracket};
pub use relations::{
    block_differential, block_shuffle_sum, cyclic_defect, cyclic_sum, duality_defect,
    kernel_membership, one_variable_identity, reflection_defect, rotate, shuffle_permutations,
    three_variable_identities, KernelMembership, KernelSum, SignVector,
};
pub use zalphabet::{antipode, cyclic_operator, is_z_primitive, to_zword, ZLetter, ZPoly};

use std::fmt;

use crate::exactalg::CPoly;
use crate::{Error, Rational, Result, Scalar};

/// Homogeneous polynomial of degree `weight + 2` in `block_degree + 1`
/// variables.
#[derive(Clone, PartialEq, Eq)]
pub struct BGElement<S = Rational> {
    poly: CPoly<S>,
    weight: usize,
}

/// Reduced polynomial `f / (x₁⋯xₙ(x₁ − xₙ))`, homogeneous of degree
/// `weight + 1 − n` in `n = block_degree + 1` variables.
#[derive(Clone, PartialEq, Eq)]
pub struct ReducedElement<S = Rational> {
    poly: CPoly<S>,
    weight: usize,
}

impl<S: Scalar> fmt::Debug for BGElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BGElement[w={}]({})", self.weight, self.poly)
    }
}

impl<S: Scalar> fmt::Debug for ReducedElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedElement[w={}]({})", self.weight, self.poly)
    }
}

fn check_degree<S: Scalar>(poly: &CPoly<S>, degree: i64) -> Result<()> {
    if poly.vars() == 0 {
        return Err(Error::Arity("block-graded elements need at least one variable".into()));
    }
    if poly.is_zero() {
        return Ok(());
    }
    match poly.homogeneous_degree() {
        Some(d) if d as i64 == degree => Ok(()),
        _ => Err(Error::NonHomogeneous),
    }
}

impl<S: Scalar> BGElement<S> {
    pub fn new(poly: CPoly<S>, weight: usize) -> Result<Self> {
        check_degree(&poly, weight as i64 + 2)?;
        Ok(BGElement { poly, weight })
    }

    /// Infers the weight from the degree; fails on the zero polynomial.
    pub fn from_poly(poly: CPoly<S>) -> Result<Self> {
        let d = poly.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
        if d < 2 {
            return Err(Error::NonHomogeneous);
        }
        Self::new(poly, d as usize - 2)
    }

    pub fn poly(&self) -> &CPoly<S> {
        &self.poly
    }

    pub fn into_poly(self) -> CPoly<S> {
        self.poly
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn vars(&self) -> usize {
        self.poly.vars()
    }

    pub fn block_degree(&self) -> usize {
        self.vars() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &S) -> Self {
        BGElement {
            poly: self.poly.scale(c),
            weight: self.weight,
        }
    }

    pub fn reduce(&self) -> Result<ReducedElement<S>> {
        reduce(self)
    }
}

impl<S: Scalar> ReducedElement<S> {
    pub fn new(poly: CPoly<S>, weight: usize) -> Result<Self> {
        check_degree(&poly, weight as i64 + 1 - poly.vars() as i64)?;
        Ok(ReducedElement { poly, weight })
    }

    pub fn poly(&self) -> &CPoly<S> {
        &self.poly
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn vars(&self) -> usize {
        self.poly.vars()
    }

    pub fn block_degree(&self) -> usize {
        self.vars() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn unreduce(&self) -> BGElement<S> {
        unreduce(self)
    }
}

/// `x₁⋯xₙ(x₁ − xₙ)`.
pub fn reduction_factor<S: Scalar>(n: usize) -> CPoly<S> {
    &CPoly::var_product(n) * &CPoly::var_difference(n, 0, n - 1)
}

pub fn reduce<S: Scalar>(f: &BGElement<S>) -> Result<ReducedElement<S>> {
    let n = f.vars();
    if n < 2 {
        return Err(Error::Arity("reduction needs at least two variables".into()));
    }
    let poly = f.poly.divide_exact(&reduction_factor(n))?;
    Ok(ReducedElement {
        poly,
        weight: f.weight,
    })
}

pub fn unreduce<S: Scalar>(r: &ReducedElement<S>) -> BGElement<S> {
    BGElement {
        poly: &r.poly * &reduction_factor(r.vars()),
        weight: r.weight,
    }
}
