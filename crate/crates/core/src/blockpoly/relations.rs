use std::collections::BTreeMap;

use super::{BGElement, ReducedElement};
use crate::exactalg::linalg::{monomial_index, Echelon};
use crate::exactalg::{CPoly, Slot};
use crate::{Error, Result, Scalar};

/// Permutations `σ` of the `(r, n−r)` shuffle set, as the images
/// `σ(1),…,σ(n)` (0-based). Position sets for the first `r` values are
/// enumerated in ascending lexicographic order.
pub fn shuffle_permutations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn combos(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            combos(n, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut positions = Vec::new();
    combos(n, r, 0, &mut Vec::new(), &mut positions);
    positions
        .into_iter()
        .map(|pos| {
            let (mut a, mut b) = (0, r);
            (0..n)
                .map(|j| {
                    if pos.contains(&j) {
                        a += 1;
                        a - 1
                    } else {
                        b += 1;
                        b - 1
                    }
                })
                .collect()
        })
        .collect()
}

/// `Σ_{σ ∈ Sh_{n,r}} f(x_{σ(1)},…,x_{σ(n)})`.
pub fn block_shuffle_sum<S: Scalar>(f: &CPoly<S>, r: usize) -> Result<CPoly<S>> {
    let n = f.vars();
    if r == 0 || r >= n {
        return Err(Error::SplitOutOfRange { r, n });
    }
    let mut out = CPoly::zero(n);
    for perm in shuffle_permutations(n, r) {
        out += &f.rename(&perm, n)?;
    }
    Ok(out)
}

/// `f(x_{1+c}, …, x_n, x_1, …, x_c)`.
pub fn rotate<S: Scalar>(f: &CPoly<S>, c: usize) -> CPoly<S> {
    let n = f.vars();
    let src: Vec<usize> = (0..n).map(|j| (j + c) % n).collect();
    f.rename(&src, n).expect("rotation is a valid renaming")
}

/// Sum over the `n` cyclic rotations of the variable slots.
pub fn cyclic_sum<S: Scalar>(f: &CPoly<S>) -> CPoly<S> {
    let mut out = CPoly::zero(f.vars());
    for c in 0..f.vars() {
        out += &rotate(f, c);
    }
    out
}

fn pm<S: Scalar>(negative: bool) -> S {
    if negative {
        -S::one()
    } else {
        S::one()
    }
}

/// `f(x₁,…,xₙ) − (−1)^{n+1} f(xₙ,…,x₁)`.
pub fn duality_defect<S: Scalar>(f: &BGElement<S>) -> CPoly<S> {
    let n = f.vars();
    f.poly() - &f.poly().reversed().scale(&pm((n + 1) % 2 == 1))
}

/// `r(xₙ,…,x₁) − (−1)ⁿ r(x₁,…,xₙ)`.
pub fn reflection_defect<S: Scalar>(r: &ReducedElement<S>) -> CPoly<S> {
    let n = r.vars();
    &r.poly().reversed() - &r.poly().scale(&pm(n % 2 == 1))
}

/// `r(x₂,…,xₙ,x₁) − r(x₁,…,xₙ)`.
pub fn cyclic_defect<S: Scalar>(r: &ReducedElement<S>) -> CPoly<S> {
    &rotate(r.poly(), 1) - r.poly()
}

/// Sign vector `(v₁,…,vₙ)` with `v₁ = +1`. It stands for the matrix
/// `M_{ij} = vᵢvⱼ` and the operator `L_v = Σⱼ vⱼ ∂/∂xⱼ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.first() != Some(&1) || entries.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::Arity("sign vectors have entries ±1 and start with +1".into()));
        }
        Ok(SignVector(entries))
    }

    /// All `2^{n−1}` sign vectors of length `n`.
    pub fn all(n: usize) -> Vec<SignVector> {
        assert!(n >= 1);
        (0u32..1 << (n - 1))
            .map(|bits| {
                let mut v = vec![1i8];
                v.extend((0..n - 1).map(|j| if bits >> j & 1 == 1 { -1 } else { 1 }));
                SignVector(v)
            })
            .collect()
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn apply<S: Scalar>(&self, f: &CPoly<S>) -> CPoly<S> {
        let dir: Vec<i64> = self.0.iter().map(|&v| v as i64).collect();
        f.directional(&dir)
    }

    /// Linear forms `vⱼ₊₁x₁ − v₁xⱼ₊₁` spanning the degree-one kernel of
    /// `L_v`.
    fn kernel_forms<S: Scalar>(&self) -> Vec<CPoly<S>> {
        let n = self.0.len();
        (1..n)
            .map(|j| {
                &CPoly::var(n, 0).scale(&S::from_int(self.0[j] as i64))
                    - &CPoly::var(n, j).scale(&S::from_int(self.0[0] as i64))
            })
            .collect()
    }
}

/// `D_n r = Π_v L_v r`, the product over all sign vectors.
pub fn block_differential<S: Scalar>(r: &ReducedElement<S>) -> CPoly<S> {
    let mut out = r.poly().clone();
    for v in SignVector::all(r.vars()) {
        if out.is_zero() {
            break;
        }
        out = v.apply(&out);
    }
    out
}

/// Outcome of testing `r ∈ Σ_v ker L_v` in a fixed degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelMembership {
    /// Dimension of `Σ_v ker L_v` in the degree of `r`.
    pub rank: usize,
    /// Dimension of all homogeneous polynomials of that degree.
    pub ambient: usize,
    pub member: bool,
}

fn compositions(parts: usize, total: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(parts - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `Σ_v ker L_v` in degree `d` on `n` variables. In degree `d` the kernel
/// of `L_v` is spanned by the degree-`d` monomials in the linear forms it
/// annihilates.
pub struct KernelSum<S> {
    index: BTreeMap<Vec<u32>, usize>,
    span: Echelon<S>,
}

impl<S: Scalar> KernelSum<S> {
    pub fn new(n: usize, d: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Arity("kernel membership needs at least two variables".into()));
        }
        let all_monomials: Vec<CPoly<S>> = compositions(n, d)
            .into_iter()
            .map(|e| CPoly::monomial(e, S::one()))
            .collect();
        let index = monomial_index(&all_monomials);
        let mut span = Echelon::new(index.len());
        let exps = compositions(n - 1, d);
        'outer: for v in SignVector::all(n) {
            let forms = v.kernel_forms::<S>();
            let powers: Vec<Vec<CPoly<S>>> = forms
                .iter()
                .map(|l| {
                    let mut p = vec![CPoly::one(n)];
                    for k in 1..=d as usize {
                        let next = &p[k - 1] * l;
                        p.push(next);
                    }
                    p
                })
                .collect();
            for e in &exps {
                let prod = e
                    .iter()
                    .enumerate()
                    .fold(CPoly::one(n), |acc, (j, &k)| &acc * &powers[j][k as usize]);
                span.insert(prod.dense_row(&index));
                if span.rank() == index.len() {
                    break 'outer;
                }
            }
        }
        Ok(KernelSum { index, span })
    }

    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    /// Dimension of all homogeneous polynomials of this degree.
    pub fn ambient(&self) -> usize {
        self.index.len()
    }

    pub fn contains(&self, f: &CPoly<S>) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let n = self.index.keys().next().map_or(0, |e| e.len());
        if f.vars() != n {
            return Err(Error::VarCountMismatch { left: f.vars(), right: n });
        }
        let d = self.index.keys().next().map(|e| e.iter().sum::<u32>());
        if f.homogeneous_degree() != d {
            return Err(Error::NonHomogeneous);
        }
        Ok(self.span.contains(f.dense_row(&self.index)))
    }
}

/// Degree of the reduced polynomial of an element.
pub(crate) fn reduced_degree<S: Scalar>(r: &ReducedElement<S>) -> Result<u32> {
    (r.weight() + 1)
        .checked_sub(r.vars())
        .map(|d| d as u32)
        .ok_or_else(|| Error::Arity("negative reduced degree".into()))
}

/// Tests `r ∈ Σ_v ker L_v`.
pub fn kernel_membership<S: Scalar>(r: &ReducedElement<S>) -> Result<KernelMembership> {
    let sum = KernelSum::<S>::new(r.vars(), reduced_degree(r)?)?;
    Ok(KernelMembership {
        rank: sum.rank(),
        ambient: sum.ambient(),
        member: sum.contains(r.poly())?,
    })
}

/// `x · ∂f/∂x₁(0, x)` and `f(x, −x)` for a two-variable `f`.
pub fn one_variable_identity<S: Scalar>(f: &CPoly<S>) -> Result<(CPoly<S>, CPoly<S>)> {
    if f.vars() != 2 {
        return Err(Error::Arity("expected two variables".into()));
    }
    let x = CPoly::var(1, 0);
    let lhs = &x * &f.partial(0).substitute_in(&[Slot::Zero, Slot::var(0)], 1)?;
    let rhs = f.substitute_in(&[Slot::var(0), Slot::neg(0)], 1)?;
    Ok((lhs, rhs))
}

/// The two regularisation identities for a three-variable `g`, each as
/// `(lhs, rhs)` in variables `y = x1`, `z = x2`:
///
/// ```text
/// yz(∂₁g(0,y,z) − ∂₁g(0,y,−z))
///     = y(g(y,z,−z) + g(−y,z,−z)) + z(g(−y,y,−z) − g(−y,y,z))
/// yz(∂₁g(0,y,z) + ∂₁g(0,y,−z) + ∂₂g(y,0,z) + ∂₂g(y,0,−z))
///     = y(g(y,z,−z) − g(−y,z,−z)) − z(g(−y,y,−z) + g(−y,y,z))
/// ```
pub fn three_variable_identities<S: Scalar>(g: &CPoly<S>) -> Result<[(CPoly<S>, CPoly<S>); 2]> {
    if g.vars() != 3 {
        return Err(Error::Arity("expected three variables".into()));
    }
    let (y, my, z, mz) = (Slot::var(0), Slot::neg(0), Slot::var(1), Slot::neg(1));
    let at = |h: &CPoly<S>, s: [Slot; 3]| h.substitute_in(&s, 2);
    let d1 = g.partial(0);
    let d2 = g.partial(1);
    let yv = CPoly::var(2, 0);
    let zv = CPoly::var(2, 1);
    let yz = &yv * &zv;

    let d1_p = at(&d1, [Slot::Zero, y, z])?;
    let d1_m = at(&d1, [Slot::Zero, y, mz])?;
    let d2_p = at(&d2, [y, Slot::Zero, z])?;
    let d2_m = at(&d2, [y, Slot::Zero, mz])?;
    let g_a = at(g, [y, z, mz])?;
    let g_b = at(g, [my, z, mz])?;
    let g_c = at(g, [my, y, mz])?;
    let g_d = at(g, [my, y, z])?;

    let l1 = &yz * &(&d1_p - &d1_m);
    let r1 = &(&yv * &(&g_a + &g_b)) + &(&zv * &(&g_c - &g_d));
    let l2 = &yz * &(&(&d1_p + &d1_m) + &(&d2_p + &d2_m));
    let r2 = &(&yv * &(&g_a - &g_b)) - &(&zv * &(&g_c + &g_d));
    Ok([(l1, r1), (l2, r2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blockpoly::{bracket, p_gen, reduce, reduced_bracket};
    use crate::{QPoly, QReducedElement, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn shuffle_set_sizes() {
        assert_eq!(shuffle_permutations(3, 1), vec![vec![0, 1, 2], vec![1, 0, 2], vec![1, 2, 0]]);
        for n in 2..=6 {
            for r in 1..n {
                let c = (1..=r).fold(1usize, |acc, i| acc * (n - r + i) / i);
                assert_eq!(shuffle_permutations(n, r).len(), c);
            }
        }
    }

    #[test]
    fn block_shuffle_examples() {
        let p3 = p_gen::<Rational>(1).unwrap();
        assert!(block_shuffle_sum(p3.poly(), 1).unwrap().is_zero());
        let f = QPoly::monomial(vec![2, 1], q(1));
        let expected = &f + &QPoly::monomial(vec![1, 2], q(1));
        assert_eq!(block_shuffle_sum(&f, 1).unwrap(), expected);
        assert_eq!(
            block_shuffle_sum(&f, 2).unwrap_err(),
            Error::SplitOutOfRange { r: 2, n: 2 }
        );
    }

    #[test]
    fn cyclic_sum_examples() {
        assert!(cyclic_sum(p_gen::<Rational>(1).unwrap().poly()).is_zero());
        let f = QPoly::monomial(vec![1, 1], q(1));
        assert_eq!(cyclic_sum(&f), f.scale(&q(2)));
        let b = bracket(&p_gen::<Rational>(1).unwrap(), &p_gen(2).unwrap()).unwrap();
        assert!(cyclic_sum(b.poly()).is_zero());
    }

    #[test]
    fn sign_vectors() {
        assert_eq!(SignVector::all(3).len(), 4);
        assert!(SignVector::all(4).iter().all(|v| v.entries()[0] == 1));
        assert!(SignVector::new(vec![-1, 1]).is_err());
        assert!(SignVector::new(vec![1, 2]).is_err());
    }

    #[test]
    fn differential_examples() {
        let r3 = reduce(&p_gen::<Rational>(1).unwrap()).unwrap();
        assert!(block_differential(&r3).is_zero());
        // ∂₁²r₃ = ∂₂²r₃ = −4
        assert_eq!(r3.poly().partial(0).partial(0), QPoly::constant(2, q(-4)));
        let cube = QReducedElement::new(QPoly::monomial(vec![3, 0], q(1)), 4).unwrap();
        assert_eq!(block_differential(&cube), QPoly::monomial(vec![1, 0], q(6)));
        let r5 = reduce(&p_gen::<Rational>(2).unwrap()).unwrap();
        let rb = reduced_bracket(&r3, &r5).unwrap();
        assert!(block_differential(&rb).is_zero());
    }

    #[test]
    fn kernel_membership_examples() {
        let r3 = reduce(&p_gen::<Rational>(1).unwrap()).unwrap();
        assert!(kernel_membership(&r3).unwrap().member);
        let r5 = reduce(&p_gen::<Rational>(2).unwrap()).unwrap();
        let rb = reduced_bracket(&r3, &r5).unwrap();
        let k = kernel_membership(&rb).unwrap();
        assert!(k.member);
        assert!(k.rank < k.ambient);
        // x1^3 is not in ker(∂₁+∂₂) + ker(∂₁−∂₂) in degree 3.
        let cube = QReducedElement::new(QPoly::monomial(vec![3, 0], q(1)), 4).unwrap();
        assert!(!kernel_membership(&cube).unwrap().member);
    }

    #[test]
    fn regularisation_examples() {
        let (lhs, rhs) = one_variable_identity(p_gen::<Rational>(1).unwrap().poly()).unwrap();
        assert_eq!(lhs, QPoly::monomial(vec![5], q(2)));
        assert_eq!(rhs, lhs);
        for k in 1..=5 {
            let (l, r) = one_variable_identity(p_gen::<Rational>(k).unwrap().poly()).unwrap();
            assert_eq!(l, r);
        }
        let b = bracket(&p_gen::<Rational>(1).unwrap(), &p_gen(2).unwrap()).unwrap();
        for (l, r) in three_variable_identities(b.poly()).unwrap() {
            assert_eq!(l, r);
        }
        // x2^3 fails the first identity.
        let g = QPoly::monomial(vec![0, 3, 0], q(1));
        let [(l, r), _] = three_variable_identities(&g).unwrap();
        assert_ne!(l, r);
    }

    #[test]
    fn reduced_symmetries_of_generators() {
        for k in 1..=6 {
            let p = p_gen::<Rational>(k).unwrap();
            assert!(duality_defect(&p).is_zero());
            let r = reduce(&p).unwrap();
            assert!(reflection_defect(&r).is_zero());
            assert!(cyclic_defect(&r).is_zero());
        }
    }
}
