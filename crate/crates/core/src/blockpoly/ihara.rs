use super::{BGElement, ReducedElement};
use crate::exactalg::{CPoly, Slot};
use crate::{Error, Result, Scalar};

fn sign<S: Scalar>(negative: bool) -> S {
    if negative {
        -S::one()
    } else {
        S::one()
    }
}

/// `x₁⋯x_N / (x_i x_j)` as an exponent vector (`i ≠ j`, 0-based).
fn cofactor(n: usize, i: usize, j: usize) -> Vec<u32> {
    let mut e = vec![1; n];
    e[i] = 0;
    e[j] = 0;
    e
}

fn rename<S: Scalar>(f: &CPoly<S>, slots: Vec<Slot>, vars: usize) -> Result<CPoly<S>> {
    f.substitute_in(&slots, vars)
}

/// Sums `Σᵢ Aᵢ·Bᵢ / (x_i x_j)` over a common denominator `x₁⋯x_N` and
/// divides it out exactly.
fn sum_over_products<S: Scalar>(
    vars: usize,
    terms: impl IntoIterator<Item = (usize, usize, CPoly<S>)>,
) -> Result<CPoly<S>> {
    let mut num = CPoly::zero(vars);
    for (i, j, t) in terms {
        num += &t.mul_monomial(&cofactor(vars, i, j), &S::one());
    }
    num.divide_exact(&CPoly::var_product(vars))
}

/// Polynomial Ihara action on block-graded elements.
///
/// For `f` in `m` variables and `g` in `n`, with `N = m + n − 1`, this is
/// `(−1)^{(m+1)(n+1)} Σᵢ f(xᵢ…x_j)/(xᵢ − x_j) · (g(x₁…xᵢ, x_{j+1}…x_N)/xᵢ
/// − g(x₁…x_{i−1}, x_j…x_N)/x_j)` with `j = i + m − 1`. The individual
/// fractions need not be polynomial; their sum is, and the final division
/// is checked.
pub fn ihara_poly_signed<S: Scalar>(f: &BGElement<S>, g: &BGElement<S>) -> Result<BGElement<S>> {
    let (m, n) = (f.vars(), g.vars());
    if m < 2 {
        return Err(Error::Arity("the acting element needs at least two variables".into()));
    }
    let nv = m + n - 1;
    let terms = (0..n).map(|i| {
        let j = i + m - 1;
        let fi = rename(f.poly(), (i..=j).map(Slot::var).collect(), nv)?;
        let a = fi.divide_exact(&CPoly::var_difference(nv, i, j))?;
        let g1 = rename(g.poly(), (0..=i).chain(j + 1..nv).map(Slot::var).collect(), nv)?;
        let g2 = rename(g.poly(), (0..i).chain(j..nv).map(Slot::var).collect(), nv)?;
        let inner = &(&CPoly::var(nv, j) * &g1) - &(&CPoly::var(nv, i) * &g2);
        Ok((i, j, &a * &inner))
    });
    let terms: Result<Vec<_>> = terms.collect();
    let out = sum_over_products(nv, terms?)?;
    let out = out.scale(&sign::<S>((m + 1) * (n + 1) % 2 == 1));
    BGElement::new(out, f.weight() + g.weight())
}

/// Linearised Ihara action in the unsigned (word) normalisation.
///
/// With `s = (−1)^{m+1}` and `x̄ = s·x`, term `i` is
/// `(−1)^{(m+1)(i−1)} f(xᵢ…x_j)/(xᵢ² − x_j²) · [(1 + s x_j/xᵢ) g(x̄₁…x̄ᵢ,
/// x_{j+1}…x_N) − (1 + s xᵢ/x_j) g(x̄₁…x̄_{i−1}, x_j…x_N)]`. It simplifies
/// to `f(…)/(xᵢ − s x_j) · (x_j g(…) − s xᵢ g(…)) / (xᵢ x_j)`, which is how
/// it is evaluated.
pub fn ihara_poly_unsigned<S: Scalar>(f: &CPoly<S>, g: &CPoly<S>, m: usize) -> Result<CPoly<S>> {
    if f.vars() != m {
        return Err(Error::Arity(format!("f has {} variables, expected {m}", f.vars())));
    }
    if m < 2 {
        return Err(Error::Arity("the acting element needs at least two variables".into()));
    }
    let n = g.vars();
    let nv = m + n - 1;
    let bar = m.is_multiple_of(2);
    let terms = (0..n).map(|i| {
        let j = i + m - 1;
        let fi = rename(f, (i..=j).map(Slot::var).collect(), nv)?;
        let den = if bar {
            &CPoly::var(nv, i) + &CPoly::var(nv, j)
        } else {
            CPoly::var_difference(nv, i, j)
        };
        let a = fi.divide_exact(&den)?;
        let s1 = (0..=i)
            .map(|k| Slot::signed(k, bar))
            .chain((j + 1..nv).map(Slot::var))
            .collect();
        let s2 = (0..i)
            .map(|k| Slot::signed(k, bar))
            .chain((j..nv).map(Slot::var))
            .collect();
        let g1 = rename(g, s1, nv)?;
        let g2 = rename(g, s2, nv)?;
        let xi_g2 = &CPoly::var(nv, i) * &g2;
        let inner = if bar {
            &(&CPoly::var(nv, j) * &g1) + &xi_g2
        } else {
            &(&CPoly::var(nv, j) * &g1) - &xi_g2
        };
        let t = (&a * &inner).scale(&sign::<S>((m + 1) * i % 2 == 1));
        Ok((i, j, t))
    });
    let terms: Result<Vec<_>> = terms.collect();
    sum_over_products(nv, terms?)
}

/// Ihara bracket `f∘g − g∘f` through the signed polynomial action.
pub fn bracket<S: Scalar>(f: &BGElement<S>, g: &BGElement<S>) -> Result<BGElement<S>> {
    let a = ihara_poly_signed(f, g)?;
    let b = ihara_poly_signed(g, f)?;
    BGElement::new(a.poly() - b.poly(), a.weight())
}

/// `[[[g₁, g₂], g₃], …]`.
pub fn left_nested<S: Scalar>(gens: &[BGElement<S>]) -> Result<BGElement<S>> {
    let (first, rest) = gens
        .split_first()
        .ok_or_else(|| Error::Arity("empty bracket".into()))?;
    rest.iter().try_fold(first.clone(), |acc, g| bracket(&acc, g))
}

/// Bracket on reduced polynomials, indices modulo `N = m + n − 1`:
///
/// ```text
/// Σ_{i=1}^{N} r(xᵢ,…,x_{i+m−1}) · (q(x_{i+m},…,x_{i+m+n−1}) − q(x_{i+m−1},…,x_{i+m+n−2}))
/// ```
///
/// Without the sign of the signed action:
/// `reduce([f, g]) = (−1)^{(m+1)(n+1)} reduced_bracket(reduce f, reduce g)`.
pub fn reduced_bracket<S: Scalar>(
    r: &ReducedElement<S>,
    q: &ReducedElement<S>,
) -> Result<ReducedElement<S>> {
    let (m, n) = (r.vars(), q.vars());
    let nv = m + n - 1;
    let mut out = CPoly::zero(nv);
    for i in 0..nv {
        let cyc = |start: usize, len: usize| -> Vec<Slot> {
            (0..len).map(|k| Slot::var((start + k) % nv)).collect()
        };
        let ri = rename(r.poly(), cyc(i, m), nv)?;
        let q1 = rename(q.poly(), cyc(i + m, n), nv)?;
        let q2 = rename(q.poly(), cyc(i + m - 1, n), nv)?;
        out += &(&ri * &(&q1 - &q2));
    }
    ReducedElement::new(out, r.weight() + q.weight())
}
