//! Exact linear algebra on dense coefficient rows.

use std::collections::BTreeMap;

use super::cpoly::{CPoly, Exponents};
use crate::{Error, Result, Scalar};

/// Row echelon form built one row at a time.
///
/// Elimination is fraction-free: a row is updated as
/// `pivot·row − row[c]·pivot_row` and then divided by its content, so
/// rational input stays integral with coprime entries throughout.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    ncols: usize,
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn reduce(&self, mut v: Vec<S>) -> Vec<S> {
        assert_eq!(v.len(), self.ncols, "row length");
        S::make_primitive(&mut v);
        for (c, row) in &self.rows {
            if v[*c].is_zero() {
                continue;
            }
            let a = row[*c].clone();
            let b = v[*c].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x = x.clone() * a.clone();
                    }
                } else {
                    *x = x.clone() * a.clone() - b.clone() * y.clone();
                }
            }
            S::make_primitive(&mut v);
        }
        v
    }

    /// Adds a row; returns whether the rank went up.
    pub fn insert(&mut self, v: Vec<S>) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            Some(c) => {
                self.rows.push((c, v));
                true
            }
            None => false,
        }
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: Vec<S>) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

/// Exact rank of a list of rows of equal length.
pub fn rank<S: Scalar>(rows: impl IntoIterator<Item = Vec<S>>, ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

/// Basis of `{x : A x = 0}` from reduced row echelon form, one basis
/// vector per free column.
pub fn nullspace<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut a: Vec<Vec<S>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = S::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..a.len() {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let pivot = a[r].clone();
            for (x, p) in a[i].iter_mut().zip(pivot) {
                *x = x.clone() - p * f.clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![S::zero(); ncols];
            v[fc] = S::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[i][fc].clone();
            }
            v
        })
        .collect()
}

/// Common monomial index for a family of polynomials, in ascending lex
/// order.
pub fn monomial_index<'a, S: Scalar + 'a>(
    polys: impl IntoIterator<Item = &'a CPoly<S>>,
) -> BTreeMap<Exponents, usize> {
    let mut keys: Vec<Exponents> = polys
        .into_iter()
        .flat_map(|p| p.terms().map(|(e, _)| e.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().enumerate().map(|(i, e)| (e, i)).collect()
}

fn check_shapes<S: Scalar>(polys: &[&CPoly<S>]) -> Result<()> {
    let Some(first) = polys.first() else {
        return Ok(());
    };
    let vars = first.vars();
    let mut degree = None;
    for p in polys {
        if p.vars() != vars {
            return Err(Error::MixedShapes);
        }
        if p.is_zero() {
            continue;
        }
        let d = p.homogeneous_degree().ok_or(Error::MixedShapes)?;
        if *degree.get_or_insert(d) != d {
            return Err(Error::MixedShapes);
        }
    }
    Ok(())
}

/// Rank of the coefficient matrix of homogeneous polynomials sharing a
/// variable count and degree.
pub fn rank_over_q<S: Scalar>(polys: &[CPoly<S>]) -> Result<usize> {
    let refs: Vec<&CPoly<S>> = polys.iter().collect();
    check_shapes(&refs)?;
    let index = monomial_index(polys);
    Ok(rank(polys.iter().map(|p| p.dense_row(&index)), index.len()))
}

/// Whether `target` is a rational combination of `span`.
pub fn in_span<S: Scalar>(span: &[CPoly<S>], target: &CPoly<S>) -> Result<bool> {
    let mut refs: Vec<&CPoly<S>> = span.iter().collect();
    refs.push(target);
    check_shapes(&refs)?;
    let index = monomial_index(refs.iter().copied());
    let mut e = Echelon::new(index.len());
    for p in span {
        e.insert(p.dense_row(&index));
    }
    Ok(e.contains(target.dense_row(&index)))
}
