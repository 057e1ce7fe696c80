use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, Zero};

/// Coefficient field for the polynomial types.
///
/// Implemented for exact rationals over any integer type, so
/// `BigRational` and `Rational64` both work. Every zero test in the crate
/// relies on exact equality, so floating point types are deliberately not
/// implemented.
pub trait Scalar:
    Num + Clone + PartialOrd + Debug + Display + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    /// Renders as `p/q` with `q > 0`, always including the denominator.
    fn to_fraction(&self) -> String;

    /// Parses `p/q` or a bare integer `p`.
    fn parse_fraction(s: &str) -> Option<Self>;

    /// Rescales a vector by a nonzero constant so that its entries are
    /// coprime integers. Elimination calls this after every row operation
    /// to keep entries small; the default leaves the row untouched.
    fn make_primitive(_row: &mut [Self]) {}

    fn pow_int(base: i64, exp: u32) -> Self {
        let b = Self::from_int(base);
        (0..exp).fold(Self::one(), |acc, _| acc * b.clone())
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + FromPrimitive
        + Display
        + Debug
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer out of range for scalar type"))
    }

    fn to_fraction(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_fraction(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse::<T>().ok()?;
                let d = d.trim().parse::<T>().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(Ratio::new(n, d))
            }
            None => s.parse::<T>().ok().map(Ratio::from_integer),
        }
    }

    fn make_primitive(row: &mut [Self]) {
        let mut den = T::one();
        let mut num = T::zero();
        for x in row.iter().filter(|x| !x.is_zero()) {
            den = den.lcm(x.denom());
            num = num.gcd(x.numer());
        }
        if num.is_zero() || (den.is_one() && num.is_one()) {
            return;
        }
        let factor = Ratio::new(den, num);
        for x in row.iter_mut().filter(|x| !x.is_zero()) {
            *x = x.clone() * factor.clone();
        }
    }
}
