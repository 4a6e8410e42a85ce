//! Scalar abstraction for weight coordinates and restriction matrices.
//!
//! Root data are always integral; only weights and restriction maps carry a
//! scalar type. Verdicts are exact for the rational implementations. The
//! `f64` implementation exists for exploratory numerics and compares with
//! plain floating-point ordering.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// Field-like scalar used for weight coordinates.
pub trait Scalar:
    Num + Signed + Clone + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    /// `numer / denom`; `denom` must be nonzero.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// The value as an integer, if it is one.
    fn as_integer(&self) -> Option<i64>;

    /// Smallest integer not below the value.
    fn ceil_to_int(&self) -> i64;

    /// Parses `"a/b"` or `"a"`.
    fn parse_rational(s: &str) -> Option<Self>;

    /// Canonical text form: `"a"` for integers, `"a/b"` in lowest terms with
    /// `b > 0` otherwise.
    fn render(&self) -> String;
}

fn split_ratio(s: &str) -> Option<(&str, Option<&str>)> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => Some((n.trim(), Some(d.trim()))),
        None => Some((s, None)),
    }
}

impl Scalar for Rational64 {
    fn from_int(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Rational64::new(numer, denom)
    }

    fn as_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }

    fn ceil_to_int(&self) -> i64 {
        self.ceil().to_integer()
    }

    fn parse_rational(s: &str) -> Option<Self> {
        let (n, d) = split_ratio(s)?;
        let n: i64 = n.parse().ok()?;
        let d: i64 = match d {
            Some(d) => d.parse().ok()?,
            None => 1,
        };
        (d != 0).then(|| Rational64::new(n, d))
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }

    fn ceil_to_int(&self) -> i64 {
        self.ceil()
            .to_integer()
            .to_i64()
            .expect("ceiling does not fit in i64")
    }

    fn parse_rational(s: &str) -> Option<Self> {
        let (n, d) = split_ratio(s)?;
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = match d {
            Some(d) => d.parse().ok()?,
            None => BigInt::one(),
        };
        (!d.is_zero()).then(|| BigRational::new(n, d))
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }

    fn as_integer(&self) -> Option<i64> {
        (self.fract() == 0.0 && self.is_finite()).then_some(*self as i64)
    }

    fn ceil_to_int(&self) -> i64 {
        i64::from_f64(self.ceil()).expect("ceiling does not fit in i64")
    }

    fn parse_rational(s: &str) -> Option<Self> {
        let (n, d) = split_ratio(s)?;
        let n: f64 = n.parse().ok()?;
        let d: f64 = match d {
            Some(d) => d.parse().ok()?,
            None => 1.0,
        };
        (d != 0.0).then(|| n / d)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_render_is_lowest_terms() {
        assert_eq!(Rational64::new(4, -6).render(), "-2/3");
        assert_eq!(Rational64::from_int(3).render(), "3");
        assert_eq!(BigRational::from_ratio(6, 4).render(), "3/2");
    }

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(
            Rational64::parse_rational("3"),
            Some(Rational64::from_int(3))
        );
        assert_eq!(
            Rational64::parse_rational(" -1/2 "),
            Some(Rational64::new(-1, 2))
        );
        assert_eq!(Rational64::parse_rational("1/0"), None);
        assert_eq!(Rational64::parse_rational("x"), None);
        assert_eq!(f64::parse_rational("3/4"), Some(0.75));
    }

    #[test]
    fn ceil_and_integrality() {
        assert_eq!(Rational64::new(7, 2).ceil_to_int(), 4);
        assert_eq!(Rational64::new(-7, 2).ceil_to_int(), -3);
        assert_eq!(Rational64::new(6, 2).as_integer(), Some(3));
        assert_eq!(Rational64::new(1, 2).as_integer(), None);
        assert_eq!(2.5f64.as_integer(), None);
    }
}
