//! Arbitrary-precision rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{Field, Ring};
use crate::error::Error;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p/q"` and the like; decimal points are rejected on purpose.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Nonnegative rational square root when `x` is the square of a rational.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer();
    let d = x.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

/// Exponent of the prime `p` in a nonzero rational.
pub fn valuation(x: &Rational, p: u64) -> Option<i64> {
    if Zero::is_zero(x) {
        return None;
    }
    let p = BigInt::from(p);
    let count = |mut n: BigInt| {
        let mut v = 0;
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                return v;
            }
            n = q;
            v += 1;
        }
    };
    Some(count(x.numer().clone()) - count(x.denom().clone()))
}

/// Image of `x` in 𝔽_p, or `None` when `p` divides the denominator.
pub fn reduce_mod(x: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = x.denom().mod_floor(&pb);
    if d.is_zero() {
        return None;
    }
    let n = x.numer().mod_floor(&pb);
    let n = u64::try_from(n).ok()?;
    let d = u64::try_from(d).ok()?;
    Some(crate::finite::mul_mod(n, crate::finite::inv_mod(d, p)?, p))
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn mul_rational(&self, q: &Rational) -> Self {
        self * q
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_discriminants() {
        assert_eq!(sqrt_exact(&int(1_024_000_000)), Some(int(32000)));
        assert_eq!(sqrt_exact(&int(589_824)), Some(int(768)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&int(-4)), None);
        assert_eq!(sqrt_exact(&int(0)), Some(int(0)));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("16/5").unwrap(), rat(16, 5));
        assert_eq!(parse_rational(" -16 ").unwrap(), int(-16));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(format_rational(&rat(3, 5)), "3/5");
        assert_eq!(format_rational(&int(-7)), "-7");
    }

    #[test]
    fn valuations_and_reduction() {
        assert_eq!(valuation(&rat(3, 5), 5), Some(-1));
        assert_eq!(valuation(&int(50), 5), Some(2));
        assert_eq!(valuation(&int(0), 5), None);
        assert_eq!(reduce_mod(&rat(1, 2), 5), Some(3));
        assert_eq!(reduce_mod(&rat(1, 5), 5), None);
        assert_eq!(reduce_mod(&int(-1), 7), Some(6));
    }
}
