//! Minimal ring/field traits shared by every scalar domain in the crate.
//!
//! Elements carry no runtime context: each algebra is a type, so `zero()` and
//! `one()` are always available. This is what lets `Poly<RatFunc<AlgElement<_>>>`
//! nest freely.

use std::fmt::{Debug, Display};

use super::rational::Rational;

pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    /// Exact quotient `self / other`, or `None` when `other` does not divide `self`.
    fn try_div(&self, other: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn sub_assign(&mut self, other: &Self) {
        *self = self.sub(other);
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn mul_rational(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero or a zero divisor.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}
