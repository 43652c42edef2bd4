//! Rational functions in one variable over a field.
//!
//! Canonical form: numerator and denominator coprime, denominator monic, and
//! zero stored as `0/1`. Two canonical forms are equal exactly when the
//! functions are equal, so structural equality is mathematical equality.

use std::fmt;

use super::poly::{poly_gcd, Poly};
use super::rational::Rational;
use super::ring::{Field, Ring};
use crate::error::Error;

#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<K: Field> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Field> RatFunc<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::normalized(num, den)
    }

    fn normalized(num: Poly<K>, den: Poly<K>) -> Result<Self, Error> {
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den)?;
            if g.is_constant() {
                (num, den)
            } else {
                (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
            }
        };
        let inv = den.lc().unwrap().inv().ok_or(Error::ZeroDivisor)?;
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    /// Degree as a map ℙ¹ → ℙ¹.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn normalize(&self) -> Result<Self, Error> {
        Self::new(self.num.clone(), self.den.clone())
    }

    pub fn eval(&self, x: &K) -> Result<K, Error> {
        let d = self.den.eval(x);
        let n = self.num.eval(x);
        Field::div(&n, &d).ok_or(Error::DivisionByZero)
    }

    /// f∘g, normalized.
    pub fn compose(&self, g: &RatFunc<K>) -> Result<Self, Error> {
        let (num, den) = self.compose_unreduced(g);
        if den.is_zero() {
            return Err(Error::DegenerateComposition);
        }
        Self::new(num, den)
    }

    /// f∘g as a (numerator, denominator) pair without cancelling common factors.
    pub fn compose_unreduced(&self, g: &RatFunc<K>) -> (Poly<K>, Poly<K>) {
        let n = self.degree();
        let lift = |p: &Poly<K>| {
            let d = p.degree().unwrap_or(0);
            p.homogenize(&g.num, &g.den)
                .mul(&g.den.pow((n - d) as u32))
        };
        (lift(&self.num), lift(&self.den))
    }

    /// Equality by cross-multiplication; does not rely on canonical form.
    pub fn equals_cross(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn map<L: Field, F: Fn(&K) -> L>(&self, f: F) -> Result<RatFunc<L>, Error> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.display_in(var)
        } else {
            format!("({})/({})", self.num.display_in(var), self.den.display_in(var))
        }
    }
}

/// f∘g, the free-function form used by the verification code.
pub fn ratfunc_compose<K: Field>(f: &RatFunc<K>, g: &RatFunc<K>) -> Result<RatFunc<K>, Error> {
    f.compose(g)
}

impl<K: Field> Ring for RatFunc<K> {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone()).expect("field");
        }
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("field")
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den)).expect("field")
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(K::from_rational(q))
    }
    fn mul_rational(&self, q: &Rational) -> Self {
        if q == &<Rational as Ring>::zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale_rational(q), den: self.den.clone() }
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        Field::div(self, other)
    }
}

impl<K: Field> Field for RatFunc<K> {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Self::normalized(self.den.clone(), self.num.clone()).ok()
        }
    }
}

impl<K: Field> fmt::Display for RatFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::algebra::{AlgElement, Qzeta5};
    use crate::exact::rational::{int, rat};

    type R = RatFunc<Rational>;
    type P = Poly<Rational>;

    #[test]
    fn normalization_cancels_and_makes_monic() {
        let f = R::new(P::from_ints(&[1, 1]), P::from_ints(&[-2, 0, 2])).unwrap();
        assert_eq!(f.num(), &P::constant(rat(1, 2)));
        assert_eq!(f.den(), &P::from_ints(&[-1, 1]));
        assert_eq!(f.normalize().unwrap(), f);
        assert!(R::new(P::one(), P::zero()).is_err());
    }

    #[test]
    fn compose_with_negative_reciprocal() {
        let minus_inv = R::new(P::from_ints(&[-1]), P::x()).unwrap();
        assert_eq!(R::x().compose(&minus_inv).unwrap(), minus_inv);
        // U is an involution
        assert_eq!(minus_inv.compose(&minus_inv).unwrap(), R::x());
    }

    #[test]
    fn z5_is_invariant_under_rotation() {
        type Z = AlgElement<Qzeta5>;
        let z5 = RatFunc::<Z>::from_poly(Poly::monomial(Z::one(), 5));
        let rot = RatFunc::<Z>::from_poly(Poly::monomial(Z::zeta(), 1));
        assert_eq!(z5.compose(&rot).unwrap(), z5);
    }

    #[test]
    fn composition_collapsing_to_pole_errors() {
        let f = R::new(P::one(), P::x()).unwrap();
        let zero = R::zero();
        assert!(matches!(f.compose(&zero), Err(Error::DegenerateComposition)));
    }

    #[test]
    fn field_operations() {
        let f = R::new(P::from_ints(&[1, 2]), P::from_ints(&[3, 0, 1])).unwrap();
        let g = R::new(P::from_ints(&[0, 1]), P::from_ints(&[1, 1])).unwrap();
        let h = f.add(&g).sub(&g);
        assert_eq!(h, f);
        assert_eq!(f.mul(&f.inv().unwrap()), R::one());
        assert!(f.mul(&g).equals_cross(&g.mul(&f)));
        assert_eq!(f.eval(&int(1)).unwrap(), rat(3, 4));
    }
}
