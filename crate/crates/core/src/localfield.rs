//! 5-adic valuations, the "square of a 5-adic unit" test, and the
//! Artin–Schreier form of q_t over ℚ₅.

use std::fmt;

use crate::error::Error;
use crate::exact::{reduce_mod, valuation, Field, RatFunc, Rational, Ring};
use crate::quintic::{family_coeffs, trinomial_t};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation5 {
    Finite(i64),
    Infinity,
}

impl Valuation5 {
    pub fn add(self, other: Valuation5) -> Valuation5 {
        match (self, other) {
            (Valuation5::Finite(a), Valuation5::Finite(b)) => Valuation5::Finite(a + b),
            _ => Valuation5::Infinity,
        }
    }
}

impl fmt::Display for Valuation5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation5::Finite(v) => write!(f, "{v}"),
            Valuation5::Infinity => write!(f, "inf"),
        }
    }
}

pub fn v5(x: &Rational) -> Valuation5 {
    valuation(x, 5).map_or(Valuation5::Infinity, Valuation5::Finite)
}

/// A 5-adic unit is a square iff its residue mod 5 is 1 or 4.
pub fn is_square_5adic_unit(t: &Rational) -> bool {
    v5(t) == Valuation5::Finite(0) && matches!(reduce_mod(t, 5), Some(1 | 4))
}

/// Whether 75C²/√(256B⁵ + 3125C⁴) exists in ℚ and is the square of a 5-adic unit.
pub fn theorem_hypothesis(b: &Rational, c: &Rational) -> Result<bool, Error> {
    Ok(trinomial_t(b, c)?.is_some_and(|t| is_square_5adic_unit(&t)))
}

type Qu = RatFunc<Rational>;

/// Elements of ℚ(u)[y]/(y⁴ − c), as coefficient vectors in 1, y, y², y³.
#[derive(Clone, Debug, PartialEq)]
struct QuarticExt<'a> {
    c: &'a Qu,
    coords: [Qu; 4],
}

impl<'a> QuarticExt<'a> {
    fn scalar(c: &'a Qu, v: Qu) -> Self {
        QuarticExt { c, coords: [v, Qu::zero(), Qu::zero(), Qu::zero()] }
    }

    fn y(c: &'a Qu) -> Self {
        QuarticExt { c, coords: [Qu::zero(), Qu::one(), Qu::zero(), Qu::zero()] }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut prod = vec![Qu::zero(); 7];
        for (i, a) in self.coords.iter().enumerate() {
            for (j, b) in other.coords.iter().enumerate() {
                prod[i + j].add_assign(&a.mul(b));
            }
        }
        for k in (4..7).rev() {
            let carry = prod[k].mul(self.c);
            prod[k - 4].add_assign(&carry);
        }
        let coords = [0, 1, 2, 3].map(|k| prod[k].clone());
        QuarticExt { c: self.c, coords }
    }

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::scalar(self.c, Qu::one()), |acc, _| acc.mul(self))
    }

    fn scale(&self, k: &Qu) -> Self {
        QuarticExt { c: self.c, coords: self.coords.clone().map(|v| v.mul(k)) }
    }
}

/// y⁴ = 4⁴u⁴/(5⁴(1 + 5(u⁴ − 2)))
pub fn artin_schreier_radicand() -> Qu {
    let u4 = Qu::x().pow(4);
    let den = Qu::one().add(&Qu::from_int(5).mul(&u4.sub(&Qu::from_int(2))));
    Qu::from_int(256).mul(&u4).div(&Qu::from_int(625).mul(&den)).expect("nonzero")
}

/// Coefficients (low degree first) of q_t(x/Y)·Y⁵ with t = u² and Y = 5y/4,
/// computed in ℚ(u)[y]/(y⁴ − c).
pub fn artin_schreier_coeffs(c: &Qu) -> Result<Vec<[Qu; 4]>, Error> {
    let t = Qu::x().square();
    let (b, cc) = family_coeffs(&t)?;
    let big_y = QuarticExt::y(c).scale(&Qu::from_rational(&Rational::new(5.into(), 4.into())));
    let zero = QuarticExt::scalar(c, Qu::zero());
    let mut out = vec![zero.coords.clone(); 6];
    out[5] = QuarticExt::scalar(c, Qu::one()).coords;
    out[1] = big_y.pow(4).scale(&b).coords;
    out[0] = big_y.pow(5).scale(&cc).coords;
    Ok(out)
}

/// q_t(x/(5y/4))·(5y/4)⁵ = x⁵ − x − y when y⁴ = c.
pub fn artin_schreier_identity_with(c: &Qu) -> Result<bool, Error> {
    let coeffs = artin_schreier_coeffs(c)?;
    let z = || Qu::zero();
    let mut target = vec![[z(), z(), z(), z()]; 6];
    target[5][0] = Qu::one();
    target[1][0] = Qu::from_int(-1);
    target[0][1] = Qu::from_int(-1);
    Ok(coeffs == target)
}

pub fn artin_schreier_identity() -> Result<bool, Error> {
    artin_schreier_identity_with(&artin_schreier_radicand())
}

/// v₅(y) = v₅(y⁴)/4 at a rational u; `None` when y⁴ is 0 or undefined there.
pub fn artin_schreier_y_valuation(u: &Rational) -> Option<Rational> {
    let y4 = artin_schreier_radicand().eval(u).ok()?;
    match v5(&y4) {
        Valuation5::Finite(v) => Some(Rational::new(v.into(), 4.into())),
        Valuation5::Infinity => None,
    }
}
