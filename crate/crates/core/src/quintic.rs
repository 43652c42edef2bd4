//! Principal quintics x⁵ + Ax² + Bx + C: invariants, the quadratic j-equation,
//! the resolvent coefficient formulas, and the trinomial family q_t.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::Signed;
use rayon::prelude::*;
use std::fmt;

use crate::error::Error;
use crate::exact::{format_rational, sqrt_exact, Field, RatFunc, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quintic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Quintic {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Quintic { a, b, c }
    }

    pub fn trinomial(b: Rational, c: Rational) -> Self {
        Quintic { a: Rational::zero(), b, c }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        x.pow(5) + &self.a * x * x + &self.b * x + &self.c
    }
}

impl fmt::Display for Quintic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^5")?;
        for (c, m) in [(&self.a, "x^2"), (&self.b, "x"), (&self.c, "")] {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let abs = c.abs();
            if abs.is_one() && !m.is_empty() {
                write!(f, " {sign} {m}")?;
            } else if m.is_empty() {
                write!(f, " {sign} {}", format_rational(&abs))?;
            } else {
                write!(f, " {sign} {}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuinticInvariants<K = Rational> {
    pub delta: K,
    pub gamma4: K,
    pub gamma6: K,
    pub disc: K,
}

fn term<K: Ring>(coef: i64, a: &K, b: &K, c: &K, ea: u32, eb: u32, ec: u32) -> K {
    K::from_int(coef).mul(&a.pow(ea)).mul(&b.pow(eb)).mul(&c.pow(ec))
}

fn sum_terms<K: Ring>(a: &K, b: &K, c: &K, terms: &[(i64, u32, u32, u32)]) -> K {
    terms
        .iter()
        .fold(K::zero(), |acc, &(k, ea, eb, ec)| acc.add(&term(k, a, b, c, ea, eb, ec)))
}

/// δ, γ₄, γ₆ and Disc over any coefficient ring containing ℚ.
pub fn invariants_of<K: Ring>(a: &K, b: &K, c: &K) -> QuinticInvariants<K> {
    let inv = |n: i64| Rational::new(1.into(), n.into());
    let delta = sum_terms(a, b, c, &[(1, 4, 0, 0), (-5, 0, 3, 0), (25, 1, 1, 1)])
        .mul_rational(&inv(625));
    let gamma4 = sum_terms(
        a,
        b,
        c,
        &[
            (128, 4, 2, 0),
            (-192, 5, 0, 1),
            (-600, 1, 3, 1),
            (1000, 2, 1, 2),
            (-144, 0, 5, 0),
            (3125, 0, 0, 4),
        ],
    )
    .mul_rational(&inv(144 * 3125));
    let gamma6 = sum_terms(
        a,
        b,
        c,
        &[
            (1728, 10, 0, 0),
            (10400, 6, 3, 0),
            (405000, 2, 6, 0),
            (-180000, 7, 1, 1),
            (-1170000, 3, 4, 1),
            (1725000, 4, 2, 2),
            (-1800000, 5, 0, 3),
            (2812500, 1, 3, 3),
            (-4687500, 2, 1, 4),
            (-2025000, 0, 5, 2),
            (-9765625, 0, 0, 6),
        ],
    )
    .mul_rational(&inv(1728 * 9765625));
    let disc = sum_terms(
        a,
        b,
        c,
        &[
            (-27, 4, 2, 0),
            (108, 5, 0, 1),
            (-1600, 1, 3, 1),
            (2250, 2, 1, 2),
            (256, 0, 5, 0),
            (3125, 0, 0, 4),
        ],
    );
    QuinticInvariants { delta, gamma4, gamma6, disc }
}

pub fn invariants(q: &Quintic) -> QuinticInvariants {
    invariants_of(&q.a, &q.b, &q.c)
}

/// Coefficients (a₂, a₁, a₀) of δ⁵j² − 1728(γ₄³ − γ₆² + δ⁵)j + 1728²γ₄³.
pub fn j_equation<K: Ring>(inv: &QuinticInvariants<K>) -> [K; 3] {
    let d5 = inv.delta.pow(5);
    let g43 = inv.gamma4.pow(3);
    let lin = g43.sub(&inv.gamma6.square()).add(&d5).mul(&K::from_int(-1728));
    [d5, lin, g43.mul(&K::from_int(1728 * 1728))]
}

/// r + c·√d with d a fixed rational radicand; the square root is the positive one.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadSurd {
    pub rational: Rational,
    pub coeff: Rational,
    pub radicand: Rational,
}

impl QuadSurd {
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeff.is_zero() {
            return Some(self.rational.clone());
        }
        sqrt_exact(&self.radicand).map(|s| &self.rational + &self.coeff * s)
    }

    pub fn equals_rational(&self, q: &Rational) -> bool {
        let diff = q - &self.rational;
        if self.coeff.is_zero() {
            return diff.is_zero();
        }
        let root = diff / &self.coeff;
        !root.is_negative() && &root * &root == self.radicand
    }

    /// The same value written as r + k·√5, when the radicand is 5 times a square.
    pub fn sqrt5_form(&self) -> Option<(Rational, Rational)> {
        if self.coeff.is_zero() {
            return Some((self.rational.clone(), Rational::zero()));
        }
        let k = sqrt_exact(&(&self.radicand / Rational::from_int(5)))?;
        Some((self.rational.clone(), &self.coeff * k))
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", format_rational(&self.rational));
        }
        write!(
            f,
            "{} + ({})*sqrt({})",
            format_rational(&self.rational),
            format_rational(&self.coeff),
            format_rational(&self.radicand)
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JCandidates {
    pub roots: [QuadSurd; 2],
    /// The quadratic's discriminant is 5·Disc(q)·cofactor².
    pub cofactor: Rational,
}

impl JCandidates {
    pub fn contains(&self, j: &Rational) -> bool {
        self.roots.iter().any(|r| r.equals_rational(j))
    }
}

pub fn j_candidates(q: &Quintic) -> Result<JCandidates, Error> {
    let inv = invariants(q);
    if inv.delta.is_zero() {
        return Err(Error::Degenerate("delta = 0".into()));
    }
    let [a2, a1, a0] = j_equation(&inv);
    let qdisc = &a1 * &a1 - Rational::from_int(4) * &a2 * &a0;
    let radicand = Rational::from_int(5) * &inv.disc;
    let cofactor = if radicand.is_zero() {
        if !qdisc.is_zero() {
            return Err(Error::Verification(
                "j-equation discriminant nonzero while Disc(q) = 0".into(),
            ));
        }
        Rational::zero()
    } else {
        sqrt_exact(&(&qdisc / &radicand)).ok_or_else(|| {
            Error::Verification("j-equation discriminant not in the square class of 5*Disc".into())
        })?
    };
    let two_a = Rational::from_int(2) * &a2;
    let center = -&a1 / &two_a;
    let c = &cofactor / &two_a;
    let root = |s: Rational| QuadSurd { rational: center.clone(), coeff: s, radicand: radicand.clone() };
    Ok(JCandidates { roots: [root(c.clone()), root(-c)], cofactor })
}

/// Which normalization of the resolvent formulas to use.
///
/// `Displayed` is the formulas exactly as printed. `Consistent` flips the sign
/// of the n⁴ term of B and pairs the formulas with x_ν whose n-term is scaled
/// by 12; that pair makes the x_ν roots of the stated quintic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Convention {
    Displayed,
    Consistent,
}

impl Convention {
    pub fn n_scale(&self) -> Rational {
        match self {
            Convention::Displayed => Rational::one(),
            Convention::Consistent => Rational::from_int(12),
        }
    }

    fn b_quartic_sign(&self) -> i64 {
        match self {
            Convention::Displayed => 1,
            Convention::Consistent => -1,
        }
    }
}

pub fn resolvent_coeffs(m: &Rational, n: &Rational, j: &Rational) -> Result<Quintic, Error> {
    resolvent_coeffs_with(m, n, j, Convention::Displayed).map(|(a, b, c)| Quintic::new(a, b, c))
}

/// (A, B, C) for x⁵ + Ax² + Bx + C over any field, e.g. with j a formal variable.
pub fn resolvent_coeffs_with<K: Field>(
    m: &K,
    n: &K,
    j: &K,
    conv: Convention,
) -> Result<(K, K, K), Error> {
    let jj = K::from_int(1728).sub(j);
    if j.is_zero() || jj.is_zero() {
        return Err(Error::Degenerate("j must avoid 0 and 1728".into()));
    }
    let k = |v: i64| K::from_int(v);
    let ji = j.inv().ok_or(Error::DivisionByZero)?;
    let d1 = jj.inv().ok_or(Error::DivisionByZero)?;
    let d2 = d1.square();
    let (m2, n2) = (m.square(), n.square());

    let a_br = k(2)
        .mul(&m.pow(3))
        .add(&k(3).mul(&m2).mul(n))
        .add(&k(432).mul(&k(6).mul(m).mul(&n2).add(&n.pow(3))).mul(&d1));
    let b_br = m
        .pow(4)
        .sub(&k(864).mul(&k(3).mul(&m2).mul(&n2).add(&k(2).mul(m).mul(&n.pow(3)))).mul(&d1))
        .add(&k(559872 * conv.b_quartic_sign()).mul(&n.pow(4)).mul(&d2));
    let c_br = m
        .pow(5)
        .sub(&k(1440).mul(&m.pow(3)).mul(&n2).mul(&d1))
        .add(&k(62208).mul(&k(15).mul(m).mul(&n.pow(4)).add(&k(4).mul(&n.pow(5)))).mul(&d2));

    Ok((
        k(-20).mul(&ji).mul(&a_br),
        k(-5).mul(&ji).mul(&b_br),
        ji.neg().mul(&c_br),
    ))
}

/// (B, C) of q_t(x) = x⁵ + 5((9−5t²)/(5t²))x + 4((9−5t²)/(5t²)).
pub fn family_coeffs<K: Field>(t: &K) -> Result<(K, K), Error> {
    let t2 = t.square();
    let s = K::from_int(9).sub(&K::from_int(5).mul(&t2));
    let r = s.div(&K::from_int(5).mul(&t2)).ok_or(Error::DivisionByZero)?;
    Ok((K::from_int(5).mul(&r), K::from_int(4).mul(&r)))
}

pub fn family_quintic(t: &Rational) -> Result<Quintic, Error> {
    if t.is_zero() {
        return Err(Error::Degenerate("t = 0".into()));
    }
    let (b, c) = family_coeffs(t)?;
    Ok(Quintic::trinomial(b, c))
}

/// Checks Disc(q_t)·t¹⁰ = k·(9 − 5t²)⁴ in ℚ(t); the true constant is 2⁸·3².
pub fn family_discriminant_identity(k: &Rational) -> bool {
    let t = RatFunc::<Rational>::x();
    let Ok((b, c)) = family_coeffs(&t) else {
        return false;
    };
    let disc = invariants_of(&RatFunc::zero(), &b, &c).disc;
    let nine_minus = RatFunc::from_int(9).sub(&RatFunc::from_int(5).mul(&t.square()));
    disc.mul(&t.pow(10)) == nine_minus.pow(4).mul_rational(k)
}

pub fn verify_family_discriminant() -> bool {
    family_discriminant_identity(&Rational::from_int(256 * 9))
}

/// t = 75C²/√(256B⁵ + 3125C⁴), positive root; `None` when the radicand is not
/// a positive rational square. For the family, this returns |t|.
pub fn trinomial_t(b: &Rational, c: &Rational) -> Result<Option<Rational>, Error> {
    if c.is_zero() {
        return Err(Error::Degenerate("C must be nonzero for t".into()));
    }
    let disc = Rational::from_int(256) * b.pow(5) + Rational::from_int(3125) * c.pow(4);
    if !disc.is_positive() {
        return Ok(None);
    }
    Ok(sqrt_exact(&disc).map(|s| Rational::from_int(75) * c * c / s))
}

/// c5·x⁵ + c1·x + c0 with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntTrinomial {
    pub c5: BigInt,
    pub c1: BigInt,
    pub c0: BigInt,
}

impl IntTrinomial {
    pub fn new(c5: i64, c1: i64, c0: i64) -> Self {
        IntTrinomial { c5: c5.into(), c1: c1.into(), c0: c0.into() }
    }

    /// (B, C) of the monic rescaling x⁵ + (c1/c5)x + c0/c5.
    pub fn monic(&self) -> (Rational, Rational) {
        let r = |v: &BigInt| Rational::new(v.clone(), self.c5.clone());
        (r(&self.c1), r(&self.c0))
    }
}

impl fmt::Display for IntTrinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x^5", self.c5)?;
        for (c, m) in [(&self.c1, "x"), (&self.c0, "")] {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, " {sign} {}{m}", c.abs())?;
        }
        Ok(())
    }
}

/// Primitive integer form of c5·x⁵ + Bx + C with positive leading coefficient,
/// then x ↦ −x (followed by negation) if needed to make the constant positive.
pub fn canonical_trinomial(c5: i64, b: &Rational, c: &Rational) -> Result<IntTrinomial, Error> {
    if c5 == 0 && b.is_zero() && c.is_zero() {
        return Err(Error::Degenerate("zero trinomial".into()));
    }
    let lead = Rational::from_int(c5);
    let den = lead.denom().lcm(b.denom()).lcm(c.denom());
    let scale = |q: &Rational| (q * Rational::from_integer(den.clone())).to_integer();
    let (mut a5, mut a1, mut a0) = (scale(&lead), scale(b), scale(c));
    let g = a5.gcd(&a1).gcd(&a0);
    a5 /= &g;
    a1 /= &g;
    a0 /= &g;
    if a5.is_negative() || (num_traits::Zero::is_zero(&a5) && a1.is_negative()) {
        a5 = -a5;
        a1 = -a1;
        a0 = -a0;
    }
    if a0.is_negative() {
        a0 = -a0;
    }
    Ok(IntTrinomial { c5: a5, c1: a1, c0: a0 })
}

/// Whether x⁵ + B₂x + C₂ is obtained from x⁵ + B₁x + C₁ by x ↦ cx for some
/// rational c, followed by making the result monic again.
pub fn scaling_equivalent(q1: (&Rational, &Rational), q2: (&Rational, &Rational)) -> bool {
    let ((b1, c1), (b2, c2)) = (q1, q2);
    if c1.is_zero() || c2.is_zero() {
        return false;
    }
    if b1.is_zero() || b2.is_zero() {
        return b1.is_zero() && b2.is_zero() && rational_root(&(c1 / c2), 5).is_some();
    }
    let c = (c1 * b2) / (c2 * b1);
    b2 * c.pow(4) == *b1 && c2 * c.pow(5) == *c1
}

fn rational_root(x: &Rational, k: u32) -> Option<Rational> {
    let root = |v: &BigInt| {
        let r = v.nth_root(k);
        (r.pow(k) == *v).then_some(r)
    };
    Some(Rational::new(root(x.numer())?, root(x.denom())?))
}

/// (B, C) of the square-discriminant solvable trinomials.
pub fn solvable_family(v: &Rational, w: &Rational) -> (Rational, Rational) {
    let one = Rational::one();
    let v2 = v * v;
    let d = (&v2 + &one).pow(2);
    let p = &v2 + v - &one;
    let m = &v2 - v - &one;
    let k = Rational::from_int(2) * &v2 + Rational::from_int(3) * v - Rational::from_int(2);
    let b = Rational::from_int(20) * &p * &m * w.pow(4) / &d;
    let c = Rational::from_int(16) * &p * &k * w.pow(5) / &d;
    (b, c)
}

/// The (w, t) at which q_t meets the solvable family.
pub fn solvability_obstruction(v: &Rational) -> Result<(Rational, Rational), Error> {
    let one = Rational::one();
    let k = |n: i64| Rational::from_int(n);
    let v2 = v * v;
    let v3 = &v2 * v;
    let q = k(2) * &v2 + k(3) * v - k(2);
    let h1 = k(2) * &v3 + k(2) * &v2 - v + &one;
    let h2 = &v3 + &v2 + k(2) * v - k(2);
    let den = k(5) * &h1 * &h2;
    if q.is_zero() || den.is_zero() {
        return Err(Error::Degenerate(format!("denominator vanishes at v = {v}")));
    }
    let w = (&v2 - v - &one) / &q;
    let t = k(3) * (&v2 + &one) * &q * &q / den;
    Ok((w, t))
}

fn hyperelliptic_numerator(p: i128, q: i128) -> i128 {
    let (p2, q2) = (p * p, q * q);
    15 * (p2 + q2)
        * (2 * p2 * p + 2 * p2 * q - p * q2 + q2 * q)
        * (p2 * p + p2 * q + 2 * p * q2 - 2 * q2 * q)
}

/// Right-hand side of y² = 15(x²+1)(2x³+2x²−x+1)(x³+x²+2x−2).
pub fn hyperelliptic_rhs(x: &Rational) -> Rational {
    let one = Rational::one();
    let k = |n: i64| Rational::from_int(n);
    let x2 = x * x;
    let x3 = &x2 * x;
    k(15) * (&x2 + &one) * (k(2) * &x3 + k(2) * &x2 - x + &one) * (&x3 + &x2 + k(2) * x - k(2))
}

/// All x = p/q with gcd(p, q) = 1, |p| ≤ H, 1 ≤ q ≤ H on the curve, with y ≥ 0.
/// Sorted by (q, p). A bounded search is evidence, never a proof of emptiness.
pub fn hyperelliptic_search(height: u32) -> Result<Vec<(Rational, Rational)>, Error> {
    if height == 0 {
        return Err(Error::Degenerate("height bound must be positive".into()));
    }
    let h = height as i128;
    let mut points: Vec<(i128, i128, i128)> = (1..=h)
        .into_par_iter()
        .flat_map_iter(|q| {
            (-h..=h).filter_map(move |p| {
                if p.gcd(&q) != 1 {
                    return None;
                }
                let n = hyperelliptic_numerator(p, q);
                if n < 0 {
                    return None;
                }
                let r = n.sqrt();
                (r * r == n).then_some((q, p, r))
            })
        })
        .collect();
    points.sort();
    Ok(points
        .into_iter()
        .map(|(q, p, r)| {
            let x = Rational::new(BigInt::from(p), BigInt::from(q));
            let y = Rational::new(BigInt::from(r), BigInt::from(q).pow(4));
            (x, y)
        })
        .collect())
}


#[cfg(test)]
mod oracle_tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(p, q)| rat(p, q))
    }

    fn j_is_candidate(m: &Rational, n: &Rational, j: &Rational, conv: Convention) -> Option<bool> {
        let (a, b, c) = resolvent_coeffs_with(m, n, j, conv).ok()?;
        let q = Quintic::new(a, b, c);
        let inv = invariants(&q);
        let [a2, a1, a0] = j_equation(&inv);
        let value = a2 * j * j + a1 * j + a0;
        Some(value.is_zero())
    }

    #[test]
    fn resolvent_roundtrip_needs_the_consistent_normalization() {
        let (m, n, j) = (int(2), int(3), rat(-7, 2));
        assert_eq!(j_is_candidate(&m, &n, &j, Convention::Consistent), Some(true));
        assert_eq!(j_is_candidate(&m, &n, &j, Convention::Displayed), Some(false));
        let q = {
            let (a, b, c) = resolvent_coeffs_with(&m, &n, &j, Convention::Consistent).unwrap();
            Quintic::new(a, b, c)
        };
        if let Ok(jc) = j_candidates(&q) {
            assert!(jc.contains(&j));
        }
    }

    #[test]
    fn disc_of_known_trinomials() {
        // x⁵ − 5x + 12 has discriminant 2¹²·5⁶; x⁵ + 20x − 16 has 2¹⁶·5⁶
        let d = |b: i64, c: i64| invariants(&Quintic::trinomial(int(b), int(c))).disc;
        assert_eq!(d(-5, 12), int(4096 * 15625));
        assert_eq!(d(20, -16), int(65536 * 15625));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn resolvent_roundtrip(m in small_rational(), n in small_rational(), j in small_rational()) {
            prop_assume!(!j.is_zero() && j != int(1728) && !(m.is_zero() && n.is_zero()));
            if let Some(ok) = j_is_candidate(&m, &n, &j, Convention::Consistent) {
                prop_assert!(ok);
            }
        }

        #[test]
        fn t_is_scaling_invariant(t in small_rational(), s in small_rational()) {
            prop_assume!(!t.is_zero() && !s.is_zero());
            let q = family_quintic(&t).unwrap();
            let (b2, c2) = (&q.b * s.pow(4), &q.c * s.pow(5));
            prop_assert_eq!(trinomial_t(&q.b, &q.c).unwrap(), trinomial_t(&b2, &c2).unwrap());
            prop_assert_eq!(trinomial_t(&q.b, &q.c).unwrap(), Some(t.abs()));
            prop_assert!(scaling_equivalent((&q.b, &q.c), (&b2, &c2)));
        }

        #[test]
        fn solvable_family_has_square_discriminant(v in small_rational(), w in small_rational()) {
            let (b, c) = solvable_family(&v, &w);
            let disc = int(256) * b.pow(5) + int(3125) * c.pow(4);
            prop_assert!(sqrt_exact(&disc).is_some());
        }

        #[test]
        fn obstruction_lies_on_both_families(v in small_rational()) {
            if let Ok((w, t)) = solvability_obstruction(&v) {
                prop_assume!(!t.is_zero() && !w.is_zero());
                let q = family_quintic(&t).unwrap();
                let (b, c) = solvable_family(&v, &w);
                prop_assert!(scaling_equivalent((&q.b, &q.c), (&b, &c)));
            }
        }
    }
}
