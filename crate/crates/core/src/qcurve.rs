//! The curves E_t: y² = x³ + 2x² + r·x with r = (3 + √5·t)/(2√5·t), their
//! 2-isogeny to the Galois conjugate, 5-division polynomials, and the sextic
//! whose roots are x_P + x_{2P} over the 5-torsion.

use rand::Rng;

use crate::error::Error;
use crate::exact::{
    poly_gcd, reduce_mod, resultant, AlgElement, Field, Poly, Qsqrt5, RatFunc, Rational, Ring,
};
use crate::finite::{self, CurveFp, Point};

pub type Q5 = AlgElement<Qsqrt5>;

/// Coefficient fields containing √5 with the automorphism √5 ↦ −√5.
pub trait HasSqrt5: Field {
    fn sqrt5() -> Self;
    fn conj_sqrt5(&self) -> Self;
}

impl HasSqrt5 for Q5 {
    fn sqrt5() -> Self {
        Q5::sqrt5()
    }
    fn conj_sqrt5(&self) -> Self {
        Q5::conj_sqrt5(self)
    }
}

impl HasSqrt5 for RatFunc<Q5> {
    fn sqrt5() -> Self {
        RatFunc::constant(Q5::sqrt5())
    }
    fn conj_sqrt5(&self) -> Self {
        self.map(|c| c.conj_sqrt5()).expect("conjugation preserves nonzero denominator")
    }
}

/// y² = x³ + a2·x² + a4·x + a6
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticCurve<K> {
    pub a2: K,
    pub a4: K,
    pub a6: K,
}

impl<K: Field> EllipticCurve<K> {
    pub fn new(a2: K, a4: K, a6: K) -> Result<Self, Error> {
        let e = EllipticCurve { a2, a4, a6 };
        if e.discriminant().is_zero() {
            return Err(Error::Degenerate("singular curve".into()));
        }
        Ok(e)
    }

    fn b_invariants(&self) -> [K; 4] {
        let k = |n: i64| K::from_int(n);
        [
            k(4).mul(&self.a2),
            k(2).mul(&self.a4),
            k(4).mul(&self.a6),
            k(4).mul(&self.a2).mul(&self.a6).sub(&self.a4.square()),
        ]
    }

    pub fn c4(&self) -> K {
        let [b2, b4, _, _] = self.b_invariants();
        b2.square().sub(&K::from_int(24).mul(&b4))
    }

    pub fn discriminant(&self) -> K {
        let [b2, b4, b6, b8] = self.b_invariants();
        let k = |n: i64| K::from_int(n);
        b2.square()
            .mul(&b8)
            .neg()
            .sub(&k(8).mul(&b4.pow(3)))
            .sub(&k(27).mul(&b6.square()))
            .add(&k(9).mul(&b2).mul(&b4).mul(&b6))
    }

    pub fn j_invariant(&self) -> Result<K, Error> {
        self.c4()
            .pow(3)
            .div(&self.discriminant())
            .ok_or_else(|| Error::Degenerate("singular curve".into()))
    }

    /// The model after x ↦ u²x, y ↦ u³y.
    pub fn rescale(&self, u: &K) -> Result<Self, Error> {
        let u2 = u.square();
        let inv = |p: u32| u2.pow(p).inv().ok_or(Error::DivisionByZero);
        Ok(EllipticCurve {
            a2: self.a2.mul(&inv(1)?),
            a4: self.a4.mul(&inv(2)?),
            a6: self.a6.mul(&inv(3)?),
        })
    }

    /// x³ + a2·x² + a4·x + a6
    pub fn rhs_poly(&self) -> Poly<K> {
        Poly::new(vec![self.a6.clone(), self.a4.clone(), self.a2.clone(), K::one()])
    }
}

impl<K: HasSqrt5> EllipticCurve<K> {
    pub fn conjugate(&self) -> Self {
        EllipticCurve {
            a2: self.a2.conj_sqrt5(),
            a4: self.a4.conj_sqrt5(),
            a6: self.a6.conj_sqrt5(),
        }
    }
}

/// r = (3 + √5·t)/(2√5·t)
pub fn r_of_t<K: HasSqrt5>(t: &K) -> Result<K, Error> {
    let s5t = K::sqrt5().mul(t);
    K::from_int(3)
        .add(&s5t)
        .div(&K::from_int(2).mul(&s5t))
        .ok_or_else(|| Error::Degenerate("t = 0".into()))
}

pub fn curve_from_t<K: HasSqrt5>(t: &K) -> Result<EllipticCurve<K>, Error> {
    EllipticCurve::new(K::from_int(2), r_of_t(t)?, K::zero())
}

pub fn curve_from_t_rational(t: &Rational) -> Result<EllipticCurve<Q5>, Error> {
    curve_from_t(&Q5::from_scalar(t.clone()))
}

/// y² = x³ + 3j/(1728−j)·x + 2j/(1728−j)
pub fn curve_from_j(j: &Rational) -> Result<EllipticCurve<Rational>, Error> {
    let jj = Rational::from_int(1728) - j;
    if j.is_zero() || jj.is_zero() {
        return Err(Error::Degenerate("j must avoid 0 and 1728".into()));
    }
    let k = j / jj;
    EllipticCurve::new(
        Rational::zero(),
        Rational::from_int(3) * &k,
        Rational::from_int(2) * k,
    )
}

/// With y² = f(x) = x³ + 2x² + r·x substituted, the isogeny gives
/// X = f/((√−2)²x²) and Y² = f(r − x²)²/((√−2)⁶x⁴). Checks that (X, Y²) lies
/// on Y² = X³ + 2X² + r'·X.
pub fn isogeny_codomain_holds<K: Field>(r: &K, r_target: &K) -> bool {
    let x = RatFunc::<K>::x();
    let c = |v: &K| RatFunc::constant(v.clone());
    let n = |v: i64| RatFunc::<K>::from_int(v);
    let f = x.pow(3).add(&n(2).mul(&x.square())).add(&c(r).mul(&x));
    let x2 = x.square();
    let Some(big_x) = f.div(&n(-2).mul(&x2)) else {
        return false;
    };
    let Some(big_y2) = f.mul(&c(r).sub(&x2).square()).div(&n(-8).mul(&x2.square())) else {
        return false;
    };
    let rhs = big_x
        .pow(3)
        .add(&n(2).mul(&big_x.square()))
        .add(&c(r_target).mul(&big_x));
    big_y2 == rhs
}

/// The identity for E_t → E_t^σ with t a free parameter, i.e. over ℚ(√5)(t).
pub fn verify_isogeny_codomain() -> Result<bool, Error> {
    verify_isogeny_codomain_at(&RatFunc::<Q5>::x(), false)
}

/// `mutate` replaces r by r + 1 in the map while keeping the target curve.
pub fn verify_isogeny_codomain_at<K: HasSqrt5>(t: &K, mutate: bool) -> Result<bool, Error> {
    let r = r_of_t(t)?;
    let r_sigma = r.conj_sqrt5();
    let r_map = if mutate { r.add(&K::one()) } else { r };
    Ok(isogeny_codomain_holds(&r_map, &r_sigma))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsogenyVariant {
    Standard,
    /// y-coordinate without the (r − x²) factor
    DropFactor,
}

/// Reduction of E_t and E_t^σ modulo p with fixed branches of √5 and √−2.
#[derive(Clone, Debug)]
pub struct ReducedPair {
    pub p: u64,
    pub r: u64,
    pub r_sigma: u64,
    pub sqrt_m2: u64,
}

impl ReducedPair {
    pub fn new(p: u64, t: &Rational) -> Result<Self, Error> {
        if p < 3 || !finite::is_prime(p) {
            return Err(Error::Unsupported(format!("{p} is not an odd prime")));
        }
        let s5 = finite::sqrt_mod(5 % p, p)
            .filter(|s| *s != 0)
            .ok_or_else(|| Error::Unsupported(format!("5 is not a nonzero square mod {p}")))?;
        let sqrt_m2 = finite::sqrt_mod(p - 2, p)
            .ok_or_else(|| Error::Unsupported(format!("-2 is not a square mod {p}")))?;
        let t = reduce_mod(t, p)
            .filter(|v| *v != 0)
            .ok_or_else(|| Error::Unsupported(format!("t does not reduce to a unit mod {p}")))?;
        let r_for = |s: u64| -> Option<u64> {
            let st = finite::mul_mod(s, t, p);
            let den = finite::inv_mod(finite::mul_mod(2, st, p), p)?;
            Some(finite::mul_mod(finite::add_mod(3, st, p), den, p))
        };
        let r = r_for(s5).ok_or(Error::DivisionByZero)?;
        let r_sigma = r_for(p - s5).ok_or(Error::DivisionByZero)?;
        // x(x² + 2x + r) is singular when r ∈ {0, 1}
        if [r, r_sigma].iter().any(|v| *v == 0 || *v == 1) {
            return Err(Error::Unsupported(format!("E_t has bad reduction mod {p}")));
        }
        Ok(ReducedPair { p, r, r_sigma, sqrt_m2 })
    }

    pub fn curve(&self) -> CurveFp {
        CurveFp { p: self.p, a2: 2, a4: self.r, a6: 0 }
    }

    pub fn conjugate_curve(&self) -> CurveFp {
        CurveFp { p: self.p, a2: 2, a4: self.r_sigma, a6: 0 }
    }

    /// (x, y) ↦ (y²/((√−2)²x²), y(r − x²)/((√−2)³x²)), with r the source's a4.
    pub fn phi(&self, r: u64, pt: Point, variant: IsogenyVariant) -> Point {
        let p = self.p;
        let Point::Affine(x, y) = pt else {
            return Point::Infinity;
        };
        if x == 0 {
            return Point::Infinity;
        }
        let x2 = finite::mul_mod(x, x, p);
        let s2 = finite::mul_mod(self.sqrt_m2, self.sqrt_m2, p);
        let s3 = finite::mul_mod(s2, self.sqrt_m2, p);
        let big_x = finite::mul_mod(
            finite::mul_mod(y, y, p),
            finite::inv_mod(finite::mul_mod(s2, x2, p), p).unwrap(),
            p,
        );
        let factor = match variant {
            IsogenyVariant::Standard => finite::sub_mod(r, x2, p),
            IsogenyVariant::DropFactor => 1,
        };
        let big_y = finite::mul_mod(
            finite::mul_mod(y, factor, p),
            finite::inv_mod(finite::mul_mod(s3, x2, p), p).unwrap(),
            p,
        );
        Point::Affine(big_x, big_y)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompositionCheck {
    pub p: u64,
    pub trials: usize,
    pub failures: usize,
    pub warning: Option<String>,
}

impl CompositionCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn random_point<R: Rng>(curve: &CurveFp, rng: &mut R) -> Point {
    loop {
        let x = rng.gen_range(0..curve.p);
        if let Some(y) = finite::sqrt_mod(curve.rhs(x), curve.p) {
            let y = if rng.gen_bool(0.5) { y } else { finite::neg_mod(y, curve.p) };
            return Point::Affine(x, y);
        }
    }
}

/// φ^σ(φ(P)) = [−2]P for `trials` random points P on E_t mod p.
pub fn verify_isogeny_composition<R: Rng>(
    p: u64,
    t: &Rational,
    trials: usize,
    variant: IsogenyVariant,
    rng: &mut R,
) -> Result<CompositionCheck, Error> {
    let pair = ReducedPair::new(p, t)?;
    let (e, e_sigma) = (pair.curve(), pair.conjugate_curve());
    let mut failures = 0;
    for _ in 0..trials {
        let pt = random_point(&e, rng);
        let image = pair.phi(pair.r, pt, variant);
        let back = pair.phi(pair.r_sigma, image, variant);
        let ok = e_sigma.contains(image) && back == e.mul(-2, pt);
        if !ok {
            failures += 1;
        }
    }
    let warning = (trials == 0).then(|| "no trials run; vacuously true".to_string());
    Ok(CompositionCheck { p, trials, failures, warning })
}

/// The first `count` primes with 5 and −2 both nonzero squares.
pub fn admissible_primes(count: usize) -> Vec<u64> {
    (7u64..)
        .filter(|&p| {
            finite::is_prime(p) && finite::legendre(5, p) == 1 && finite::legendre(p - 2, p) == 1
        })
        .take(count)
        .collect()
}

/// ψ₅ for y² = x³ + bx + c, via ψ₅ = ψ₄ψ₂³ − ψ₃³ with y² eliminated.
pub fn division_poly5<K: Field>(b: &K, c: &K) -> Result<Poly<K>, Error> {
    let e = EllipticCurve::new(K::zero(), b.clone(), c.clone())?;
    let k = |n: i64| K::from_int(n);
    let f = e.rhs_poly();
    let psi3 = Poly::new(vec![b.square().neg(), k(12).mul(c), k(6).mul(b), K::zero(), k(3)]);
    // ψ₄ = 4y·F
    let big_f = Poly::new(vec![
        k(-8).mul(&c.square()).sub(&b.pow(3)),
        k(-4).mul(b).mul(c),
        k(-5).mul(&b.square()),
        k(20).mul(c),
        k(5).mul(b),
        K::zero(),
        K::one(),
    ]);
    Ok(f.square().mul(&big_f).scale(&k(32)).sub(&psi3.pow(3)))
}

/// Square root of a polynomial with square leading coefficient 1.
pub fn poly_sqrt_monic<K: Field>(p: &Poly<K>) -> Option<Poly<K>> {
    let d = p.degree()?;
    if d % 2 != 0 || !p.lc()?.is_one() {
        return None;
    }
    let n = d / 2;
    let mut g = vec![K::zero(); n + 1];
    g[n] = K::one();
    for k in 1..=n {
        let mut acc = p.coeff(2 * n - k);
        for i in 1..k {
            acc.sub_assign(&g[n - i].mul(&g[n - k + i]));
        }
        g[n - k] = acc.div(&K::from_int(2))?;
    }
    let g = Poly::new(g);
    (g.square() == *p).then_some(g)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sextic {
    /// monic, degree 6
    pub g: Poly<Rational>,
    /// R(S) = scalar · g(S)²
    pub scalar: Rational,
}

/// g(S) with roots x_P + x_{2P}, from R(S) = Res_x(ψ₅, 4f(x)(S − x) − (x⁴ − 2bx² − 8cx + b²)).
pub fn x5sum_resolvent(b: &Rational, c: &Rational) -> Result<Sextic, Error> {
    let psi5 = division_poly5(b, c)?;
    let lift = |v: Rational| Poly::constant(v);
    let psi5_s: Poly<Poly<Rational>> = psi5.map(|v| lift(v.clone()));
    let k = |n: i64| Rational::from_int(n);
    let s = Poly::<Rational>::x();
    // 4(x³ + bx + c)(S − x) − (x⁴ − 2bx² − 8cx + b²), coefficients in ℚ[S]
    let four_s = s.scale(&k(4));
    let dup = Poly::new(vec![
        four_s.scale(c).sub(&lift(b * b)),
        four_s.scale(b).sub(&lift(k(4) * c)).add(&lift(k(8) * c)),
        lift(k(-4) * b).add(&lift(k(2) * b)),
        four_s,
        lift(k(-5)),
    ]);
    let r = resultant(&psi5_s, &dup)?;
    let scalar = r.lc().cloned().ok_or(Error::ZeroResultant)?;
    let monic = r.scale(&scalar.inv().unwrap());
    let g = poly_sqrt_monic(&monic)
        .ok_or_else(|| Error::Verification("x_P + x_2P resultant is not a square".into()))?;
    if g.degree() != Some(6) {
        return Err(Error::Verification(format!("sextic has degree {:?}", g.degree())));
    }
    Ok(Sextic { g, scalar })
}

/// Sign convention for x in the backward transform μ(x).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// x = x_P + x_{2P}, exactly as the transform is displayed
    Displayed,
    /// x replaced by −x, matching the sign used by the forward transform
    Negated,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KleinLinkCheck {
    pub j: Rational,
    /// numerator of g(−2(μ²+10μ+5)/(μ²+4μ−1)) is a scalar multiple of q′(μ)
    pub forward_scalar_multiple: bool,
    /// q′(μ) divides that numerator
    pub forward_divides: bool,
    pub forward_cofactor_degree: Option<usize>,
    /// q′(μ(x)) ≡ 0 mod g(x)
    pub backward_vanishes: bool,
}

impl KleinLinkCheck {
    pub fn passed(&self) -> bool {
        self.forward_divides && self.backward_vanishes
    }
}

/// q′(μ) = (μ² + 10μ + 5)³ − jμ
pub fn klein_q_prime(j: &Rational) -> Poly<Rational> {
    let base = Poly::<Rational>::from_ints(&[5, 10, 1]).pow(3);
    base.sub(&Poly::monomial(j.clone(), 1))
}

pub fn verify_klein_link(j: &Rational) -> Result<KleinLinkCheck, Error> {
    verify_klein_link_with(j, &Rational::from_int(31104), Orientation::Displayed)
}

/// `k` is the constant in μ = k·x³/((x−2)⁵j − 1728x³(x²−10x+34)).
pub fn verify_klein_link_with(
    j: &Rational,
    k: &Rational,
    orientation: Orientation,
) -> Result<KleinLinkCheck, Error> {
    let e = curve_from_j(j)?;
    let sextic = x5sum_resolvent(&e.a4, &e.a6)?;
    let g = &sextic.g;
    let qp = klein_q_prime(j);

    let num = Poly::<Rational>::from_ints(&[5, 10, 1]).scale(&Rational::from_int(-2));
    let den = Poly::<Rational>::from_ints(&[-1, 4, 1]);
    if !poly_gcd(&num, &den)?.is_constant() {
        return Err(Error::Degenerate("forward transform not in lowest terms".into()));
    }
    let forward = g.homogenize(&num, &den);
    let (q, rem) = forward.div_rem(&qp)?;
    let forward_divides = !forward.is_zero() && rem.is_zero();
    let forward_scalar_multiple = forward_divides && q.is_constant();

    let mut p_num = Poly::monomial(k.clone(), 3);
    let mut p_den = Poly::<Rational>::from_ints(&[-2, 1])
        .pow(5)
        .scale(j)
        .sub(&Poly::monomial(Rational::from_int(1728), 3).mul(&Poly::from_ints(&[34, -10, 1])));
    if orientation == Orientation::Negated {
        let m1 = Rational::from_int(-1);
        p_num = p_num.scale_var(&m1);
        p_den = p_den.scale_var(&m1);
    }
    if !poly_gcd(&p_den, g)?.is_constant() {
        return Err(Error::Degenerate("backward denominator shares a root with g".into()));
    }
    let backward = qp.homogenize(&p_num, &p_den);
    let backward_vanishes = backward.rem(g)?.is_zero();

    Ok(KleinLinkCheck {
        j: j.clone(),
        forward_scalar_multiple,
        forward_divides,
        forward_cofactor_degree: forward_divides.then(|| q.degree()).flatten(),
        backward_vanishes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q5(a: Rational, b: Rational) -> Q5 {
        Q5::from_coords(vec![a, b]).unwrap()
    }

    #[test]
    fn r_at_one() {
        let r = r_of_t(&Q5::one()).unwrap();
        assert_eq!(r, q5(rat(1, 2), rat(3, 10)));
        let e = curve_from_t_rational(&int(-1)).unwrap();
        assert_eq!(e.a4, q5(rat(1, 2), rat(-3, 10)));
        assert!(curve_from_t_rational(&int(0)).is_err());
    }

    #[test]
    fn conjugation() {
        let e = curve_from_t_rational(&rat(4, 3)).unwrap();
        assert_eq!(e.conjugate().conjugate(), e);
        assert_eq!(e.conjugate().a2, Q5::from_int(2));
        let e1 = curve_from_t_rational(&int(1)).unwrap();
        assert_eq!(e1.conjugate().a4, r_of_t(&Q5::one()).unwrap().conj_sqrt5());
    }

    #[test]
    fn j_roundtrip_and_rescaling() {
        for j in [int(2), rat(-25, 3), int(1), rat(7, 11), int(-1000)] {
            let e = curve_from_j(&j).unwrap();
            assert_eq!(e.j_invariant().unwrap(), j);
            assert_eq!(e.rescale(&rat(3, 7)).unwrap().j_invariant().unwrap(), j);
        }
        assert!(curve_from_j(&int(0)).is_err());
        assert!(curve_from_j(&int(1728)).is_err());
    }

    #[test]
    fn codomain_specializations() {
        for t in [int(1), int(3), rat(4, 3)] {
            let t = Q5::from_scalar(t);
            assert!(verify_isogeny_codomain_at(&t, false).unwrap());
            assert!(!verify_isogeny_codomain_at(&t, true).unwrap());
        }
    }

    #[test]
    fn admissible_primes_found() {
        assert_eq!(admissible_primes(3), vec![11, 19, 41]);
    }

    #[test]
    fn composition_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = verify_isogeny_composition(41, &int(1), 10, IsogenyVariant::Standard, &mut rng)
            .unwrap();
        assert!(c.passed());
        let c = verify_isogeny_composition(41, &int(1), 0, IsogenyVariant::Standard, &mut rng)
            .unwrap();
        assert!(c.passed() && c.warning.is_some());
        assert!(verify_isogeny_composition(13, &int(1), 1, IsogenyVariant::Standard, &mut rng)
            .is_err());
    }

    #[test]
    fn psi5_degree_and_squarefree() {
        let psi = division_poly5(&int(1), &int(1)).unwrap();
        assert_eq!(psi.degree(), Some(12));
        assert_eq!(psi.lc(), Some(&int(5)));
        assert!(poly_gcd(&psi, &psi.derivative()).unwrap().is_one());
    }

    #[test]
    fn poly_sqrt() {
        let g = Poly::<Rational>::from_ints(&[3, -1, 0, 1]);
        assert_eq!(poly_sqrt_monic(&g.square()), Some(g.clone()));
        assert_eq!(poly_sqrt_monic(&g.square().add(&Poly::from_ints(&[1]))), None);
    }
}

#[cfg(test)]
mod oracle_tests {
    use super::*;
    use crate::exact::{int, reduce_mod};
    use crate::finite::{eval_poly_mod, is_prime, CurveFp, Point};

    fn reduce(p: &Poly<Rational>, q: u64) -> Vec<u64> {
        p.coeffs().iter().map(|c| reduce_mod(c, q).unwrap()).collect()
    }

    fn five_torsion(e: &CurveFp) -> Vec<Point> {
        e.points().into_iter().filter(|&pt| e.mul(5, pt) == Point::Infinity).collect()
    }

    /// Primes of good reduction for y² = x³ + x + 1 whose group has a point of order 5.
    fn primes_with_five_torsion() -> Vec<u64> {
        (5..400u64)
            .filter(|&p| is_prime(p) && p != 31)
            .filter(|&p| !five_torsion(&CurveFp { p, a2: 0, a4: 1, a6: 1 }).is_empty())
            .collect()
    }

    #[test]
    fn psi5_roots_are_five_torsion_abscissas() {
        let psi = division_poly5(&int(1), &int(1)).unwrap();
        let primes = primes_with_five_torsion();
        assert!(primes.len() >= 3, "{primes:?}");
        for p in primes.into_iter().chain([7, 11, 13]) {
            let e = CurveFp { p, a2: 0, a4: 1, a6: 1 };
            let coeffs = reduce(&psi, p);
            let mut from_points: Vec<u64> = five_torsion(&e)
                .into_iter()
                .filter_map(|pt| match pt {
                    Point::Affine(x, _) => Some(x),
                    Point::Infinity => None,
                })
                .collect();
            from_points.sort();
            from_points.dedup();
            let from_psi: Vec<u64> = (0..p)
                .filter(|&x| eval_poly_mod(&coeffs, x, p) == 0)
                .filter(|&x| crate::finite::legendre(e.rhs(x), p) == 1)
                .collect();
            assert_eq!(from_points, from_psi, "p = {p}");
        }
    }

    #[test]
    fn sextic_roots_are_x_sums() {
        let g = x5sum_resolvent(&int(1), &int(1)).unwrap().g;
        for p in primes_with_five_torsion() {
            let e = CurveFp { p, a2: 0, a4: 1, a6: 1 };
            let coeffs = reduce(&g, p);
            for pt in five_torsion(&e) {
                let (Point::Affine(x1, _), Point::Affine(x2, _)) = (pt, e.mul(2, pt)) else {
                    continue;
                };
                let s = (x1 + x2) % p;
                assert_eq!(eval_poly_mod(&coeffs, s, p), 0, "p = {p}");
            }
        }
    }
}
