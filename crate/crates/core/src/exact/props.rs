use proptest::prelude::*;

use super::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn element<A: Algebra>() -> impl Strategy<Value = AlgElement<A>> {
    prop::collection::vec(small_rational(), A::descriptor().dim())
        .prop_map(|cs| AlgElement::from_coords(cs).unwrap())
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(small_rational(), 1..=max_deg + 1).prop_map(Poly::new)
}

/// Sylvester matrix with the deg q rows of p first.
fn sylvester(p: &Poly<Rational>, q: &Poly<Rational>) -> Vec<Vec<Rational>> {
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    let size = m + n;
    let row = |f: &Poly<Rational>, deg: usize, shift: usize| {
        let mut r = vec![Rational::zero(); size];
        for i in 0..=deg {
            r[shift + i] = f.coeff(deg - i);
        }
        r
    };
    (0..n).map(|s| row(p, m, s)).chain((0..m).map(|s| row(q, n, s))).collect()
}

/// Determinant by fraction-free Bareiss elimination.
fn bareiss(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = sign.neg();
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div(&prev).unwrap();
            }
        }
        prev = a[k][k].clone();
    }
    sign.mul(&a[n - 1][n - 1])
}

#[test]
fn sylvester_oracle_on_cubic_and_quadratic() {
    let p = Poly::<Rational>::from_ints(&[-2, 0, 0, 1]);
    let q = Poly::<Rational>::from_ints(&[-3, 0, 1]);
    assert_eq!(resultant(&p, &q).unwrap(), int(-23));
    assert_eq!(bareiss(sylvester(&p, &q)), int(-23));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_in_sqrt5(x in element::<Qsqrt5>()) {
        prop_assume!(!x.is_zero());
        prop_assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn inverse_in_zeta5(x in element::<Qzeta5>()) {
        prop_assume!(!x.is_zero());
        prop_assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn inverse_in_eps_i(x in element::<QepsI>()) {
        prop_assume!(!x.is_zero());
        prop_assert!(x.inv().unwrap().mul(&x).is_one());
    }

    #[test]
    fn ring_axioms_in_zeta5(x in element::<Qzeta5>(), y in element::<Qzeta5>(), z in element::<Qzeta5>()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn ring_axioms_in_sqrt5_sqrtm2(
        x in element::<Qsqrt5Sqrtm2>(),
        y in element::<Qsqrt5Sqrtm2>(),
        z in element::<Qsqrt5Sqrtm2>(),
    ) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn ratfunc_normalization_is_idempotent(num in poly(4), den in poly(4), k in poly(2)) {
        prop_assume!(!den.is_zero() && !k.is_zero());
        let f = RatFunc::new(num.clone(), den.clone()).unwrap();
        prop_assert_eq!(f.normalize().unwrap(), f.clone());
        prop_assert_eq!(RatFunc::new(num.mul(&k), den.mul(&k)).unwrap(), f.clone());
        if let Some(lc) = f.den().lc() {
            prop_assert!(lc.is_one());
        }
    }

    #[test]
    fn resultant_matches_sylvester_determinant(p in poly(4), q in poly(4)) {
        prop_assume!(p.degree().unwrap_or(0) > 0 && q.degree().unwrap_or(0) > 0);
        prop_assert_eq!(resultant(&p, &q).unwrap(), bareiss(sylvester(&p, &q)));
    }

    #[test]
    fn resultant_swap_sign(p in poly(5), q in poly(5)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
        let sign = if dp * dq % 2 == 1 { int(-1) } else { int(1) };
        prop_assert_eq!(resultant(&q, &p).unwrap(), sign.mul(&resultant(&p, &q).unwrap()));
    }

    #[test]
    fn resultant_product_over_roots(
        lc in small_rational(),
        roots in prop::collection::vec(small_rational(), 1..4),
        q in poly(4),
    ) {
        prop_assume!(!lc.is_zero() && !q.is_zero());
        let p = roots
            .iter()
            .fold(Poly::constant(lc.clone()), |acc, r| acc.mul(&Poly::new(vec![r.neg(), Rational::one()])));
        let dq = q.degree().unwrap() as u32;
        let expected = roots.iter().fold(Ring::pow(&lc, dq), |acc, r| acc.mul(&q.eval(r)));
        prop_assert_eq!(resultant(&p, &q).unwrap(), expected);
    }
}
