//! The representation π of Z(𝔽₅)·SL₂(𝔽₅) over ℤ[ε, i][1/2] and its reduction
//! modulo the prime λ = ϖ·ℤ[ε, i] above 5.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::exact::{reduce_mod, AlgElement, Field, QepsI, Rational, Ring};

pub type OrderElement = AlgElement<QepsI>;

/// Which square root of −1 reduces to 2: the standard branch ω₅(2) = i, or
/// the conjugate one ω₅(2) = −i (the prime λ̄).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Branch {
    #[default]
    Standard,
    Conjugate,
}

impl Branch {
    fn i_image(self) -> u64 {
        match self {
            Branch::Standard => 2,
            Branch::Conjugate => 3,
        }
    }
}

fn eps() -> OrderElement {
    OrderElement::eps()
}

fn i_unit() -> OrderElement {
    OrderElement::i()
}

/// Teichmüller lift 𝔽₅^× → ⟨i⟩.
pub fn omega5(a: u64, branch: Branch) -> Result<OrderElement, Error> {
    let i = match branch {
        Branch::Standard => i_unit(),
        Branch::Conjugate => i_unit().neg(),
    };
    match a % 5 {
        1 => Ok(OrderElement::one()),
        2 => Ok(i),
        3 => Ok(i.neg()),
        4 => Ok(OrderElement::from_int(-1)),
        _ => Err(Error::NotInvertible),
    }
}

/// ϖ = ω₅(2)·ε⁻¹ − 1
pub fn varpi_with(branch: Branch) -> OrderElement {
    let eps_inv = eps().inv().expect("unit");
    omega5(2, branch).unwrap().mul(&eps_inv).sub(&OrderElement::one())
}

pub fn varpi() -> OrderElement {
    varpi_with(Branch::Standard)
}

/// Reduction mod λ: ε ↦ 2, i ↦ 2 (or 3 on the conjugate branch), 1/2 ↦ 3.
pub fn residue_hom_with(x: &OrderElement, branch: Branch) -> Result<u64, Error> {
    let images = [1, 2, branch.i_image(), 2 * branch.i_image() % 5];
    let mut acc = 0;
    for (c, img) in x.coords().iter().zip(images) {
        let c = reduce_mod(c, 5)
            .ok_or_else(|| Error::Unsupported(format!("coordinate {c} not 5-integral")))?;
        acc = (acc + c * img) % 5;
    }
    Ok(acc)
}

pub fn residue_hom(x: &OrderElement) -> Result<u64, Error> {
    residue_hom_with(x, Branch::Standard)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarpiIdentities {
    /// 2 − ε = ε²ϖϖ^c
    pub two_minus_eps: bool,
    /// 2 − ω₅(2) = εϖ(εϖ^c − 1)
    pub two_minus_omega: bool,
    /// √5 = εϖϖ^c
    pub sqrt5: bool,
    /// each left-hand side reduces to 0 mod λ
    pub in_lambda: bool,
}

impl VarpiIdentities {
    pub fn passed(&self) -> bool {
        self.two_minus_eps && self.two_minus_omega && self.sqrt5 && self.in_lambda
    }
}

/// `lhs_shift` is added to the left side of the first identity (0 for the real check).
pub fn verify_varpi_identities_with(lhs_shift: &OrderElement) -> Result<VarpiIdentities, Error> {
    let w = varpi();
    let wc = w.conj_i();
    let e = eps();
    let two = OrderElement::from_int(2);
    let lhs1 = two.sub(&e).add(lhs_shift);
    let lhs2 = two.sub(&omega5(2, Branch::Standard)?);
    let lhs3 = e.mul(&OrderElement::from_int(2)).add(&OrderElement::one());
    let in_lambda = [&lhs1, &lhs2, &lhs3]
        .iter()
        .map(|x| residue_hom(x))
        .collect::<Result<Vec<_>, _>>()?
        .iter()
        .all(|r| *r == 0);
    Ok(VarpiIdentities {
        two_minus_eps: lhs1 == e.square().mul(&w).mul(&wc),
        two_minus_omega: lhs2 == e.mul(&w).mul(&e.mul(&wc).sub(&OrderElement::one())),
        sqrt5: lhs3 == e.mul(&w).mul(&wc),
        in_lambda,
    })
}

pub fn verify_varpi_identities() -> Result<VarpiIdentities, Error> {
    verify_varpi_identities_with(&OrderElement::zero())
}

/// 2×2 matrix over a ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<K> {
    pub m: [[K; 2]; 2],
}

impl<K: Ring> Mat2<K> {
    pub fn new(a: K, b: K, c: K, d: K) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::new(K::one(), K::zero(), K::zero(), K::one())
    }

    pub fn diag(a: K, d: K) -> Self {
        Self::new(a, K::zero(), K::zero(), d)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = (&self.m, &o.m);
        let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn det(&self) -> K {
        let m = &self.m;
        m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn entries(&self) -> [&K; 4] {
        [&self.m[0][0], &self.m[0][1], &self.m[1][0], &self.m[1][1]]
    }
}

impl<K: Field> Mat2<K> {
    pub fn inv(&self) -> Option<Self> {
        let d = self.det().inv()?;
        let m = &self.m;
        Some(Self::new(
            m[1][1].mul(&d),
            m[0][1].neg().mul(&d),
            m[1][0].neg().mul(&d),
            m[0][0].mul(&d),
        ))
    }
}

pub type RepMatrix = Mat2<OrderElement>;

/// 2×2 matrix over 𝔽₅, entries in 0..5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F5Matrix(pub [[u8; 2]; 2]);

impl F5Matrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |v: i64| v.rem_euclid(5) as u8;
        F5Matrix([[r(a), r(b)], [r(c), r(d)]])
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| {
            (a[i][0] as i64 * b[0][j] as i64 + a[i][1] as i64 * b[1][j] as i64) % 5
        };
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn det(&self) -> u8 {
        let m = &self.0;
        ((m[0][0] as i64 * m[1][1] as i64 - m[0][1] as i64 * m[1][0] as i64).rem_euclid(5)) as u8
    }
}

impl fmt::Display for F5Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "({},{};{},{})", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

fn is_square_mod5(a: u64) -> bool {
    matches!(a % 5, 1 | 4)
}

/// The generators of Z(𝔽₅)·SL₂(𝔽₅) and their images under π.
#[derive(Clone, Debug, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    S,
    T,
    U(u8, u8),
}

impl Generator {
    /// S, T, then every diagonal (a, d) with ad a square, in lexicographic order.
    pub fn all() -> Vec<Generator> {
        let mut gens = vec![Generator::S, Generator::T];
        for a in 1..5u8 {
            for d in 1..5u8 {
                if is_square_mod5(a as u64 * d as u64) {
                    gens.push(Generator::U(a, d));
                }
            }
        }
        gens
    }

    pub fn f5(&self) -> F5Matrix {
        match *self {
            Generator::S => F5Matrix::new(1, 1, 0, 1),
            Generator::T => F5Matrix::new(0, -1, 1, 0),
            Generator::U(a, d) => F5Matrix::new(a as i64, 0, 0, d as i64),
        }
    }
}

pub fn pi_s() -> RepMatrix {
    let half = OrderElement::from_rational(&Rational::new(1.into(), 2.into()));
    let w = varpi();
    let e = eps();
    Mat2::new(
        e.mul(&half),
        w.add(&OrderElement::from_int(2)).mul(&half),
        w.mul(&half),
        e.mul(&half),
    )
}

pub fn pi_t() -> RepMatrix {
    Mat2::new(
        OrderElement::zero(),
        OrderElement::from_int(-1),
        OrderElement::one(),
        OrderElement::zero(),
    )
}

/// diag(ω₅(a), ω₅(d)); requires ad to be a square mod 5.
pub fn pi_u(a: u64, d: u64) -> Result<RepMatrix, Error> {
    if !is_square_mod5(a * d) {
        return Err(Error::Unsupported(format!("U({a},{d}) is outside Z*SL2(F5)")));
    }
    pi_u_unchecked(a, d)
}

/// diag(ω₅(a), ω₅(d)) without the membership check.
pub fn pi_u_unchecked(a: u64, d: u64) -> Result<RepMatrix, Error> {
    Ok(Mat2::diag(omega5(a, Branch::Standard)?, omega5(d, Branch::Standard)?))
}

pub fn pi_generator(g: Generator) -> RepMatrix {
    match g {
        Generator::S => pi_s(),
        Generator::T => pi_t(),
        Generator::U(a, d) => pi_u(a as u64, d as u64).expect("admissible generator"),
    }
}

pub const WORD_CAP: usize = 40;

/// The group, in BFS discovery order, with a generator word for each element.
#[derive(Clone, Debug)]
pub struct GroupEnumeration {
    pub elements: Vec<F5Matrix>,
    pub words: Vec<Vec<Generator>>,
    index: HashMap<F5Matrix, usize>,
}

impl GroupEnumeration {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &F5Matrix) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn word(&self, g: &F5Matrix) -> Option<&[Generator]> {
        self.index_of(g).map(|i| self.words[i].as_slice())
    }
}

pub fn enumerate_group() -> Result<GroupEnumeration, Error> {
    let gens = Generator::all();
    let id = F5Matrix::identity();
    let mut elements = vec![id];
    let mut words = vec![Vec::new()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in &gens {
            let next = elements[k].mul(&g.f5());
            if index.contains_key(&next) {
                continue;
            }
            let mut w = words[k].clone();
            w.push(*g);
            if w.len() > WORD_CAP {
                return Err(Error::Verification(format!("word length exceeds {WORD_CAP}")));
            }
            index.insert(next, elements.len());
            queue.push_back(elements.len());
            elements.push(next);
            words.push(w);
        }
    }
    Ok(GroupEnumeration { elements, words, index })
}

pub fn lift_pi(group: &GroupEnumeration, g: &F5Matrix) -> Result<RepMatrix, Error> {
    let word = group
        .word(g)
        .ok_or_else(|| Error::Unsupported(format!("{g} is not in Z*SL2(F5)")))?;
    Ok(word.iter().fold(Mat2::identity(), |acc, gen| acc.mul(&pi_generator(*gen))))
}

pub fn reduce_matrix(m: &RepMatrix, branch: Branch) -> Result<F5Matrix, Error> {
    let r = |x: &OrderElement| residue_hom_with(x, branch).map(|v| v as i64);
    Ok(F5Matrix::new(r(&m.m[0][0])?, r(&m.m[0][1])?, r(&m.m[1][0])?, r(&m.m[1][1])?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    /// T·U(a,d)·T⁻¹ = U(d,a) for every admissible (a, d)
    pub conjugation_by_t: bool,
    /// U(a,d)·S·U(a,d)⁻¹ = Sⁿ with n ≡ ad⁻¹ for every admissible (a, d)
    pub conjugation_of_s: bool,
    /// T·S^d·T⁻¹ = U(a,d)·S^{−d}·T⁻¹·S^{−a} for ad ≡ 1
    pub braid: bool,
    /// relation (2) fails for every (a, d) with ad⁻¹ ≡ ±2
    pub fails_off_group: bool,
    /// S⁵ = T⁴ = U⁴ = 1
    pub orders: bool,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.conjugation_by_t
            && self.conjugation_of_s
            && self.braid
            && self.fails_off_group
            && self.orders
    }
}

fn inv5(a: u64) -> u64 {
    crate::finite::inv_mod(a % 5, 5).expect("unit mod 5")
}

fn s_power(s: &RepMatrix, e: i64) -> RepMatrix {
    s.pow(e.rem_euclid(5) as u32)
}

/// U(a,d)·S·U(a,d)⁻¹ = S^{ad⁻¹}, with U not required to lie in the group.
pub fn conjugation_of_s_holds(a: u64, d: u64) -> Result<bool, Error> {
    let s = pi_s();
    let u = pi_u_unchecked(a, d)?;
    let u_inv = u.inv().ok_or(Error::NotInvertible)?;
    let n = (a * inv5(d)) % 5;
    Ok(u.mul(&s).mul(&u_inv) == s_power(&s, n as i64))
}

pub fn verify_relations() -> Result<RelationCheck, Error> {
    let s = pi_s();
    let t = pi_t();
    let t_inv = t.inv().ok_or(Error::NotInvertible)?;
    let pairs: Vec<(u64, u64)> =
        (1..5).flat_map(|a| (1..5).map(move |d| (a, d))).collect();
    let admissible: Vec<_> = pairs.iter().filter(|(a, d)| is_square_mod5(a * d)).collect();

    let mut conjugation_by_t = true;
    let mut conjugation_of_s = true;
    for &&(a, d) in &admissible {
        conjugation_by_t &= t.mul(&pi_u(a, d)?).mul(&t_inv) == pi_u(d, a)?;
        conjugation_of_s &= conjugation_of_s_holds(a, d)?;
    }
    let mut braid = true;
    for d in 1..5u64 {
        let a = inv5(d);
        let lhs = t.mul(&s_power(&s, d as i64)).mul(&t_inv);
        let rhs = pi_u(a, d)?
            .mul(&s_power(&s, -(d as i64)))
            .mul(&t_inv)
            .mul(&s_power(&s, -(a as i64)));
        braid &= lhs == rhs;
    }
    let mut fails_off_group = true;
    for &(a, d) in pairs.iter().filter(|(a, d)| matches!((a * inv5(*d)) % 5, 2 | 3)) {
        fails_off_group &= !conjugation_of_s_holds(a, d)?;
    }
    let id = Mat2::identity();
    let orders = s.pow(5) == id
        && t.pow(4) == id
        && admissible.iter().all(|&&(a, d)| pi_u(a, d).unwrap().pow(4) == id);
    Ok(RelationCheck { conjugation_by_t, conjugation_of_s, braid, fails_off_group, orders })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub group_order: usize,
    /// residue_hom(π(g)) = g for every g
    pub reduces_to_identity_embedding: bool,
    /// number of distinct matrices π(g)
    pub distinct_images: usize,
    /// entries have 2-power denominators
    pub dyadic_entries: bool,
    /// det π(g) ≡ det g mod λ
    pub determinants: bool,
    /// π(g) ≡ 1₂ for every g (the literal reading; expected false)
    pub literal_trivial: bool,
}

impl CongruenceCheck {
    pub fn passed(&self) -> bool {
        self.group_order == 240
            && self.reduces_to_identity_embedding
            && self.distinct_images == 240
            && self.dyadic_entries
            && self.determinants
    }
}

fn dyadic(x: &OrderElement) -> bool {
    x.coords().iter().all(|c| {
        let mut d = c.denom().clone();
        while num_integer::Integer::is_even(&d) {
            d /= 2;
        }
        d == 1.into()
    })
}

pub fn lift_all(group: &GroupEnumeration) -> Result<Vec<RepMatrix>, Error> {
    group.elements.par_iter().map(|g| lift_pi(group, g)).collect()
}

pub fn verify_congruence(group: &GroupEnumeration) -> Result<CongruenceCheck, Error> {
    let lifts = lift_all(group)?;
    let mut reduces = true;
    let mut dets = true;
    let mut dyadic_entries = true;
    let mut literal = true;
    for (g, m) in group.elements.iter().zip(&lifts) {
        let r = reduce_matrix(m, Branch::Standard)?;
        reduces &= r == *g;
        literal &= r == F5Matrix::identity();
        dets &= residue_hom(&m.det())? == g.det() as u64;
        dyadic_entries &= m.entries().iter().all(|x| dyadic(x));
    }
    let mut distinct: Vec<String> = lifts.iter().map(|m| format!("{:?}", m.m)).collect();
    distinct.sort();
    distinct.dedup();
    Ok(CongruenceCheck {
        group_order: group.len(),
        reduces_to_identity_embedding: reduces,
        distinct_images: distinct.len(),
        dyadic_entries,
        determinants: dets,
        literal_trivial: literal,
    })
}

/// π(g)π(h) = π(gh) on `samples` random pairs, or on all pairs when `samples` is `None`.
pub fn verify_homomorphism<R: Rng>(
    group: &GroupEnumeration,
    samples: Option<usize>,
    rng: &mut R,
) -> Result<bool, Error> {
    let lifts = lift_all(group)?;
    let n = group.len();
    let pairs: Vec<(usize, usize)> = match samples {
        Some(k) => (0..k).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect(),
        None => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
    };
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let gh = group.elements[i].mul(&group.elements[j]);
            let k = group.index_of(&gh).ok_or(Error::Verification("group not closed".into()))?;
            Ok(lifts[i].mul(&lifts[j]) == lifts[k])
        })
        .collect::<Result<Vec<bool>, Error>>()
        .map(|v| v.into_iter().all(|b| b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn varpi_coords() {
        let w = varpi();
        let c: Vec<Rational> = [-1, 0, 1, 1].iter().map(|v| int(*v)).collect();
        assert_eq!(w.coords(), c.as_slice());
        assert_eq!(residue_hom(&w).unwrap(), 0);
        assert_ne!(residue_hom_with(&w, Branch::Conjugate).unwrap(), 0);
        assert_eq!(residue_hom_with(&varpi_with(Branch::Conjugate), Branch::Conjugate).unwrap(), 0);
    }

    #[test]
    fn residue_hom_is_well_defined() {
        let e = eps();
        let one = OrderElement::one();
        assert_eq!(residue_hom(&e.square().add(&e).sub(&one)).unwrap(), 0);
        assert_eq!(residue_hom(&i_unit().square().add(&one)).unwrap(), 0);
        assert_eq!(residue_hom(&e.mul(&OrderElement::from_int(2)).add(&one)).unwrap(), 0);
        let half = OrderElement::from_rational(&Rational::new(1.into(), 2.into()));
        assert_eq!(residue_hom(&half).unwrap(), 3);
        for a in 1..5 {
            assert_eq!(residue_hom(&omega5(a, Branch::Standard).unwrap()).unwrap(), a);
        }
    }

    #[test]
    fn varpi_identities() {
        assert!(verify_varpi_identities().unwrap().passed());
        let shifted = verify_varpi_identities_with(&eps().mul(&OrderElement::from_int(2))).unwrap();
        assert!(!shifted.two_minus_eps);
    }

    #[test]
    fn generators() {
        let s = pi_s();
        assert_eq!(s.det(), OrderElement::one());
        assert_eq!(reduce_matrix(&s, Branch::Standard).unwrap(), F5Matrix::new(1, 1, 0, 1));
        assert_eq!(reduce_matrix(&pi_t(), Branch::Standard).unwrap(), F5Matrix::new(0, -1, 1, 0));
        assert_eq!(
            reduce_matrix(&pi_u(2, 3).unwrap(), Branch::Standard).unwrap(),
            F5Matrix::new(2, 0, 0, 3)
        );
        assert!(pi_u(2, 1).is_err());
    }

    #[test]
    fn group_shape() {
        let g = enumerate_group().unwrap();
        assert_eq!(g.len(), 240);
        assert!(g.elements.iter().all(|m| matches!(m.det(), 1 | 4)));
        assert_eq!(g.index_of(&F5Matrix::identity()), Some(0));
        assert_eq!(lift_pi(&g, &F5Matrix::identity()).unwrap(), Mat2::identity());
        assert_eq!(lift_pi(&g, &F5Matrix::new(1, 1, 0, 1)).unwrap(), pi_s());
        assert!(lift_pi(&g, &F5Matrix::new(2, 0, 0, 1)).is_err());
    }

    #[test]
    fn braid_shadow_mod5() {
        // a = 2, d = 3
        let s = F5Matrix::new(1, 1, 0, 1);
        let t = F5Matrix::new(0, -1, 1, 0);
        let t_inv = F5Matrix::new(0, 1, -1, 0);
        let sp = |e: u32| (0..e).fold(F5Matrix::identity(), |acc, _| acc.mul(&s));
        let lhs = t.mul(&sp(3)).mul(&t_inv);
        let rhs = F5Matrix::new(2, 0, 0, 3).mul(&sp(2)).mul(&t_inv).mul(&sp(3));
        assert_eq!(lhs, F5Matrix::new(1, 0, -3, 1));
        assert_eq!(rhs, lhs);
    }

    #[test]
    fn relation_two_fails_off_group() {
        assert!(!conjugation_of_s_holds(2, 1).unwrap());
        assert!(conjugation_of_s_holds(4, 1).unwrap());
    }
}

#[cfg(test)]
mod oracle_tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pi_is_multiplicative_on_random_pairs() {
        let group = enumerate_group().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let g = group.elements[rng.gen_range(0..group.len())];
            let h = group.elements[rng.gen_range(0..group.len())];
            let lhs = lift_pi(&group, &g).unwrap().mul(&lift_pi(&group, &h).unwrap());
            assert_eq!(lhs, lift_pi(&group, &g.mul(&h)).unwrap());
            assert_eq!(reduce_matrix(&lhs, Branch::Standard).unwrap(), g.mul(&h));
        }
    }
}
