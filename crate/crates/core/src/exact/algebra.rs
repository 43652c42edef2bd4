//! Structure-constant ℚ-algebras.
//!
//! Each supported algebra has a fixed ℚ-basis and a multiplication table
//! `b_i · b_j = Σ_k c_ijk · b_k`. Tables are generated from the defining
//! relations and then checked for commutativity, associativity and a unit.
//!
//! | name           | basis              | relations                      |
//! |----------------|--------------------|--------------------------------|
//! | `Qsqrt5`       | 1, s               | s² = 5                         |
//! | `Qzeta5`       | 1, ζ, ζ², ζ³       | ζ⁴ = −1 − ζ − ζ² − ζ³          |
//! | `QepsI`        | 1, ε, i, iε        | ε² = 1 − ε, i² = −1            |
//! | `Qsqrt5sqrtm2` | 1, s, r, sr        | s² = 5, r² = −2                |

use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use super::rational::{int, Rational};
use super::ring::{Field, Ring};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FieldName {
    Q,
    Qsqrt5,
    Qzeta5,
    QepsI,
    Qsqrt5sqrtm2,
    F5,
}

impl FromStr for FieldName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "Q" => FieldName::Q,
            "Qsqrt5" => FieldName::Qsqrt5,
            "Qzeta5" => FieldName::Qzeta5,
            "QepsI" => FieldName::QepsI,
            "Qsqrt5sqrtm2" => FieldName::Qsqrt5sqrtm2,
            "F5" => FieldName::F5,
            other => return Err(Error::UnknownField(other.to_string())),
        })
    }
}

type Table = Vec<Vec<Vec<Rational>>>;

#[derive(Clone, Debug)]
pub struct FieldDescriptor {
    pub name: FieldName,
    pub basis: Vec<&'static str>,
    /// `table[i][j]` holds the coordinates of `basis[i] * basis[j]`.
    pub table: Table,
    /// Transcendental parameters adjoined to the scalars (rational-function field).
    pub params: Vec<String>,
    /// 0 for the ℚ-algebras.
    pub characteristic: u64,
    sparse: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl FieldDescriptor {
    fn new(name: FieldName, basis: Vec<&'static str>, table: Table, characteristic: u64) -> Self {
        let sparse = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .enumerate()
                            .filter(|(_, c)| !Ring::is_zero(*c))
                            .map(|(k, c)| (k, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        FieldDescriptor {
            name,
            basis,
            table,
            params: Vec::new(),
            characteristic,
            sparse,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![<Rational as Ring>::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                let prod = ai * bj;
                for (k, c) in &self.sparse[i][j] {
                    out[*k] += &prod * c;
                }
            }
        }
        out
    }

    /// Exhaustive basis check: unit, commutativity, associativity.
    pub fn verify_table(&self) -> bool {
        let n = self.dim();
        let e = |i: usize| {
            let mut v = vec![<Rational as Ring>::zero(); n];
            v[i] = <Rational as Ring>::one();
            v
        };
        for i in 0..n {
            if self.table[0][i] != e(i) || self.table[i][0] != e(i) {
                return false;
            }
            for j in 0..n {
                if self.table[i][j] != self.table[j][i] {
                    return false;
                }
                for k in 0..n {
                    let left = self.mul_coords(&self.table[i][j], &e(k));
                    let right = self.mul_coords(&e(i), &self.table[j][k]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Power basis 1, α, …, α^{d-1} for a monic minimal polynomial (low degree first, leading 1 omitted).
fn power_basis_table(minpoly: &[i64]) -> Table {
    let d = minpoly.len();
    // coordinates of α^k for k < 2d - 1
    let mut powers: Vec<Vec<Rational>> = Vec::new();
    for k in 0..(2 * d - 1) {
        let v = if k < d {
            let mut v = vec![int(0); d];
            v[k] = int(1);
            v
        } else {
            // α^k = α · α^{k-1}
            let prev = &powers[k - 1];
            let mut v = vec![int(0); d];
            for i in 0..d - 1 {
                v[i + 1] = prev[i].clone();
            }
            let top = prev[d - 1].clone();
            for (i, c) in minpoly.iter().enumerate() {
                v[i] -= &top * int(*c);
            }
            v
        };
        powers.push(v);
    }
    (0..d)
        .map(|i| (0..d).map(|j| powers[i + j].clone()).collect())
        .collect()
}

/// Tensor product of two commutative algebras, basis a_i ⊗ b_j ordered as `i + da * j`.
fn tensor_table(a: &Table, b: &Table) -> Table {
    let da = a.len();
    let db = b.len();
    let n = da * db;
    let mut t = vec![vec![vec![int(0); n]; n]; n];
    for i1 in 0..da {
        for j1 in 0..db {
            for i2 in 0..da {
                for j2 in 0..db {
                    let row = i1 + da * j1;
                    let col = i2 + da * j2;
                    for (ka, ca) in a[i1][i2].iter().enumerate() {
                        for (kb, cb) in b[j1][j2].iter().enumerate() {
                            t[row][col][ka + da * kb] += ca * cb;
                        }
                    }
                }
            }
        }
    }
    t
}

fn build(name: FieldName) -> FieldDescriptor {
    let d = match name {
        FieldName::Q => FieldDescriptor::new(name, vec!["1"], vec![vec![vec![int(1)]]], 0),
        FieldName::F5 => FieldDescriptor::new(name, vec!["1"], vec![vec![vec![int(1)]]], 5),
        FieldName::Qsqrt5 => {
            FieldDescriptor::new(name, vec!["1", "s5"], power_basis_table(&[-5, 0]), 0)
        }
        FieldName::Qzeta5 => FieldDescriptor::new(
            name,
            vec!["1", "z5", "z5^2", "z5^3"],
            power_basis_table(&[1, 1, 1, 1]),
            0,
        ),
        FieldName::QepsI => FieldDescriptor::new(
            name,
            vec!["1", "e", "i", "i*e"],
            // ε² + ε − 1 = 0, i² + 1 = 0
            tensor_table(&power_basis_table(&[-1, 1]), &power_basis_table(&[1, 0])),
            0,
        ),
        FieldName::Qsqrt5sqrtm2 => FieldDescriptor::new(
            name,
            vec!["1", "s5", "sm2", "s5*sm2"],
            tensor_table(&power_basis_table(&[-5, 0]), &power_basis_table(&[2, 0])),
            0,
        ),
    };
    assert!(d.verify_table(), "multiplication table for {name:?} failed verification");
    d
}

/// Returns the descriptor for a named algebra, with its table verified and
/// the given parameter symbols recorded.
pub fn field_tower(name: &str, params: &[&str]) -> Result<FieldDescriptor, Error> {
    let name: FieldName = name.parse()?;
    let mut d = descriptor(name).clone();
    d.params = params.iter().map(|s| s.to_string()).collect();
    Ok(d)
}

pub fn descriptor(name: FieldName) -> &'static FieldDescriptor {
    static CELLS: [OnceLock<FieldDescriptor>; 6] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let idx = name as usize;
    CELLS[idx].get_or_init(|| build(name))
}

/// Type-level handle on one of the fixed ℚ-algebras.
pub trait Algebra: Copy + fmt::Debug + PartialEq + Send + Sync + 'static {
    const NAME: FieldName;
    fn descriptor() -> &'static FieldDescriptor {
        descriptor(Self::NAME)
    }
}

macro_rules! algebra_marker {
    ($ty:ident, $name:ident) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq)]
        pub struct $ty;
        impl Algebra for $ty {
            const NAME: FieldName = FieldName::$name;
        }
    };
}

algebra_marker!(Qsqrt5, Qsqrt5);
algebra_marker!(Qzeta5, Qzeta5);
algebra_marker!(QepsI, QepsI);
algebra_marker!(Qsqrt5Sqrtm2, Qsqrt5sqrtm2);

/// Element of a structure-constant algebra with coordinates in `K`.
///
/// `K` is `Rational` for the plain algebra, or a rational-function field when
/// parameters have been adjoined.
pub struct AlgElement<A: Algebra, K: Field = Rational> {
    coords: Vec<K>,
    _alg: PhantomData<A>,
}

impl<A: Algebra, K: Field> Clone for AlgElement<A, K> {
    fn clone(&self) -> Self {
        AlgElement { coords: self.coords.clone(), _alg: PhantomData }
    }
}

impl<A: Algebra, K: Field> PartialEq for AlgElement<A, K> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl<A: Algebra, K: Field> fmt::Debug for AlgElement<A, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", A::NAME, self.coords)
    }
}

impl<A: Algebra, K: Field> fmt::Display for AlgElement<A, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = &A::descriptor().basis;
        let mut first = true;
        for (c, b) in self.coords.iter().zip(basis) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *b == "1" {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "({c})*{b}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<A: Algebra, K: Field> AlgElement<A, K> {
    pub fn from_coords(coords: Vec<K>) -> Result<Self, Error> {
        if coords.len() != A::descriptor().dim() {
            return Err(Error::Dimension {
                expected: A::descriptor().dim(),
                got: coords.len(),
            });
        }
        Ok(AlgElement { coords, _alg: PhantomData })
    }

    pub fn coords(&self) -> &[K] {
        &self.coords
    }

    pub fn basis(i: usize) -> Self {
        let mut coords = vec![K::zero(); A::descriptor().dim()];
        coords[i] = K::one();
        AlgElement { coords, _alg: PhantomData }
    }

    pub fn from_scalar(k: K) -> Self {
        let mut coords = vec![K::zero(); A::descriptor().dim()];
        coords[0] = k;
        AlgElement { coords, _alg: PhantomData }
    }

    /// The coordinate on `1` when every other coordinate vanishes.
    pub fn as_scalar(&self) -> Option<&K> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn map_coords<F: Fn(&K) -> K>(&self, f: F) -> Self {
        AlgElement { coords: self.coords.iter().map(f).collect(), _alg: PhantomData }
    }

    /// Matrix of multiplication by `self` (column j = self · b_j).
    fn mul_matrix(&self) -> Vec<Vec<K>> {
        let d = A::descriptor();
        let n = d.dim();
        let mut m = vec![vec![K::zero(); n]; n];
        for j in 0..n {
            for (i, c) in self.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, t) in &d.sparse[i][j] {
                    m[*k][j] = m[*k][j].add(&c.mul_rational(t));
                }
            }
        }
        m
    }
}

impl<A: Algebra, K: Field> Ring for AlgElement<A, K> {
    fn zero() -> Self {
        AlgElement { coords: vec![K::zero(); A::descriptor().dim()], _alg: PhantomData }
    }
    fn one() -> Self {
        Self::basis(0)
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn add(&self, other: &Self) -> Self {
        AlgElement {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect(),
            _alg: PhantomData,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        AlgElement {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect(),
            _alg: PhantomData,
        }
    }
    fn neg(&self) -> Self {
        self.map_coords(|c| c.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let d = A::descriptor();
        let n = d.dim();
        let mut out = vec![K::zero(); n];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a.mul(b);
                for (k, c) in &d.sparse[i][j] {
                    if c.is_one() {
                        out[*k].add_assign(&prod);
                    } else if (-c).is_one() {
                        out[*k].sub_assign(&prod);
                    } else {
                        out[*k].add_assign(&prod.mul_rational(c));
                    }
                }
            }
        }
        AlgElement { coords: out, _alg: PhantomData }
    }
    fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            a.add_assign(b);
        }
    }
    fn sub_assign(&mut self, other: &Self) {
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            a.sub_assign(b);
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_scalar(K::from_rational(q))
    }
    fn mul_rational(&self, q: &Rational) -> Self {
        self.map_coords(|c| c.mul_rational(q))
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        Field::div(self, other)
    }
}

impl<A: Algebra, K: Field> Field for AlgElement<A, K> {
    fn inv(&self) -> Option<Self> {
        if let Some(k) = self.as_scalar() {
            return k.inv().map(Self::from_scalar);
        }
        let n = A::descriptor().dim();
        let mut m = self.mul_matrix();
        let mut rhs = vec![K::zero(); n];
        rhs[0] = K::one();
        // Gauss–Jordan over K
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot);
            rhs.swap(col, pivot);
            let pinv = m[col][col].inv()?;
            for c in col..n {
                m[col][c] = m[col][c].mul(&pinv);
            }
            rhs[col] = rhs[col].mul(&pinv);
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..n {
                        let t = f.mul(&m[col][c]);
                        m[r][c] = m[r][c].sub(&t);
                    }
                    let t = f.mul(&rhs[col]);
                    rhs[r] = rhs[r].sub(&t);
                }
            }
        }
        Some(AlgElement { coords: rhs, _alg: PhantomData })
    }
}

/// Applies a binary operation by name; mirrors the arithmetic contract used in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
}

pub fn alg_arith<A: Algebra, K: Field>(
    a: &AlgElement<A, K>,
    b: &AlgElement<A, K>,
    op: AlgOp,
) -> Result<AlgElement<A, K>, Error> {
    match op {
        AlgOp::Add => Ok(a.add(b)),
        AlgOp::Sub => Ok(a.sub(b)),
        AlgOp::Mul => Ok(a.mul(b)),
        AlgOp::Div => Field::div(a, b).ok_or(Error::NotInvertible),
        AlgOp::Inv => a.inv().ok_or(Error::NotInvertible),
    }
}

// ---- named elements and coercions --------------------------------------

impl<K: Field> AlgElement<Qsqrt5, K> {
    pub fn sqrt5() -> Self {
        Self::basis(1)
    }

    /// ε = (√5 − 1)/2.
    pub fn epsilon() -> Self {
        let half = K::from_rational(&Rational::new(1.into(), 2.into()));
        AlgElement { coords: vec![half.neg(), half], _alg: PhantomData }
    }

    /// Galois conjugation √5 ↦ −√5.
    pub fn conj_sqrt5(&self) -> Self {
        AlgElement {
            coords: vec![self.coords[0].clone(), self.coords[1].neg()],
            _alg: PhantomData,
        }
    }

    /// ℚ(√5) ↪ ℚ(ζ₅), √5 = 2(ζ₅ + ζ₅⁴) + 1 = −1 − 2ζ₅² − 2ζ₅³.
    pub fn to_zeta5(&self) -> AlgElement<Qzeta5, K> {
        let (a, b) = (&self.coords[0], &self.coords[1]);
        let two_b = b.add(b);
        AlgElement {
            coords: vec![a.sub(b), K::zero(), two_b.neg(), two_b.neg()],
            _alg: PhantomData,
        }
    }

    /// ℚ(√5) ↪ ℚ(ε, i), √5 = 2ε + 1.
    pub fn to_eps_i(&self) -> AlgElement<QepsI, K> {
        let (a, b) = (&self.coords[0], &self.coords[1]);
        AlgElement {
            coords: vec![a.add(b), b.add(b), K::zero(), K::zero()],
            _alg: PhantomData,
        }
    }
}

impl<K: Field> AlgElement<Qzeta5, K> {
    pub fn zeta() -> Self {
        Self::basis(1)
    }

    /// ζ₅^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(5) as usize;
        if k < 4 {
            Self::basis(k)
        } else {
            AlgElement { coords: vec![K::one().neg(); 4], _alg: PhantomData }
        }
    }
}

impl<K: Field> AlgElement<QepsI, K> {
    pub fn eps() -> Self {
        Self::basis(1)
    }
    pub fn i() -> Self {
        Self::basis(2)
    }

    /// Complex conjugation i ↦ −i.
    pub fn conj_i(&self) -> Self {
        let c = &self.coords;
        AlgElement {
            coords: vec![c[0].clone(), c[1].clone(), c[2].neg(), c[3].neg()],
            _alg: PhantomData,
        }
    }

    /// σ: √5 ↦ −√5 (so ε ↦ −1 − ε), fixing i.
    pub fn conj_sqrt5(&self) -> Self {
        // a + bε ↦ (a − b) − bε, on both the real and the i-part
        let c = &self.coords;
        AlgElement {
            coords: vec![c[0].sub(&c[1]), c[1].neg(), c[2].sub(&c[3]), c[3].neg()],
            _alg: PhantomData,
        }
    }
}

impl<K: Field> AlgElement<Qsqrt5Sqrtm2, K> {
    pub fn sqrt5() -> Self {
        Self::basis(1)
    }
    pub fn sqrt_m2() -> Self {
        Self::basis(2)
    }
    pub fn conj_sqrt5(&self) -> Self {
        let c = &self.coords;
        AlgElement {
            coords: vec![c[0].clone(), c[1].neg(), c[2].clone(), c[3].neg()],
            _alg: PhantomData,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    type E = AlgElement<QepsI>;

    #[test]
    fn descriptors_have_expected_shape() {
        let d = field_tower("Qsqrt5", &[]).unwrap();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.table[1][1], vec![int(5), int(0)]);
        let d = field_tower("QepsI", &[]).unwrap();
        assert_eq!(d.dim(), 4);
        // ε² = 1 − ε, i² = −1
        assert_eq!(d.table[1][1], vec![int(1), int(-1), int(0), int(0)]);
        assert_eq!(d.table[2][2], vec![int(-1), int(0), int(0), int(0)]);
        let d = field_tower("Qzeta5", &["t"]).unwrap();
        assert_eq!(d.params, vec!["t".to_string()]);
        assert_eq!(d.table[2][2], vec![int(-1); 4]);
        assert!(matches!(field_tower("Qcbrt2", &[]), Err(Error::UnknownField(_))));
        for name in ["Q", "Qsqrt5", "Qzeta5", "QepsI", "Qsqrt5sqrtm2", "F5"] {
            assert!(field_tower(name, &[]).unwrap().verify_table());
        }
    }

    #[test]
    fn epsilon_is_golden_ratio_conjugate() {
        // expanding ε = (√5 − 1)/2 in ℚ(√5): ε² + ε − 1 = 0
        let e = AlgElement::<Qsqrt5>::epsilon();
        assert!(e.square().add(&e).sub(&AlgElement::one()).is_zero());
        // and its image in ℚ(ε, i) is the basis element ε
        assert_eq!(e.to_eps_i(), E::eps());
        assert_eq!(e.to_zeta5(), AlgElement::<Qzeta5>::zeta().add(&AlgElement::zeta_pow(4)));
    }

    #[test]
    fn eps_arithmetic() {
        let e = E::eps();
        assert_eq!(e.mul(&e), E::one().sub(&e));
        assert_eq!(alg_arith(&E::one(), &e, AlgOp::Div).unwrap(), e.add(&E::one()));
        assert_eq!(alg_arith(&e, &E::one(), AlgOp::Inv).unwrap(), e.add(&E::one()));
        let x = E::from_coords(vec![rat(1, 2), int(-3), int(2), rat(5, 7)]).unwrap();
        assert_eq!(E::one().mul(&x), x);
        assert_eq!(x.mul(&x.inv().unwrap()), E::one());
        assert!(matches!(alg_arith(&x, &E::zero(), AlgOp::Div), Err(Error::NotInvertible)));
    }

    #[test]
    fn zeta_relations() {
        let z = AlgElement::<Qzeta5>::zeta();
        assert!(z.pow(5).is_one());
        assert_eq!(AlgElement::<Qzeta5>::zeta_pow(4), z.pow(4));
        assert_eq!(AlgElement::<Qzeta5>::zeta_pow(-1), z.pow(4));
        let s5 = AlgElement::<Qsqrt5>::sqrt5().to_zeta5();
        assert_eq!(s5.square(), AlgElement::from_rational(&int(5)));
    }

    #[test]
    fn wrong_dimension_rejected() {
        assert!(AlgElement::<Qsqrt5>::from_coords(vec![int(1)]).is_err());
    }
}
