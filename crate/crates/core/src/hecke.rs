//! Residue rings of ℤ[ε] (ε² = 1 − ε) modulo 4, 8, √5 and 8√5, characters
//! on their unit groups with values in μ₂₄, and the character ω = ω₄³ω₈³ω₅.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modulus {
    Four,
    Eight,
    Sqrt5,
    EightSqrt5,
}

impl Modulus {
    /// The power-of-two part, if any.
    fn two_part(self) -> Option<i64> {
        match self {
            Modulus::Four => Some(4),
            Modulus::Eight | Modulus::EightSqrt5 => Some(8),
            Modulus::Sqrt5 => None,
        }
    }

    fn has_five(self) -> bool {
        matches!(self, Modulus::Sqrt5 | Modulus::EightSqrt5)
    }

    /// |ℤ[ε]/(m)|
    pub fn norm(self) -> usize {
        let two = self.two_part().map_or(1, |n| (n * n) as usize);
        if self.has_five() {
            two * 5
        } else {
            two
        }
    }
}

impl FromStr for Modulus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "4" => Ok(Modulus::Four),
            "8" => Ok(Modulus::Eight),
            "sqrt5" => Ok(Modulus::Sqrt5),
            "8sqrt5" => Ok(Modulus::EightSqrt5),
            _ => Err(Error::Unsupported(format!("modulus {s}"))),
        }
    }
}

/// A class a + bε mod m, stored as (a, b) mod the 2-part and a + 2b mod 5
/// (ε ≡ 2 mod √5) for the √5-part. Unused parts are 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    pub modulus: Modulus,
    pub a: i64,
    pub b: i64,
    pub r5: i64,
}

impl Residue {
    /// Reduction of a + bε ∈ ℤ[ε].
    pub fn from_int_pair(modulus: Modulus, a: i64, b: i64) -> Self {
        let (ra, rb) = match modulus.two_part() {
            Some(n) => (a.rem_euclid(n), b.rem_euclid(n)),
            None => (0, 0),
        };
        let r5 = if modulus.has_five() { (a + 2 * b).rem_euclid(5) } else { 0 };
        Residue { modulus, a: ra, b: rb, r5 }
    }

    pub fn one(modulus: Modulus) -> Self {
        Self::from_int_pair(modulus, 1, 0)
    }

    pub fn eps(modulus: Modulus) -> Self {
        Self::from_int_pair(modulus, 0, 1)
    }

    pub fn minus_one(modulus: Modulus) -> Self {
        Self::from_int_pair(modulus, -1, 0)
    }

    fn build(modulus: Modulus, a: i64, b: i64, r5: i64) -> Self {
        let mut r = Self::from_int_pair(modulus, a, b);
        if modulus.has_five() {
            r.r5 = r5.rem_euclid(5);
        }
        r
    }

    /// (a + bε)(c + dε) = (ac + bd) + (ad + bc − bd)ε
    pub fn mul(&self, o: &Self) -> Self {
        let (a, b, c, d) = (self.a, self.b, o.a, o.b);
        Self::build(self.modulus, a * c + b * d, a * d + b * c - b * d, self.r5 * o.r5)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.modulus), |acc, _| acc.mul(self))
    }

    /// σ: ε ↦ −1 − ε, i.e. a + bε ↦ (a − b) − bε; identity on the √5-part.
    pub fn sigma(&self) -> Self {
        Self::build(self.modulus, self.a - self.b, -self.b, self.r5)
    }

    /// Projection to a coarser modulus.
    pub fn project(&self, target: Modulus) -> Result<Self, Error> {
        let ok = match (self.modulus, target) {
            (m, t) if m == t => true,
            (Modulus::Eight | Modulus::EightSqrt5, Modulus::Four) => true,
            (Modulus::EightSqrt5, Modulus::Eight | Modulus::Sqrt5) => true,
            _ => false,
        };
        if !ok {
            return Err(Error::Unsupported(format!("{:?} -> {:?}", self.modulus, target)));
        }
        let mut r = Self::from_int_pair(target, self.a, self.b);
        if target.has_five() {
            r.r5 = self.r5;
        }
        Ok(r)
    }

    /// N(a + bε) = a² − ab − b² reduced mod the 2-part.
    pub fn norm_mod_two_part(&self) -> Option<i64> {
        let n = self.modulus.two_part()?;
        Some((self.a * self.a - self.a * self.b - self.b * self.b).rem_euclid(n))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.modulus.two_part().is_some(), self.modulus.has_five()) {
            (true, true) => write!(f, "{}+{}e|{}", self.a, self.b, self.r5),
            (true, false) => write!(f, "{}+{}e", self.a, self.b),
            _ => write!(f, "{}", self.r5),
        }
    }
}

pub fn elements(modulus: Modulus) -> Vec<Residue> {
    let n = modulus.two_part().unwrap_or(1);
    let fives = if modulus.has_five() { 5 } else { 1 };
    let mut out = Vec::with_capacity(modulus.norm());
    for a in 0..n {
        for b in 0..n {
            for r5 in 0..fives {
                out.push(Residue { modulus, a, b, r5 });
            }
        }
    }
    out
}

/// Units, found by searching for inverses.
pub fn unit_group(modulus: Modulus) -> Vec<Residue> {
    let all = elements(modulus);
    let one = Residue::one(modulus);
    all.iter().filter(|x| all.iter().any(|y| x.mul(y) == one)).copied().collect()
}

/// ζ₂₄^k
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity(pub u8);

impl RootOfUnity {
    pub fn new(k: i64) -> Self {
        RootOfUnity(k.rem_euclid(24) as u8)
    }

    pub fn one() -> Self {
        RootOfUnity(0)
    }

    pub fn minus_one() -> Self {
        RootOfUnity(12)
    }

    pub fn mul(self, o: Self) -> Self {
        Self::new(self.0 as i64 + o.0 as i64)
    }

    pub fn pow(self, e: i64) -> Self {
        Self::new(self.0 as i64 * e)
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    pub fn order(self) -> u8 {
        24 / num_integer::gcd(self.0, 24)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            12 => write!(f, "-1"),
            k => write!(f, "zeta24^{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub modulus: Modulus,
    pub table: BTreeMap<Residue, RootOfUnity>,
}

impl Character {
    pub fn eval(&self, x: &Residue) -> Result<RootOfUnity, Error> {
        self.table
            .get(x)
            .copied()
            .ok_or_else(|| Error::Unsupported(format!("{x} is not a unit mod {:?}", self.modulus)))
    }

    /// χ(xy) = χ(x)χ(y) on all pairs.
    pub fn is_multiplicative(&self) -> bool {
        self.table.iter().all(|(x, vx)| {
            self.table.iter().all(|(y, vy)| self.table.get(&x.mul(y)) == Some(&vx.mul(*vy)))
        })
    }

    /// The subgroup of μ₂₄ hit by the character, as its order.
    pub fn image_order(&self) -> u8 {
        self.table.values().map(|v| v.order()).fold(1, num_integer::lcm)
    }
}

/// Extends an assignment on generators; errors if the generators miss part of
/// the unit group or the assignment contradicts a relation among them.
pub fn char_from_generators(
    modulus: Modulus,
    gens: &[Residue],
    images: &[RootOfUnity],
) -> Result<Character, Error> {
    if gens.len() != images.len() {
        return Err(Error::Dimension { expected: gens.len(), got: images.len() });
    }
    let units = unit_group(modulus);
    if let Some(g) = gens.iter().find(|g| g.modulus != modulus || !units.contains(g)) {
        return Err(Error::Unsupported(format!("{g} is not a unit mod {modulus:?}")));
    }
    let one = Residue::one(modulus);
    let mut table = BTreeMap::from([(one, RootOfUnity::one())]);
    let mut queue = VecDeque::from([one]);
    while let Some(x) = queue.pop_front() {
        let vx = table[&x];
        for (g, img) in gens.iter().zip(images) {
            let y = x.mul(g);
            let vy = vx.mul(*img);
            match table.get(&y) {
                Some(prev) if *prev != vy => {
                    return Err(Error::Verification(format!(
                        "inconsistent images: {y} gets {prev} and {vy}"
                    )))
                }
                Some(_) => {}
                None => {
                    table.insert(y, vy);
                    queue.push_back(y);
                }
            }
        }
    }
    if table.len() != units.len() {
        return Err(Error::Verification(format!(
            "generators reach {} of {} units",
            table.len(),
            units.len()
        )));
    }
    Ok(Character { modulus, table })
}

/// ω₄: −1 ↦ −1, ε ↦ ζ₆
pub fn omega4() -> Result<Character, Error> {
    let m = Modulus::Four;
    char_from_generators(
        m,
        &[Residue::minus_one(m), Residue::eps(m)],
        &[RootOfUnity::minus_one(), RootOfUnity::new(4)],
    )
}

/// ω₈: −1 ↦ −1, 1 + 4ε ↦ −1, ε ↦ ζ₁₂
pub fn omega8() -> Result<Character, Error> {
    let m = Modulus::Eight;
    char_from_generators(
        m,
        &[Residue::minus_one(m), Residue::from_int_pair(m, 1, 4), Residue::eps(m)],
        &[RootOfUnity::minus_one(), RootOfUnity::minus_one(), RootOfUnity::new(2)],
    )
}

/// ω₅: ε ↦ ζ₄ on units mod √5
pub fn omega5_hecke() -> Result<Character, Error> {
    let m = Modulus::Sqrt5;
    char_from_generators(m, &[Residue::eps(m)], &[RootOfUnity::new(6)])
}

/// Teichmüller character mod 5 with 2 ↦ i.
pub fn teichmuller(a: i64) -> Option<RootOfUnity> {
    match a.rem_euclid(5) {
        1 => Some(RootOfUnity::new(0)),
        2 => Some(RootOfUnity::new(6)),
        4 => Some(RootOfUnity::new(12)),
        3 => Some(RootOfUnity::new(18)),
        _ => None,
    }
}

/// Kronecker symbol (−2/n) for odd n, which depends on n mod 8.
pub fn kronecker_m2(n: i64) -> Option<RootOfUnity> {
    match n.rem_euclid(8) {
        1 | 3 => Some(RootOfUnity::one()),
        5 | 7 => Some(RootOfUnity::minus_one()),
        _ => None,
    }
}

/// (−1/n) for odd n.
pub fn chi_m4(n: i64) -> Option<RootOfUnity> {
    match n.rem_euclid(4) {
        1 => Some(RootOfUnity::one()),
        3 => Some(RootOfUnity::minus_one()),
        _ => None,
    }
}

/// ω = ω₄³ω₈³ω₅ on units mod 8√5, through the CRT projections.
pub fn omega() -> Result<Character, Error> {
    omega_from(&omega4()?, &omega8()?, &omega5_hecke()?)
}

/// ω₄³ω₈³ω₅ for arbitrary component characters.
pub fn omega_from(w4: &Character, w8: &Character, w5: &Character) -> Result<Character, Error> {
    let m = Modulus::EightSqrt5;
    let mut table = BTreeMap::new();
    for x in unit_group(m) {
        let v = w4
            .eval(&x.project(Modulus::Four)?)?
            .pow(3)
            .mul(w8.eval(&x.project(Modulus::Eight)?)?.pow(3))
            .mul(w5.eval(&x.project(Modulus::Sqrt5)?)?);
        table.insert(x, v);
    }
    Ok(Character { modulus: m, table })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub units: usize,
    pub failures: Vec<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.units > 0 && self.failures.is_empty()
    }
}

fn norm_of(x: &Residue) -> Result<i64, Error> {
    x.norm_mod_two_part().ok_or_else(|| Error::Unsupported("norm needs the 2-part".into()))
}

/// ω(σx)·ω(x)⁻¹ = (−2/N(x)) on every unit mod 8√5.
pub fn verify_sigma_identity(w: &Character) -> Result<IdentityCheck, Error> {
    let mut failures = Vec::new();
    for (x, vx) in &w.table {
        let lhs = w.eval(&x.sigma())?.mul(vx.inv());
        let rhs = kronecker_m2(norm_of(x)?)
            .ok_or_else(|| Error::Verification(format!("even norm at unit {x}")))?;
        if lhs != rhs {
            failures.push(format!("{x}: {lhs} vs {rhs}"));
        }
    }
    Ok(IdentityCheck { units: w.table.len(), failures })
}

/// ω(x)² = (−1/N(x))·ω₅(N(x))⁻¹ on every unit mod 8√5, with ω₅ Teichmüller.
pub fn verify_square_identity(w: &Character) -> Result<IdentityCheck, Error> {
    let mut failures = Vec::new();
    for (x, vx) in &w.table {
        let n = norm_of(x)?;
        let chi = chi_m4(n).ok_or_else(|| Error::Verification(format!("even norm at {x}")))?;
        // N(x) ≡ r5² mod 5 on the √5-part
        let n5 = x.r5 * x.r5;
        let t = teichmuller(n5).ok_or_else(|| Error::Verification(format!("norm ≡ 0 mod 5 at {x}")))?;
        let rhs = chi.mul(t.inv());
        let lhs = vx.pow(2);
        if lhs != rhs {
            failures.push(format!("{x}: {lhs} vs {rhs}"));
        }
    }
    Ok(IdentityCheck { units: w.table.len(), failures })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveUnits {
    pub omega_eps: RootOfUnity,
    pub omega_eps2: RootOfUnity,
    pub omega_eps4: RootOfUnity,
    pub omega_minus_one: RootOfUnity,
}

impl PositiveUnits {
    pub fn passed(&self) -> bool {
        self.omega_eps2 == RootOfUnity::one() && self.omega_eps4 == RootOfUnity::one()
    }
}

pub fn verify_positive_units(w: &Character) -> Result<PositiveUnits, Error> {
    let e = Residue::eps(w.modulus);
    Ok(PositiveUnits {
        omega_eps: w.eval(&e)?,
        omega_eps2: w.eval(&e.pow(2))?,
        omega_eps4: w.eval(&e.pow(4))?,
        omega_minus_one: w.eval(&Residue::minus_one(w.modulus))?,
    })
}

/// The Hecke ω₅ at a rational unit a agrees with the Teichmüller ω₅(a).
pub fn teichmuller_compatible() -> Result<bool, Error> {
    let w5 = omega5_hecke()?;
    for a in 1..5 {
        let x = Residue::from_int_pair(Modulus::Sqrt5, a, 0);
        if Some(w5.eval(&x)?) != teichmuller(a) {
            return Ok(false);
        }
    }
    Ok(true)
}
