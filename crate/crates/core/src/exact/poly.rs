//! Dense univariate polynomials, lowest degree first.

use std::fmt;

use super::rational::Rational;
use super::ring::{Field, Ring};
use crate::error::Error;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Ring> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| K::from_int(c)).collect())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn monomial(c: K, deg: usize) -> Self {
        let mut v = vec![K::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::new(Vec::new());
        }
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_rational(q)).collect())
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![K::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_rational(&Rational::from_integer((i as i64).into())))
                .collect(),
        )
    }

    /// p(q(x)).
    pub fn compose(&self, q: &Poly<K>) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(q).add(&Self::constant(c.clone())))
    }

    /// p(c·x): coefficient k picks up c^k.
    pub fn scale_var(&self, c: &K) -> Self {
        let mut pow = K::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a.mul(&pow));
            pow = pow.mul(c);
        }
        Self::new(v)
    }

    /// Σ p_k · num^k · den^(n−k) with n = deg p: the numerator of p(num/den) cleared by den^n.
    pub fn homogenize(&self, num: &Poly<K>, den: &Poly<K>) -> Self {
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        let mut num_pows = vec![Self::one()];
        let mut den_pows = vec![Self::one()];
        for _ in 0..n {
            num_pows.push(num_pows.last().unwrap().mul(num));
            den_pows.push(den_pows.last().unwrap().mul(den));
        }
        let mut acc = Self::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&num_pows[k].mul(&den_pows[n - k]).scale(c));
        }
        acc
    }

    pub fn map<L: Ring, F: Fn(&K) -> L>(&self, f: F) -> Poly<L> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Pseudo-remainder lc(d)^(deg self − deg d + 1) · self mod d; works over any domain.
    pub fn pseudo_rem(&self, d: &Poly<K>) -> Self {
        let dd = d.degree().expect("pseudo-division by zero");
        let Some(ds) = self.degree() else {
            return self.clone();
        };
        if ds < dd {
            return self.clone();
        }
        let lcd = d.lc().unwrap().clone();
        let mut r = self.clone();
        let mut steps = 0u32;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.lc().unwrap().clone();
            r = r.scale(&lcd).sub(&d.shift(dr - dd).scale(&lr));
            steps += 1;
        }
        let total = (ds - dd + 1) as u32;
        if total > steps {
            r = r.scale(&lcd.pow(total - steps));
        }
        r
    }

    /// Exact quotient over any domain; `None` unless `d` divides `self`.
    pub fn exact_div(&self, d: &Poly<K>) -> Option<Self> {
        let dd = d.degree()?;
        let lcd = d.lc().unwrap();
        let mut r = self.clone();
        let Some(ds) = r.degree() else {
            return Some(Self::zero());
        };
        if ds < dd {
            return None;
        }
        let mut q = vec![K::zero(); ds - dd + 1];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let c = r.lc().unwrap().try_div(lcd)?;
            r = r.sub(&d.shift(dr - dd).scale(&c));
            q[dr - dd] = c;
            if r.degree() == Some(dr) {
                return None;
            }
        }
        Some(Self::new(q))
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let cs = if cs.contains(' ') || (cs.starts_with('-') && i > 0 && cs.len() > 2) {
                format!("({cs})")
            } else {
                cs
            };
            parts.push(match i {
                0 => cs,
                1 if c.is_one() => var.to_string(),
                _ if c.is_one() => format!("{var}^{i}"),
                1 => format!("{cs}*{var}"),
                _ => format!("{cs}*{var}^{i}"),
            });
        }
        parts.join(" + ")
    }
}

impl<K: Field> Poly<K> {
    /// Euclidean division; errors when the divisor's leading coefficient is not invertible.
    pub fn div_rem(&self, d: &Poly<K>) -> Result<(Self, Self), Error> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lc().unwrap().inv().ok_or(Error::ZeroDivisor)?;
        let mut r = self.clone();
        let Some(ds) = r.degree() else {
            return Ok((Self::zero(), r));
        };
        if ds < dd {
            return Ok((Self::zero(), r));
        }
        let mut q = vec![K::zero(); ds - dd + 1];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = r.lc().unwrap().mul(&inv);
            let mut coeffs = r.coeffs;
            for (i, dc) in d.coeffs.iter().enumerate() {
                coeffs[dr - dd + i].sub_assign(&c.mul(dc));
            }
            // the leading term cancels exactly
            coeffs[dr] = K::zero();
            r = Self::new(coeffs);
            q[dr - dd] = c;
        }
        Ok((Self::new(q), r))
    }

    pub fn rem(&self, d: &Poly<K>) -> Result<Self, Error> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn monic(&self) -> Result<Self, Error> {
        match self.lc() {
            None => Ok(self.clone()),
            Some(lc) => {
                let inv = lc.inv().ok_or(Error::ZeroDivisor)?;
                Ok(self.scale(&inv))
            }
        }
    }
}

/// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
pub fn poly_gcd<K: Field>(p: &Poly<K>, q: &Poly<K>) -> Result<Poly<K>, Error> {
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        // keep remainders monic to contain coefficient growth
        b = r.monic()?;
    }
    a.monic()
}

impl<K: Ring> Ring for Poly<K> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly { coeffs: vec![K::one()] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(v)
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(v)
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut v = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j].add_assign(&a.mul(b));
            }
        }
        Self::new(v)
    }
    fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(K::from_rational(q))
    }
    fn mul_rational(&self, q: &Rational) -> Self {
        self.scale_rational(q)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.exact_div(other)
    }
}

impl<K: Ring> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}
