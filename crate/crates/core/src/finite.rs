//! Word-sized prime-field arithmetic and affine Weierstrass group law, used by
//! the sampling checks.

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - (b % p) as u128) % p as u128) as u64
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn neg_mod(a: u64, p: u64) -> u64 {
    (p - a % p) % p
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Legendre symbol for odd prime `p`: 0, 1 or -1.
pub fn legendre(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// A square root of `a` modulo an odd prime (Tonelli–Shanks).
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if legendre(a, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while legendre(z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Horner evaluation of integer-residue coefficients (lowest degree first).
pub fn eval_poly_mod(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs
        .iter()
        .rev()
        .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine(u64, u64),
}

/// `y² = x³ + a2·x² + a4·x + a6` over 𝔽_p, p odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveFp {
    pub p: u64,
    pub a2: u64,
    pub a4: u64,
    pub a6: u64,
}

impl CurveFp {
    pub fn rhs(&self, x: u64) -> u64 {
        eval_poly_mod(&[self.a6, self.a4, self.a2, 1], x, self.p)
    }

    pub fn contains(&self, pt: Point) -> bool {
        match pt {
            Point::Infinity => true,
            Point::Affine(x, y) => mul_mod(y, y, self.p) == self.rhs(x),
        }
    }

    pub fn neg(&self, pt: Point) -> Point {
        match pt {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x, neg_mod(y, self.p)),
        }
    }

    pub fn add(&self, a: Point, b: Point) -> Point {
        let p = self.p;
        let (x1, y1, x2, y2) = match (a, b) {
            (Point::Infinity, q) | (q, Point::Infinity) => return q,
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if add_mod(y1, y2, p) == 0 {
                return Point::Infinity;
            }
            // (3x² + 2·a2·x + a4) / 2y
            let num = add_mod(
                add_mod(mul_mod(3, mul_mod(x1, x1, p), p), mul_mod(2 * self.a2 % p, x1, p), p),
                self.a4,
                p,
            );
            mul_mod(num, inv_mod(mul_mod(2, y1, p), p).expect("nonzero"), p)
        } else {
            mul_mod(
                sub_mod(y2, y1, p),
                inv_mod(sub_mod(x2, x1, p), p).expect("distinct x"),
                p,
            )
        };
        let x3 = sub_mod(
            sub_mod(sub_mod(mul_mod(slope, slope, p), self.a2, p), x1, p),
            x2,
            p,
        );
        let y3 = sub_mod(mul_mod(slope, sub_mod(x1, x3, p), p), y1, p);
        Point::Affine(x3, y3)
    }

    pub fn mul(&self, mut k: i64, pt: Point) -> Point {
        let mut base = if k < 0 { self.neg(pt) } else { pt };
        k = k.abs();
        let mut acc = Point::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// All affine points, by exhaustive search over x.
    pub fn points(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for x in 0..self.p {
            let r = self.rhs(x);
            if let Some(y) = sqrt_mod(r, self.p) {
                out.push(Point::Affine(x, y));
                if y != 0 {
                    out.push(Point::Affine(x, self.p - y));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tonelli_shanks_roundtrip() {
        for p in [5u64, 13, 17, 41, 73, 97, 1009] {
            for a in 0..p {
                if let Some(r) = sqrt_mod(a, p) {
                    assert_eq!(mul_mod(r, r, p), a);
                } else {
                    assert_eq!(legendre(a, p), -1);
                }
            }
        }
    }

    #[test]
    fn group_order_divides_by_lagrange() {
        let e = CurveFp { p: 97, a2: 2, a4: 3, a6: 5 };
        let pts = e.points();
        let n = pts.len() as i64 + 1;
        for &pt in &pts {
            assert!(e.contains(pt));
            assert_eq!(e.mul(n, pt), Point::Infinity);
        }
    }
}
