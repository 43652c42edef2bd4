//! Resultants by the subresultant pseudo-remainder sequence.
//!
//! Convention: `resultant(p, q) = det Sylvester(p, q)` with the `deg q` rows of
//! `p` coefficients placed first. Equivalently
//! `Res(p, q) = lc(p)^deg q · ∏ q(α)` over the roots α of `p`, and
//! `Res(q, p) = (−1)^(deg p · deg q) · Res(p, q)`.
//!
//! Only exact division is used, so the coefficient ring may be any domain
//! (ℚ, a number field, or ℚ[S] when eliminating a variable).

use super::poly::Poly;
use super::ring::Ring;
use crate::error::Error;

pub fn resultant<K: Ring>(p: &Poly<K>, q: &Poly<K>) -> Result<K, Error> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroResultant);
    }
    if p.is_zero() || q.is_zero() {
        return Ok(K::zero());
    }
    let dp = p.degree().unwrap();
    let dq = q.degree().unwrap();
    if dp == 0 {
        return Ok(p.lc().unwrap().pow(dq as u32));
    }
    if dq == 0 {
        return Ok(q.lc().unwrap().pow(dp as u32));
    }

    let mut a = p.clone();
    let mut b = q.clone();
    let mut negate = false;
    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        negate = dp % 2 == 1 && dq % 2 == 1;
    }
    let mut g = K::one();
    let mut h = K::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(K::zero());
        }
        a = b;
        let divisor = g.mul(&h.pow(delta as u32));
        b = r
            .exact_div(&Poly::constant(divisor))
            .expect("subresultant division is exact");
        g = a.lc().unwrap().clone();
        // h ← g^δ / h^(δ−1)
        h = if delta == 0 {
            h
        } else {
            g.pow(delta as u32)
                .try_div(&h.pow(delta as u32 - 1))
                .expect("subresultant division is exact")
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u32;
            let lb = b.lc().unwrap();
            let res = if da == 0 {
                K::one()
            } else {
                lb.pow(da)
                    .try_div(&h.pow(da - 1))
                    .expect("subresultant division is exact")
            };
            return Ok(if negate { res.neg() } else { res });
        }
    }
}
