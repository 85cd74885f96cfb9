//! Polynomial gcd and resultants via the subresultant remainder sequence.
//!
//! Remainders are computed with pseudo-division and the subresultant scaling
//! factors, which keeps coefficients integral (no fractions) once the inputs
//! have been cleared of denominators. Over `Q` and `Q(t)` this avoids the
//! coefficient explosion of the naive Euclidean algorithm.

use super::{Coeff, Poly};
use crate::error::{Error, Result};

/// Pseudo-remainder `lc(B)^k * (A mod B)` computed without coefficient
/// division, together with the number `k` of `lc(B)` multiplications that
/// were applied (at most `deg A - deg B + 1`). Requires `B` nonzero.
fn pseudo_rem_counted<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> (Poly<C>, usize) {
    debug_assert!(!b.is_zero());
    let db = b.deg();
    let lb = b.lc().clone();
    let mut rem = a.clone();
    let mut count = 0;
    while !rem.is_zero() && rem.deg() >= db {
        let dr = rem.deg();
        let top = rem.lc().clone();
        // rem := lc(B) * rem - top * x^(dr-db) * B
        let shifted = Poly::monomial(top, dr - db).mul(b);
        rem = rem.mul_scalar(&lb).sub(&shifted);
        count += 1;
        if !rem.is_zero() && rem.deg() >= dr {
            // degree must strictly drop each round
            unreachable!("pseudo-division failed to reduce degree");
        }
    }
    (rem, count)
}

fn pseudo_rem<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    pseudo_rem_counted(a, b).0
}

fn pow_scalar<C: Coeff>(base: &C, e: usize) -> C {
    let mut acc = base.one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

/// Scalar power with possibly negative exponent (field inverse).
fn pow_scalar_i64<C: Coeff>(base: &C, e: i64) -> C {
    if e >= 0 {
        pow_scalar(base, e as usize)
    } else {
        pow_scalar(&base.inv(), (-e) as usize)
    }
}

/// Monic gcd via the subresultant polynomial remainder sequence.
///
/// Errors when both inputs are zero.
pub fn poly_gcd<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Result<Poly<C>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("poly_gcd: both inputs are zero"));
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        let one = a.lc().one();
        return Ok(Poly::constant(one));
    }
    let (mut f, mut g) = if a.deg() >= b.deg() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    f = Poly::from_coeffs(C::clear_denominators(f.coeffs()));
    g = Poly::from_coeffs(C::clear_denominators(g.coeffs()));

    let mut gi = f.lc().one();
    let mut h = f.lc().one();
    loop {
        let delta = f.deg() - g.deg();
        let r = pseudo_rem(&f, &g);
        if r.is_zero() {
            return Ok(g.monic());
        }
        if r.is_constant() {
            return Ok(Poly::constant(f.lc().one()));
        }
        // divide out the subresultant factor g * h^delta
        let scale = gi.mul(&pow_scalar(&h, delta)).inv();
        f = g;
        g = Poly::from_coeffs(C::clear_denominators(r.mul_scalar(&scale).coeffs()));
        gi = f.lc().clone();
        h = if delta == 0 {
            h
        } else {
            // h := g^delta / h^(delta-1)
            pow_scalar(&gi, delta).mul(&pow_scalar_i64(&h, 1 - delta as i64))
        };
    }
}

/// Extended gcd over a coefficient field: returns `(g, s, t)` with
/// `g = s*a + t*b`, `g` monic. Plain Euclid; used for small degrees only
/// (number-field inverses).
pub fn poly_egcd<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Result<(Poly<C>, Poly<C>, Poly<C>)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("poly_egcd: both inputs are zero"));
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let sample = if a.is_zero() { b.lc() } else { a.lc() };
    let one = Poly::constant(sample.one());
    let (mut old_s, mut s) = (one.clone(), Poly::zero());
    let (mut old_t, mut t) = (Poly::zero(), one);
    while !r.is_zero() {
        let (q, rem) = old_r.divrem(&r)?;
        old_r = std::mem::replace(&mut r, rem);
        let next_s = old_s.sub(&q.mul(&s));
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t.sub(&q.mul(&t));
        old_t = std::mem::replace(&mut t, next_t);
    }
    // normalize monic
    let lc = old_r.lc().clone();
    let inv = lc.inv();
    Ok((
        old_r.mul_scalar(&inv),
        old_s.mul_scalar(&inv),
        old_t.mul_scalar(&inv),
    ))
}

/// Resultant of two nonzero polynomials.
///
/// Walks the subresultant remainder sequence, carrying the exact
/// transformation factor of the resultant across each pseudo-division:
/// for `R' = prem(A, B) / beta`,
/// `res(A, B) = (-1)^(dA dB) * beta^(dB) * lc(B)^(dA - (delta+1) dB - dR') * res(B, R')`.
pub fn resultant<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Result<C> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::domain("resultant: zero input"));
    }
    let one = a.lc().one();
    let mut acc = one.clone();
    let mut f = Poly::from_coeffs(C::clear_denominators(a.coeffs()));
    let mut g = Poly::from_coeffs(C::clear_denominators(b.coeffs()));
    // account for the clearing scale: res(cA, B) = c^(dB) res(A, B)
    // clearing multiplies A by some scalar; undo it at the end
    let scale_a = f.lc().div(a.lc());
    let scale_b = g.lc().div(b.lc());
    let correction = pow_scalar(&scale_a, b.deg()).mul(&pow_scalar(&scale_b, a.deg()));
    if f.deg() < g.deg() {
        if f.deg() % 2 == 1 && g.deg() % 2 == 1 {
            acc = acc.neg();
        }
        std::mem::swap(&mut f, &mut g);
    }

    loop {
        if g.is_constant() {
            acc = acc.mul(&pow_scalar(g.lc(), f.deg()));
            break;
        }
        let da = f.deg();
        let db = g.deg();
        let (r, k) = pseudo_rem_counted(&f, &g);
        if r.is_zero() {
            return Ok(one.zero());
        }
        // With R = lc(g)^k * (f mod g):
        //   res(f,g) = (-1)^(da db) lc(g)^(da - dR - k db) res(g, R)
        let dr = r.deg();
        let exp: i64 = da as i64 - dr as i64 - (k as i64) * db as i64;
        let mut step = pow_scalar_i64(g.lc(), exp);
        if da % 2 == 1 && db % 2 == 1 {
            step = step.neg();
        }
        acc = acc.mul(&step);
        // rescale R for growth control; res(g, c*R) = c^(deg g) res(g, R)
        let r_clean = Poly::from_coeffs(C::clear_denominators(r.coeffs()));
        let c = r_clean.lc().div(r.lc());
        acc = acc.mul(&pow_scalar_i64(&c, -(db as i64)));
        f = g;
        g = r_clean;
    }
    Ok(acc.mul(&correction.inv()))
}
