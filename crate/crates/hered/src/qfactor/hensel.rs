//! Quadratic Hensel lifting of modular factorizations.
//!
//! Works on `Vec<BigInt>` polynomials with coefficients reduced into
//! `[0, m)`. The multifactor lift splits the factor list in half, lifts the
//! pair of half-products, and recurses; each pair step doubles the modulus.

use crate::arith::{gcd_ext, BigInt};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn znormalize(v: &mut ZPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub fn zreduce(v: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|c| {
            let mut r = c % m;
            if r.is_negative() {
                r += m;
            }
            r
        })
        .collect();
    znormalize(&mut out);
    out
}

/// Reduce into the symmetric range `(-m/2, m/2]`.
pub fn zreduce_symmetric(v: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: Vec<BigInt> = zreduce(v, m)
        .into_iter()
        .map(|c| if c > half { c - m } else { c })
        .collect();
    znormalize(&mut out);
    out
}

pub fn zadd(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push((x + y) % m);
    }
    zreduce(&out, m)
}

pub fn zsub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push((x - y) % m);
    }
    zreduce(&out, m)
}

pub fn zmul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = (&out[i + j] + x * y) % m;
        }
    }
    zreduce(&out, m)
}

pub fn zmul_scalar(a: &[BigInt], c: &BigInt, m: &BigInt) -> ZPoly {
    zreduce(
        &a.iter().map(|x| x * c).collect::<Vec<_>>(),
        m,
    )
}

/// Division with remainder by a monic divisor over Z/m.
pub fn zdivrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    assert!(b.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let mut rem: Vec<BigInt> = a.to_vec();
    znormalize(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), zreduce(&rem, m));
    }
    let dq = rem.len() - b.len();
    let mut quot = vec![BigInt::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let idx = k + b.len() - 1;
        let top = rem[idx].clone() % m;
        if top.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                rem[k + j] = (&rem[k + j] - &top * bc) % m;
            }
        }
        quot[k] = top;
    }
    rem.truncate(b.len() - 1);
    (zreduce(&quot, m), zreduce(&rem, m))
}

fn modinv(a: &BigInt, m: &BigInt) -> Result<BigInt> {
    let (g, x, _) = gcd_ext(a, m)?;
    if !g.is_one() {
        return Err(Error::internal(format!("{a} is not invertible mod {m}")));
    }
    let mut r = x % m;
    if r.is_negative() {
        r += m;
    }
    Ok(r)
}

/// Extended gcd of two coprime monic-compatible polynomials over GF(p):
/// returns `(s, t)` with `s*g + t*h = 1 (mod p)`.
fn bezout_mod_p(g: &[BigInt], h: &[BigInt], p: &BigInt) -> Result<(ZPoly, ZPoly)> {
    let (mut old_r, mut r) = (zreduce(g, p), zreduce(h, p));
    let (mut old_s, mut s) = (vec![BigInt::one()], Vec::new());
    let (mut old_t, mut t) = (Vec::new(), vec![BigInt::one()]);
    while !r.is_empty() {
        let lc_inv = modinv(r.last().unwrap(), p)?;
        let r_monic = zmul_scalar(&r, &lc_inv, p);
        let (q_monic, rem) = zdivrem_monic(&old_r, &r_monic, p);
        let q = zmul_scalar(&q_monic, &lc_inv, p);
        old_r = std::mem::replace(&mut r, rem);
        let next_s = zsub(&old_s, &zmul(&q, &s, p), p);
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = zsub(&old_t, &zmul(&q, &t, p), p);
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.len() != 1 {
        return Err(Error::BadPrime {
            prime: 0,
            reason: "modular factors are not coprime".into(),
        });
    }
    let c = modinv(&old_r[0], p)?;
    Ok((zmul_scalar(&old_s, &c, p), zmul_scalar(&old_t, &c, p)))
}

/// One quadratic Hensel step: given monic `f mod m^2`, monic `g, h` with
/// `f = g h (mod m)` and `s g + t h = 1 (mod m)`, returns `(g*, h*, s*, t*)`
/// satisfying the same relations mod `m^2`.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    // factor update
    let e = zsub(f, &zmul(g, h, m2), m2);
    let (q, r) = zdivrem_monic(&zmul(s, &e, m2), h, m2);
    let g_new = zadd(&zadd(g, &zmul(t, &e, m2), m2), &zmul(&q, g, m2), m2);
    let h_new = zadd(h, &r, m2);
    // Bezout update
    let b = zsub(
        &zadd(&zmul(s, &g_new, m2), &zmul(t, &h_new, m2), m2),
        &[BigInt::one()],
        m2,
    );
    let (c, d) = zdivrem_monic(&zmul(s, &b, m2), &h_new, m2);
    let s_new = zsub(s, &d, m2);
    let t_new = zsub(
        &zsub(t, &zmul(t, &b, m2), m2),
        &zmul(&c, &g_new, m2),
        m2,
    );
    (g_new, h_new, s_new, t_new)
}

/// Lift a pairwise factorization `f = prod(factors) (mod p)` of a monic `f`
/// to modulus `p^k`. All factors must be monic and pairwise coprime mod `p`;
/// `f_int` is the integer polynomial being factored (monic mod p^k sense).
///
/// Returns monic factors mod `p^k` whose product is `f_int mod p^k` and that
/// reduce to the inputs mod `p`.
pub fn lift_factorization(
    f_int: &[BigInt],
    factors: &[ZPoly],
    p: &BigInt,
    k: u32,
) -> Result<Vec<ZPoly>> {
    let pk = num_traits::pow::pow(p.clone(), k as usize);
    // sanity: product must match mod p
    let mut prod = vec![BigInt::one()];
    for g in factors {
        if !g.last().is_some_and(|c| c.is_one()) {
            return Err(Error::domain("hensel lift: factors must be monic"));
        }
        prod = zmul(&prod, g, p);
    }
    if prod != zreduce(f_int, p) {
        return Err(Error::domain(
            "hensel lift: factor product does not match input mod p",
        ));
    }
    if k <= 1 {
        return Ok(factors.to_vec());
    }
    fn go(
        f: &[BigInt],
        factors: &[ZPoly],
        p: &BigInt,
        pk: &BigInt,
        k: u32,
    ) -> Result<Vec<ZPoly>> {
        if factors.len() == 1 {
            return Ok(vec![zreduce(f, pk)]);
        }
        let mid = factors.len() / 2;
        let (left, right) = factors.split_at(mid);
        let mut g = vec![BigInt::one()];
        for q in left {
            g = zmul(&g, q, p);
        }
        let mut h = vec![BigInt::one()];
        for q in right {
            h = zmul(&h, q, p);
        }
        let (mut s, mut t) = bezout_mod_p(&g, &h, p)?;
        // double the exponent, capping at k so every working modulus
        // divides p^k (f is only known mod p^k)
        let mut a = 1u32;
        while a < k {
            let a2 = (2 * a).min(k);
            let m2 = num_traits::pow::pow(p.clone(), a2 as usize);
            let f_red = zreduce(f, &m2);
            let (g2, h2, s2, t2) = hensel_step(&f_red, &g, &h, &s, &t, &m2);
            g = g2;
            h = h2;
            s = s2;
            t = t2;
            a = a2;
        }
        g = zreduce(&g, pk);
        h = zreduce(&h, pk);
        let mut out = go(&g, left, p, pk, k)?;
        out.extend(go(&h, right, p, pk, k)?);
        Ok(out)
    }
    let f_red = zreduce(f_int, &pk);
    go(&f_red, factors, p, &pk, k)
}
