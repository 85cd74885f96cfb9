//! Fast polynomial arithmetic and factorization over GF(p) for word-sized p.
//!
//! Polynomials are `Vec<u64>` in ascending degree order with no trailing
//! zeros; all arithmetic is carried out through u128 intermediates. This is
//! the hot loop of rational factorization, so it stays on machine words; the
//! `PrimeFieldElement`-based public surface converts in and out.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type GfpPoly = Vec<u64>;

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

pub fn normalize(v: &mut GfpPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn deg(v: &GfpPoly) -> isize {
    v.len() as isize - 1
}

pub fn is_zero(v: &GfpPoly) -> bool {
    v.is_empty()
}

pub fn add(a: &GfpPoly, b: &GfpPoly, p: u64) -> GfpPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = addm(x, y, p);
    }
    normalize(&mut out);
    out
}

pub fn sub(a: &GfpPoly, b: &GfpPoly, p: u64) -> GfpPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = subm(x, y, p);
    }
    normalize(&mut out);
    out
}

pub fn mul(a: &GfpPoly, b: &GfpPoly, p: u64) -> GfpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            out[i + j] = (out[i + j] + ((x as u128 * y as u128) % p as u128) as u64) % p;
        }
    }
    normalize(&mut out);
    out
}

pub fn mul_scalar(a: &GfpPoly, c: u64, p: u64) -> GfpPoly {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| mulm(x, c, p)).collect()
}

pub fn make_monic(a: &GfpPoly, p: u64) -> GfpPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let lc = *a.last().unwrap();
    if lc == 1 {
        return a.clone();
    }
    mul_scalar(a, invm(lc, p), p)
}

/// Division with remainder; divisor must be nonzero.
pub fn divrem(a: &GfpPoly, b: &GfpPoly, p: u64) -> (GfpPoly, GfpPoly) {
    assert!(!b.is_empty(), "gfp division by zero");
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let mut rem = a.clone();
    let dq = a.len() - b.len();
    let mut quot = vec![0u64; dq + 1];
    let lb_inv = invm(*b.last().unwrap(), p);
    for k in (0..=dq).rev() {
        let idx = k + b.len() - 1;
        let top = rem[idx];
        if top == 0 {
            continue;
        }
        let q = mulm(top, lb_inv, p);
        quot[k] = q;
        for (j, &bc) in b.iter().enumerate() {
            if bc != 0 {
                rem[k + j] = subm(rem[k + j], mulm(q, bc, p), p);
            }
        }
    }
    rem.truncate(b.len() - 1);
    normalize(&mut rem);
    normalize(&mut quot);
    (quot, rem)
}

pub fn rem(a: &GfpPoly, b: &GfpPoly, p: u64) -> GfpPoly {
    divrem(a, b, p).1
}

pub fn gcd(a: &GfpPoly, b: &GfpPoly, p: u64) -> GfpPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(&x, p)
}

pub fn derivative(a: &GfpPoly, p: u64) -> GfpPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (i, &c) in a.iter().enumerate().skip(1) {
        out.push(mulm(c, (i as u64) % p, p));
    }
    normalize(&mut out);
    out
}

/// `g^e mod f`
pub fn powmod(g: &GfpPoly, mut e: u128, f: &GfpPoly, p: u64) -> GfpPoly {
    let mut base = rem(g, f, p);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &base, p), f, p);
        }
        e >>= 1;
        if e > 0 {
            base = rem(&mul(&base, &base, p), f, p);
        }
    }
    acc
}

/// Squarefree decomposition over GF(p), including the p-th power descent
/// (`c^(1/p) = c` in GF(p)). Input monic nonzero.
pub fn squarefree_decomposition(f: &GfpPoly, p: u64) -> Vec<(GfpPoly, usize)> {
    fn go(f: &GfpPoly, p: u64, mult: usize, out: &mut Vec<(GfpPoly, usize)>) {
        if deg(f) < 1 {
            return;
        }
        let fd = derivative(f, p);
        if is_zero(&fd) {
            // f = g(x^p); over GF(p) the coefficients are their own p-th roots
            let mut g = Vec::new();
            let step = p as usize;
            let mut i = 0;
            while i < f.len() {
                g.push(f[i]);
                i += step;
            }
            normalize(&mut g);
            go(&g, p, mult * p as usize, out);
            return;
        }
        let a0 = gcd(f, &fd, p);
        let mut w = divrem(f, &a0, p).0;
        let mut rest = a0;
        // w holds each distinct factor once; peel multiplicities
        let mut i = 1usize;
        while deg(&w) >= 1 {
            let y = gcd(&w, &rest, p);
            let piece = divrem(&w, &y, p).0;
            if deg(&piece) >= 1 {
                merge(out, make_monic(&piece, p), mult * i);
            }
            w = y.clone();
            rest = divrem(&rest, &y, p).0;
            i += 1;
        }
        if deg(&rest) >= 1 {
            go(&rest, p, mult, out);
        }
    }
    fn merge(out: &mut Vec<(GfpPoly, usize)>, f: GfpPoly, m: usize) {
        if let Some(e) = out.iter_mut().find(|(g, _)| *g == f) {
            e.1 += m;
        } else {
            out.push((f, m));
        }
    }
    let mut out = Vec::new();
    go(&make_monic(f, p), p, 1, &mut out);
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial: returns
/// `(product of irreducible factors of degree d, d)` pairs, ascending in d.
pub fn distinct_degree(f: &GfpPoly, p: u64) -> Vec<(GfpPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = vec![0u64, 1];
    let mut h = x.clone(); // x^(p^i) mod f, starting at i = 0
    let mut d = 0usize;
    while deg(&f) >= 1 {
        d += 1;
        if (deg(&f) as usize) < 2 * d {
            // remainder is irreducible
            out.push((f.clone(), deg(&f) as usize));
            break;
        }
        h = powmod(&h, p as u128, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if deg(&g) >= 1 {
            out.push((g.clone(), d));
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product
/// of irreducibles all of degree `d`.
pub fn equal_degree(f: &GfpPoly, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<GfpPoly> {
    let n = deg(f) as usize;
    if n == d {
        return vec![f.clone()];
    }
    let split = loop {
        let r: GfpPoly = {
            let mut v: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
            v.push(1);
            normalize(&mut v);
            v
        };
        let g = gcd(&r, f, p);
        if deg(&g) >= 1 && (deg(&g) as usize) < n {
            break g;
        }
        let h = if p == 2 {
            // trace map of GF(2^d) over GF(2): r + r^2 + ... + r^(2^(d-1))
            let mut acc = Vec::new();
            let mut t = rem(&r, f, p);
            for _ in 0..d {
                acc = add(&acc, &t, p);
                t = rem(&mul(&t, &t, p), f, p);
            }
            acc
        } else {
            // r^((p^d - 1)/2) - 1
            let e = ((p as u128).pow(d as u32) - 1) / 2;
            let t = powmod(&r, e, f, p);
            sub(&t, &vec![1u64], p)
        };
        if is_zero(&h) {
            continue;
        }
        let g = gcd(&h, f, p);
        if deg(&g) >= 1 && (deg(&g) as usize) < n {
            break g;
        }
    };
    let rest = divrem(f, &split, p).0;
    let mut out = equal_degree(&split, d, p, rng);
    out.extend(equal_degree(&rest, d, p, rng));
    out
}

/// Complete factorization over GF(p); monic irreducible factors with
/// multiplicities, deterministically ordered. `seed` fixes the pseudorandom
/// stream of the equal-degree splitting.
pub fn factor(f: &GfpPoly, p: u64, seed: u64) -> Vec<(GfpPoly, usize)> {
    assert!(!f.is_empty(), "factor of zero polynomial over GF(p)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(GfpPoly, usize)> = Vec::new();
    for (sq, mult) in squarefree_decomposition(f, p) {
        for (prod, d) in distinct_degree(&sq, p) {
            for piece in equal_degree(&prod, d, p, &mut rng) {
                out.push((make_monic(&piece, p), mult));
            }
        }
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| {
        for (x, y) in a.0.iter().rev().zip(b.0.iter().rev()) {
            match x.cmp(y) {
                std::cmp::Ordering::Equal => {}
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }));
    out
}

/// Deterministic seed derived from the polynomial and modulus.
pub fn derive_seed(f: &GfpPoly, p: u64) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut mix = |v: u64| {
        h ^= v;
        h = h.wrapping_mul(0x100000001b3);
    };
    mix(p);
    for &c in f {
        mix(c);
    }
    h
}

/// Roots of `f` in GF(p) (without multiplicity).
pub fn roots(f: &GfpPoly, p: u64, seed: u64) -> Vec<u64> {
    let mut out: Vec<u64> = factor(f, p, seed)
        .into_iter()
        .filter(|(g, _)| g.len() == 2)
        .map(|(g, _)| subm(0, g[0], p))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
