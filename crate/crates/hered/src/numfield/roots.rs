//! Root extraction in number fields: n-th roots of elements, the torsion
//! group (roots of unity), and root-of-unity detection.
//!
//! Solvability of `x^p = a` is decided exactly. Cheap filters run first: the
//! field norm of a p-th power must be a rational p-th power (up to sign),
//! and reduction at split primes `q = 1 (mod p)` disproves membership in
//! `K^p` whenever the residue fails the power test. Only when every filter
//! stays silent does the engine factor `x^p - a` to exhibit the roots.

use super::{binomial_poly, factor::roots_in_field, FieldOps, FieldRef, NFElement};
use crate::arith::{exact_rational_nth_root, int, prime_divisors, BigRational};
use crate::error::Result;
use crate::poly::{Coeff, QPoly};
use crate::qfactor::{cyclotomic_index_of_irreducible, cyclotomic_poly, gfp};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::HashMap;

/// The finite group of roots of unity of a number field.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionGroup {
    pub order: u64,
    pub generator: NFElement,
}

impl TorsionGroup {
    /// All roots of unity in the field, as powers of the generator.
    pub fn elements(&self) -> Vec<NFElement> {
        (0..self.order).map(|j| self.generator.pow(j)).collect()
    }
}

/// Number of reduction tests before falling back to exact factorization.
const MOD_FILTER_ROUNDS: usize = 24;

/// Memo for p-th root computations within one logical operation.
pub type RootCache = HashMap<(String, u64), Vec<NFElement>>;

/// All `b` in the field with `b^n = a`. The list may be empty; its length
/// never exceeds `n`.
pub fn nth_roots(a: &NFElement, n: u64) -> Result<Vec<NFElement>> {
    let mut cache = RootCache::new();
    nth_roots_cached(a, n, &mut cache)
}

/// `nth_roots` with an external memo, for callers probing many exponents of
/// the same element.
pub fn nth_roots_cached(a: &NFElement, n: u64, cache: &mut RootCache) -> Result<Vec<NFElement>> {
    assert!(n >= 1, "nth_roots: n must be >= 1");
    if a.is_zero_elt() {
        return Ok(vec![a.clone()]);
    }
    if n == 1 {
        return Ok(vec![a.clone()]);
    }
    let ps = prime_divisors(n);
    let p = ps[0];
    let mut out: Vec<NFElement> = Vec::new();
    for r in pth_roots_cached(a, p, cache)? {
        for b in nth_roots_cached(&r, n / p, cache)? {
            if !out.contains(&b) {
                out.push(b);
            }
        }
    }
    out.sort_by(|x, y| x.cmp_key(y));
    debug_assert!(out.iter().all(|b| b.pow(n) == *a));
    debug_assert!(out.len() as u64 <= n);
    Ok(out)
}

fn pth_roots_cached(a: &NFElement, p: u64, cache: &mut RootCache) -> Result<Vec<NFElement>> {
    let key = (a.to_canonical_string(), p);
    if let Some(hit) = cache.get(&key) {
        return Ok(hit.clone());
    }
    let result = pth_roots(a, p)?;
    cache.insert(key, result.clone());
    Ok(result)
}

/// All p-th roots of a nonzero element, `p` prime.
fn pth_roots(a: &NFElement, p: u64) -> Result<Vec<NFElement>> {
    let field = a.field().clone();
    // rationals: integer root extraction on numerator and denominator
    if field.is_rationals() {
        let q = a.as_rational().expect("element of Q");
        let mut out = Vec::new();
        if let Some(r) = exact_rational_nth_root(&q, p as u32) {
            out.push(field.from_rational(r.clone()));
            if p % 2 == 0 && !Zero::is_zero(&r) {
                out.push(field.from_rational(-r));
            }
        }
        out.sort_by(|x, y| x.cmp_key(y));
        return Ok(out);
    }
    // norm filter: N(b)^p = N(a), so |N(a)| must be a rational p-th power,
    // nonnegative when p is even
    let nu = a.norm();
    if p % 2 == 0 && nu.is_negative() {
        return Ok(Vec::new());
    }
    if exact_rational_nth_root(&nu.abs(), p as u32).is_none() {
        return Ok(Vec::new());
    }
    // reduction filter at split primes q = 1 (mod p)
    if definitely_not_pth_power(a, p)? {
        return Ok(Vec::new());
    }
    // exact decision: linear factors of x^p - a
    let poly = binomial_poly(a, p);
    roots_in_field(&poly, usize::MAX)
}

/// Attempt to disprove `a` being a p-th power by reduction at rational
/// primes `q = 1 (mod p)` where the field modulus has a simple root. A
/// `true` result is a proof; `false` is inconclusive.
fn definitely_not_pth_power(a: &NFElement, p: u64) -> Result<bool> {
    let field = a.field();
    let m = field.modulus();
    // denominators to avoid
    let mut bad = int(1);
    for c in a.repr().coeffs() {
        bad *= c.denom();
    }
    for c in m.coeffs() {
        bad *= c.denom();
    }
    let mut tested = 0usize;
    let mut q = 1u64;
    let mut guard = 0usize;
    while tested < MOD_FILTER_ROUNDS {
        guard += 1;
        if guard > 20_000 {
            break;
        }
        q += p; // keep q = 1 (mod p)
        if q < 3 || !crate::arith::is_prime(&int(q as i64)) {
            continue;
        }
        if (&bad % int(q as i64)).is_zero() {
            continue;
        }
        // reduce the modulus mod q; require full degree and squarefree
        let mq = reduce_qpoly_mod(m, q);
        if mq.len() != m.deg() + 1 {
            continue;
        }
        let der = gfp::derivative(&mq, q);
        if gfp::is_zero(&der) || gfp::deg(&gfp::gcd(&mq, &der, q)) > 0 {
            continue;
        }
        let root_list = gfp::roots(&mq, q, gfp::derive_seed(&mq, q));
        if root_list.is_empty() {
            continue;
        }
        let mut used = false;
        for r in root_list {
            // image of a at the degree-one prime over q
            let aq = eval_qpoly_mod(a.repr(), r, q);
            if aq == 0 {
                continue;
            }
            used = true;
            if gfp::powm(aq, (q - 1) / p, q) != 1 {
                return Ok(true);
            }
        }
        if used {
            tested += 1;
        }
    }
    Ok(false)
}

fn reduce_qpoly_mod(f: &QPoly, q: u64) -> gfp::GfpPoly {
    let bq = int(q as i64);
    let mut out: gfp::GfpPoly = f
        .coeffs()
        .iter()
        .map(|c| {
            let num = ((c.numer() % &bq) + &bq) % &bq;
            let den = ((c.denom() % &bq) + &bq) % &bq;
            let num = num.to_u64().unwrap();
            let den = den.to_u64().unwrap();
            if num == 0 {
                0
            } else {
                (num as u128 * gfp::invm(den, q) as u128 % q as u128) as u64
            }
        })
        .collect();
    gfp::normalize(&mut out);
    out
}

fn eval_qpoly_mod(f: &QPoly, x: u64, q: u64) -> u64 {
    let fq = reduce_qpoly_mod(f, q);
    let mut acc = 0u64;
    for c in fq.iter().rev() {
        acc = (acc as u128 * x as u128 % q as u128) as u64;
        acc = (acc + c) % q;
    }
    acc
}

/// The full torsion group of the field.
///
/// Enumerates `k` with `phi(k) <= d` and `k <= 2 d^2 + 1` (sufficient since
/// `phi(k) >= sqrt(k/2)`) and tests whether the k-th cyclotomic polynomial
/// has a root in the field. Memoized per field.
pub fn torsion_units(field: &FieldRef) -> Result<TorsionGroup> {
    if let Some((order, repr)) = field.torsion_cache().get() {
        return Ok(TorsionGroup {
            order: *order,
            generator: field.element(repr.clone()),
        });
    }
    let d = field.degree() as u64;
    let bound = 2 * d * d + 1;
    let mut best_k = 2u64;
    let mut best_root = field.from_int(-1);
    for k in 3..=bound {
        let phi = crate::arith::euler_phi(k);
        if phi > d || d % phi != 0 {
            continue;
        }
        let phi_k = cyclotomic_poly(k);
        let phi_k_nf = field.embed_qpoly(&phi_k);
        let roots = roots_in_field(&phi_k_nf, usize::MAX)?;
        if let Some(zeta) = roots.into_iter().next() {
            if k > best_k {
                best_k = k;
                best_root = zeta;
            }
        }
    }
    let group = TorsionGroup {
        order: best_k,
        generator: best_root,
    };
    debug_assert!(Coeff::is_one(&group.generator.pow(group.order)));
    let _ = field
        .torsion_cache()
        .set((group.order, group.generator.repr().clone()));
    Ok(group)
}

/// Decide whether `x^n = a` is solvable in the field.
///
/// Runs the norm and reduction filters for the full exponent `n` first;
/// these settle membership negatively without constructing any intermediate
/// root. Only when both stay silent does the exact root chain run.
pub fn has_nth_root(a: &NFElement, n: u64, cache: &mut RootCache) -> Result<bool> {
    assert!(n >= 1);
    if n == 1 || a.is_zero_elt() {
        return Ok(true);
    }
    let field = a.field();
    if field.is_rationals() {
        let q = a.as_rational().expect("element of Q");
        if n % 2 == 0 && q.is_negative() {
            return Ok(false);
        }
        return Ok(exact_rational_nth_root(&q, n as u32).is_some());
    }
    let nu = a.norm();
    if n % 2 == 0 && nu.is_negative() {
        return Ok(false);
    }
    if exact_rational_nth_root(&nu.abs(), n as u32).is_none() {
        return Ok(false);
    }
    if definitely_not_pth_power(a, n)? {
        return Ok(false);
    }
    Ok(!nth_roots_cached(a, n, cache)?.is_empty())
}

/// Multiplicative order of the element when it is a root of unity.
pub fn is_root_of_unity(a: &NFElement) -> Result<Option<u64>> {
    if a.is_zero_elt() {
        return Err(crate::error::Error::domain(
            "is_root_of_unity: zero element",
        ));
    }
    if Coeff::is_one(a) {
        return Ok(Some(1));
    }
    if let Some(q) = a.as_rational() {
        return Ok(if q == -<BigRational as num_traits::One>::one() {
            Some(2)
        } else {
            None
        });
    }
    let mp = a.min_poly();
    Ok(cyclotomic_index_of_irreducible(&mp).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;
    use crate::poly::QPoly;

    fn sqrt2_field() -> FieldRef {
        NumberField::new(QPoly::from_int_coeffs(&[-2, 0, 1]), "Q(sqrt2)").unwrap()
    }

    fn gaussian() -> FieldRef {
        NumberField::new(QPoly::from_int_coeffs(&[1, 0, 1]), "Q(i)").unwrap()
    }

    fn quartic_root2() -> FieldRef {
        NumberField::new(QPoly::from_int_coeffs(&[-2, 0, 0, 0, 1]), "Q(2^(1/4))").unwrap()
    }

    #[test]
    fn square_roots_of_two_in_sqrt2() {
        let k = sqrt2_field();
        let roots = nth_roots(&k.from_int(2), 2).unwrap();
        let s = k.generator();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&s));
        assert!(roots.contains(&Coeff::neg(&s)));
        for b in &roots {
            assert_eq!(b.pow(2), k.from_int(2));
        }
    }

    #[test]
    fn minus_four_has_no_square_root_in_q() {
        let q = NumberField::rationals();
        assert!(nth_roots(&q.from_int(-4), 2).unwrap().is_empty());
    }

    #[test]
    fn fourth_roots_of_sixteen_in_q() {
        let q = NumberField::rationals();
        let roots = nth_roots(&q.from_int(16), 4).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&q.from_int(2)));
        assert!(roots.contains(&q.from_int(-2)));
    }

    #[test]
    fn root_count_never_exceeds_n() {
        let k = gaussian();
        // fourth roots of 1 in Q(i): 1, -1, i, -i
        let roots = nth_roots(&k.one(), 4).unwrap();
        assert_eq!(roots.len(), 4);
        for b in &roots {
            assert!(Coeff::is_one(&b.pow(4)));
        }
    }

    #[test]
    fn torsion_groups() {
        let q = NumberField::rationals();
        let t = torsion_units(&q).unwrap();
        assert_eq!(t.order, 2);
        assert_eq!(t.generator, q.from_int(-1));

        let k = gaussian();
        let t = torsion_units(&k).unwrap();
        assert_eq!(t.order, 4);
        // generator is a primitive 4th root: i or -i
        assert!(Coeff::is_one(&t.generator.pow(4)));
        assert!(!Coeff::is_one(&t.generator.pow(2)));

        // the quartic field embeds in R, so only +-1
        let k = quartic_root2();
        let t = torsion_units(&k).unwrap();
        assert_eq!(t.order, 2);
    }

    #[test]
    fn torsion_generator_order_is_exact() {
        for field in [gaussian(), sqrt2_field()] {
            let t = torsion_units(&field).unwrap();
            assert!(Coeff::is_one(&t.generator.pow(t.order)));
            for j in 1..t.order {
                assert!(!Coeff::is_one(&t.generator.pow(j)));
            }
        }
    }

    #[test]
    fn root_of_unity_detection() {
        let k = gaussian();
        assert_eq!(is_root_of_unity(&k.from_int(-1)).unwrap(), Some(2));
        assert_eq!(is_root_of_unity(&k.generator()).unwrap(), Some(4));
        assert_eq!(is_root_of_unity(&k.from_int(2)).unwrap(), None);

        // 1 + sqrt2 is a unit but not torsion
        let k2 = sqrt2_field();
        let e = Coeff::add(&k2.one(), &k2.generator());
        assert_eq!(is_root_of_unity(&e).unwrap(), None);
        assert!(is_root_of_unity(&FieldOps::zero(&k2)).is_err());
    }

    #[test]
    fn tower_consistency_min_poly_divides_inflation() {
        // for every b with b^n = a: min_poly(b) divides inflate(min_poly(a), n)
        let cases: Vec<(FieldRef, i64, u64)> = vec![
            (sqrt2_field(), 2, 2),
            (gaussian(), -1, 2),
            (quartic_root2(), 2, 4),
        ];
        for (k, a_int, n) in cases {
            let a = k.from_int(a_int);
            for b in nth_roots(&a, n).unwrap() {
                let mp_b = b.min_poly();
                let infl = a.min_poly().inflate(n).unwrap();
                assert!(
                    mp_b.divides(&infl),
                    "min poly {mp_b} does not divide {infl}"
                );
            }
        }
    }

    #[test]
    fn unit_that_is_a_square_is_found() {
        // 3 + 2 sqrt2 = (1 + sqrt2)^2
        let k = sqrt2_field();
        let s = k.generator();
        let e = Coeff::add(&k.from_int(3), &Coeff::mul(&k.from_int(2), &s));
        let roots = nth_roots(&e, 2).unwrap();
        assert_eq!(roots.len(), 2);
        let one_plus = Coeff::add(&k.one(), &s);
        assert!(roots.contains(&one_plus));
    }

    #[test]
    fn norm_filter_blocks_fast() {
        // 61st roots of a generic element: norm filter answers immediately
        let k = quartic_root2();
        let a = Coeff::add(&k.from_int(17), &k.generator());
        assert!(nth_roots(&a, 61).unwrap().is_empty());
    }
}
