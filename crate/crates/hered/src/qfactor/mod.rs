//! Complete factorization of univariate polynomials over Q, plus Eisenstein
//! certification and cyclotomic recognition.
//!
//! The engine is classical Zassenhaus: squarefree split (Yun), reduction
//! modulo a deterministically chosen good prime, Cantor-Zassenhaus modular
//! factorization, quadratic Hensel lifting past twice the Mignotte bound,
//! and subset recombination with degree-set and trailing-coefficient
//! pruning. Worst-case recombination is exponential; a configurable budget
//! turns pathological inputs into a resource error instead of a hang.

pub mod gfp;
pub mod hensel;

use crate::arith::{
    factor_integer, int, is_prime, BigInt, BigRational, PrimeFieldElement,
};
use crate::error::{Error, Result};
use crate::poly::{squarefree::squarefree_decomposition, Coeff, FpPoly, Poly, QPoly};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Budget for recombination candidates before giving up with a resource
/// error. The instances this crate targets stay far below it.
const SUBSET_BUDGET: u64 = 1 << 22;

/// How many good primes to probe for degree-set pruning.
const DEGREE_PROBE_PRIMES: usize = 4;

/// A complete factorization over a coefficient field.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization<C: Coeff> {
    /// Scalar unit: the input equals `unit * prod(factor^multiplicity)`.
    pub unit: C,
    /// Monic irreducible factors with multiplicities, deterministically
    /// ordered by (degree, coefficient order).
    pub factors: Vec<(Poly<C>, u32)>,
}

impl<C: Coeff> Factorization<C> {
    /// Re-multiply the factorization.
    pub fn product(&self) -> Poly<C> {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, m)| f.deg() * *m as usize)
            .sum()
    }

    pub fn sort(&mut self) {
        self.factors.sort_by(|a, b| a.0.cmp_key(&b.0));
    }
}

/// Witness that `P(x + shift)` satisfies Eisenstein's criterion at `prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinWitness {
    pub prime: BigInt,
    pub shift: i64,
}

impl EisensteinWitness {
    /// Independent re-check of the witness against a polynomial.
    pub fn verify(&self, p: &QPoly) -> bool {
        if !p.is_integral() || p.is_constant() {
            return false;
        }
        let shifted = p.shift(&BigRational::from_integer(int(self.shift)));
        let coeffs = shifted.to_bigint_coeffs();
        let n = coeffs.len() - 1;
        if (&coeffs[n] % &self.prime).is_zero() {
            return false;
        }
        for c in &coeffs[..n] {
            if !(c % &self.prime).is_zero() {
                return false;
            }
        }
        !(&coeffs[0] % (&self.prime * &self.prime)).is_zero()
    }
}

/// Result of cyclotomic recognition: `k` such that the input equals the
/// k-th cyclotomic polynomial, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclotomicIndex(pub Option<u64>);

/// The k-th cyclotomic polynomial, by recursive division of `x^k - 1` by
/// the cyclotomic polynomials of the proper divisors of `k`.
pub fn cyclotomic_poly(k: u64) -> QPoly {
    assert!(k >= 1);
    if k == 1 {
        return QPoly::from_int_coeffs(&[-1, 1]);
    }
    let mut result = QPoly::binomial(k as usize, <BigRational as One>::one());
    for d in crate::arith::divisors(k) {
        if d == k {
            continue;
        }
        result = result.exact_div(&cyclotomic_poly(d)).unwrap();
    }
    result
}

/// Recognize a monic irreducible rational polynomial as a cyclotomic
/// polynomial. Searches `k <= 2 deg^2 + 1` with `phi(k) = deg` (valid since
/// `phi(k) >= sqrt(k/2)`).
///
/// Errors when the input is not monic irreducible.
pub fn cyclotomic_index(p: &QPoly) -> Result<CyclotomicIndex> {
    if p.is_zero() || p.is_constant() || !p.is_monic() {
        return Err(Error::domain(
            "cyclotomic_index: input must be monic of positive degree",
        ));
    }
    if !factor_over_q(p)?.is_irreducible() {
        return Err(Error::domain("cyclotomic_index: input is reducible"));
    }
    Ok(cyclotomic_index_of_irreducible(p))
}

/// Same search without the irreducibility re-check, for callers that already
/// hold a certified irreducible polynomial.
pub fn cyclotomic_index_of_irreducible(p: &QPoly) -> CyclotomicIndex {
    let d = p.deg() as u64;
    for k in 1..=(2 * d * d + 1) {
        if crate::arith::euler_phi(k) != d {
            continue;
        }
        if cyclotomic_poly(k) == *p {
            return CyclotomicIndex(Some(k));
        }
    }
    CyclotomicIndex(None)
}

/// Search for an Eisenstein witness for `P(x + s)` with `s` ranging over
/// `0, 1, -1, 2, -2, ...` within `[-shift_bound, shift_bound]`.
///
/// Candidate primes are the prime divisors of the gcd of the non-leading
/// coefficients (a necessary condition), factored within the bounded
/// integer-factorization budget; the search is complete for desk-scale
/// coefficients and reported as bounded otherwise.
pub fn eisenstein_witness(p: &QPoly, shift_bound: i64) -> Result<Option<EisensteinWitness>> {
    if p.is_zero() || p.is_constant() {
        return Err(Error::domain(
            "eisenstein_witness: input must be nonconstant",
        ));
    }
    if !p.is_integral() {
        return Err(Error::domain(
            "eisenstein_witness: input must have integer coefficients",
        ));
    }
    let mut shifts = vec![0i64];
    for s in 1..=shift_bound {
        shifts.push(s);
        shifts.push(-s);
    }
    for s in shifts {
        let shifted = if s == 0 {
            p.clone()
        } else {
            p.shift(&BigRational::from_integer(int(s)))
        };
        let coeffs = shifted.to_bigint_coeffs();
        let n = coeffs.len() - 1;
        let mut g = BigInt::zero();
        for c in &coeffs[..n] {
            g = g.gcd(c);
        }
        if g <= BigInt::one() {
            continue;
        }
        let fac = factor_integer(&g)?;
        for (q, _) in fac.factors {
            if (&coeffs[n] % &q).is_zero() {
                continue;
            }
            if (&coeffs[0] % (&q * &q)).is_zero() {
                continue;
            }
            return Ok(Some(EisensteinWitness { prime: q, shift: s }));
        }
    }
    Ok(None)
}

/// Factor a nonzero polynomial over GF(p) into monic irreducibles.
///
/// The equal-degree splitting stream is seeded deterministically from the
/// input, so results are reproducible.
pub fn factor_mod_p(p_poly: &FpPoly) -> Result<Factorization<PrimeFieldElement>> {
    if p_poly.is_zero() {
        return Err(Error::domain("factor_mod_p: zero polynomial"));
    }
    let modulus = p_poly.lc().modulus().clone();
    let p = modulus
        .to_u64()
        .filter(|&p| p < (1 << 62))
        .ok_or_else(|| Error::resource("factor_mod_p: modulus exceeds machine range"))?;
    let f: gfp::GfpPoly = p_poly
        .coeffs()
        .iter()
        .map(|c| c.value().to_u64().unwrap())
        .collect();
    let seed = gfp::derive_seed(&f, p);
    let factors = gfp::factor(&f, p, seed);
    let unit = p_poly.lc().clone();
    let wrap = |g: &gfp::GfpPoly| -> FpPoly {
        Poly::from_coeffs(
            g.iter()
                .map(|&c| PrimeFieldElement::reduced(int(c as i64), modulus.clone()))
                .collect(),
        )
    };
    Ok(Factorization {
        unit,
        factors: factors.iter().map(|(g, m)| (wrap(g), *m as u32)).collect(),
    })
}

/// Lift a monic modular factorization of `P` from mod `p` to mod `p^k`.
///
/// `P` must have integer coefficients with `p` not dividing the leading
/// coefficient, be squarefree mod `p`, and equal (up to the leading unit)
/// the product of the given monic factors mod `p`. Returns monic factors
/// mod `p^k`; for non-monic `P` their product is the monic image of `P`.
pub fn hensel_lift(p_poly: &QPoly, factors: &[QPoly], p: u64, k: u32) -> Result<Vec<QPoly>> {
    if !p_poly.is_integral() {
        return Err(Error::domain("hensel_lift: integer coefficients required"));
    }
    if !is_prime(&int(p as i64)) {
        return Err(Error::domain(format!("hensel_lift: {p} is not prime")));
    }
    let fz = p_poly.to_bigint_coeffs();
    let lc = fz.last().ok_or_else(|| Error::domain("zero polynomial"))?;
    if (lc % int(p as i64)).is_zero() {
        return Err(Error::BadPrime {
            prime: p,
            reason: "p divides the leading coefficient".into(),
        });
    }
    // squarefree mod p check
    let pf: gfp::GfpPoly = fz
        .iter()
        .map(|c| {
            let mut r = c % int(p as i64);
            if r.is_negative() {
                r += int(p as i64);
            }
            r.to_u64().unwrap()
        })
        .collect();
    let mut pf = pf;
    gfp::normalize(&mut pf);
    let der = gfp::derivative(&pf, p);
    if gfp::is_zero(&der) || gfp::deg(&gfp::gcd(&pf, &der, p)) > 0 {
        return Err(Error::BadPrime {
            prime: p,
            reason: "input is not squarefree mod p".into(),
        });
    }
    let zfactors: Vec<hensel::ZPoly> = factors
        .iter()
        .map(|g| {
            if !g.is_monic() {
                return Err(Error::domain("hensel_lift: factors must be monic"));
            }
            Ok(hensel::zreduce(&g.to_bigint_coeffs(), &int(p as i64)))
        })
        .collect::<Result<_>>()?;
    // work with the monic image of P mod p^k
    let pk = num_traits::pow::pow(int(p as i64), k as usize);
    let (_, lc_inv, _) = crate::arith::gcd_ext(lc, &pk)?;
    let f_monic = hensel::zmul_scalar(&fz, &lc_inv, &pk);
    let lifted = hensel::lift_factorization(&f_monic, &zfactors, &int(p as i64), k)?;
    Ok(lifted
        .iter()
        .map(|g| QPoly::from_bigint_coeffs(g))
        .collect())
}

/// Complete, certified factorization over Q.
///
/// Deterministic given the input: prime selection takes the smallest good
/// prime `>= 5` and subsets are enumerated in a fixed order.
pub fn factor_over_q(p: &QPoly) -> Result<Factorization<BigRational>> {
    if p.is_zero() {
        return Err(Error::domain("factor_over_q: zero polynomial"));
    }
    let unit = p.lc().clone();
    let mut factors: Vec<(QPoly, u32)> = Vec::new();
    if p.is_constant() {
        return Ok(Factorization {
            unit,
            factors,
        });
    }
    let monic = p.monic();
    // powers of x split off first so constant terms are nonzero downstream
    let x_mult = monic
        .coeffs()
        .iter()
        .take_while(|c| Coeff::is_zero(*c))
        .count();
    let mut body = monic;
    if x_mult > 0 {
        let coeffs = body.coeffs()[x_mult..].to_vec();
        body = QPoly::from_coeffs(coeffs);
        factors.push((QPoly::from_int_coeffs(&[0, 1]), x_mult as u32));
    }
    if !body.is_constant() {
        for (sq, mult) in squarefree_decomposition(&body)? {
            let prim = sq.primitive_part();
            for g in factor_squarefree_primitive(&prim)? {
                factors.push((g, mult as u32));
            }
        }
    }
    let mut out = Factorization { unit, factors };
    out.sort();
    debug_assert_eq!(out.product(), *p);
    Ok(out)
}

/// True when the polynomial is irreducible over Q (degree >= 1).
pub fn is_irreducible_over_q(p: &QPoly) -> Result<bool> {
    if p.is_zero() || p.is_constant() {
        return Ok(false);
    }
    Ok(factor_over_q(p)?.is_irreducible())
}

/// Zassenhaus core: factor a primitive squarefree integer polynomial with
/// positive leading coefficient into monic irreducible rational polynomials.
fn factor_squarefree_primitive(f: &QPoly) -> Result<Vec<QPoly>> {
    debug_assert!(f.is_integral());
    let n = f.deg();
    if n == 1 {
        return Ok(vec![f.monic()]);
    }
    if eisenstein_shift0(f)? {
        return Ok(vec![f.monic()]);
    }
    let fz = f.to_bigint_coeffs();
    let lc = fz.last().unwrap().clone();

    // deterministic prime selection: smallest p >= 5 with p coprime to lc
    // and f squarefree mod p; a few more good primes are probed for
    // degree-set pruning
    let mut chosen: Option<(u64, Vec<gfp::GfpPoly>)> = None;
    let mut feasible = vec![true; n + 1];
    let mut probes = 0usize;
    let mut p_candidate = 5u64;
    while probes < DEGREE_PROBE_PRIMES {
        let p = p_candidate;
        p_candidate = crate::arith::next_prime(&int(p as i64)).to_u64().unwrap();
        if p > 100_000 {
            break;
        }
        if !is_prime(&int(p as i64)) {
            continue;
        }
        if (&lc % int(p as i64)).is_zero() {
            continue;
        }
        let fp = reduce_mod(&fz, p);
        let der = gfp::derivative(&fp, p);
        if gfp::is_zero(&der) || gfp::deg(&gfp::gcd(&fp, &der, p)) > 0 {
            continue;
        }
        probes += 1;
        if chosen.is_none() {
            let fac = gfp::factor(&fp, p, gfp::derive_seed(&fp, p));
            let parts: Vec<gfp::GfpPoly> = fac.into_iter().map(|(g, _)| g).collect();
            intersect_feasible(&mut feasible, parts.iter().map(|g| gfp::deg(g) as usize));
            let done = parts.len() == 1;
            chosen = Some((p, parts));
            if done {
                break;
            }
        } else {
            // degree profile only (no full splitting) for extra primes
            let degrees = degree_profile(&fp, p);
            intersect_feasible(&mut feasible, degrees.into_iter());
        }
    }
    let (p, parts) =
        chosen.ok_or_else(|| Error::internal("no good prime found for factorization"))?;
    if parts.len() == 1 {
        return Ok(vec![f.monic()]);
    }
    if (1..n).all(|d| !feasible[d]) {
        return Ok(vec![f.monic()]);
    }

    // Mignotte-style bound on candidate coefficients: 2^n * |f|_2 * |lc|
    let norm2: BigInt = {
        let sum: BigInt = fz.iter().map(|c| c * c).sum();
        sum.sqrt() + 1
    };
    let bound: BigInt = (norm2 << n) * lc.abs();
    let mut e = 1u32;
    let mut pe = int(p as i64);
    let target: BigInt = &bound * 2 + 1;
    while pe < target {
        pe *= int(p as i64);
        e += 1;
    }

    // lift the monic modular factors to mod p^e
    let zparts: Vec<hensel::ZPoly> = parts
        .iter()
        .map(|g| g.iter().map(|&c| int(c as i64)).collect())
        .collect();
    let (_, lc_inv, _) = crate::arith::gcd_ext(&lc, &pe)?;
    let f_monic_pe = hensel::zmul_scalar(&fz, &lc_inv, &pe);
    let lifted = hensel::lift_factorization(&f_monic_pe, &zparts, &int(p as i64), e)?;

    recombine(fz, lifted, &pe, &feasible)
}

/// Quick complete-irreducibility test: Eisenstein at shift zero, using the
/// gcd of non-leading coefficients to find candidate primes.
fn eisenstein_shift0(f: &QPoly) -> Result<bool> {
    let coeffs = f.to_bigint_coeffs();
    let n = coeffs.len() - 1;
    let mut g = BigInt::zero();
    for c in &coeffs[..n] {
        g = g.gcd(c);
    }
    if g <= BigInt::one() {
        return Ok(false);
    }
    let fac = factor_integer(&g)?;
    for (q, _) in fac.factors {
        if (&coeffs[n] % &q).is_zero() {
            continue;
        }
        if !(&coeffs[0] % (&q * &q)).is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn reduce_mod(fz: &[BigInt], p: u64) -> gfp::GfpPoly {
    let bp = int(p as i64);
    let mut out: gfp::GfpPoly = fz
        .iter()
        .map(|c| {
            let mut r = c % &bp;
            if r.is_negative() {
                r += &bp;
            }
            r.to_u64().unwrap()
        })
        .collect();
    gfp::normalize(&mut out);
    out
}

/// Irreducible-factor degrees (with repetition) of a squarefree polynomial
/// mod p, from distinct-degree factorization alone.
fn degree_profile(fp: &gfp::GfpPoly, p: u64) -> Vec<usize> {
    let monic = gfp::make_monic(fp, p);
    let mut out = Vec::new();
    for (prod, d) in gfp::distinct_degree(&monic, p) {
        let count = gfp::deg(&prod) as usize / d;
        for _ in 0..count {
            out.push(d);
        }
    }
    out
}

/// Restrict `feasible` to degrees expressible as subset sums of `degrees`.
fn intersect_feasible(feasible: &mut [bool], degrees: impl Iterator<Item = usize>) {
    let n = feasible.len() - 1;
    let mut sums = vec![false; n + 1];
    sums[0] = true;
    for d in degrees {
        for i in (0..=n.saturating_sub(d)).rev() {
            if sums[i] {
                sums[i + d] = true;
            }
        }
    }
    for i in 0..=n {
        feasible[i] &= sums[i];
    }
}

/// Subset recombination of lifted modular factors.
fn recombine(
    fz: Vec<BigInt>,
    lifted: Vec<hensel::ZPoly>,
    pe: &BigInt,
    feasible: &[bool],
) -> Result<Vec<QPoly>> {
    let mut result: Vec<QPoly> = Vec::new();
    let mut active = lifted;
    let mut f_rem = QPoly::from_bigint_coeffs(&fz);
    let mut budget = SUBSET_BUDGET;

    'outer: loop {
        if active.is_empty() {
            break;
        }
        let fz_rem = f_rem.to_bigint_coeffs();
        let lc_rem = fz_rem.last().unwrap().clone();
        let const_rem = fz_rem[0].clone();
        let r = active.len();
        if f_rem.deg() > 0 && r == 1 {
            result.push(f_rem.monic());
            return Ok(result);
        }
        let max_card = r / 2;
        for card in 1..=max_card {
            let mut combo = Combinations::new(r, card);
            while let Some(subset) = combo.next() {
                if budget == 0 {
                    return Err(Error::resource(format!(
                        "factorization recombination budget exhausted; \
                         {} irreducible factors found so far, degree {} remains",
                        result.len(),
                        f_rem.deg()
                    )));
                }
                budget -= 1;
                if 2 * card == r && subset[0] != 0 {
                    // enumerate only one of each complementary pair
                    continue;
                }
                let dsum: usize = subset
                    .iter()
                    .map(|&i| active[i].len().saturating_sub(1))
                    .sum();
                if dsum == 0 || dsum > feasible.len() - 1 || !feasible[dsum] {
                    continue;
                }
                // trailing-coefficient divisibility test
                let mut t = lc_rem.clone() % pe;
                for &i in subset {
                    let c0 = active[i].first().cloned().unwrap_or_else(BigInt::zero);
                    t = t * c0 % pe;
                }
                let t = sym(&t, pe);
                if !t.is_zero() {
                    let check = &lc_rem * &const_rem;
                    if !(&check % &t).is_zero() {
                        continue;
                    }
                }
                // full candidate: lc * prod of subset factors, symmetrized
                let mut g = vec![lc_rem.clone()];
                for &i in subset {
                    g = hensel::zmul(&g, &active[i], pe);
                }
                let g_sym: Vec<BigInt> = hensel::zreduce_symmetric(&g, pe);
                let cand = QPoly::from_bigint_coeffs(&g_sym).primitive_part();
                if cand.is_constant() || cand.deg() != dsum {
                    continue;
                }
                if let Ok((quot, rem)) = f_rem.divrem(&cand) {
                    if rem.is_zero() {
                        result.push(cand.monic());
                        f_rem = quot.primitive_part();
                        let keep: Vec<hensel::ZPoly> = active
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| !subset.contains(i))
                            .map(|(_, g)| g.clone())
                            .collect();
                        active = keep;
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    if !f_rem.is_constant() {
        result.push(f_rem.monic());
    }
    Ok(result)
}

fn sym(c: &BigInt, m: &BigInt) -> BigInt {
    let mut r = c % m;
    if r.is_negative() {
        r += m;
    }
    if &r > &(m / 2) {
        r -= m;
    }
    r
}

/// Lexicographic k-subsets of {0, .., n-1}.
struct Combinations {
    idx: Vec<usize>,
    n: usize,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            idx: (0..k).collect(),
            n,
            started: false,
            done: k > n || k == 0,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn factor_x4_plus_4() {
        // oracle: (x^2-2x+2)(x^2+2x+2) expands to x^4+4
        let a = p(&[2, -2, 1]);
        let b = p(&[2, 2, 1]);
        assert_eq!(a.mul(&b), p(&[4, 0, 0, 0, 1]));
        let f = factor_over_q(&p(&[4, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.unit, rat(1));
        assert_eq!(f.factors, vec![(a, 1), (b, 1)]);
    }

    #[test]
    fn x4_plus_1_is_irreducible() {
        let f = factor_over_q(&p(&[1, 0, 0, 0, 1])).unwrap();
        assert!(f.is_irreducible());
        // it is the 8th cyclotomic polynomial
        assert_eq!(cyclotomic_poly(8), p(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn factor_x12_plus_1() {
        // oracle: (x^24-1)/(x^12-1) = x^12+1 and phi_8 * phi_24 expands to it
        let x24 = QPoly::binomial(24, rat(1));
        let x12 = QPoly::binomial(12, rat(1));
        let quot = x24.exact_div(&x12).unwrap();
        assert_eq!(quot, p(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]));
        let phi8 = p(&[1, 0, 0, 0, 1]);
        let phi24 = p(&[1, 0, 0, 0, -1, 0, 0, 0, 1]);
        assert_eq!(phi8.mul(&phi24), quot);

        let f = factor_over_q(&quot).unwrap();
        assert_eq!(f.factors, vec![(phi8, 1), (phi24, 1)]);
    }

    #[test]
    fn factorization_roundtrip_random_products() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        let mut found = 0;
        let mut irreducibles: Vec<QPoly> = Vec::new();
        // collect a pool of random monic irreducibles (deg <= 8, |coeff| <= 20)
        while irreducibles.len() < 40 {
            let d = rng.gen_range(1..=8);
            let mut v: Vec<BigRational> =
                (0..d).map(|_| rat(rng.gen_range(-20..=20))).collect();
            v.push(rat(1));
            let cand = QPoly::from_coeffs(v);
            if is_irreducible_over_q(&cand).unwrap() {
                irreducibles.push(cand);
            }
        }
        for _ in 0..200 {
            let k = rng.gen_range(2..=4);
            let mut input = QPoly::constant(rat(1));
            let mut expected: Vec<(QPoly, u32)> = Vec::new();
            for _ in 0..k {
                let g = irreducibles[rng.gen_range(0..irreducibles.len())].clone();
                input = input.mul(&g);
                if let Some(e) = expected.iter_mut().find(|(h, _)| *h == g) {
                    e.1 += 1;
                } else {
                    expected.push((g, 1));
                }
            }
            expected.sort_by(|a, b| a.0.cmp_key(&b.0));
            let f = factor_over_q(&input).unwrap();
            assert_eq!(f.factors, expected, "input {input}");
            assert_eq!(f.total_degree(), input.deg());
            assert_eq!(&f.unit, input.lc());
            found += 1;
        }
        assert_eq!(found, 200);
    }

    #[test]
    fn mod_p_consistency() {
        // reducing the rational factorization mod a good prime refines into
        // the mod-p factorization
        let input = p(&[4, 0, 0, 0, 1]).mul(&p(&[1, 0, 0, 0, 1]));
        let f = factor_over_q(&input).unwrap();
        let prime = 7u64;
        let modulus = int(prime as i64);
        let to_fp = |q: &QPoly| -> FpPoly {
            q.map_coeffs(|c| {
                PrimeFieldElement::reduced(
                    c.numer().clone(),
                    modulus.clone(),
                )
            })
        };
        let fp_input = to_fp(&input);
        let fp_factors = factor_mod_p(&fp_input).unwrap();
        // each rational factor's reduction must be a product of modular factors
        for (g, _) in &f.factors {
            let mut gp = to_fp(g);
            for (h, m) in &fp_factors.factors {
                for _ in 0..*m {
                    if h.divides(&gp) {
                        gp = gp.exact_div(h).unwrap();
                    }
                }
            }
            assert!(gp.is_constant(), "reduction of {g} not refined mod 7");
        }
    }

    #[test]
    fn eisenstein_examples() {
        let w = eisenstein_witness(&p(&[-2, 0, 1]), 10).unwrap().unwrap();
        assert_eq!((w.prime.clone(), w.shift), (int(2), 0));
        assert!(w.verify(&p(&[-2, 0, 1])));

        // inflation x^24 - 2 keeps the same witness
        let infl = p(&[-2, 1]).inflate(24).unwrap();
        let w = eisenstein_witness(&infl, 10).unwrap().unwrap();
        assert_eq!((w.prime.clone(), w.shift), (int(2), 0));

        // x^2 + x + 1 needs the shift s = 1: (x+1)^2 + (x+1) + 1 = x^2+3x+3
        let f = p(&[1, 1, 1]);
        assert_eq!(f.shift(&rat(1)), p(&[3, 3, 1]));
        let w = eisenstein_witness(&f, 10).unwrap().unwrap();
        assert_eq!((w.prime.clone(), w.shift), (int(3), 1));

        assert!(eisenstein_witness(&p(&[1, 2, 1]), 0).unwrap().is_none());
    }

    #[test]
    fn eisenstein_inflation_invariance() {
        // shift-0 witnesses persist under every inflation up to 20
        for f in [p(&[-2, 0, 1]), p(&[3, 6, 0, 1]), p(&[-2, 1])] {
            let w = eisenstein_witness(&f, 0).unwrap().unwrap();
            assert_eq!(w.shift, 0);
            for n in 1..=20 {
                let infl = f.inflate(n).unwrap();
                let wi = eisenstein_witness(&infl, 0).unwrap().unwrap();
                assert_eq!(wi.prime, w.prime);
                assert_eq!(wi.shift, 0);
                assert!(wi.verify(&infl));
            }
        }
    }

    #[test]
    fn cyclotomic_recognition() {
        assert_eq!(
            cyclotomic_index(&p(&[1, 1, 1])).unwrap(),
            CyclotomicIndex(Some(3))
        );
        // x^4+1: phi(8) = 4 and the coefficients match phi_8
        assert_eq!(crate::arith::euler_phi(8), 4);
        assert_eq!(
            cyclotomic_index(&p(&[1, 0, 0, 0, 1])).unwrap(),
            CyclotomicIndex(Some(8))
        );
        assert_eq!(
            cyclotomic_index(&p(&[-2, 1])).unwrap(),
            CyclotomicIndex(None)
        );
        assert!(cyclotomic_index(&p(&[-1, 0, 1])).is_err());
    }

    #[test]
    fn cyclotomic_divides_xk_minus_1() {
        for k in 1..=30u64 {
            let phi = cyclotomic_poly(k);
            let xk = QPoly::binomial(k as usize, rat(1));
            let (_, r) = xk.divrem(&phi).unwrap();
            assert!(r.is_zero(), "phi_{k} does not divide x^{k}-1");
        }
    }

    #[test]
    fn factor_mod_p_examples() {
        let modulus = int(5);
        let f = FpPoly::from_coeffs(vec![
            PrimeFieldElement::reduced(int(1), modulus.clone()),
            PrimeFieldElement::reduced(int(0), modulus.clone()),
            PrimeFieldElement::reduced(int(1), modulus.clone()),
        ]);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.product(), f);
        assert!(factor_mod_p(&FpPoly::zero()).is_err());
    }

    #[test]
    fn hensel_lift_surface() {
        // x^2+1 mod 5: (x+2)(x+3) -> mod 25: (x+7)(x+18)
        let lifted = hensel_lift(&p(&[1, 0, 1]), &[p(&[2, 1]), p(&[3, 1])], 5, 2).unwrap();
        assert_eq!(lifted, vec![p(&[7, 1]), p(&[18, 1])]);
        // precision 1 is the identity
        let same = hensel_lift(&p(&[1, 0, 1]), &[p(&[2, 1]), p(&[3, 1])], 5, 1).unwrap();
        assert_eq!(same, vec![p(&[2, 1]), p(&[3, 1])]);
        // non-squarefree mod p is a signalled error
        let err = hensel_lift(&p(&[1, 2, 1]), &[p(&[1, 1]), p(&[1, 1])], 5, 2);
        assert!(matches!(err, Err(Error::BadPrime { .. })));
    }

    #[test]
    fn degree_and_content_conservation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(91);
        for _ in 0..100 {
            let d = rng.gen_range(1..8);
            let mut v: Vec<BigRational> = (0..=d)
                .map(|_| rat(rng.gen_range(-10..=10)))
                .collect();
            if Zero::is_zero(&v[d]) {
                v[d] = rat(1);
            }
            let input = QPoly::from_coeffs(v);
            let f = factor_over_q(&input).unwrap();
            assert_eq!(f.total_degree(), input.deg());
            assert_eq!(f.product(), input);
        }
    }
}
