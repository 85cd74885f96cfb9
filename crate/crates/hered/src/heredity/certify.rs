//! Certification of hereditary irreducibility for a single monic
//! irreducible polynomial.
//!
//! The decision engine is Capelli's criterion: for `L = K[x]/(Q)` with root
//! `a`, the inflation `Q(x^n)` is irreducible over `K` exactly when
//! `x^n - a` is irreducible over `L`, which holds unless `a` is a p-th power
//! in `L` for some prime `p | n`, or `4 | n` and `a` lies in `-4 L^4`.
//! Certificates therefore carry a prime bound and are exact for every `n`
//! whose prime divisors stay at or below it; only an Eisenstein witness
//! certifies all `n` outright.
//!
//! When `|N(a)| != 1`, any prime `p` admitting `a = g^p` must divide the gcd
//! of the exponents in the factorization of `|N(a)|`; this prunes the prime
//! loop to a short explicit list.

use super::RootlessVerdict;
use crate::arith::{factor_integer, primes_up_to, BigInt, BigRational};
use crate::error::{Error, Result};
use crate::numfield::{
    absolute_extension, binomial_poly, factor::nf_poly_to_qpoly, factor_squarefree_over_nf,
    roots::has_nth_root, roots::nth_roots_cached, roots::RootCache, torsion_units, FieldOps,
    FieldRef, NFElement, NFPoly,
};
use crate::poly::{squarefree, Coeff, QPoly};
use crate::qfactor::{cyclotomic_index_of_irreducible, eisenstein_witness};
use num_traits::Signed;

/// Machine-checkable certificate attached to a tree node.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    /// `P` (after clearing denominators) is Eisenstein at `prime` with no
    /// shift. Inflation preserves the witness, so this certifies every `n`.
    Eisenstein { prime: BigInt },
    /// Capelli conditions verified for all primes in scope; exact for every
    /// `n` whose prime divisors are `<= prime_bound`.
    Capelli {
        prime_bound: u64,
        minus_four_checked: bool,
        /// When the norm argument restricts the candidate primes, the full
        /// restricted list (all refuted). `None` when the element has unit
        /// norm and every prime up to the bound was tested.
        norm_restricted_primes: Option<Vec<u64>>,
    },
    /// Linear polynomial `x - a` with `a` very rootless modtor up to the
    /// bound (no torsion-twisted prime-power root); exact for every `n`
    /// whose prime divisors are `<= prime_bound`.
    LinearRootlessModtor { prime_bound: u64 },
    /// A proper factorization of `Q(x^level)` refuting hereditary
    /// irreducibility.
    SplitWitness {
        level: u64,
        factors: Vec<NFPoly>,
        /// Root data behind the split when it came from the power test:
        /// `a = twist * root^prime` over the extension field.
        root_witness: Option<(NFElement, u64)>,
    },
}

impl Certificate {
    /// True when the certificate covers every inflation exponent.
    pub fn is_unconditional(&self) -> bool {
        matches!(self, Certificate::Eisenstein { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Eisenstein { .. } => "eisenstein",
            Certificate::Capelli { .. } => "capelli",
            Certificate::LinearRootlessModtor { .. } => "linear-rootless-modtor",
            Certificate::SplitWitness { .. } => "split-witness",
        }
    }
}

/// Outcome of certification.
#[derive(Debug, Clone, PartialEq)]
pub enum HiOutcome {
    /// Hereditarily irreducible, with certificate.
    Certified(Certificate),
    /// Provably splits; carries a `SplitWitness`.
    Splits(Certificate),
    /// A zero of the input is 0 or a root of unity, so the hereditary
    /// question is excluded by construction.
    Excluded { reason: String },
    /// No certificate found within the bounds.
    Unknown { reason: String },
}

#[derive(Debug, Clone)]
pub struct CertifyOptions {
    /// Primes tested by the Capelli loop (default 97).
    pub prime_bound: u64,
    /// Cap on `deg * [K:Q]` for factorizations performed while certifying.
    pub degree_cap: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            prime_bound: 97,
            degree_cap: crate::numfield::factor::DEFAULT_DEGREE_CAP,
        }
    }
}

/// Attempt to certify or refute hereditary irreducibility of a monic
/// irreducible polynomial over its field.
pub fn hi_certificate(q: &NFPoly, opts: &CertifyOptions) -> Result<HiOutcome> {
    if q.is_zero() || q.is_constant() || !q.is_monic() {
        return Err(Error::domain(
            "hi_certificate: monic polynomial of positive degree required",
        ));
    }
    let field = q.lc().field().clone();

    // exclusion: zeros that are 0 or roots of unity
    if q.constant_term().is_zero_elt() {
        return Ok(HiOutcome::Excluded {
            reason: "zero is a root".into(),
        });
    }
    if let Some(k) = cyclotomic_zero_order(q)? {
        return Ok(HiOutcome::Excluded {
            reason: format!("zeros are primitive {k}-th roots of unity"),
        });
    }

    // Eisenstein fast path over Q: unconditional certificate
    if field.is_rationals() {
        let qq = nf_poly_to_qpoly(q).primitive_part();
        if let Some(w) = eisenstein_witness(&qq, 0)? {
            debug_assert_eq!(w.shift, 0);
            return Ok(HiOutcome::Certified(Certificate::Eisenstein {
                prime: w.prime,
            }));
        }
    }

    // the extension L = K[x]/(Q) and the image of the root
    let (_, _, a) = absolute_extension(q)?;

    // norm restriction on candidate primes
    let candidates = candidate_primes(&a, opts.prime_bound)?;
    let restricted = candidates.restricted.clone();

    let mut cache = RootCache::new();
    // untwisted Capelli prime loop
    for &p in &candidates.primes {
        if has_nth_root(&a, p, &mut cache)? {
            let roots = nth_roots_cached(&a, p, &mut cache)?;
            let g = roots.into_iter().next_back();
            return Ok(HiOutcome::Splits(split_witness(q, p, g.map(|g| (g, p)), opts)?));
        }
    }
    // the -4 condition for 4 | n: a in -4 L^4
    let minus_a_over_4 = Coeff::mul(
        &Coeff::neg(&a),
        &FieldOps::from_rational(
            a.field(),
            BigRational::new(crate::arith::int(1), crate::arith::int(4)),
        ),
    );
    if has_nth_root(&minus_a_over_4, 4, &mut cache)? {
        return Ok(HiOutcome::Splits(split_witness(q, 4, None, opts)?));
    }

    // linear inputs: try the stronger torsion-twisted certificate; when a
    // twisted root exists (but no untwisted one) fall through to Capelli
    if q.deg() == 1 {
        let base_root = Coeff::neg(&q.constant_term());
        if let RootlessVerdict::TrueUpTo(bound) =
            linear_modtor_check(&base_root, &candidates, opts.prime_bound)?
        {
            return Ok(HiOutcome::Certified(Certificate::LinearRootlessModtor {
                prime_bound: bound,
            }));
        }
    }

    Ok(HiOutcome::Certified(Certificate::Capelli {
        prime_bound: opts.prime_bound,
        minus_four_checked: true,
        norm_restricted_primes: restricted,
    }))
}

/// If the zeros of `q` are roots of unity, return their order.
///
/// The zeros of an irreducible polynomial over `K` form a single conjugacy
/// class over Q, so they share one minimal polynomial: the unique
/// irreducible factor of the norm. They are roots of unity exactly when
/// that factor is cyclotomic.
fn cyclotomic_zero_order(q: &NFPoly) -> Result<Option<u64>> {
    let field = q.lc().field();
    let norm = if field.is_rationals() {
        nf_poly_to_qpoly(q)
    } else {
        crate::numfield::factor::norm_poly(q)
    };
    let h = squarefree::squarefree_part(&norm)?;
    // h is irreducible for irreducible q; the cyclotomic comparison is
    // meaningful regardless
    Ok(cyclotomic_index_of_irreducible(&h).0)
}

struct CandidatePrimes {
    primes: Vec<u64>,
    /// `Some(list)` when the norm argument proved only these primes can
    /// admit a root (all within the bound).
    restricted: Option<Vec<u64>>,
}

/// Candidate primes for the power test. For `|N(a)| != 1` every admissible
/// prime divides the gcd of the exponents of `|N(a)|`.
fn candidate_primes(a: &NFElement, bound: u64) -> Result<CandidatePrimes> {
    let all = primes_up_to(bound);
    let nu = a.norm().abs();
    if num_traits::One::is_one(&nu) {
        return Ok(CandidatePrimes {
            primes: all,
            restricted: None,
        });
    }
    let num = factor_integer(nu.numer())?;
    let den = factor_integer(nu.denom())?;
    if !num.is_complete() || !den.is_complete() {
        return Ok(CandidatePrimes {
            primes: all,
            restricted: None,
        });
    }
    let mut g: u32 = 0;
    for (_, e) in num.factors.iter().chain(den.factors.iter()) {
        g = num_integer::gcd(g, *e);
    }
    if g == 0 {
        // |N(a)| = 1 after all
        return Ok(CandidatePrimes {
            primes: all,
            restricted: None,
        });
    }
    let primes: Vec<u64> = crate::arith::prime_divisors(g as u64)
        .into_iter()
        .filter(|&p| p <= bound)
        .collect();
    Ok(CandidatePrimes {
        restricted: Some(primes.clone()),
        primes,
    })
}

/// Torsion-twisted prime-power check for the linear certificate. Returns
/// `TrueUpTo` when no twisted root exists for any candidate prime.
fn linear_modtor_check(
    a: &NFElement,
    candidates: &CandidatePrimes,
    prime_bound: u64,
) -> Result<RootlessVerdict> {
    let torsion = torsion_units(a.field())?;
    let mut cache = RootCache::new();
    for &p in &candidates.primes {
        for j in 0..torsion.order {
            let zeta = torsion.generator.pow(j);
            let target = Coeff::mul(&Coeff::inv(&zeta), a);
            if has_nth_root(&target, p, &mut cache)? {
                return Ok(RootlessVerdict::False {
                    twist: zeta,
                    root: a.clone(),
                    prime: p,
                });
            }
        }
    }
    Ok(RootlessVerdict::TrueUpTo(prime_bound))
}

/// Build the split-witness certificate, factoring the inflation when the
/// degree cap allows.
fn split_witness(
    q: &NFPoly,
    level: u64,
    root_witness: Option<(NFElement, u64)>,
    opts: &CertifyOptions,
) -> Result<Certificate> {
    let field = q.lc().field().clone();
    let d = field.degree();
    let inflated = q.inflate(level)?;
    let factors = if inflated.deg() * d <= opts.degree_cap {
        factor_squarefree_over_nf(&inflated, opts.degree_cap)?
    } else {
        Vec::new()
    };
    debug_assert!(factors.is_empty() || factors.len() >= 2);
    Ok(Certificate::SplitWitness {
        level,
        factors,
        root_witness,
    })
}

/// Re-verify a certificate against its polynomial with independent checks.
pub fn check_certificate(q: &NFPoly, cert: &Certificate) -> Result<bool> {
    match cert {
        Certificate::Eisenstein { prime } => {
            let field = q.lc().field();
            if !field.is_rationals() {
                return Ok(false);
            }
            let qq = nf_poly_to_qpoly(q).primitive_part();
            let w = crate::qfactor::EisensteinWitness {
                prime: prime.clone(),
                shift: 0,
            };
            Ok(w.verify(&qq))
        }
        Certificate::SplitWitness { level, factors, .. } => {
            let inflated = q.inflate(*level)?;
            if factors.is_empty() {
                return Ok(true);
            }
            if factors.len() < 2 {
                return Ok(false);
            }
            let prod = factors
                .iter()
                .fold(NFPoly::constant(FieldOps::one(q.lc().field())), |acc, f| {
                    acc.mul(f)
                });
            Ok(prod == inflated.monic())
        }
        Certificate::Capelli { prime_bound, .. }
        | Certificate::LinearRootlessModtor { prime_bound } => {
            // cross-check against direct factorization for small exponents
            let field = q.lc().field();
            let d = field.degree();
            for n in 2..=4u64 {
                if crate::arith::prime_divisors(n).iter().any(|p| p > prime_bound) {
                    continue;
                }
                let inflated = q.inflate(n)?;
                if inflated.deg() * d > crate::numfield::factor::DEFAULT_DEGREE_CAP {
                    continue;
                }
                let fs = factor_squarefree_over_nf(&inflated, usize::MAX)?;
                if fs.len() != 1 {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Decide irreducibility of `x^n - a` over the element's field by Capelli's
/// criterion: irreducible iff `a` is not a p-th power for any prime
/// `p | n`, and, when `4 | n`, `a` is not in `-4 K^4`.
pub fn capelli_predicts_irreducible(a: &NFElement, n: u64) -> Result<bool> {
    assert!(n >= 1);
    if a.is_zero_elt() {
        return Err(Error::domain("capelli: zero element"));
    }
    if n == 1 {
        return Ok(true);
    }
    let mut cache = RootCache::new();
    for p in crate::arith::prime_divisors(n) {
        if has_nth_root(a, p, &mut cache)? {
            return Ok(false);
        }
    }
    if n % 4 == 0 {
        let minus_a_over_4 = Coeff::mul(
            &Coeff::neg(a),
            &FieldOps::from_rational(
                a.field(),
                BigRational::new(crate::arith::int(1), crate::arith::int(4)),
            ),
        );
        if has_nth_root(&minus_a_over_4, 4, &mut cache)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Direct irreducibility of `x^n - a` by factorization (the oracle half of
/// the Capelli equivalence checks).
pub fn binomial_irreducible_by_factoring(a: &NFElement, n: u64) -> Result<bool> {
    let poly = binomial_poly(a, n);
    let fs = factor_squarefree_over_nf(&poly, usize::MAX)?;
    Ok(fs.len() == 1)
}

/// Convenience: certify a rational polynomial over a given field.
pub fn hi_certificate_rational(
    q: &QPoly,
    field: &FieldRef,
    opts: &CertifyOptions,
) -> Result<HiOutcome> {
    let embedded = crate::numfield::FieldOps::embed_qpoly(field, q);
    hi_certificate(&embedded, opts)
}

/// Verify irreducibility of a polynomial over its field by factoring.
pub fn is_irreducible_over_field(q: &NFPoly, cap: usize) -> Result<bool> {
    if q.is_zero() || q.is_constant() {
        return Ok(false);
    }
    if !squarefree::is_squarefree(q)? {
        return Ok(false);
    }
    Ok(factor_squarefree_over_nf(&q.monic(), cap)?.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;

    fn rationals() -> FieldRef {
        NumberField::rationals()
    }

    fn opts() -> CertifyOptions {
        CertifyOptions::default()
    }

    #[test]
    fn x_minus_2_is_eisenstein_certified() {
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[-2, 1]));
        match hi_certificate(&p, &opts()).unwrap() {
            HiOutcome::Certified(Certificate::Eisenstein { prime }) => {
                assert_eq!(prime, crate::arith::int(2));
            }
            o => panic!("expected eisenstein certificate, got {o:?}"),
        }
    }

    #[test]
    fn x_plus_4_splits_at_level_4() {
        // oracle: the Sophie Germain identity x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[4, 1]));
        match hi_certificate(&p, &opts()).unwrap() {
            HiOutcome::Splits(Certificate::SplitWitness { level, factors, .. }) => {
                assert_eq!(level, 4);
                let expect1 = q.embed_qpoly(&QPoly::from_int_coeffs(&[2, -2, 1]));
                let expect2 = q.embed_qpoly(&QPoly::from_int_coeffs(&[2, 2, 1]));
                assert_eq!(factors, vec![expect1, expect2]);
            }
            o => panic!("expected split witness, got {o:?}"),
        }
    }

    #[test]
    fn cyclotomic_input_is_excluded() {
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[1, 0, 1]));
        match hi_certificate(&p, &opts()).unwrap() {
            HiOutcome::Excluded { .. } => {}
            o => panic!("expected exclusion, got {o:?}"),
        }
        // x is excluded as well (zero root)
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[0, 1]));
        match hi_certificate(&p, &opts()).unwrap() {
            HiOutcome::Excluded { .. } => {}
            o => panic!("expected exclusion, got {o:?}"),
        }
    }

    #[test]
    fn eisenstein_priority_and_square_split_for_linear_inputs() {
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[-3, 1]));
        match hi_certificate(&p, &opts()).unwrap() {
            HiOutcome::Certified(cert) => {
                // eisenstein takes priority for 3
                assert_eq!(cert.kind(), "eisenstein");
            }
            o => panic!("expected certificate, got {o:?}"),
        }
        // 9/4 is not Eisenstein-certifiable but is rootless modtor... it is
        // a square: (3/2)^2, so it must split
        let p = q.embed_qpoly(&QPoly::from_coeffs(vec![
            -crate::arith::ratio(9, 4),
            crate::arith::rat(1),
        ]));
        match hi_certificate(&p, &opts()).unwrap() {
            HiOutcome::Splits(Certificate::SplitWitness { level, .. }) => {
                assert_eq!(level, 2);
            }
            o => panic!("expected split, got {o:?}"),
        }
    }

    #[test]
    fn x_minus_72_gets_linear_certificate() {
        // 72 = 2^3 3^2 has no Eisenstein witness (every prime exponent
        // violates p^2 | const or the exponent gcd) and exponent gcd 1, so
        // no prime can admit a root: the strong linear certificate applies
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[-72, 1]));
        match hi_certificate(&p, &opts()).unwrap() {
            HiOutcome::Certified(cert) => {
                assert_eq!(cert.kind(), "linear-rootless-modtor");
                assert!(check_certificate(&p, &cert).unwrap());
            }
            o => panic!("expected certificate, got {o:?}"),
        }
    }

    #[test]
    fn capelli_matches_oracle_small() {
        let q = rationals();
        for (a, n, expected) in [
            (-4i64, 2u64, true),
            (-4, 4, false), // x^4 + 4 splits
            (4, 2, false),
            (2, 12, true),
            (16, 4, false),
            (-1, 2, true),
            (-1, 4, true), // x^4 + 1 irreducible
        ] {
            let elt = q.from_int(a);
            assert_eq!(
                capelli_predicts_irreducible(&elt, n).unwrap(),
                expected,
                "capelli for a={a} n={n}"
            );
            assert_eq!(
                binomial_irreducible_by_factoring(&elt, n).unwrap(),
                expected,
                "oracle for a={a} n={n}"
            );
        }
    }

    #[test]
    fn bounded_certificates_match_factorization_oracle_to_12() {
        // every bounded certificate must agree with direct factorization of
        // the inflations for all n <= 12 (oracle equivalence)
        let q = rationals();
        let cases: Vec<(FieldRef, QPoly)> = vec![
            (q.clone(), QPoly::from_int_coeffs(&[-72, 1])),
            (q.clone(), QPoly::from_int_coeffs(&[5, 1])),
            (
                NumberField::new(QPoly::from_int_coeffs(&[-17, 0, 0, 0, 1]), "K").unwrap(),
                QPoly::from_int_coeffs(&[17, 1]),
            ),
        ];
        for (field, raw) in cases {
            let p = field.embed_qpoly(&raw);
            match hi_certificate(&p, &opts()).unwrap() {
                HiOutcome::Certified(_) => {}
                o => panic!("expected certificate for {raw}, got {o:?}"),
            }
            for n in 2..=12u64 {
                let inflated = p.inflate(n).unwrap();
                if inflated.deg() * field.degree() > 60 {
                    continue;
                }
                let fs = factor_squarefree_over_nf(&inflated, usize::MAX).unwrap();
                assert_eq!(
                    fs.len(),
                    1,
                    "certificate for {raw} contradicted by factorization at n = {n}"
                );
            }
        }
    }

    #[test]
    fn rootless_modtor_implies_irreducible_inflations() {
        // whenever the twisted check passes up to at least 12, direct
        // factorization finds x^n - a irreducible for all n <= 12
        let q = rationals();
        let elements = [q.from_int(2), q.from_int(72), q.from_int(-6)];
        for a in elements {
            let verdict = crate::heredity::very_rootless_modtor(&a, 12).unwrap();
            assert!(verdict.is_true_up_to(), "{a:?}");
            for n in 2..=12u64 {
                assert!(
                    binomial_irreducible_by_factoring(&a, n).unwrap(),
                    "x^{n} - {a:?} must stay irreducible"
                );
            }
        }
    }

    #[test]
    fn certificates_for_random_quadratics_match_inflation_oracle() {
        // random irreducible quadratics over Q: whatever the certificate
        // engine decides must agree with direct factorization of the
        // inflations (the bridged equivalence through L = Q[x]/(Q))
        use rand::{Rng, SeedableRng};
        let q = rationals();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(61);
        let mut tested = 0;
        while tested < 12 {
            let raw = QPoly::from_int_coeffs(&[
                rng.gen_range(-12..=12),
                rng.gen_range(-6..=6),
                1,
            ]);
            if !crate::qfactor::is_irreducible_over_q(&raw).unwrap() {
                continue;
            }
            let p = q.embed_qpoly(&raw);
            let outcome = hi_certificate(&p, &opts()).unwrap();
            tested += 1;
            match outcome {
                HiOutcome::Certified(_) => {
                    for n in [2u64, 3, 4, 6] {
                        let fs =
                            factor_squarefree_over_nf(&p.inflate(n).unwrap(), usize::MAX)
                                .unwrap();
                        assert_eq!(fs.len(), 1, "{raw} certified but splits at n = {n}");
                    }
                }
                HiOutcome::Splits(Certificate::SplitWitness { level, .. }) => {
                    let fs = factor_squarefree_over_nf(
                        &p.inflate(level).unwrap(),
                        usize::MAX,
                    )
                    .unwrap();
                    assert!(fs.len() >= 2, "{raw} split witness at {level} is wrong");
                }
                HiOutcome::Excluded { .. } => {
                    // cyclotomic quadratic (x^2+1, x^2+x+1, x^2-x+1): fine
                }
                o => panic!("unexpected outcome {o:?} for {raw}"),
            }
        }
    }

    #[test]
    fn splits_over_q_refine_over_extensions() {
        // each rational factor of x^4+4 is a product of the factors found
        // over Q(i)
        let q = rationals();
        let ki = NumberField::new(QPoly::from_int_coeffs(&[1, 0, 1]), "Q(i)").unwrap();
        let x4p4 = QPoly::from_int_coeffs(&[4, 0, 0, 0, 1]);
        let q_factors = factor_squarefree_over_nf(&q.embed_qpoly(&x4p4), 512).unwrap();
        let k_factors = factor_squarefree_over_nf(&ki.embed_qpoly(&x4p4), 512).unwrap();
        assert_eq!(q_factors.len(), 2);
        assert_eq!(k_factors.len(), 4);
        for qf in &q_factors {
            // lift the rational factor to Q(i) and divide off the K-factors
            // that divide it; a clean refinement leaves a constant
            let mut lifted = ki.embed_qpoly(&crate::numfield::factor::nf_poly_to_qpoly(qf));
            for kf in &k_factors {
                if kf.divides(&lifted) {
                    lifted = lifted.exact_div(kf).unwrap();
                }
            }
            assert!(
                lifted.is_constant(),
                "factor {} not refined over Q(i)",
                qf.to_canonical_string("x")
            );
        }
    }

    #[test]
    fn quartic_17_stays_uncertified_but_irreducible() {
        // x + 17 over Q[b]/(b^4 - 17): capelli certificate only (bounded)
        let k = NumberField::new(QPoly::from_int_coeffs(&[-17, 0, 0, 0, 1]), "K").unwrap();
        let p = k.embed_qpoly(&QPoly::from_int_coeffs(&[17, 1]));
        match hi_certificate(&p, &opts()).unwrap() {
            HiOutcome::Certified(cert) => {
                assert!(!cert.is_unconditional());
                // norm restriction: |N(-17)| = 17^4, so only p = 2 possible
                match cert {
                    Certificate::LinearRootlessModtor { .. } | Certificate::Capelli { .. } => {}
                    c => panic!("unexpected certificate {c:?}"),
                }
            }
            o => panic!("expected bounded certificate, got {o:?}"),
        }
    }
}
