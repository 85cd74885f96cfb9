//! Hereditary irreducibility: factor trees, certificates, and the
//! multiplicative-group diagnostics behind them.
//!
//! A monic polynomial `Q` over a field `K` is *hereditarily irreducible*
//! when every inflation `Q(x^n)` stays irreducible. The submodules provide
//! the per-element diagnostics (is `a` a perfect power, possibly up to a
//! root-of-unity twist), the certificate engine for single polynomials, and
//! the level-by-level factor tree whose trimming decides good heredity.

pub mod certify;
pub mod tree;

pub use certify::{hi_certificate, Certificate, CertifyOptions, HiOutcome};
pub use tree::{
    build_tree, classify_good_heredity, ClassifyReport, ClassifyVerdict, HeredityNode,
    HeredityTree, NodeStatus, TreeConfig,
};

use crate::arith::{gcd_ext, int, primes_up_to, BigRational};
use crate::error::{Error, Result};
use crate::numfield::{
    binomial_poly, is_root_of_unity, roots::has_nth_root, roots::nth_roots_cached,
    roots::RootCache, torsion_units, FieldOps, NFElement, NFPoly,
};
use crate::poly::Coeff;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Outcome of a bounded perfect-power check in the multiplicative group.
#[derive(Debug, Clone, PartialEq)]
pub enum RootlessVerdict {
    /// No proper root found for any prime exponent up to the bound.
    TrueUpTo(u64),
    /// `a = twist * root^prime` with `twist` a root of unity (1 for the
    /// untwisted check).
    False {
        twist: NFElement,
        root: NFElement,
        prime: u64,
    },
}

impl RootlessVerdict {
    pub fn is_true_up_to(&self) -> bool {
        matches!(self, RootlessVerdict::TrueUpTo(_))
    }
}

fn reject_torsion(a: &NFElement) -> Result<()> {
    if a.is_zero_elt() {
        return Err(Error::domain("element diagnostics: zero element"));
    }
    if is_root_of_unity(a)?.is_some() {
        return Err(Error::domain(
            "element diagnostics: input is a root of unity",
        ));
    }
    Ok(())
}

/// Pick the reported root deterministically (largest by coefficient order,
/// so `2` is preferred over `-2`).
fn pick_root(mut roots: Vec<NFElement>) -> NFElement {
    roots.sort_by(|x, y| x.cmp_key(y));
    roots.pop().expect("nonempty root list")
}

/// Is `a` free of proper prime-power roots? `FALSE` comes with a witness
/// `(root, p)` such that `root^p = a`; `TRUE` is exhaustive for all proper
/// roots whose exponent has a prime divisor `<= bound` (every proper n-th
/// root yields a p-th root for each prime `p | n`).
pub fn very_rootless(a: &NFElement, bound: u64) -> Result<RootlessVerdict> {
    reject_torsion(a)?;
    let mut cache = RootCache::new();
    for p in primes_up_to(bound) {
        let roots = nth_roots_cached(a, p, &mut cache)?;
        if !roots.is_empty() {
            return Ok(RootlessVerdict::False {
                twist: FieldOps::one(a.field()),
                root: pick_root(roots),
                prime: p,
            });
        }
    }
    Ok(RootlessVerdict::TrueUpTo(bound))
}

/// Like `very_rootless` but up to root-of-unity twists: `FALSE` with
/// `(twist, root, p)` means `a = twist * root^p`.
pub fn very_rootless_modtor(a: &NFElement, bound: u64) -> Result<RootlessVerdict> {
    reject_torsion(a)?;
    let torsion = torsion_units(a.field())?;
    let mut cache = RootCache::new();
    for p in primes_up_to(bound) {
        for j in 0..torsion.order {
            let zeta = torsion.generator.pow(j);
            let target = Coeff::mul(&Coeff::inv(&zeta), a);
            let roots = nth_roots_cached(&target, p, &mut cache)?;
            if !roots.is_empty() {
                let root = pick_root(roots);
                debug_assert_eq!(Coeff::mul(&zeta, &root.pow(p)), *a);
                return Ok(RootlessVerdict::False {
                    twist: zeta,
                    root,
                    prime: p,
                });
            }
        }
    }
    Ok(RootlessVerdict::TrueUpTo(bound))
}

/// Observed root exponents of an element up to a bound.
#[derive(Debug, Clone)]
pub struct RootProfile {
    pub element: NFElement,
    pub bound: u64,
    /// Exponents `n <= bound` with `x^n = a` solvable in the field.
    pub solvable: Vec<u64>,
    /// Exponents `n <= bound` solvable after some root-of-unity twist.
    pub modtor_solvable: Vec<u64>,
    /// For each modtor-solvable `n`, the power of the torsion generator used.
    pub twists: Vec<(u64, u64)>,
}

/// The subgroup of `(Q, +)` generated by the observed torsion-twisted root
/// exponents, reported through its generator `1/lcm`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootExponentGroup {
    /// `1/lcm` of the modtor-solvable exponents (1 when only `n = 1`).
    pub generator: BigRational,
    /// The observed exponents `1/n` themselves.
    pub observed: Vec<BigRational>,
}

impl RootProfile {
    pub fn exponent_group(&self) -> RootExponentGroup {
        let mut lcm: u64 = 1;
        for &n in &self.modtor_solvable {
            lcm = lcm.lcm(&n);
        }
        let observed: Vec<BigRational> = self
            .modtor_solvable
            .iter()
            .map(|&n| BigRational::new(int(1), int(n as i64)))
            .collect();
        RootExponentGroup {
            generator: BigRational::new(int(1), int(lcm as i64)),
            observed,
        }
    }
}

/// Exact solvable-exponent sets of `x^n = a` and `x^n = zeta a` for
/// `n <= bound`.
pub fn root_profile(a: &NFElement, bound: u64) -> Result<RootProfile> {
    reject_torsion(a)?;
    if bound < 1 {
        return Err(Error::domain("root_profile: bound must be >= 1"));
    }
    let torsion = torsion_units(a.field())?;
    let mut cache = RootCache::new();
    let mut solvable = Vec::new();
    let mut modtor_solvable = Vec::new();
    let mut twists = Vec::new();
    for n in 1..=bound {
        if has_nth_root(a, n, &mut cache)? {
            solvable.push(n);
            modtor_solvable.push(n);
            twists.push((n, 0));
            continue;
        }
        let mut found = None;
        for j in 1..torsion.order {
            let zeta = torsion.generator.pow(j);
            // x^n = zeta a solvable iff zeta * a has an n-th root
            let target = Coeff::mul(&zeta, a);
            if has_nth_root(&target, n, &mut cache)? {
                found = Some(j);
                break;
            }
        }
        if let Some(j) = found {
            modtor_solvable.push(n);
            twists.push((n, j));
        }
    }
    debug_assert!(solvable.iter().all(|n| modtor_solvable.contains(n)));
    debug_assert!(solvable.contains(&1));
    Ok(RootProfile {
        element: a.clone(),
        bound,
        solvable,
        modtor_solvable,
        twists,
    })
}

/// Constructive witness extracted from a proper factor of `x^n - a`.
///
/// Given a monic irreducible factor `Q` of `x^n - a` of degree `m < n`, the
/// product `c` of the zeros of `Q` lies in the base field and satisfies
/// `c^n = a^m`; Bezout coefficients for `(m', n') = (m, n)/gcd` then express
/// `a = xi * g^(n')` with `xi` a root of unity and `n' > 1`.
pub fn power_witness_from_factor(
    q: &NFPoly,
    n: u64,
    a: &NFElement,
) -> Result<(NFElement, NFElement, u64)> {
    if q.is_zero() || !q.is_monic() {
        return Err(Error::domain("power witness: factor must be monic"));
    }
    let m = q.deg() as u64;
    if m == 0 || m >= n {
        return Err(Error::domain(
            "power witness: factor degree must be strictly between 0 and n",
        ));
    }
    let xn_minus_a = binomial_poly(a, n);
    if !q.divides(&xn_minus_a) {
        return Err(Error::domain(format!(
            "power witness: {q} does not divide x^{n} - a"
        )));
    }
    // product of the zeros of Q: (-1)^m times the constant term
    let mut c = q.constant_term();
    if m % 2 == 1 {
        c = Coeff::neg(&c);
    }
    debug_assert_eq!(c.pow(n), a.pow(m));
    let k = m.gcd(&n);
    let m_prime = m / k;
    let n_prime = n / k;
    debug_assert!(n_prime > 1);
    // c^(n') = zeta * a^(m') for a k-th root of unity zeta
    let zeta = Coeff::mul(&c.pow(n_prime), &Coeff::inv(&a.pow(m_prime)));
    let order = is_root_of_unity(&zeta)?
        .ok_or_else(|| Error::internal("power witness: twist is not a root of unity"))?;
    debug_assert!(k % order == 0);
    let (_, alpha, beta) = gcd_ext(&int(m_prime as i64), &int(n_prime as i64))?;
    let alpha = alpha.to_i64().unwrap();
    let beta = beta.to_i64().unwrap();
    // a = zeta^(-alpha) * (c^alpha * a^beta)^(n')
    let xi = zeta.pow_i64(-alpha);
    let g = Coeff::mul(&c.pow_i64(alpha), &a.pow_i64(beta));
    debug_assert_eq!(Coeff::mul(&xi, &g.pow(n_prime)), *a);
    Ok((xi, g, n_prime))
}
