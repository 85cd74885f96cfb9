//! Dense univariate polynomials over an exact coefficient field.
//!
//! `Poly<C>` stores coefficients in ascending degree order; the vector is
//! empty for the zero polynomial and its last entry is nonzero otherwise.
//! The same representation serves every coefficient domain in the crate:
//! rationals, prime fields, number fields, and the rational function field
//! `Q(t)`.

pub mod gcd;
pub mod squarefree;

pub use gcd::{poly_egcd, poly_gcd, resultant};
pub use squarefree::squarefree_decomposition;

use crate::arith::BigRational;
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An exact field scalar usable as a polynomial coefficient.
///
/// `zero`/`one` are instance methods so that scalars carrying a domain
/// context (a number-field element knows its field) can mint constants of
/// the same domain.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero; callers check first.
    fn inv(&self) -> Self;
    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
    /// Total ordering used only for deterministic sorting and canonical
    /// output; it has no mathematical meaning.
    fn cmp_key(&self, rhs: &Self) -> Ordering;
    /// Split off a displayable sign: `(is_negative, absolute_value)`.
    fn sign_split(&self) -> (bool, Self);
    /// True when `Display` yields a single token that needs no parentheses
    /// inside a larger expression.
    fn display_atomic(&self) -> bool;
    /// Rescale a coefficient slice by one common nonzero factor so that all
    /// entries become "integral" for fraction-free remainder sequences.
    /// Identity by default.
    fn clear_denominators(coeffs: &[Self]) -> Vec<Self> {
        coeffs.to_vec()
    }
}

impl Coeff for BigRational {
    fn zero(&self) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(&self) -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero rational");
        <BigRational as One>::one() / self
    }
    fn cmp_key(&self, rhs: &Self) -> Ordering {
        self.cmp(rhs)
    }
    fn sign_split(&self) -> (bool, Self) {
        if self.is_negative() {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }
    fn display_atomic(&self) -> bool {
        true
    }
    fn clear_denominators(coeffs: &[Self]) -> Vec<Self> {
        use num_integer::Integer;
        let mut lcm = num_bigint::BigInt::one();
        let mut gcd = num_bigint::BigInt::zero();
        for c in coeffs {
            lcm = lcm.lcm(c.denom());
            gcd = gcd.gcd(c.numer());
        }
        if gcd.is_zero() {
            return coeffs.to_vec();
        }
        let scale = BigRational::new(lcm, gcd);
        coeffs.iter().map(|c| c * &scale).collect()
    }
}

impl Coeff for crate::arith::PrimeFieldElement {
    fn zero(&self) -> Self {
        Self::reduced(num_bigint::BigInt::zero(), self.modulus().clone())
    }
    fn one(&self) -> Self {
        Self::reduced(num_bigint::BigInt::one(), self.modulus().clone())
    }
    fn is_zero(&self) -> bool {
        PrimeFieldElement::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.value().is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        PrimeFieldElement::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        PrimeFieldElement::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        PrimeFieldElement::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        PrimeFieldElement::neg(self)
    }
    fn inv(&self) -> Self {
        PrimeFieldElement::inv(self)
    }
    fn cmp_key(&self, rhs: &Self) -> Ordering {
        self.value().cmp(rhs.value())
    }
    fn sign_split(&self) -> (bool, Self) {
        (false, self.clone())
    }
    fn display_atomic(&self) -> bool {
        true
    }
}

use crate::arith::PrimeFieldElement;

/// A dense univariate polynomial with coefficients in `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Construct from ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// The constant polynomial `c`.
    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: C, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// The indeterminate `x`, minted from a sample coefficient.
    pub fn var(sample: &C) -> Self {
        Self::monomial(sample.one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a known-nonzero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero of the leading coefficient's domain when
    /// out of range; requires a nonzero polynomial to mint the zero).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.lc().zero())
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lc(&self) -> &C {
        self.coeffs.last().expect("leading coeff of zero polynomial")
    }

    /// Constant term. Panics on the zero polynomial.
    pub fn constant_term(&self) -> C {
        self.coeffs.first().cloned().expect("zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let zero = self.lc().zero();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        if e == 0 {
            let one = self
                .coeffs
                .first()
                .map(|c| c.one())
                .expect("pow of zero polynomial to exponent 0");
            return Self::constant(one);
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap()
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    ///
    /// Errors on a zero divisor.
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(Error::domain("polynomial division by zero"));
        }
        if self.is_zero() || self.deg() < rhs.deg() {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = rhs.lc().inv();
        let mut rem = self.coeffs.clone();
        let dq = self.deg() - rhs.deg();
        let zero = rhs.lc().zero();
        let mut quot = vec![zero; dq + 1];
        for k in (0..=dq).rev() {
            let top = rem[k + rhs.deg()].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.mul(&lc_inv);
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                rem[k + j] = rem[k + j].sub(&q.mul(b));
            }
            quot[k] = q;
        }
        rem.truncate(rhs.deg());
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Remainder of Euclidean division.
    pub fn rem(&self, rhs: &Self) -> Result<Self> {
        Ok(self.divrem(rhs)?.1)
    }

    /// Quotient of an exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self> {
        let (q, r) = self.divrem(rhs)?;
        if !r.is_zero() {
            return Err(Error::internal(format!(
                "exact_div: nonzero remainder {r:?}"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Scale to leading coefficient 1. Panics on the zero polynomial.
    pub fn monic(&self) -> Self {
        let lc = self.lc();
        if lc.is_one() {
            return self.clone();
        }
        self.mul_scalar(&lc.inv())
    }

    /// The inflation `P(x^n)`. Errors when `n = 0`.
    pub fn inflate(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("inflate: exponent must be >= 1"));
        }
        if n == 1 || self.is_zero() {
            return Ok(self.clone());
        }
        let n = n as usize;
        let zero = self.lc().zero();
        let mut out = vec![zero; (self.coeffs.len() - 1) * n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * n] = c.clone();
        }
        Ok(Poly { coeffs: out })
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut m = c.clone();
            let mut acc = c.zero();
            // i * c by repeated doubling to stay generic
            let mut k = i;
            while k > 0 {
                if k & 1 == 1 {
                    acc = acc.add(&m);
                }
                k >>= 1;
                if k > 0 {
                    m = m.add(&m);
                }
            }
            out.push(acc);
        }
        Self::from_coeffs(out)
    }

    /// Evaluate at `c` by Horner's rule.
    pub fn eval(&self, c: &C) -> C {
        if self.is_zero() {
            return c.zero();
        }
        let mut acc = self.lc().clone();
        for a in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(c).add(a);
        }
        acc
    }

    /// Composition `self(other)` by Horner's rule.
    pub fn compose(&self, other: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut acc = Self::constant(self.lc().clone());
        for a in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(other).add(&Self::constant(a.clone()));
        }
        acc
    }

    /// The shift `P(x + c)`.
    pub fn shift(&self, c: &C) -> Self {
        if self.is_zero() || c.is_zero() {
            return self.clone();
        }
        let x_plus_c = Self::from_coeffs(vec![c.clone(), c.one()]);
        self.compose(&x_plus_c)
    }

    /// Map coefficients into another domain.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Deterministic ordering: by degree, then leading coefficients first.
    pub fn cmp_key(&self, rhs: &Self) -> Ordering {
        match self.coeffs.len().cmp(&rhs.coeffs.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.coeffs.iter().rev().zip(rhs.coeffs.iter().rev()) {
            match a.cmp_key(b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Canonical string: descending powers, explicit signs, no spaces.
    pub fn to_canonical_string(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = c.sign_split();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let abs_str = if abs.display_atomic() {
                format!("{abs}")
            } else {
                format!("({abs})")
            };
            if i == 0 {
                out.push_str(&abs_str);
            } else {
                if !abs.is_one() || !abs.display_atomic() {
                    out.push_str(&abs_str);
                    out.push('*');
                }
                out.push_str(var);
                if i >= 2 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string("x"))
    }
}

/// Rational-coefficient polynomials get a few convenience constructors used
/// all over the tests and the factorization engine.
pub type QPoly = Poly<BigRational>;

impl QPoly {
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_bigint_coeffs(coeffs: &[num_bigint::BigInt]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// `x^n - c`
    pub fn binomial(n: usize, c: BigRational) -> Self {
        let mut coeffs = vec![<BigRational as Zero>::zero(); n + 1];
        coeffs[0] = -c;
        coeffs[n] = <BigRational as One>::one();
        Self::from_coeffs(coeffs)
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Content: the rational `c` such that `self / c` has coprime integer
    /// coefficients and positive leading coefficient. Zero for zero.
    pub fn content(&self) -> BigRational {
        use num_integer::Integer;
        if self.is_zero() {
            return <BigRational as Zero>::zero();
        }
        let mut lcm = num_bigint::BigInt::one();
        let mut gcd = num_bigint::BigInt::zero();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
            gcd = gcd.gcd(c.numer());
        }
        let mut content = BigRational::new(gcd, lcm);
        if self.lc().is_negative() {
            content = -content;
        }
        content
    }

    /// `self / content`: coprime integer coefficients, positive lc.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        self.mul_scalar(&c.inv())
    }

    pub fn to_bigint_coeffs(&self) -> Vec<num_bigint::BigInt> {
        debug_assert!(self.is_integral());
        self.coeffs.iter().map(|c| c.numer().clone()).collect()
    }
}

/// Prime-field polynomial helper used by tests and the public surface of the
/// modular factorization engine.
pub type FpPoly = Poly<PrimeFieldElement>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn divrem_examples() {
        // (x^2 - 1) / (x - 1) = (x + 1, 0)
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());

        // oracle: expand (x^2+2x+2)(x^2-2x+2) and divide back
        let a = p(&[2, 2, 1]);
        let b = p(&[2, -2, 1]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[4, 0, 0, 0, 1]));
        let (q, r) = prod.divrem(&a).unwrap();
        assert_eq!(q, b);
        assert!(r.is_zero());

        // x^3 / x^2 = (x, 0)
        let (q, r) = p(&[0, 0, 0, 1]).divrem(&p(&[0, 0, 1])).unwrap();
        assert_eq!(q, p(&[0, 1]));
        assert!(r.is_zero());

        assert!(p(&[1]).divrem(&QPoly::zero()).is_err());
    }

    #[test]
    fn divrem_roundtrip_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..1000 {
            let da = rng.gen_range(0..8);
            let db = rng.gen_range(0..5);
            let a = QPoly::from_coeffs(
                (0..=da)
                    .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                    .collect(),
            );
            let b = QPoly::from_coeffs(
                (0..=db)
                    .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                    .collect(),
            );
            if b.is_zero() {
                continue;
            }
            let (q, r) = a.divrem(&b).unwrap();
            assert_eq!(b.mul(&q).add(&r), a);
            assert!(r.is_zero() || r.deg() < b.deg());
        }
    }

    #[test]
    fn divrem_roundtrip_other_domains() {
        use crate::arith::{int, PrimeFieldElement};
        use crate::ratfunc::RatFunc;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);

        // prime field GF(101)
        let modulus = int(101);
        for _ in 0..1000 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng, d: usize| {
                Poly::from_coeffs(
                    (0..=d)
                        .map(|_| {
                            PrimeFieldElement::reduced(
                                int(rng.gen_range(0..101)),
                                modulus.clone(),
                            )
                        })
                        .collect(),
                )
            };
            let da = rng.gen_range(0..7);
            let a = mk(&mut rng, da);
            let db = rng.gen_range(0..4);
            let b = mk(&mut rng, db);
            if b.is_zero() {
                continue;
            }
            let (q, r) = a.divrem(&b).unwrap();
            assert_eq!(b.mul(&q).add(&r), a);
            assert!(r.is_zero() || r.deg() < b.deg());
        }

        // number field Q(i) and rational functions Q(t)
        let k = crate::numfield::NumberField::new(QPoly::from_int_coeffs(&[1, 0, 1]), "Q(i)")
            .unwrap();
        use crate::numfield::FieldOps;
        for _ in 0..1000 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng, d: usize| {
                Poly::from_coeffs(
                    (0..=d)
                        .map(|_| {
                            k.element(QPoly::from_coeffs(
                                (0..2).map(|_| rat(rng.gen_range(-5..=5))).collect(),
                            ))
                        })
                        .collect(),
                )
            };
            let da = rng.gen_range(0..5);
            let a = mk(&mut rng, da);
            let db = rng.gen_range(0..3);
            let b = mk(&mut rng, db);
            if b.is_zero() {
                continue;
            }
            let (q, r) = a.divrem(&b).unwrap();
            assert_eq!(b.mul(&q).add(&r), a);
        }
        for _ in 0..1000 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng, d: usize| {
                Poly::from_coeffs(
                    (0..=d)
                        .map(|_| {
                            RatFunc::new(
                                QPoly::from_int_coeffs(&[
                                    rng.gen_range(-4..=4),
                                    rng.gen_range(-2..=2),
                                ]),
                                QPoly::from_int_coeffs(&[rng.gen_range(1..=3), 1]),
                            )
                        })
                        .collect(),
                )
            };
            let da = rng.gen_range(0..4);
            let a = mk(&mut rng, da);
            let db = rng.gen_range(0..2);
            let b = mk(&mut rng, db);
            if b.is_zero() {
                continue;
            }
            let (q, r) = a.divrem(&b).unwrap();
            assert_eq!(b.mul(&q).add(&r), a);
        }
    }

    #[test]
    fn inflate_examples() {
        assert_eq!(p(&[-2, 1]).inflate(3).unwrap(), p(&[-2, 0, 0, 1]));
        assert_eq!(
            p(&[1, -3, 1]).inflate(2).unwrap(),
            p(&[1, 0, -3, 0, 1])
        );
        let q = p(&[1, 2, 3]);
        assert_eq!(q.inflate(1).unwrap(), q);
        assert!(q.inflate(0).is_err());
    }

    #[test]
    fn inflate_is_ring_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                QPoly::from_coeffs(
                    (0..rng.gen_range(1..5))
                        .map(|_| rat(rng.gen_range(-5..=5)))
                        .collect(),
                )
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let n = rng.gen_range(1..5u64);
            let m = rng.gen_range(1..4u64);
            assert_eq!(
                a.mul(&b).inflate(n).unwrap(),
                a.inflate(n).unwrap().mul(&b.inflate(n).unwrap())
            );
            assert_eq!(
                a.inflate(n).unwrap().inflate(m).unwrap(),
                a.inflate(n * m).unwrap()
            );
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[-2, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        // oracle: expand 2(2x^2-1)^2 - 1, then differentiate
        let t = p(&[-1, 0, 2]);
        let tt = t.mul(&t).mul_scalar(&rat(2)).add(&p(&[-1]));
        assert_eq!(tt, p(&[1, 0, -8, 0, 8]));
        assert_eq!(tt.derivative(), p(&[0, -16, 0, 32]));
        assert!(p(&[5]).derivative().is_zero());
    }

    #[test]
    fn eval_compose_shift() {
        let q = p(&[1, 2, 1]); // (x+1)^2
        assert_eq!(q.eval(&rat(3)), rat(16));
        assert_eq!(q.shift(&rat(1)), p(&[4, 4, 1]));
        let c = q.compose(&p(&[0, 0, 1]));
        assert_eq!(c, p(&[1, 0, 2, 0, 1]));
    }

    #[test]
    fn canonical_string_roundtrip_shapes() {
        assert_eq!(p(&[4, 0, 0, 0, 1]).to_canonical_string("x"), "x^4+4");
        assert_eq!(p(&[2, -2, 1]).to_canonical_string("x"), "x^2-2*x+2");
        assert_eq!(p(&[0, -1]).to_canonical_string("x"), "-x");
        assert_eq!(QPoly::zero().to_canonical_string("x"), "0");
        assert_eq!(
            QPoly::from_coeffs(vec![ratio(-1, 2), rat(1)]).to_canonical_string("x"),
            "x-1/2"
        );
    }

    #[test]
    fn content_and_primitive_part() {
        let q = QPoly::from_coeffs(vec![ratio(2, 3), rat(0), ratio(4, 3)]);
        assert_eq!(q.content(), ratio(2, 3));
        assert_eq!(q.primitive_part(), p(&[1, 0, 2]));
        let qneg = q.neg();
        assert_eq!(qneg.primitive_part().lc(), &rat(2));
    }
}
