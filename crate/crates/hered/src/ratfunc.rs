//! The rational function field `Q(t)`.
//!
//! Elements are reduced fractions of rational-coefficient polynomials in `t`
//! with monic denominator. Used as a coefficient field for the symbolic
//! tower constructions, where a transcendental like `cos(alpha/2^n)` is
//! modeled by the free variable `t`.

use crate::arith::BigRational;
use crate::poly::{poly_gcd, Coeff, QPoly};
use num_traits::One;
use std::cmp::Ordering;
use std::fmt;

/// An element of `Q(t)`: `num/den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RatFunc { num, den };
        rf.reduce();
        rf
    }

    /// Embed a polynomial in `t`.
    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::from_int_coeffs(&[1]),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::from_poly(QPoly::constant(q))
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::from_poly(QPoly::from_int_coeffs(&[0, 1]))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant() && Coeff::is_one(self.den.lc())
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = QPoly::from_int_coeffs(&[1]);
            return;
        }
        // fast path: denominator already 1
        if self.den.is_constant() {
            if !Coeff::is_one(self.den.lc()) {
                let inv = Coeff::inv(self.den.lc());
                self.num = self.num.mul_scalar(&inv);
                self.den = QPoly::from_int_coeffs(&[1]);
            }
            return;
        }
        let g = poly_gcd(&self.num, &self.den).expect("gcd of nonzero pair");
        if !g.is_constant() {
            self.num = self.num.exact_div(&g).unwrap();
            self.den = self.den.exact_div(&g).unwrap();
        }
        let lc_inv = Coeff::inv(self.den.lc());
        self.num = self.num.mul_scalar(&lc_inv);
        self.den = self.den.mul_scalar(&lc_inv);
    }
}

impl Coeff for RatFunc {
    fn zero(&self) -> Self {
        Self::from_poly(QPoly::zero())
    }
    fn one(&self) -> Self {
        Self::from_rational(<BigRational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.is_polynomial() && self.num.is_constant() && !self.num.is_zero() && Coeff::is_one(self.num.lc())
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_polynomial() && rhs.is_polynomial() {
            return Self::from_poly(self.num.add(&rhs.num));
        }
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_polynomial() && rhs.is_polynomial() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }
    fn cmp_key(&self, rhs: &Self) -> Ordering {
        self.num
            .cmp_key(&rhs.num)
            .then_with(|| self.den.cmp_key(&rhs.den))
    }
    fn sign_split(&self) -> (bool, Self) {
        use num_traits::Signed;
        if self.num.is_zero() {
            return (false, self.clone());
        }
        if self.num.lc().is_negative() {
            (true, self.neg())
        } else {
            (false, self.clone())
        }
    }
    fn display_atomic(&self) -> bool {
        self.is_polynomial() && self.num.is_constant()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num.to_canonical_string("t"))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.to_canonical_string("t"),
                self.den.to_canonical_string("t")
            )
        }
    }
}
