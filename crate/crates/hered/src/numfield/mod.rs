//! Number fields `K = Q[a]/(m(a))` and their arithmetic.
//!
//! Fields are absolute (single generator over Q); towers are rebased onto a
//! primitive element before use. Elements are residue polynomials of degree
//! below `deg m`. `Q` itself is the degenerate field with `m = a`, so every
//! engine works uniformly over "rationals or number field".

pub mod factor;
pub mod roots;

pub use factor::{
    absolute_extension, factor_over_nf, factor_over_nf_with, factor_squarefree_over_nf,
    DirectFactor, FactorProvider,
};
pub use roots::{is_root_of_unity, nth_roots, torsion_units, TorsionGroup};

use crate::arith::BigRational;
use crate::error::{Error, Result};
use crate::poly::{poly_egcd, Coeff, Poly, QPoly};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// An absolute number field `Q[a]/(m)` with `m` monic irreducible.
pub struct NumberField {
    modulus: QPoly,
    degree: usize,
    label: String,
    torsion: OnceLock<(u64, QPoly)>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.label)
    }
}

pub type FieldRef = Arc<NumberField>;

/// Polynomials with number-field coefficients.
pub type NFPoly = Poly<NFElement>;

impl NumberField {
    /// Construct a field, certifying on construction that the modulus is
    /// monic irreducible over Q.
    pub fn new(modulus: QPoly, label: impl Into<String>) -> Result<FieldRef> {
        if modulus.is_zero() || modulus.is_constant() || !modulus.is_monic() {
            return Err(Error::domain(
                "number field modulus must be monic of positive degree",
            ));
        }
        if !crate::qfactor::is_irreducible_over_q(&modulus)? {
            return Err(Error::domain(format!(
                "number field modulus {modulus} is reducible over Q"
            )));
        }
        Ok(Self::new_certified(modulus, label))
    }

    /// Construct from a modulus already known to be monic irreducible
    /// (minimal polynomials produced inside the engine).
    pub(crate) fn new_certified(modulus: QPoly, label: impl Into<String>) -> FieldRef {
        let degree = modulus.deg();
        Arc::new(NumberField {
            modulus,
            degree,
            label: label.into(),
            torsion: OnceLock::new(),
        })
    }

    /// The rationals, represented as the degenerate field `Q[a]/(a)`.
    pub fn rationals() -> FieldRef {
        Self::new_certified(QPoly::from_int_coeffs(&[0, 1]), "Q")
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    pub(crate) fn torsion_cache(&self) -> &OnceLock<(u64, QPoly)> {
        &self.torsion
    }
}

/// Construct elements of a field through its `Arc`.
pub trait FieldOps {
    fn zero(&self) -> NFElement;
    fn one(&self) -> NFElement;
    fn from_rational(&self, q: BigRational) -> NFElement;
    fn from_int(&self, n: i64) -> NFElement;
    fn generator(&self) -> NFElement;
    fn element(&self, repr: QPoly) -> NFElement;
    fn embed_qpoly(&self, p: &QPoly) -> NFPoly;
    fn var_poly(&self) -> NFPoly;
}

impl FieldOps for FieldRef {
    fn zero(&self) -> NFElement {
        NFElement {
            field: self.clone(),
            repr: QPoly::zero(),
        }
    }

    fn one(&self) -> NFElement {
        self.from_rational(<BigRational as One>::one())
    }

    fn from_rational(&self, q: BigRational) -> NFElement {
        NFElement {
            field: self.clone(),
            repr: QPoly::constant(q),
        }
    }

    fn from_int(&self, n: i64) -> NFElement {
        self.from_rational(crate::arith::rat(n))
    }

    /// The residue class of `a` (zero in the degenerate field `Q`).
    fn generator(&self) -> NFElement {
        self.element(QPoly::from_int_coeffs(&[0, 1]))
    }

    /// An element from an arbitrary polynomial in `a` (reduced mod `m`).
    fn element(&self, repr: QPoly) -> NFElement {
        let repr = repr.rem(&self.modulus).expect("modulus nonzero");
        NFElement {
            field: self.clone(),
            repr,
        }
    }

    /// Map a rational polynomial to one with (constant) coefficients in `K`.
    fn embed_qpoly(&self, p: &QPoly) -> NFPoly {
        p.map_coeffs(|c| self.from_rational(c.clone()))
    }

    /// The polynomial `x` over `K`.
    fn var_poly(&self) -> NFPoly {
        NFPoly::from_coeffs(vec![self.zero(), self.one()])
    }
}

/// An element of a number field: a residue polynomial in the generator.
#[derive(Clone)]
pub struct NFElement {
    field: FieldRef,
    repr: QPoly,
}

impl PartialEq for NFElement {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && *self.field == *other.field
    }
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr.to_canonical_string("a"))
    }
}

impl NFElement {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn repr(&self) -> &QPoly {
        &self.repr
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.repr.is_zero() {
            return Some(<BigRational as Zero>::zero());
        }
        if self.repr.is_constant() {
            return Some(self.repr.lc().clone());
        }
        None
    }

    fn check_same(&self, rhs: &Self) {
        assert!(
            *self.field == *rhs.field,
            "number field operands from different fields"
        );
    }

    pub fn pow(&self, mut e: u64) -> NFElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = Coeff::mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = Coeff::mul(&base, &base);
            }
        }
        acc
    }

    pub fn pow_i64(&self, e: i64) -> NFElement {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            Coeff::inv(self).pow((-e) as u64)
        }
    }

    /// Field norm `N_{K/Q}` as the resultant of the modulus and the residue
    /// polynomial.
    pub fn norm(&self) -> BigRational {
        if self.repr.is_zero() {
            return <BigRational as Zero>::zero();
        }
        crate::poly::resultant(self.field.modulus(), &self.repr).expect("nonzero inputs")
    }

    /// Minimal polynomial over Q: the squarefree part of the characteristic
    /// polynomial `N(x - self)`, which is a power of it.
    pub fn min_poly(&self) -> QPoly {
        if let Some(q) = self.as_rational() {
            return QPoly::from_coeffs(vec![-q, <BigRational as One>::one()]);
        }
        let x_minus_self = NFPoly::from_coeffs(vec![Coeff::neg(self), self.field.one()]);
        let charpoly = factor::norm_poly(&x_minus_self);
        let mp = crate::poly::squarefree::squarefree_part(&charpoly).expect("nonzero charpoly");
        debug_assert!(self.eval_qpoly(&mp).is_zero_elt());
        mp
    }

    /// Evaluate a rational polynomial at this element.
    pub fn eval_qpoly(&self, p: &QPoly) -> NFElement {
        let embedded = self.field.embed_qpoly(p);
        embedded.eval(self)
    }

    pub fn is_zero_elt(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn to_canonical_string(&self) -> String {
        self.repr.to_canonical_string("a")
    }
}

impl Coeff for NFElement {
    fn zero(&self) -> Self {
        FieldOps::zero(&self.field)
    }
    fn one(&self) -> Self {
        FieldOps::one(&self.field)
    }
    fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }
    fn is_one(&self) -> bool {
        self.repr.is_constant() && !self.repr.is_zero() && Coeff::is_one(self.repr.lc())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        NFElement {
            field: self.field.clone(),
            repr: self.repr.add(&rhs.repr),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        NFElement {
            field: self.field.clone(),
            repr: self.repr.sub(&rhs.repr),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let prod = self.repr.mul(&rhs.repr);
        NFElement {
            field: self.field.clone(),
            repr: prod.rem(self.field.modulus()).expect("modulus nonzero"),
        }
    }
    fn neg(&self) -> Self {
        NFElement {
            field: self.field.clone(),
            repr: self.repr.neg(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.repr.is_zero(), "inverse of zero field element");
        let (g, s, _) = poly_egcd(&self.repr, self.field.modulus()).expect("nonzero inputs");
        assert!(
            g.is_constant(),
            "modulus not coprime to representative; field modulus reducible?"
        );
        // g is monic constant 1 after normalization
        NFElement {
            field: self.field.clone(),
            repr: s.rem(self.field.modulus()).unwrap(),
        }
    }
    fn cmp_key(&self, rhs: &Self) -> Ordering {
        self.repr.cmp_key(&rhs.repr)
    }
    fn sign_split(&self) -> (bool, Self) {
        if self.repr.is_zero() {
            return (false, self.clone());
        }
        if self.repr.lc().is_negative() {
            (true, Coeff::neg(self))
        } else {
            (false, self.clone())
        }
    }
    fn display_atomic(&self) -> bool {
        self.repr.is_constant()
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr.to_canonical_string("a"))
    }
}

/// `x^n - a` over the element's field.
pub fn binomial_poly(a: &NFElement, n: u64) -> NFPoly {
    let mut coeffs = vec![FieldOps::zero(a.field()); n as usize + 1];
    coeffs[0] = Coeff::neg(a);
    coeffs[n as usize] = FieldOps::one(a.field());
    NFPoly::from_coeffs(coeffs)
}
