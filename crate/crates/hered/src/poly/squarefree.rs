//! Squarefree decomposition over characteristic-zero coefficient fields.

use super::{poly_gcd, Coeff, Poly};
use crate::error::{Error, Result};

/// Yun's algorithm. Returns pairs `(factor, multiplicity)` with monic,
/// pairwise-coprime, squarefree factors whose weighted product is the monic
/// part of the input. Multiplicities ascend.
pub fn squarefree_decomposition<C: Coeff>(p: &Poly<C>) -> Result<Vec<(Poly<C>, usize)>> {
    if p.is_zero() {
        return Err(Error::domain("squarefree decomposition of zero"));
    }
    let f = p.monic();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let fd = f.derivative();
    let a0 = poly_gcd(&f, &fd)?;
    if a0.is_constant() {
        return Ok(vec![(f, 1)]);
    }
    let mut b = f.exact_div(&a0)?;
    let mut c = fd.exact_div(&a0)?;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1usize;
    while !b.is_constant() {
        let ai = poly_gcd(&b, &d)?;
        if !ai.is_constant() {
            out.push((ai.clone(), i));
        }
        b = b.exact_div(&ai)?;
        c = d.exact_div(&ai)?;
        d = c.sub(&b.derivative());
        i += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible factors: `p / gcd(p, p')`, monic.
pub fn squarefree_part<C: Coeff>(p: &Poly<C>) -> Result<Poly<C>> {
    if p.is_zero() {
        return Err(Error::domain("squarefree part of zero"));
    }
    let f = p.monic();
    if f.is_constant() {
        return Ok(f);
    }
    let g = poly_gcd(&f, &f.derivative())?;
    f.exact_div(&g)
}

/// True when `p` has no repeated factors.
pub fn is_squarefree<C: Coeff>(p: &Poly<C>) -> Result<bool> {
    if p.is_zero() {
        return Ok(false);
    }
    if p.is_constant() {
        return Ok(true);
    }
    Ok(poly_gcd(p, &p.derivative())?.is_constant())
}
