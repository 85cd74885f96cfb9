//! Factorization over number fields by Trager's norm method, and rebasing
//! of relative extensions onto a primitive element.

use super::{FieldOps, FieldRef, NFElement, NFPoly, NumberField};
use crate::arith::{rat, BigRational};
use crate::error::{Error, Result};
use crate::poly::{poly_gcd, squarefree, Coeff, QPoly};
use crate::qfactor::{factor_over_q, Factorization};
use num_traits::One;

/// Default cap on `deg(P) * [K:Q]`, the degree of the Trager norm.
pub const DEFAULT_DEGREE_CAP: usize = 512;

/// The norm `N_{K/Q}(P) = prod over embeddings of P^sigma`, a rational
/// polynomial of degree `deg(P) * [K:Q]`.
///
/// Computed by evaluation-interpolation: `N(P)(c) = N_{K/Q}(P(c))` at
/// `deg(P) * d + 1` rational points, then Newton interpolation.
pub fn norm_poly(p: &NFPoly) -> QPoly {
    assert!(!p.is_zero(), "norm of zero polynomial");
    let field = p.lc().field().clone();
    let d = field.degree();
    let n = p.deg();
    let points_needed = n * d + 1;
    let mut xs: Vec<BigRational> = Vec::with_capacity(points_needed);
    let mut ys: Vec<BigRational> = Vec::with_capacity(points_needed);
    let mut c = 0i64;
    while xs.len() < points_needed {
        let x = rat(c);
        let value = p.eval(&field.from_rational(x.clone())).norm();
        xs.push(x);
        ys.push(value);
        c = if c > 0 { -c } else { -c + 1 };
    }
    newton_interpolate(&xs, &ys)
}

/// Exact polynomial interpolation through distinct rational points.
fn newton_interpolate(xs: &[BigRational], ys: &[BigRational]) -> QPoly {
    let n = xs.len();
    // divided differences
    let mut table: Vec<BigRational> = ys.to_vec();
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(n);
    coeffs.push(table[0].clone());
    for level in 1..n {
        for i in 0..(n - level) {
            let num = &table[i + 1] - &table[i];
            let den = &xs[i + level] - &xs[i];
            table[i] = num / den;
        }
        table.truncate(n - level);
        coeffs.push(table[0].clone());
    }
    // assemble sum coeffs[k] * prod_{i<k} (x - xs[i])
    let mut acc = QPoly::zero();
    let mut basis = QPoly::constant(<BigRational as One>::one());
    for (k, ck) in coeffs.iter().enumerate() {
        acc = acc.add(&basis.mul_scalar(ck));
        if k + 1 < n {
            let lin = QPoly::from_coeffs(vec![-&xs[k], <BigRational as One>::one()]);
            basis = basis.mul(&lin);
        }
    }
    acc
}

/// Factor a squarefree polynomial over a number field into monic
/// irreducibles by Trager's method: shift by multiples of the generator
/// until the norm is squarefree, factor the norm over Q, and pull factors
/// back by gcd.
pub fn factor_squarefree_over_nf(p: &NFPoly, cap: usize) -> Result<Vec<NFPoly>> {
    if p.is_zero() {
        return Err(Error::domain("factor_over_nf: zero polynomial"));
    }
    let field = p.lc().field().clone();
    let d = field.degree();
    let n = p.deg();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n * d > cap {
        return Err(Error::resource(format!(
            "factor_over_nf: norm degree {} exceeds cap {}",
            n * d,
            cap
        )));
    }
    let p = p.monic();
    if n == 1 {
        return Ok(vec![p]);
    }
    // rationals: delegate
    if field.is_rationals() {
        let q = nf_poly_to_qpoly(&p);
        let f = factor_over_q(&q)?;
        return Ok(f
            .factors
            .iter()
            .map(|(g, _)| field.embed_qpoly(g))
            .collect());
    }
    debug_assert!(
        squarefree::is_squarefree(&p)?,
        "factor_squarefree_over_nf requires squarefree input"
    );
    let gen = field.generator();
    let mut shift = 0u64;
    let (norm, shift) = loop {
        let shifted = shift_by_generator(&p, &gen, shift);
        let norm = norm_poly(&shifted);
        if squarefree::is_squarefree(&norm)? {
            break (norm, shift);
        }
        shift += 1;
        if shift as usize > 2 * n * d {
            return Err(Error::internal(
                "no squarefree Trager shift found for separable input",
            ));
        }
    };
    let norm_factors = factor_over_q(&norm)?;
    if norm_factors.is_irreducible() {
        return Ok(vec![p]);
    }
    let shifted = shift_by_generator(&p, &gen, shift);
    let mut out = Vec::with_capacity(norm_factors.factors.len());
    for (h, _) in &norm_factors.factors {
        let h_k = field.embed_qpoly(h);
        let g = poly_gcd(&h_k, &shifted)?;
        debug_assert!(!g.is_constant());
        // unshift: G(x + shift * a)
        let unshifted = g.shift(&shift_element(&gen, shift));
        out.push(unshifted.monic());
    }
    out.sort_by(|a, b| a.cmp_key(b));
    debug_assert_eq!(
        out.iter()
            .fold(NFPoly::constant(FieldOps::one(&field)), |acc, f| acc.mul(f)),
        p
    );
    Ok(out)
}

/// `s * a` as a field element.
fn shift_element(gen: &NFElement, s: u64) -> NFElement {
    let field = gen.field();
    Coeff::mul(gen, &field.from_rational(BigRational::from_integer(s.into())))
}

/// `P(x - s*a)`.
fn shift_by_generator(p: &NFPoly, gen: &NFElement, s: u64) -> NFPoly {
    if s == 0 {
        return p.clone();
    }
    p.shift(&Coeff::neg(&shift_element(gen, s)))
}

/// Pluggable squarefree-factorization hook so a persistent cache can sit
/// between callers (the tree builder, the CLI) and the Trager engine.
pub trait FactorProvider {
    fn factor_squarefree(&mut self, p: &NFPoly, cap: usize) -> Result<Vec<NFPoly>>;
}

/// Straight-through provider with no caching.
pub struct DirectFactor;

impl FactorProvider for DirectFactor {
    fn factor_squarefree(&mut self, p: &NFPoly, cap: usize) -> Result<Vec<NFPoly>> {
        factor_squarefree_over_nf(p, cap)
    }
}

/// Complete factorization over a number field (squarefree split first).
pub fn factor_over_nf(p: &NFPoly, cap: usize) -> Result<Factorization<NFElement>> {
    factor_over_nf_with(p, cap, &mut DirectFactor)
}

/// `factor_over_nf` through a provider.
pub fn factor_over_nf_with(
    p: &NFPoly,
    cap: usize,
    provider: &mut dyn FactorProvider,
) -> Result<Factorization<NFElement>> {
    if p.is_zero() {
        return Err(Error::domain("factor_over_nf: zero polynomial"));
    }
    let unit = p.lc().clone();
    let mut factors: Vec<(NFPoly, u32)> = Vec::new();
    if !p.is_constant() {
        for (sq, mult) in squarefree::squarefree_decomposition(p)? {
            for g in provider.factor_squarefree(&sq, cap)? {
                factors.push((g, mult as u32));
            }
        }
    }
    let mut out = Factorization { unit, factors };
    out.sort();
    debug_assert_eq!(out.product(), *p);
    Ok(out)
}

/// Interpret a polynomial whose coefficients all lie in Q as a rational
/// polynomial.
pub fn nf_poly_to_qpoly(p: &NFPoly) -> QPoly {
    QPoly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| c.as_rational().expect("coefficient not rational"))
            .collect(),
    )
}

/// Roots of a polynomial inside the field (the negated constant terms of its
/// monic linear factors).
pub fn roots_in_field(p: &NFPoly, cap: usize) -> Result<Vec<NFElement>> {
    if p.is_zero() || p.is_constant() {
        return Ok(Vec::new());
    }
    let sf = squarefree::squarefree_part(p)?;
    let mut out = Vec::new();
    for f in factor_squarefree_over_nf(&sf, cap)? {
        if f.deg() == 1 {
            out.push(Coeff::neg(&f.constant_term()));
        }
    }
    out.sort_by(|a, b| a.cmp_key(b));
    Ok(out)
}

/// Rebase the relative extension `L = K[x]/(Q)` (with `Q` monic irreducible
/// over `K`) onto an absolute field over Q.
///
/// Returns `(L_abs, a_img, root_img)` where `a_img` is the image in
/// `L_abs` of the generator of `K` and `root_img` the image of the residue
/// class of `x` (a zero of `Q`). The primitive element is
/// `root + t * a` for the smallest working `t >= 0`.
pub fn absolute_extension(q: &NFPoly) -> Result<(FieldRef, NFElement, NFElement)> {
    let field = q.lc().field().clone();
    if q.is_zero() || q.is_constant() || !q.is_monic() {
        return Err(Error::domain(
            "absolute_extension: monic polynomial of positive degree required",
        ));
    }
    let e = q.deg();
    // linear: L = K, root = -const term
    if e == 1 {
        let root = Coeff::neg(&q.constant_term());
        return Ok((field.clone(), field.generator(), root));
    }
    if field.is_rationals() {
        // L = Q[x]/(Q) directly
        let qq = nf_poly_to_qpoly(q);
        let l = NumberField::new_certified(qq, format!("Q[x]/({})", q));
        return Ok((l.clone(), FieldOps::zero(&l), l.generator()));
    }
    let d = field.degree();
    let gen = field.generator();
    let mut t = 0u64;
    let (min_poly, t) = loop {
        let shifted = shift_by_generator(q, &gen, t);
        let norm = norm_poly(&shifted);
        if squarefree::is_squarefree(&norm)? {
            break (norm, t);
        }
        t += 1;
        if t as usize > 2 * e * d {
            return Err(Error::internal(
                "no primitive element shift found for separable extension",
            ));
        }
    };
    // the squarefree characteristic polynomial of gamma = root + t*a is its
    // minimal polynomial, hence irreducible
    let l = NumberField::new_certified(min_poly, format!("{}[x]/({})", field.label(), q));
    let gamma = l.generator();
    // recover the image of a: gcd over L of m_K(z) and Q(gamma - t z; z)
    let m_k = field.modulus();
    let m_l = l.embed_qpoly(m_k);
    // Q(x; a -> z) evaluated at x = gamma - t z: coefficients of Q are
    // residue polynomials in a; substitute a -> z, x -> gamma - t*z
    let lin = NFPoly::from_coeffs(vec![
        gamma.clone(),
        Coeff::neg(&l.from_rational(BigRational::from_integer(t.into()))),
    ]);
    let mut subst = NFPoly::zero();
    let z = l.var_poly();
    for (i, coeff) in q.coeffs().iter().enumerate() {
        // coeff.repr is a rational polynomial in a; map a -> z over L
        let coeff_z = coeff.repr().map_coeffs(|c| l.from_rational(c.clone()));
        // times (gamma - t z)^i
        let term = coeff_z.compose(&z).mul(&lin.pow(i as u32));
        subst = subst.add(&term);
    }
    let g = poly_gcd(&m_l, &subst)?;
    if g.deg() != 1 {
        return Err(Error::internal(
            "primitive element recovery: gcd not linear",
        ));
    }
    let a_img = Coeff::neg(&g.monic().constant_term());
    debug_assert!(a_img.eval_qpoly(&nf_modulus_as_qpoly(&field)).is_zero_elt());
    let t_elt = l.from_rational(BigRational::from_integer(t.into()));
    let root_img = Coeff::sub(&gamma, &Coeff::mul(&t_elt, &a_img));
    Ok((l, a_img, root_img))
}

fn nf_modulus_as_qpoly(field: &FieldRef) -> QPoly {
    field.modulus().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartic_root2() -> FieldRef {
        NumberField::new(QPoly::from_int_coeffs(&[-2, 0, 0, 0, 1]), "Q(2^(1/4))").unwrap()
    }

    fn gaussian() -> FieldRef {
        NumberField::new(QPoly::from_int_coeffs(&[1, 0, 1]), "Q(i)").unwrap()
    }

    #[test]
    fn norm_poly_examples() {
        // x - i over Q(i) -> x^2 + 1
        let k = gaussian();
        let p = NFPoly::from_coeffs(vec![Coeff::neg(&k.generator()), k.one()]);
        assert_eq!(norm_poly(&p), QPoly::from_int_coeffs(&[1, 0, 1]));

        // x^2 + a^3 x + a^2 over Q[a]/(a^4-2) -> (x^4+2)^2
        let k = quartic_root2();
        let a = k.generator();
        let p = NFPoly::from_coeffs(vec![a.pow(2), a.pow(3), k.one()]);
        let expected = QPoly::from_int_coeffs(&[2, 0, 0, 0, 1]);
        assert_eq!(norm_poly(&p), expected.mul(&expected));

        // rational P -> P^degree
        let p = NFPoly::from_coeffs(vec![k.from_int(3), k.one()]);
        let q = QPoly::from_int_coeffs(&[3, 1]);
        assert_eq!(norm_poly(&p), q.pow(4));
    }

    #[test]
    fn norm_poly_is_multiplicative() {
        use rand::{Rng, SeedableRng};
        let k = quartic_root2();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let random_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
            let deg = rng.gen_range(1..3);
            let mut coeffs: Vec<NFElement> = (0..deg)
                .map(|_| {
                    k.element(QPoly::from_coeffs(
                        (0..4).map(|_| rat(rng.gen_range(-3..=3))).collect(),
                    ))
                })
                .collect();
            coeffs.push(k.one());
            NFPoly::from_coeffs(coeffs)
        };
        for _ in 0..25 {
            let p = random_poly(&mut rng);
            let s = random_poly(&mut rng);
            assert_eq!(norm_poly(&p.mul(&s)), norm_poly(&p).mul(&norm_poly(&s)));
        }
    }

    #[test]
    fn factor_x2_plus_1_over_gaussian() {
        let k = gaussian();
        let i = k.generator();
        let p = NFPoly::from_coeffs(vec![k.one(), FieldOps::zero(&k), k.one()]);
        let factors = factor_squarefree_over_nf(&p, 512).unwrap();
        assert_eq!(factors.len(), 2);
        // (x - i)(x + i)
        let xi = NFPoly::from_coeffs(vec![Coeff::neg(&i), k.one()]);
        let xpi = NFPoly::from_coeffs(vec![i.clone(), k.one()]);
        assert!(factors.contains(&xi));
        assert!(factors.contains(&xpi));
    }

    #[test]
    fn paper_factorization_x4_plus_2() {
        // x^4 + 2 over Q[a]/(a^4 - 2) splits into the two quadratics
        // x^2 +- a^3 x + a^2; oracle: expanding their product gives x^4 + 2
        let k = quartic_root2();
        let a = k.generator();
        let f1 = NFPoly::from_coeffs(vec![a.pow(2), a.pow(3), k.one()]);
        let f2 = NFPoly::from_coeffs(vec![a.pow(2), Coeff::neg(&a.pow(3)), k.one()]);
        let product = f1.mul(&f2);
        let x4_plus_2 = NFPoly::from_coeffs(vec![
            k.from_int(2),
            FieldOps::zero(&k),
            FieldOps::zero(&k),
            FieldOps::zero(&k),
            k.one(),
        ]);
        assert_eq!(product, x4_plus_2);

        let factors = factor_squarefree_over_nf(&x4_plus_2, 512).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&f1));
        assert!(factors.contains(&f2));
    }

    #[test]
    fn factor_x2_minus_2_over_sqrt2() {
        let k = NumberField::new(QPoly::from_int_coeffs(&[-2, 0, 1]), "Q(sqrt2)").unwrap();
        let s = k.generator();
        let p = NFPoly::from_coeffs(vec![k.from_int(-2), FieldOps::zero(&k), k.one()]);
        let factors = factor_squarefree_over_nf(&p, 512).unwrap();
        assert_eq!(factors.len(), 2);
        let roots = roots_in_field(&p, 512).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&s));
        assert!(roots.contains(&Coeff::neg(&s)));
    }

    #[test]
    fn roundtrip_random_products_over_small_fields() {
        use rand::{Rng, SeedableRng};
        let fields = [gaussian(), {
            NumberField::new(QPoly::from_int_coeffs(&[-2, 0, 1]), "Q(sqrt2)").unwrap()
        }];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for trial in 0..100 {
            let k = &fields[trial % 2];
            let d = k.degree();
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let deg = rng.gen_range(1..3);
                let mut coeffs: Vec<NFElement> = (0..deg)
                    .map(|_| {
                        k.element(QPoly::from_coeffs(
                            (0..d).map(|_| rat(rng.gen_range(-4..=4))).collect(),
                        ))
                    })
                    .collect();
                coeffs.push(k.one());
                NFPoly::from_coeffs(coeffs)
            };
            let n_parts = rng.gen_range(1..=3);
            let mut input = NFPoly::constant(k.one());
            for _ in 0..n_parts {
                input = input.mul(&mk(&mut rng));
            }
            let f = factor_over_nf(&input, 512).unwrap();
            assert_eq!(f.product(), input, "roundtrip failed for {input}");
        }
    }

    #[test]
    fn absolute_extension_of_relative_quadratic() {
        // K = Q(sqrt2), Q = x^2 - 3: L should be the degree-4 field
        // containing sqrt2 and sqrt3
        let k = NumberField::new(QPoly::from_int_coeffs(&[-2, 0, 1]), "Q(sqrt2)").unwrap();
        let q = NFPoly::from_coeffs(vec![k.from_int(-3), FieldOps::zero(&k), k.one()]);
        let (l, a_img, root_img) = absolute_extension(&q).unwrap();
        assert_eq!(l.degree(), 4);
        // a_img^2 = 2, root_img^2 = 3
        assert_eq!(a_img.pow(2), l.from_int(2));
        assert_eq!(root_img.pow(2), l.from_int(3));
    }

    #[test]
    fn absolute_extension_linear_is_identity() {
        let k = gaussian();
        let q = NFPoly::from_coeffs(vec![k.from_int(5), k.one()]); // x + 5
        let (l, a_img, root) = absolute_extension(&q).unwrap();
        assert_eq!(l.degree(), 2);
        assert_eq!(a_img, k.generator());
        assert_eq!(root, k.from_int(-5));
    }
}
