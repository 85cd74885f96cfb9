//! A short tour of the library API.
//!
//! Run with: cargo run --example tour

use hered::heredity::{build_tree, classify_good_heredity, very_rootless_modtor, TreeConfig};
use hered::numfield::{factor_over_nf, DirectFactor, FieldOps, NumberField};
use hered::poly::QPoly;

fn main() -> hered::Result<()> {
    // the quartic field Q[a]/(a^4 - 2)
    let k = NumberField::new(QPoly::from_int_coeffs(&[-2, 0, 0, 0, 1]), "Q(2^(1/4))")?;

    // x^4 + 2 factors over it even though -2 has no roots there
    let poly = k.embed_qpoly(&QPoly::from_int_coeffs(&[2, 0, 0, 0, 1]));
    let factorization = factor_over_nf(&poly, 512)?;
    println!("x^4 + 2 over {}:", k.label());
    for (factor, mult) in &factorization.factors {
        println!("  {} (multiplicity {mult})", factor.to_canonical_string("x"));
    }

    // -4 over Q: no prime-power roots, but -4 = (-1) * 2^2 modulo torsion
    let q = NumberField::rationals();
    let verdict = very_rootless_modtor(&q.from_int(-4), 50)?;
    println!("\n-4 modulo torsion: {verdict:?}");

    // the factor tree of x + 4 splits at inflation exponent 24
    let config = TreeConfig {
        depth: 4,
        ..TreeConfig::default()
    };
    let tree = build_tree(
        &q.embed_qpoly(&QPoly::from_int_coeffs(&[4, 1])),
        &config,
        &mut DirectFactor,
    )?;
    println!("\ntree of x + 4: level sizes {:?}", tree.level_sizes());

    // and every piece is Eisenstein, so good heredity certifies
    let report = classify_good_heredity(
        &q.embed_qpoly(&QPoly::from_int_coeffs(&[4, 1])),
        &config,
        &mut DirectFactor,
    )?;
    println!("classification: {:?}", report.verdict);
    Ok(())
}
