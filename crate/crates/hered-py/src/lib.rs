//! Python bindings for the hered engine.
//!
//! Exposes the main operations as plain functions. Fields are passed as
//! specification strings ("Q" or "Q[a]/(m)"), polynomials and elements as
//! expression strings; structured results come back as parsed JSON.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use hered::cli::parse::{parse_element, parse_field, parse_poly};
use hered::heredity::{
    build_tree, classify_good_heredity, root_profile, very_rootless, very_rootless_modtor,
    ClassifyVerdict, RootlessVerdict, TreeConfig,
};
use hered::numfield::{factor_over_nf, nth_roots, torsion_units, DirectFactor};

fn err(e: hered::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Parse a JSON string into a Python object.
fn json_to_py(py: Python<'_>, v: serde_json::Value) -> PyResult<Py<PyAny>> {
    let module = PyModule::import(py, "json")?;
    let loaded = module.call_method1("loads", (v.to_string(),))?;
    Ok(loaded.unbind())
}

/// Factor a polynomial over a field; returns `[(factor, multiplicity), ...]`
/// with canonical factor strings, plus the scalar unit.
#[pyfunction]
#[pyo3(signature = (field, poly, degree_cap = 512))]
fn factor(field: &str, poly: &str, degree_cap: usize) -> PyResult<(String, Vec<(String, u32)>)> {
    let k = parse_field(field).map_err(err)?;
    let p = parse_poly(poly, &k).map_err(err)?;
    let f = factor_over_nf(&p, degree_cap).map_err(err)?;
    Ok((
        f.unit.to_canonical_string(),
        f.factors
            .iter()
            .map(|(g, m)| (g.to_canonical_string("x"), *m))
            .collect(),
    ))
}

/// Canonical form of a polynomial over a field (parse/print round trip).
#[pyfunction]
fn canonical(field: &str, poly: &str) -> PyResult<String> {
    let k = parse_field(field).map_err(err)?;
    let p = parse_poly(poly, &k).map_err(err)?;
    Ok(p.to_canonical_string("x"))
}

/// Build the hereditary factor tree; returns its JSON shape as a dict.
#[pyfunction]
#[pyo3(signature = (field, poly, depth = 4))]
fn tree(py: Python<'_>, field: &str, poly: &str, depth: u32) -> PyResult<Py<PyAny>> {
    let k = parse_field(field).map_err(err)?;
    let p = parse_poly(poly, &k).map_err(err)?;
    let config = TreeConfig {
        depth,
        ..TreeConfig::default()
    };
    let t = build_tree(&p, &config, &mut DirectFactor).map_err(err)?;
    json_to_py(py, hered::cli::tree_json(&t))
}

/// Classify good heredity; returns the verdict string.
#[pyfunction]
#[pyo3(signature = (field, poly, depth = 4))]
fn classify(field: &str, poly: &str, depth: u32) -> PyResult<String> {
    let k = parse_field(field).map_err(err)?;
    let p = parse_poly(poly, &k).map_err(err)?;
    let config = TreeConfig {
        depth,
        ..TreeConfig::default()
    };
    let report = classify_good_heredity(&p, &config, &mut DirectFactor).map_err(err)?;
    Ok(match report.verdict {
        ClassifyVerdict::GoodHeredityCertified => "good-heredity-certified",
        ClassifyVerdict::NotGoodHeredityWitnessed => "not-good-heredity-witnessed",
        ClassifyVerdict::InconclusiveAtDepth => "inconclusive-at-depth",
    }
    .to_string())
}

/// Is the element free of (twisted) prime-power roots up to the bound?
/// Returns `(verdict, witness)`: witness is `None` or
/// `(twist, root, prime)` with `element = twist * root^prime`.
#[pyfunction]
#[pyo3(signature = (field, element, prime_bound = 97, modtor = false))]
fn rootless_check(
    field: &str,
    element: &str,
    prime_bound: u64,
    modtor: bool,
) -> PyResult<(bool, Option<(String, String, u64)>)> {
    let k = parse_field(field).map_err(err)?;
    let a = parse_element(element, &k).map_err(err)?;
    let verdict = if modtor {
        very_rootless_modtor(&a, prime_bound).map_err(err)?
    } else {
        very_rootless(&a, prime_bound).map_err(err)?
    };
    Ok(match verdict {
        RootlessVerdict::TrueUpTo(_) => (true, None),
        RootlessVerdict::False { twist, root, prime } => (
            false,
            Some((twist.to_canonical_string(), root.to_canonical_string(), prime)),
        ),
    })
}

/// Solvable and torsion-twisted-solvable exponent sets of `x^n = a`.
#[pyfunction]
#[pyo3(signature = (field, element, bound = 64))]
fn profile(field: &str, element: &str, bound: u64) -> PyResult<(Vec<u64>, Vec<u64>, String)> {
    let k = parse_field(field).map_err(err)?;
    let a = parse_element(element, &k).map_err(err)?;
    let p = root_profile(&a, bound).map_err(err)?;
    let generator = p.exponent_group().generator.to_string();
    Ok((p.solvable, p.modtor_solvable, generator))
}

/// All n-th roots of the element inside its field, as canonical strings.
#[pyfunction]
fn roots(field: &str, element: &str, n: u64) -> PyResult<Vec<String>> {
    let k = parse_field(field).map_err(err)?;
    let a = parse_element(element, &k).map_err(err)?;
    let rs = nth_roots(&a, n).map_err(err)?;
    Ok(rs.iter().map(|r| r.to_canonical_string()).collect())
}

/// Order and generator of the field's group of roots of unity.
#[pyfunction]
fn torsion(field: &str) -> PyResult<(u64, String)> {
    let k = parse_field(field).map_err(err)?;
    let t = torsion_units(&k).map_err(err)?;
    Ok((t.order, t.generator.to_canonical_string()))
}

/// Run a registered example verification; returns its JSON detail.
#[pyfunction]
#[pyo3(signature = (id, n = None))]
fn verify_example(py: Python<'_>, id: &str, n: Option<u32>) -> PyResult<Py<PyAny>> {
    let outcome = hered::cli::verify::run_example(id, n).map_err(err)?;
    let value = serde_json::json!({
        "id": id,
        "detail": outcome.result,
        "discrepancies": outcome.discrepancies.iter().map(|d| {
            serde_json::json!({ "id": d.id, "claimed": d.claimed, "computed": d.computed })
        }).collect::<Vec<_>>(),
        "notes": outcome.notes,
    });
    json_to_py(py, value)
}

/// The registered example identifiers.
#[pyfunction]
fn examples() -> Vec<String> {
    hered::cli::verify::REGISTRY
        .iter()
        .map(|s| s.to_string())
        .collect()
}

#[pymodule]
fn hered_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(canonical, m)?)?;
    m.add_function(wrap_pyfunction!(tree, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(rootless_check, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(roots, m)?)?;
    m.add_function(wrap_pyfunction!(torsion, m)?)?;
    m.add_function(wrap_pyfunction!(verify_example, m)?)?;
    m.add_function(wrap_pyfunction!(examples, m)?)?;
    Ok(())
}
