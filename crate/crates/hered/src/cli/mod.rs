//! Command-line driver: argument parsing, report rendering, exit codes.
//!
//! Subcommands: `factor`, `tree`, `classify`, `element`, `verify`, `cache`.
//! Reports render as deterministic text or JSON carrying the same
//! mathematical content, so a cold run and a cache-warm run are
//! byte-identical. Exit codes: 0 success, 1 usage or input error, 2 a
//! refutation was found where a certificate was requested, 3 resource cap.

pub mod cache;
pub mod parse;
pub mod verify;

use crate::error::Error;
use crate::heredity::{
    build_tree, classify_good_heredity, root_profile, very_rootless, very_rootless_modtor,
    ClassifyVerdict, NodeStatus, RootlessVerdict, TreeConfig,
};
use crate::numfield::{factor_over_nf_with, DirectFactor, FactorProvider, FieldRef};
use cache::{CachingProvider, FactorCache};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hered",
    version,
    about = "Hereditary factor trees of univariate polynomials over Q and number fields",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Path of the persistent factorization cache (overrides HERED_CACHE).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FieldArg {
    /// Base field: "Q" or "Q[a]/(m)" with m monic over the integers.
    #[arg(short, long, default_value = "Q")]
    field: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor a polynomial into monic irreducibles over the field.
    Factor {
        #[command(flatten)]
        field: FieldArg,
        /// The polynomial, e.g. "x^4+2".
        poly: String,
        /// Cap on deg(P) * [K:Q] for the norm computation.
        #[arg(long, default_value_t = 512)]
        degree_cap: usize,
    },
    /// Build the hereditary factor tree level by level.
    Tree {
        #[command(flatten)]
        field: FieldArg,
        poly: String,
        /// Number of levels (level n uses exponent n!).
        #[arg(long, default_value_t = 4)]
        depth: u32,
        /// Comma-separated explicit exponent chain replacing the factorial
        /// schedule, e.g. "1,2,6,12" (each entry divides the next).
        #[arg(long)]
        exponents: Option<String>,
        #[arg(long, default_value_t = 97)]
        prime_bound: u64,
        #[arg(long, default_value_t = 512)]
        degree_cap: usize,
    },
    /// Classify good heredity of a polynomial over the field.
    Classify {
        #[command(flatten)]
        field: FieldArg,
        poly: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long, default_value_t = 97)]
        prime_bound: u64,
        #[arg(long, default_value_t = 512)]
        degree_cap: usize,
    },
    /// Multiplicative-group diagnostics for a field element.
    Element {
        #[command(flatten)]
        field: FieldArg,
        /// The element, as an expression in the generator "a".
        element: String,
        #[arg(long, value_enum)]
        op: ElementOp,
        /// Prime bound for the rootlessness checks.
        #[arg(long, default_value_t = 97)]
        prime_bound: u64,
        /// Exponent bound for the root profile.
        #[arg(long, default_value_t = 64)]
        profile_bound: u64,
    },
    /// Run a registered example verification (or all of them).
    Verify {
        /// Example identifier; see `hered verify --list`.
        id: Option<String>,
        /// Run every registered example.
        #[arg(long)]
        all: bool,
        /// List the registered identifiers.
        #[arg(long)]
        list: bool,
        /// Depth/level override for examples that take one.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Inspect or maintain the factorization cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ElementOp {
    VeryRootless,
    VeryRootlessModtor,
    RootProfile,
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    /// Entry count and path.
    Stats,
    /// Re-multiply every record and report valid/invalid counts.
    Verify,
    /// Delete the cache file.
    Clear,
}

/// A rendered run: exit code plus the full stdout payload.
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
}

/// Entry point for both the binary and the tests: parse `argv` (without the
/// program name) and execute.
pub fn run(args: &[String]) -> RunOutput {
    let mut argv = vec!["hered".to_string()];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap help/version go to stdout with code 0
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return RunOutput {
                code,
                stdout: e.to_string(),
            };
        }
    };
    match execute(cli) {
        Ok(out) => out,
        Err(e) => {
            let code = match &e {
                Error::Resource(_) => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            };
            RunOutput {
                code,
                stdout: format!("error: {e}\n"),
            }
        }
    }
}

/// Report envelope shared by the text and JSON renderers.
struct Report {
    command: String,
    field: Option<String>,
    input: Option<String>,
    params: Vec<(String, Value)>,
    result: Value,
    discrepancies: Vec<crate::constructions::Discrepancy>,
    warnings: Vec<String>,
    notes: Vec<String>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            field: None,
            input: None,
            params: Vec::new(),
            result: Value::Null,
            discrepancies: Vec::new(),
            warnings: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn to_json(&self) -> Value {
        let params: serde_json::Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        json!({
            "command": self.command,
            "field": self.field,
            "input": self.input,
            "params": params,
            "result": self.result,
            "discrepancies": self.discrepancies.iter().map(|d| json!({
                "id": d.id,
                "claimed": d.claimed,
                "computed": d.computed,
            })).collect::<Vec<_>>(),
            "warnings": self.warnings,
            "notes": self.notes,
            "status": "ok",
        })
    }

    fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).unwrap();
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if let Some(f) = &self.field {
            out.push_str(&format!("field: {f}\n"));
        }
        if let Some(i) = &self.input {
            out.push_str(&format!("input: {i}\n"));
        }
        for (k, v) in &self.params {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&render_value("result", &self.result, 0));
        for d in &self.discrepancies {
            out.push_str(&format!(
                "discrepancy [{}]:\n  claimed:  {}\n  computed: {}\n",
                d.id, d.claimed, d.computed
            ));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

fn render_value(key: &str, v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            let mut s = format!("{pad}{key}:\n");
            for (k, val) in map {
                s.push_str(&render_value(k, val, indent + 1));
            }
            s
        }
        Value::Array(items) => {
            let mut s = format!("{pad}{key}:\n");
            for (i, val) in items.iter().enumerate() {
                s.push_str(&render_value(&format!("- [{i}]"), val, indent + 1));
            }
            s
        }
        other => format!("{pad}{key}: {other}\n"),
    }
}

fn open_cache(cli_cache: &Option<PathBuf>) -> crate::error::Result<Option<FactorCache>> {
    let path = cli_cache
        .clone()
        .or_else(|| std::env::var_os("HERED_CACHE").map(PathBuf::from));
    match path {
        Some(p) => Ok(Some(FactorCache::open(&p)?)),
        None => Ok(None),
    }
}

fn execute(cli: Cli) -> crate::error::Result<RunOutput> {
    let as_json = cli.json;
    let mut cache = open_cache(&cli.cache)?;
    match cli.command {
        Command::Factor {
            field,
            poly,
            degree_cap,
        } => {
            let k = parse::parse_field(&field.field)?;
            let p = parse::parse_poly(&poly, &k)?;
            if p.is_zero() {
                return Err(Error::domain("cannot factor the zero polynomial"));
            }
            let fac = with_provider(&mut cache, &k, |provider| {
                factor_over_nf_with(&p, degree_cap, provider)
            })?;
            let mut report = Report::new("factor");
            report.field = Some(parse::field_to_string(&k));
            report.input = Some(p.to_canonical_string("x"));
            report.result = json!({
                "unit": fac.unit.to_canonical_string(),
                "factors": fac.factors.iter().map(|(f, m)| json!({
                    "poly": f.to_canonical_string("x"),
                    "multiplicity": m,
                })).collect::<Vec<_>>(),
                "irreducible": fac.is_irreducible(),
            });
            Ok(RunOutput {
                code: EXIT_OK,
                stdout: report.render(as_json),
            })
        }
        Command::Tree {
            field,
            poly,
            depth,
            exponents,
            prime_bound,
            degree_cap,
        } => {
            let k = parse::parse_field(&field.field)?;
            let p = parse::parse_poly(&poly, &k)?;
            let schedule = match exponents {
                Some(text) => Some(parse_exponent_chain(&text)?),
                None => None,
            };
            let config = TreeConfig {
                depth,
                prime_bound,
                degree_cap,
                exponents: schedule.clone(),
            };
            let tree = with_provider(&mut cache, &k, |provider| {
                build_tree(&p, &config, provider)
            })?;
            let mut report = Report::new("tree");
            report.field = Some(parse::field_to_string(&k));
            report.input = Some(p.to_canonical_string("x"));
            report.params.push(("depth".into(), json!(depth)));
            if let Some(s) = &schedule {
                report.params.push(("exponents".into(), json!(s)));
                report
                    .notes
                    .push("custom exponent schedule: not the defining factorial tree".into());
            }
            report.result = tree_json(&tree);
            report.warnings = tree.warnings.clone();
            Ok(RunOutput {
                code: EXIT_OK,
                stdout: report.render(as_json),
            })
        }
        Command::Classify {
            field,
            poly,
            depth,
            prime_bound,
            degree_cap,
        } => {
            let k = parse::parse_field(&field.field)?;
            let p = parse::parse_poly(&poly, &k)?;
            let config = TreeConfig {
                depth,
                prime_bound,
                degree_cap,
                exponents: None,
            };
            let report_data = with_provider(&mut cache, &k, |provider| {
                classify_good_heredity(&p, &config, provider)
            })?;
            let verdict = match report_data.verdict {
                ClassifyVerdict::GoodHeredityCertified => "good-heredity-certified",
                ClassifyVerdict::NotGoodHeredityWitnessed => "not-good-heredity-witnessed",
                ClassifyVerdict::InconclusiveAtDepth => "inconclusive-at-depth",
            };
            let mut report = Report::new("classify");
            report.field = Some(parse::field_to_string(&k));
            report.input = Some(p.to_canonical_string("x"));
            report.params.push(("depth".into(), json!(depth)));
            report.result = json!({
                "verdict": verdict,
                "tree": tree_json(&report_data.tree),
                "open_branches": report_data.open_branches.iter().map(|branch| {
                    branch.iter().map(|(n, q, kdeg)| json!({
                        "exponent": n,
                        "poly": q.to_canonical_string("x"),
                        "degree": kdeg,
                    })).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
            });
            report.notes = report_data.notes.clone();
            report.warnings = report_data.tree.warnings.clone();
            Ok(RunOutput {
                code: EXIT_OK,
                stdout: report.render(as_json),
            })
        }
        Command::Element {
            field,
            element,
            op,
            prime_bound,
            profile_bound,
        } => {
            let k = parse::parse_field(&field.field)?;
            let a = parse::parse_element(&element, &k)?;
            let mut report = Report::new("element");
            report.field = Some(parse::field_to_string(&k));
            report.input = Some(a.to_canonical_string());
            let mut code = EXIT_OK;
            match op {
                ElementOp::VeryRootless | ElementOp::VeryRootlessModtor => {
                    let modtor = matches!(op, ElementOp::VeryRootlessModtor);
                    report.params.push((
                        "op".into(),
                        json!(if modtor {
                            "very-rootless-modtor"
                        } else {
                            "very-rootless"
                        }),
                    ));
                    report
                        .params
                        .push(("prime_bound".into(), json!(prime_bound)));
                    let verdict = if modtor {
                        very_rootless_modtor(&a, prime_bound)?
                    } else {
                        very_rootless(&a, prime_bound)?
                    };
                    match verdict {
                        RootlessVerdict::TrueUpTo(b) => {
                            report.result = json!({
                                "verdict": "true-up-to-bound",
                                "bound": b,
                            });
                        }
                        RootlessVerdict::False { twist, root, prime } => {
                            code = EXIT_REFUTED;
                            report.result = json!({
                                "verdict": "false",
                                "witness": {
                                    "twist": twist.to_canonical_string(),
                                    "root": root.to_canonical_string(),
                                    "prime": prime,
                                },
                            });
                        }
                    }
                }
                ElementOp::RootProfile => {
                    report.params.push(("op".into(), json!("root-profile")));
                    report
                        .params
                        .push(("profile_bound".into(), json!(profile_bound)));
                    let profile = root_profile(&a, profile_bound)?;
                    let group = profile.exponent_group();
                    report.result = json!({
                        "solvable": profile.solvable,
                        "modtor_solvable": profile.modtor_solvable,
                        "twists": profile.twists.iter().map(|(n, j)| json!({
                            "exponent": n,
                            "torsion_generator_power": j,
                        })).collect::<Vec<_>>(),
                        "exponent_group": {
                            "generator": group.generator.to_string(),
                            "observed": group.observed.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                        },
                    });
                }
            }
            Ok(RunOutput {
                code,
                stdout: report.render(as_json),
            })
        }
        Command::Verify { id, all, list, n } => {
            if list {
                let mut report = Report::new("verify");
                report.result = json!({ "examples": verify::REGISTRY });
                return Ok(RunOutput {
                    code: EXIT_OK,
                    stdout: report.render(as_json),
                });
            }
            let ids: Vec<&str> = if all {
                verify::REGISTRY.to_vec()
            } else {
                match &id {
                    Some(one) => vec![one.as_str()],
                    None => {
                        return Err(Error::domain(
                            "verify needs an example id, --all, or --list",
                        ))
                    }
                }
            };
            let mut results = Vec::new();
            let mut report = Report::new("verify");
            for ex in ids {
                let outcome = verify::run_example(ex, n)?;
                report.discrepancies.extend(outcome.discrepancies);
                report.notes.extend(
                    outcome
                        .notes
                        .into_iter()
                        .map(|note| format!("[{ex}] {note}")),
                );
                results.push(json!({ "id": ex, "verified": true, "detail": outcome.result }));
            }
            report.result = json!({ "examples": results });
            Ok(RunOutput {
                code: EXIT_OK,
                stdout: report.render(as_json),
            })
        }
        Command::Cache { action } => {
            let mut report = Report::new("cache");
            let path = cli
                .cache
                .clone()
                .or_else(|| std::env::var_os("HERED_CACHE").map(PathBuf::from))
                .ok_or_else(|| {
                    Error::domain("cache commands need --cache PATH or HERED_CACHE set")
                })?;
            match action {
                CacheAction::Stats => {
                    let c = FactorCache::open(&path)?;
                    report.result = json!({
                        "path": path.display().to_string(),
                        "entries": c.len(),
                        "skipped_lines": c.skipped_lines,
                    });
                }
                CacheAction::Verify => {
                    let c = FactorCache::open(&path)?;
                    let (valid, invalid) = c.verify_all();
                    report.result = json!({
                        "path": path.display().to_string(),
                        "valid": valid,
                        "invalid": invalid,
                    });
                }
                CacheAction::Clear => {
                    let existed = path.exists();
                    if existed {
                        std::fs::remove_file(&path)?;
                    }
                    report.result = json!({
                        "path": path.display().to_string(),
                        "removed": existed,
                    });
                }
            }
            Ok(RunOutput {
                code: EXIT_OK,
                stdout: report.render(as_json),
            })
        }
    }
}

fn with_provider<T>(
    cache: &mut Option<FactorCache>,
    field: &FieldRef,
    f: impl FnOnce(&mut dyn FactorProvider) -> crate::error::Result<T>,
) -> crate::error::Result<T> {
    match cache {
        Some(c) => {
            let mut provider = CachingProvider {
                cache: c,
                field: field.clone(),
            };
            f(&mut provider)
        }
        None => f(&mut DirectFactor),
    }
}

fn parse_exponent_chain(text: &str) -> crate::error::Result<Vec<u64>> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let v: u64 = part
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("bad exponent '{part}'")))?;
        out.push(v);
    }
    Ok(out)
}

/// JSON shape of a built tree (shared with the Python bindings).
pub fn tree_json(tree: &crate::heredity::HeredityTree) -> Value {
    let nodes: Vec<Value> = tree
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let status = match &n.status {
                NodeStatus::Certified(cert) => json!({
                    "kind": "certified-hereditarily-irreducible",
                    "certificate": certificate_json(cert),
                }),
                NodeStatus::Splits { children } => json!({
                    "kind": "splits",
                    "children": children,
                }),
                NodeStatus::UnknownAtDepth => json!({ "kind": "unknown-at-depth" }),
            };
            json!({
                "index": i,
                "level": n.level,
                "exponent": n.exponent,
                "poly": n.poly.to_canonical_string("x"),
                "degree": n.degree(),
                "parent": n.parent,
                "status": status,
                "cyclotomic_order": n.cyclotomic_order,
            })
        })
        .collect();
    json!({
        "levels": tree.levels,
        "level_sizes": tree.level_sizes(),
        "nodes": nodes,
        "trimmed_leaves": tree.trimmed_leaves(),
        "level_products_verified": tree.level_products_verified,
        "partial": tree.partial,
    })
}

fn certificate_json(cert: &crate::heredity::Certificate) -> Value {
    use crate::heredity::Certificate;
    match cert {
        Certificate::Eisenstein { prime } => json!({
            "kind": "eisenstein",
            "prime": prime.to_string(),
            "scope": "all inflation exponents",
        }),
        Certificate::Capelli {
            prime_bound,
            minus_four_checked,
            norm_restricted_primes,
        } => json!({
            "kind": "capelli",
            "prime_bound": prime_bound,
            "minus_four_checked": minus_four_checked,
            "norm_restricted_primes": norm_restricted_primes,
            "scope": format!("exponents with prime divisors <= {prime_bound}"),
        }),
        Certificate::LinearRootlessModtor { prime_bound } => json!({
            "kind": "linear-rootless-modtor",
            "prime_bound": prime_bound,
            "scope": format!("exponents with prime divisors <= {prime_bound}"),
        }),
        Certificate::SplitWitness {
            level,
            factors,
            root_witness,
        } => json!({
            "kind": "split-witness",
            "level": level,
            "factors": factors.iter().map(|f| f.to_canonical_string("x")).collect::<Vec<_>>(),
            "root_witness": root_witness.as_ref().map(|(g, p)| json!({
                "root": g.to_canonical_string(),
                "prime": p,
            })),
        }),
    }
}
