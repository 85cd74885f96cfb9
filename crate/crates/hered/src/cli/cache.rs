//! Persistent factorization cache: append-only JSON lines.
//!
//! Records are keyed by a content hash of the canonical field and
//! polynomial strings. A record read back from disk is only trusted after
//! re-multiplying its factors against the queried polynomial; corrupt or
//! stale lines are skipped with a warning on stderr. Tree levels re-factor
//! the same inflations constantly, so a warm cache dominates wall-clock at
//! depth 4 and beyond.

use super::parse::{field_to_string, parse_poly};
use crate::error::Result;
use crate::numfield::{factor_squarefree_over_nf, FactorProvider, FieldRef, NFPoly};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const ENGINE_VERSION: &str = concat!("hered-", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: String,
    pub field: String,
    pub poly: String,
    pub factors: Vec<String>,
    pub engine: String,
}

pub fn cache_key(field: &str, poly: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(field.as_bytes());
    hasher.update(b"|");
    hasher.update(poly.as_bytes());
    hex_string(&hasher.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// The on-disk cache plus its in-memory index.
pub struct FactorCache {
    path: PathBuf,
    records: HashMap<String, CacheRecord>,
    pub skipped_lines: usize,
}

impl FactorCache {
    /// Load (or start) a cache at the given path.
    pub fn open(path: &Path) -> Result<Self> {
        let mut records = HashMap::new();
        let mut skipped = 0usize;
        if path.exists() {
            let content = std::fs::read_to_string(path)?;
            for (lineno, line) in content.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<CacheRecord>(line) {
                    Ok(rec) => {
                        if rec.key == cache_key(&rec.field, &rec.poly)
                            && rec.engine == ENGINE_VERSION
                        {
                            records.insert(rec.key.clone(), rec);
                        } else {
                            skipped += 1;
                            eprintln!(
                                "warning: cache line {} has a stale key or engine tag; skipped",
                                lineno + 1
                            );
                        }
                    }
                    Err(_) => {
                        skipped += 1;
                        eprintln!("warning: corrupt cache line {}; skipped", lineno + 1);
                    }
                }
            }
        }
        Ok(FactorCache {
            path: path.to_path_buf(),
            records,
            skipped_lines: skipped,
        })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Look up a squarefree factorization; the stored factors are
    /// re-multiplied against the query before being trusted.
    pub fn get(&self, field: &FieldRef, poly: &NFPoly) -> Option<Vec<NFPoly>> {
        let field_s = field_to_string(field);
        let poly_s = poly.to_canonical_string("x");
        let rec = self.records.get(&cache_key(&field_s, &poly_s))?;
        let mut parsed = Vec::with_capacity(rec.factors.len());
        for f in &rec.factors {
            parsed.push(parse_poly(f, field).ok()?);
        }
        let product = parsed.iter().fold(
            NFPoly::constant(crate::numfield::FieldOps::one(field)),
            |acc, f| acc.mul(f),
        );
        if product != poly.monic() {
            eprintln!("warning: cache record failed re-multiplication; ignored");
            return None;
        }
        Some(parsed)
    }

    pub fn put(&mut self, field: &FieldRef, poly: &NFPoly, factors: &[NFPoly]) -> Result<()> {
        let field_s = field_to_string(field);
        let poly_s = poly.to_canonical_string("x");
        let rec = CacheRecord {
            key: cache_key(&field_s, &poly_s),
            field: field_s,
            poly: poly_s,
            factors: factors
                .iter()
                .map(|f| f.to_canonical_string("x"))
                .collect(),
            engine: ENGINE_VERSION.to_string(),
        };
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        writeln!(file, "{}", serde_json::to_string(&rec).unwrap())?;
        self.records.insert(rec.key.clone(), rec);
        Ok(())
    }

    /// Re-verify every record by parsing and re-multiplying. Returns
    /// `(valid, invalid)` counts.
    pub fn verify_all(&self) -> (usize, usize) {
        let mut valid = 0;
        let mut invalid = 0;
        for rec in self.records.values() {
            let ok = (|| -> Option<bool> {
                let field = super::parse::parse_field(&rec.field).ok()?;
                let poly = parse_poly(&rec.poly, &field).ok()?;
                let mut parsed = Vec::new();
                for f in &rec.factors {
                    parsed.push(parse_poly(f, &field).ok()?);
                }
                let product = parsed.iter().fold(
                    NFPoly::constant(crate::numfield::FieldOps::one(&field)),
                    |acc, f| acc.mul(f),
                );
                Some(product == poly.monic())
            })()
            .unwrap_or(false);
            if ok {
                valid += 1;
            } else {
                invalid += 1;
            }
        }
        (valid, invalid)
    }
}

/// Provider that consults the cache before the Trager engine.
pub struct CachingProvider<'a> {
    pub cache: &'a mut FactorCache,
    pub field: FieldRef,
}

impl FactorProvider for CachingProvider<'_> {
    fn factor_squarefree(&mut self, p: &NFPoly, cap: usize) -> Result<Vec<NFPoly>> {
        if let Some(hit) = self.cache.get(&self.field, p) {
            return Ok(hit);
        }
        let factors = factor_squarefree_over_nf(p, cap)?;
        self.cache.put(&self.field, p, &factors)?;
        Ok(factors)
    }
}
