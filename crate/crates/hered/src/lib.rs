//! Exact computation with hereditary factor trees of univariate polynomials.
//!
//! A polynomial `P` over a field `F` is *hereditarily irreducible* when
//! `P(x^n)` stays irreducible over `F` for every `n >= 1`, and has *good
//! heredity* when some inflation `P(x^n)` factors entirely into hereditarily
//! irreducible polynomials. This crate computes the associated factor trees
//! over `Q` and over number fields `Q[a]/(m)`, certifies or refutes
//! hereditary irreducibility at desk scale, analyzes rootlessness of field
//! elements in the multiplicative group, and mechanically verifies a registry
//! of example constructions.
//!
//! Everything is exact: arbitrary-precision integers and rationals, no
//! floating point anywhere.

pub mod arith;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod heredity;
pub mod numfield;
pub mod poly;
pub mod qfactor;
pub mod ratfunc;

pub use error::{Error, Result};
pub use poly::Poly;
