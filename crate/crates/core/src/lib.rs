//! Exact computation of singularity invariants of hypersurfaces with line
//! singularities: Lê numbers, polar numbers and polar ratios, together with
//! hypothesis-by-hypothesis checkers for equimultiplicity criteria on
//! one-parameter deformation families.
//!
//! The crate is layered bottom-up:
//!
//! - [`poly`]: exact sparse polynomials over `Q(params)` and the expression
//!   parser;
//! - [`ideal`]: Gröbner bases, Mora standard bases in the local ring at the
//!   origin, and the derived ideal operations;
//! - [`singularity`]: invariants of a single germ;
//! - [`family`]: deformation families and theorem verdicts.

pub mod config;
pub mod error;
pub mod family;
pub mod ideal;
pub mod poly;
pub mod singularity;

pub use config::Config;
pub use error::{Error, Result};
