//! Exact-arithmetic library for moduli of genus-2 curves whose Jacobians
//! split as a product of elliptic curves via a degree-n map.
//!
//! The crate bundles:
//!
//! * an exact kernel (arbitrary-precision rationals, sparse multivariate
//!   polynomials, rational functions, truncated power series, univariate
//!   factorization over the rationals),
//! * genus-2 models with Igusa-Clebsch invariants,
//! * elliptic curves, quartic Jacobians and classical modular polynomials,
//! * elliptic surfaces over Q(t) with Kodaira fiber classification and
//!   Shioda height pairings,
//! * a per-discriminant catalog of birational surface models (n = 2..11)
//!   together with covers, parametrizations, tautological curves and loci,
//! * a formal-series solver that produces the degree-n map from a genus-2
//!   curve to its elliptic factor, and
//! * a cross-check battery tying all of the above together.

pub mod catalog;
pub mod cli;
pub mod elliptic;
pub mod error;
pub mod factor;
pub mod fibration;
pub mod genus2;
pub mod modpoly;
pub mod morphism;
pub mod multipoly;
pub mod parse;
pub mod rat;
pub mod ratfun;
pub mod series;
pub mod traits;
pub mod unipoly;
pub mod vars;
pub mod verify;

pub use error::Error;
pub use rat::Rat;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
