//! Exact numerical invariants of Prym-Brill-Noether theory for double covers
//! `f: C~ -> C` of a genus `g` curve branched at `2k <= 4` points.
//!
//! Everything is computed with arbitrary-precision integers and reduced
//! rationals. The closed-form class formulas in [`formulas`] are checked
//! against an independent Pfaffian evaluation of Schur Q~-polynomials in
//! [`engine`], and the boundary vanishing sequences in [`limits`] are checked
//! against brute-force enumeration.
//!
//! Module map:
//! - [`theta_ring`]: the one-generator ring spanned by powers of the theta
//!   class on a Prym torsor, and its degree map.
//! - [`numerics`]: Brill-Noether numbers and expected-dimension reports.
//! - [`formulas`]: closed-form classes, Chern data and point counts.
//! - [`engine`]: Schur Q~/P~ evaluation by Pfaffian recursion.
//! - [`limits`]: vanishing sequences of Prym limit linear series.
//! - [`verify`]: the cross-module identity suites.

pub mod arith;
pub mod engine;
pub mod error;
pub mod formulas;
pub mod limits;
pub mod numerics;
pub mod sequence;
pub mod theta_ring;
pub mod verify;

pub use engine::{
    eval_identity, lagrangian_class_pointed, p_tilde, q_tilde, q_two, PfaffianEngine,
    StrictPartition,
};
pub use error::{Error, Result};
pub use formulas::{
    chern_series_w, count_points, twisted_class, twisted_pointed_class, unramified_class,
    ChernSeries,
};
pub use limits::{LimitFlavor, LimitProblem};
pub use numerics::{DimReport, Emptiness, Exactness};
pub use sequence::VanishingSequence;
pub use theta_ring::{Generator, PrymSpace, SpaceFlavor, ThetaClass};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
