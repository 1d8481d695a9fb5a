//! Numerical toolkit for majorization constraints on quantum mixing and
//! measurement.
//!
//! The library is organised around the majorization relation `x ≺ y` between
//! spectra (sorted eigenvalue vectors). On top of dense complex linear algebra
//! primitives it provides:
//!
//! - [`majorization`]: the relation itself with the zero-padding convention,
//!   plus the constructive machinery — T-transform chains, permutation
//!   mixtures, orthostochastic unitaries, Ky Fan sums.
//! - [`mixing`]: the two static constraints every convex combination of
//!   density matrices satisfies, the constructive partial converse that
//!   realises a spectrum ensemble as an explicit mixture, and a qubit
//!   brute-force search used to certify impossibility fixtures.
//! - [`measurement`]: generalized measurements, the four dynamic constraints
//!   relating prior and posterior spectra, pinching, unitary dilation, the
//!   constructive partial converse producing measurement matrices from target
//!   posteriors, and a certified two-outcome impossibility fixture.
//! - [`entropy`]: the entropic and power-sum corollaries (concavity,
//!   subentropy-style mixing bounds, measurement information bounds).
//! - [`entanglement`]: Schmidt machinery, the spectrum criteria for pure-state
//!   and ensemble entanglement transformation, and an executable one-way LOCC
//!   protocol builder.
//!
//! All types are immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads. The crate is
//! `no_std` (with `alloc`); IO, file formats and the CLI live in the companion
//! `majmix-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod entanglement;
pub mod entropy;
pub mod error;
pub mod generate;
pub mod linalg;
pub mod majorization;
pub mod measurement;
pub mod mixing;
pub mod report;
pub mod rng;
pub mod spectrum;
pub mod tol;

pub(crate) mod math;

pub use error::Error;
pub use tol::Tolerances;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
