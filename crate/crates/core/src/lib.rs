//! Exact symbolic verification of the two-parameter quantum group
//! `GL_{p,q'}(2)`, its quantum planes, and the cross-commutation structure
//! between group generators and plane coordinates.
//!
//! The crate is layered bottom-up:
//!
//! * [`coefficients`]: rational functions in named parameters.
//! * [`freealg`]: words, noncommutative polynomials, rewrite systems.
//! * [`presets`]: the concrete relation sets, cross-commutation tables,
//!   coactions, and the exterior differential.
//! * [`hopf`]: tensor algebra, comultiplication, determinant and antipode.
//! * [`rmatrix`]: the R-matrix, Yang–Baxter and RTT checks.
//! * [`suites`]: named batches of checks with text/JSON reports, driven by
//!   the `qplane` binary.

pub mod coefficients;
pub mod freealg;
pub mod hopf;
pub mod presets;
pub mod rmatrix;
pub mod suites;
pub mod text;
