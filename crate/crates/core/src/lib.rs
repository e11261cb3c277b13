//! Floer-theoretic non-displaceability certificates for Lagrangian torus
//! fibers of toric Fano manifolds.
//!
//! The crate works entirely from moment-polytope data `P = {x : <x, v_j> >= λ_j}`:
//!
//! * [`polytope`] parses and validates polytopes, enumerates vertices and
//!   finds the monotone fiber.
//! * [`novikov`] implements finite sums `Σ a_k T^(2π r_k)` with exact exponents.
//! * [`floer`] computes the Maslov-index-2 disc classes at a fiber, groups
//!   them into energy levels and evaluates the weighted differential `m_{1,2}`.
//! * [`certificate`] searches each energy level for a fully supported
//!   kernel vector and assembles the B-field period weights.
//! * [`mirror`] handles the convergent version: the Landau-Ginzburg
//!   superpotential and its critical points.
//! * [`builtins`] ships the standard example polytopes and [`cli`] the
//!   command-line front end.

pub mod builtins;
pub mod certificate;
pub mod cli;
mod error;
pub mod floer;
pub mod linalg;
pub mod mirror;
pub mod novikov;
pub mod polytope;
pub mod rational;

pub use error::{Error, Result};

/// Version string embedded in serialized certificates.
pub const TOOL_VERSION: &str = concat!("toric-floer ", env!("CARGO_PKG_VERSION"));
