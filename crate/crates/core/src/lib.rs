//! Simulation and analysis toolkit for a recurrence-based surface microscope:
//! atomic wave packets bouncing in a gravitational cavity above an evanescent
//! mirror, the recurrence times read off their autocorrelation signal, and
//! the inversion of those times into surface information.
//!
//! The crate is organized along the pipeline:
//!
//! * [`physics`] — SI parameters, scaled units (ħ = m = g = 1), validity estimates
//! * [`airy`] — Ai/Ai′ evaluation and negative zeros
//! * [`spectrum`] — triangular-well eigenenergies and recurrence-time hierarchy
//! * [`wavepacket`] — Gaussian packets, eigenbasis projection, analytic autocorrelation
//! * [`propagator`] — split-step Fourier evolution under the full (possibly modulated) potential
//! * [`revival`] — peak/envelope detection of recurrence times from signals
//! * [`inversion`] — recurrence times → surface energy/height/modulation parameters
//! * [`scan`] — virtual microscope: profile in, reconstructed profile out
//! * [`config`] — shared JSON run configuration

pub mod airy;
pub mod config;
pub mod error;
pub mod inversion;
pub mod par;
pub mod physics;
pub mod propagator;
pub mod revival;
pub mod scan;
pub mod spectrum;
pub mod wavepacket;

pub use error::{Result, RtmError};
pub use physics::{
    from_scaled, impact_speed_from_drop, spontaneous_emission_probability, to_scaled,
    PhysicalParams, Quantity, ScaledUnits, ValidityParams,
};
