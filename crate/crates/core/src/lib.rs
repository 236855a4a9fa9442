//! Simulation and design library for photon-pair sources built from
//! superlattices of nonlinear crystals and linear birefringent spacers.
//!
//! The library models collinear degenerate type-II parametric
//! downconversion pumped by an ultrashort pulse. It computes phasematching
//! functions and joint spectral amplitudes on two-dimensional frequency
//! grids, Schmidt decompositions and entanglement measures, Hong-Ou-Mandel
//! coincidence traces, and solves the group-delay matching constraints
//! that set the joint-spectrum orientation.

pub mod design;
pub mod dispersion;
pub mod entanglement;
pub mod error;
pub mod grid;
pub mod hom;
pub mod io;
pub mod jsa;
pub mod material;
pub mod pump;
pub mod stack;
pub mod units;

pub use dispersion::{phasematch_angle, reciprocal_group_velocity, refractive_index, wavevector, PolarizationRole};
pub use error::{Error, Result};
pub use grid::FrequencyGrid;
pub use jsa::{synthesize_jsa, JointAmplitude, SynthesisMode};
pub use material::{Material, MaterialDb, Sellmeier};
pub use pump::PumpSpec;
pub use stack::{Segment, SegmentKind, Superlattice};
