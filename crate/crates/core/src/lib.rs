//! Gravity-induced many-body entanglement toolkit.
//!
//! N neutral test masses, each held in a superposition of two localised
//! wavepackets, accumulate branch-dependent phases under their mutual
//! Newtonian interaction. Every entanglement quantity of the resulting
//! N-qubit pure state is a function of one *entangling phase* per mass
//! pair and time. This crate provides:
//!
//! - [`geometry`]: masses and branch positions -> pairwise distances ->
//!   phase-rate tables -> the entangling-phase matrix
//! - [`closedform`]: exact entanglement formulas (two- and three-body
//!   concurrence, I-concurrence for arbitrary bipartitions, 3-tangle,
//!   Meyer-Wallach measures)
//! - [`oracle`]: brute-force 2^N state-vector evolution, partial traces,
//!   Wootters concurrence; the ground truth the closed forms are checked
//!   against
//! - [`graphanalysis`]: the entanglement graph, genuine-entanglement and
//!   connectivity predicates, GHZ and separability conditions on exact
//!   rational phase ratios

pub mod closedform;
pub mod geometry;
pub mod graphanalysis;
mod numeric;
pub mod oracle;

pub use closedform::Bipartition;
pub use geometry::{
    MassSpec, PairPhaseTable, PhaseMatrix, PhysicalConstants, SystemSetup,
};
