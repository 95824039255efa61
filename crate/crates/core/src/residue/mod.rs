//! Residues: rank one, truncated, Jeffrey–Kirwan, and the projective-bundle pushforward.

pub mod jk;
pub mod one_dim;
pub mod pushforward;

pub use jk::{jk_residue, Chamber, Perturbation};
pub use one_dim::{residue_1d, residue_1d_plus, residue_1d_shifted};
pub use pushforward::{pushforward_projective_bundle, GradedRing};
