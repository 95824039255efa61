//! Presentations of `H*_{S^1}(P^n_{ss})`, Gröbner bases and intersection pairings.

pub mod groebner;
mod presentation;

pub use groebner::GroebnerBasis;
pub use presentation::{
    ih_pairing_matrix, ih_pairing_scalar, monomial, semistable_ring, vm_basis, vm_basis_with_ring,
    weakly_balanced_check, PairingMatrix, QuotientRingPresentation, VmBasis, RHO, XI,
};
