//! Calculus on the fiber of `P(H*)`: lifts, `ρ_m`, `τ̃`, and the flat
//! structure equations.

pub mod form;
pub mod lift;
pub mod poly;
pub mod structure;

pub use form::{exterior_derivative, FiberForm, FormMask};
pub use lift::{equivariance_holds, lift_reconstruct, lift_section, rho_homomorphism_holds,
    rho_m_matrix, satisfies_reality_criterion, tau_tilde, SmHValuedFiberFn};
pub use poly::FiberPoly;
pub use structure::{connection_forms, verify_structure_equations,
    verify_structure_equations_with, Fault, IdentityCheck, QuatForm, StructureReport,
    STRUCTURE_CHECKS};
