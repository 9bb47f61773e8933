//! Symplectic and quaternionic structures on `E = ℂ^{2n}` and `H = ℂ²`.

pub mod cg;
pub mod killing;
pub mod space;
pub mod trace;

pub use cg::{cg_projectors, CgProjectors};
pub use killing::{killing_form_check, q_basis_endos, KillingCheck};
pub use space::{omega_dual_sharp_h, real_structure, tau, EHContext, QuaternionicSpace};
pub use trace::{trace_map, tracefree_projector, wedge_identity};
