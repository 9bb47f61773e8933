//! The flat model `ℍⁿ`: polynomial sections, the operators `𝔇`, `𝔇⁰` and
//! kernels of the quaternionic condition at bounded degree.

pub mod dirac;
pub mod field;

pub use dirac::{dirac_d, dirac_d0, dirac_operator, identification_matrix, is_quaternionic,
    kernel_dimension, nabla, quaternionic_condition, quaternionic_fields, section_space,
    trace_of_dirac};
pub use field::{PolyField, PolySection};
