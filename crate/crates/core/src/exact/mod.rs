//! Exact linear algebra over the Gaussian rationals.

pub mod basis;
pub mod elim;
pub mod linear_map;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod sym;
pub mod tensor;

pub use basis::{binomial, enumerate_basis, Basis, BasisIndex, Factor, FactorKind, SpaceDescriptor};
pub use linear_map::{rank_and_kernel, LinearMap};
pub use matrix::Matrix;
pub use poly::{Monomial, Poly};
pub use scalar::GaussianRational;
pub use sym::{antisymmetrize, symmetrize};
pub use tensor::IndexedTensor;
