//! Numerical kernels: compressed sparse rows, a dense Padé exponential and
//! the Krylov action of a matrix exponential on a vector.

mod csr;
mod expm;
mod krylov;

pub use csr::CsrMatrix;
pub use expm::expm;
pub use krylov::{expv, KrylovOptions, KrylovPropagator, LinearOperator};

use nalgebra::ComplexField;

/// Field of the vectors the kernels act on: `f64` or `Complex64`.
pub trait Scalar: ComplexField<RealField = f64> + Copy {}

impl<T: ComplexField<RealField = f64> + Copy> Scalar for T {}

pub(crate) fn norm2<T: Scalar>(v: &[T]) -> f64 {
    v.iter().map(|z| z.modulus_squared()).sum::<f64>().sqrt()
}
