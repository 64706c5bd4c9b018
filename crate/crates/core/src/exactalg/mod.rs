//! Exact linear algebra over formal combinations of basis objects.

mod antipode;
mod lin;
mod linalg;
mod series;
mod traits;

pub use antipode::{antipode_connected, Antipode, ConvolutionSide};
pub use lin::{int, lin_tensor, tensor_power, Lin, Scalar, Tensor};
pub use linalg::{kernel_basis, rank, EchelonForm};
pub use series::{binomial, catalan, factorial, series_inverse_one_minus, IntSeries};
pub use traits::{
    coproduct_lin, product_lin, tensor_product, BasisElement, CoalgebraMap, GradedAlgebra,
    GradedCoalgebra, GradedConnectedHopf, Identity, UnitSide,
};

use crate::combinat::Graded;
use crate::error::{Error, Result};

/// `Δ(b) − b⊗1 − 1⊗b`.
pub fn reduced_coproduct<A: GradedCoalgebra>(alg: &A, b: &A::Basis) -> Result<Tensor<A::Basis>> {
    if b.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    let one = alg.one();
    let mut out = alg.coproduct(b);
    out.add_term((b.clone(), one.clone()), -int(1));
    out.add_term((one, b.clone()), -int(1));
    Ok(out)
}

/// Dimension of the primitive subspace in degree `n`.
pub fn primitive_dimension<A: GradedCoalgebra>(alg: &A, n: usize) -> usize {
    let basis = alg.basis(n);
    if n == 0 {
        return 0;
    }
    let images: Vec<_> = basis
        .iter()
        .map(|b| reduced_coproduct(alg, b).expect("positive degree"))
        .collect();
    basis.len() - rank(&images)
}

/// A basis of the primitive subspace in degree `n ≥ 1`.
pub fn primitive_basis<A: GradedCoalgebra>(alg: &A, n: usize) -> Vec<Lin<A::Basis>> {
    if n == 0 {
        return Vec::new();
    }
    let basis = alg.basis(n);
    kernel_basis(&basis, |b| reduced_coproduct(alg, b).expect("positive degree"))
}
