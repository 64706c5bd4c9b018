use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{Lin, Scalar, Tensor};
use crate::combinat::Graded;
use crate::error::ParseError;

/// What every index object needs in order to key a formal combination.
pub trait BasisElement:
    Graded + Clone + Ord + Hash + fmt::Debug + fmt::Display + FromStr<Err = ParseError> + Send + Sync + 'static
{
}

impl<T> BasisElement for T where
    T: Graded + Clone + Ord + Hash + fmt::Debug + fmt::Display + FromStr<Err = ParseError> + Send + Sync + 'static
{
}

/// Side on which the unit is an identity for the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnitSide {
    TwoSided,
    /// `1·e = e`.
    Left,
    /// `e·1 = e`.
    Right,
}

impl fmt::Display for UnitSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitSide::TwoSided => "two-sided",
            UnitSide::Left => "left",
            UnitSide::Right => "right",
        })
    }
}

pub trait GradedCoalgebra: Send + Sync {
    type Basis: BasisElement;

    fn name(&self) -> String;

    /// The degree-0 basis element.
    fn one(&self) -> Self::Basis;

    /// Basis of the degree-`n` component in canonical order.
    fn basis(&self, n: usize) -> Vec<Self::Basis>;

    fn coproduct(&self, b: &Self::Basis) -> Tensor<Self::Basis>;

    fn counit(&self, b: &Self::Basis) -> Scalar {
        if b.degree() == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    fn dimension(&self, n: usize) -> usize {
        self.basis(n).len()
    }
}

pub trait GradedAlgebra: GradedCoalgebra {
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> Lin<Self::Basis>;

    fn unit_side(&self) -> UnitSide {
        UnitSide::TwoSided
    }
}

/// Graded connected Hopf algebra with a two-sided unit.
pub trait GradedConnectedHopf: GradedAlgebra {}

/// A degree-preserving linear map between coalgebras, given on basis elements.
pub trait CoalgebraMap: Send + Sync {
    type Source: GradedCoalgebra;
    type Target: GradedCoalgebra;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn apply(&self, b: &<Self::Source as GradedCoalgebra>::Basis) -> Lin<<Self::Target as GradedCoalgebra>::Basis>;

    fn name(&self) -> String {
        format!("{} -> {}", self.source().name(), self.target().name())
    }

    fn apply_lin(
        &self,
        x: &Lin<<Self::Source as GradedCoalgebra>::Basis>,
    ) -> Lin<<Self::Target as GradedCoalgebra>::Basis> {
        x.flat_map(|b| self.apply(b))
    }
}

#[derive(Clone, Debug, Default)]
pub struct Identity<A>(pub A);

impl<A: GradedCoalgebra> CoalgebraMap for Identity<A> {
    type Source = A;
    type Target = A;

    fn source(&self) -> &A {
        &self.0
    }

    fn target(&self) -> &A {
        &self.0
    }

    fn apply(&self, b: &A::Basis) -> Lin<A::Basis> {
        Lin::basis(b.clone())
    }

    fn name(&self) -> String {
        format!("id[{}]", self.0.name())
    }
}

pub fn coproduct_lin<A: GradedCoalgebra>(alg: &A, x: &Lin<A::Basis>) -> Tensor<A::Basis> {
    x.flat_map(|b| alg.coproduct(b))
}

pub fn product_lin<A: GradedAlgebra>(alg: &A, x: &Lin<A::Basis>, y: &Lin<A::Basis>) -> Lin<A::Basis> {
    let mut out = Lin::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&alg.product(a, b), &(ca * cb));
        }
    }
    out
}

/// Product in `A ⊗ A`: `(a⊗b)(c⊗d) = ac ⊗ bd`.
pub fn tensor_product<A: GradedAlgebra>(alg: &A, x: &Tensor<A::Basis>, y: &Tensor<A::Basis>) -> Tensor<A::Basis> {
    let mut out = Lin::zero();
    for ((a, b), cx) in x.iter() {
        for ((c, d), cy) in y.iter() {
            let left = alg.product(a, c);
            let right = alg.product(b, d);
            out.add_scaled(&super::lin_tensor(&left, &right), &(cx * cy));
        }
    }
    out
}
