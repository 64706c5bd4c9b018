use std::cell::RefCell;
use std::collections::HashMap;

use super::{Lin, Scalar, UnitSide};
use crate::combinat::Graded;
use crate::error::{Error, Result};
use crate::exactalg::GradedAlgebra;

/// Which convolution identity the antipode solves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvolutionSide {
    /// `m(S⊗id)Δ = ηε`.
    Left,
    /// `m(id⊗S)Δ = ηε`.
    Right,
}

impl ConvolutionSide {
    /// The recursion isolates `S(e)` through the term `S(e)·1` or `1·S(e)`,
    /// so the unit must be an identity on that side.
    pub fn for_unit(side: UnitSide) -> ConvolutionSide {
        match side {
            UnitSide::TwoSided | UnitSide::Right => ConvolutionSide::Left,
            UnitSide::Left => ConvolutionSide::Right,
        }
    }

    fn compatible(self, unit: UnitSide) -> bool {
        matches!(
            (self, unit),
            (_, UnitSide::TwoSided) | (ConvolutionSide::Left, UnitSide::Right) | (ConvolutionSide::Right, UnitSide::Left)
        )
    }
}

/// Recursive antipode with a per-instance memo table.
pub struct Antipode<'a, A: GradedAlgebra> {
    alg: &'a A,
    side: ConvolutionSide,
    cache: RefCell<HashMap<A::Basis, Lin<A::Basis>>>,
}

impl<'a, A: GradedAlgebra> Antipode<'a, A> {
    /// Antipode solving the convolution identity that the unit side allows.
    pub fn new(alg: &'a A) -> Result<Self> {
        Self::with_side(alg, ConvolutionSide::for_unit(alg.unit_side()))
    }

    pub fn with_side(alg: &'a A, side: ConvolutionSide) -> Result<Self> {
        if alg.dimension(0) != 1 {
            return Err(Error::InvalidObject(format!("{} is not connected", alg.name())));
        }
        if !side.compatible(alg.unit_side()) {
            return Err(Error::NonIsolating(match side {
                ConvolutionSide::Left => "m(S⊗id)Δ needs e·1 = e",
                ConvolutionSide::Right => "m(id⊗S)Δ needs 1·e = e",
            }));
        }
        Ok(Antipode {
            alg,
            side,
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn side(&self) -> ConvolutionSide {
        self.side
    }

    pub fn apply(&self, b: &A::Basis) -> Result<Lin<A::Basis>> {
        if let Some(hit) = self.cache.borrow().get(b) {
            return Ok(hit.clone());
        }
        let one = self.alg.one();
        let n = b.degree();
        let mut out = Lin::term(one.clone(), self.alg.counit(b));
        if n > 0 {
            for ((x, y), c) in self.alg.coproduct(b).iter() {
                let (known, rest) = match self.side {
                    ConvolutionSide::Left => (y, x),
                    ConvolutionSide::Right => (x, y),
                };
                if rest.degree() == n {
                    if rest != b || known != &one || c != &Scalar::from_integer(1.into()) {
                        return Err(Error::MalformedCoproduct(format!(
                            "unexpected top-degree term {x} ⊗ {y} in Δ({b})"
                        )));
                    }
                    continue;
                }
                let s = self.apply(rest)?;
                let term = match self.side {
                    ConvolutionSide::Left => super::product_lin(self.alg, &s, &Lin::basis(known.clone())),
                    ConvolutionSide::Right => super::product_lin(self.alg, &Lin::basis(known.clone()), &s),
                };
                out.add_scaled(&term, &-c.clone());
            }
        }
        self.cache.borrow_mut().insert(b.clone(), out.clone());
        Ok(out)
    }

    pub fn apply_lin(&self, x: &Lin<A::Basis>) -> Result<Lin<A::Basis>> {
        let mut out = Lin::zero();
        for (b, c) in x.iter() {
            out.add_scaled(&self.apply(b)?, c);
        }
        Ok(out)
    }

    /// `m(S⊗id)Δ(b)` or `m(id⊗S)Δ(b)` according to the side.
    pub fn convolution(&self, b: &A::Basis) -> Result<Lin<A::Basis>> {
        let mut out = Lin::zero();
        for ((x, y), c) in self.alg.coproduct(b).iter() {
            let term = match self.side {
                ConvolutionSide::Left => super::product_lin(self.alg, &self.apply(x)?, &Lin::basis(y.clone())),
                ConvolutionSide::Right => super::product_lin(self.alg, &Lin::basis(x.clone()), &self.apply(y)?),
            };
            out.add_scaled(&term, c);
        }
        Ok(out)
    }
}

/// Antipode of a single basis element, solving the identity its unit allows.
pub fn antipode_connected<A: GradedAlgebra>(alg: &A, b: &A::Basis) -> Result<Lin<A::Basis>> {
    Antipode::new(alg)?.apply(b)
}
