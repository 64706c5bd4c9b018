//! Graded Hopf operads, the products they induce, and connections.

mod connection;

pub use connection::{
    coaction_rho, one_sided_antipode, one_sided_product, ConnectedAlgebra, Connection, Flavor, InnerConnection,
    OuterConnection,
};

use crate::basehopf::{CSym, YSym};
use crate::combinat::{Atom, BinaryTree, Comb, Graded};
use crate::error::{Error, Result};
use crate::exactalg::{GradedCoalgebra, GradedConnectedHopf, Lin};

/// A graded connected Hopf algebra whose basis carries operadic composition.
pub trait HopfOperad: GradedConnectedHopf + Clone
where
    Self::Basis: Atom,
{
    /// `γ(base; forest)` with one forest entry per leaf of `base`.
    fn gamma(&self, base: &Self::Basis, forest: &[Self::Basis]) -> Result<Self::Basis>;
}

impl HopfOperad for YSym {
    fn gamma(&self, base: &BinaryTree, forest: &[BinaryTree]) -> Result<BinaryTree> {
        gamma_ysym(base, forest)
    }
}

impl HopfOperad for CSym {
    fn gamma(&self, base: &Comb, forest: &[Comb]) -> Result<Comb> {
        gamma_csym(base, forest)
    }
}

pub fn gamma_ysym(base: &BinaryTree, forest: &[BinaryTree]) -> Result<BinaryTree> {
    BinaryTree::graft(forest, base)
}

/// Grafting followed by combing: only the total degree survives.
pub fn gamma_csym(base: &Comb, forest: &[Comb]) -> Result<Comb> {
    if forest.len() != base.0 + 1 {
        return Err(Error::ArityMismatch {
            expected: base.0 + 1,
            found: forest.len(),
        });
    }
    Ok(Comb(base.0 + forest.iter().map(|c| c.0).sum::<usize>()))
}

/// `Δ⁽ⁿ⁾(b)` as a combination of `n+1`-tuples, with `Δ⁽⁰⁾ = id` and each
/// further step expanding the first factor.
pub fn iterated_coproduct<A: GradedCoalgebra>(alg: &A, b: &A::Basis, n: usize) -> Lin<Vec<A::Basis>> {
    let mut acc: Lin<Vec<A::Basis>> = Lin::basis(vec![b.clone()]);
    for _ in 0..n {
        acc = acc.flat_map(|tuple| {
            alg.coproduct(&tuple[0]).map_keys(|(x, y)| {
                let mut next = Vec::with_capacity(tuple.len() + 1);
                next.push(x.clone());
                next.push(y.clone());
                next.extend_from_slice(&tuple[1..]);
                next
            })
        });
    }
    acc
}

/// `a·b = Σ γ(b; Δ⁽|b|⁾a)`. With `swapped`, the roles of `a` and `b` are
/// exchanged: `Σ γ(a; Δ⁽|a|⁾b)`.
pub fn operad_product<D>(operad: &D, a: &D::Basis, b: &D::Basis, swapped: bool) -> Lin<D::Basis>
where
    D: HopfOperad,
    D::Basis: Atom,
{
    let (spread, base) = if swapped { (b, a) } else { (a, b) };
    iterated_coproduct(operad, spread, base.degree())
        .map_keys(|forest| operad.gamma(base, forest).expect("iterated coproduct has |base|+1 factors"))
}
