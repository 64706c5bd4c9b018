//! The named one-sided Hopf algebras: painted trees, composite trees,
//! compositions and simplex faces.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::basehopf::{CSym, KappaHat, YSym};
use crate::combinat::{phi, phi_inv, BinaryTree, Comb, ComposedBasis, Composition, Graded, SimplexFace};
use crate::error::{Error, Result};
use crate::exactalg::{GradedAlgebra, GradedCoalgebra, Identity, Lin, Scalar, Tensor};
use crate::operadic::{coaction_rho, ConnectedAlgebra, Connection, Flavor, InnerConnection, OuterConnection};

pub type PaintedBasis = ComposedBasis<BinaryTree, BinaryTree>;
pub type WeightedBasis = ComposedBasis<BinaryTree, Comb>;
pub type CompositionBasis = ComposedBasis<Comb, Comb>;

pub type PSymConnection = OuterConnection<YSym, YSym, Identity<YSym>>;
pub type CkSymConnection = InnerConnection<YSym, CSym, KappaHat>;
pub type CcRightConnection = OuterConnection<CSym, CSym, Identity<CSym>>;
pub type CcLeftConnection = InnerConnection<CSym, CSym, Identity<CSym>>;

pub type PSym = ConnectedAlgebra<PSymConnection>;
pub type CkSym = ConnectedAlgebra<CkSymConnection>;
pub type CcRight = ConnectedAlgebra<CcRightConnection>;
pub type CcLeft = ConnectedAlgebra<CcLeftConnection>;
pub type DeltaSym = ConnectedAlgebra<DeltaSymConnection>;

/// Painted trees over YSym, connected to YSym by the identity.
pub fn psym() -> PSym {
    ConnectedAlgebra(OuterConnection::new("psym", Identity(YSym)))
}

/// Composite trees, connected to CSym through `κ̂` on the base tree.
pub fn cksym() -> CkSym {
    ConnectedAlgebra(InnerConnection::new("cksym", KappaHat))
}

pub fn cc_right() -> CcRight {
    ConnectedAlgebra(OuterConnection::new("cc-right", Identity(CSym)))
}

pub fn cc_left() -> CcLeft {
    ConnectedAlgebra(InnerConnection::new("cc-left", Identity(CSym)))
}

pub fn deltasym(variant: DeltaVariant) -> DeltaSym {
    ConnectedAlgebra(DeltaSymConnection::new(variant))
}

/// `q⁺`: the element `q` with every node painted.
pub fn painted_completely(q: &PaintedBasis) -> Lin<PaintedBasis> {
    psym().0.connect(q).map_keys(|shape| ComposedBasis {
        outer: shape.clone(),
        inner: vec![BinaryTree::Leaf; shape.degree() + 1],
    })
}

pub fn psym_coproduct(p: &PaintedBasis) -> Tensor<PaintedBasis> {
    psym().coproduct(p)
}

pub fn psym_product(p: &PaintedBasis, q: &PaintedBasis) -> Lin<PaintedBasis> {
    psym().product(p, q)
}

pub fn psym_coaction(p: &PaintedBasis) -> Lin<(PaintedBasis, BinaryTree)> {
    coaction_rho(&psym().0, p)
}

pub fn cksym_coproduct(a: &WeightedBasis) -> Tensor<WeightedBasis> {
    cksym().coproduct(a)
}

pub fn cksym_product(a: &WeightedBasis, b: &WeightedBasis) -> Lin<WeightedBasis> {
    cksym().product(a, b)
}

pub fn cc_coproduct(c: &CompositionBasis) -> Tensor<CompositionBasis> {
    cc_right().coproduct(c)
}

pub fn cc_product_right(a: &CompositionBasis, b: &CompositionBasis) -> Lin<CompositionBasis> {
    cc_right().product(a, b)
}

pub fn cc_product_left(a: &CompositionBasis, b: &CompositionBasis) -> Lin<CompositionBasis> {
    cc_left().product(a, b)
}

/// Subsets of `[n]` with the deconcatenation-style coproduct.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DeltaSymCoalgebra;

impl GradedCoalgebra for DeltaSymCoalgebra {
    type Basis = SimplexFace;

    fn name(&self) -> String {
        "deltasym".into()
    }

    fn one(&self) -> SimplexFace {
        SimplexFace::new(0, []).expect("empty subset")
    }

    fn basis(&self, n: usize) -> Vec<SimplexFace> {
        SimplexFace::all(n)
    }

    fn coproduct(&self, s: &SimplexFace) -> Tensor<SimplexFace> {
        deltasym_coproduct_native(s)
    }

    fn dimension(&self, n: usize) -> usize {
        1 << n
    }
}

/// `Δ(S ⊆ [n]) = Σ_i ({x ≤ i} ⊆ [i]) ⊗ ({x − i : x > i} ⊆ [n − i])`.
pub fn deltasym_coproduct_native(s: &SimplexFace) -> Tensor<SimplexFace> {
    let n = s.n();
    (0..=n)
        .map(|i| {
            let left = SimplexFace::new(i, s.subset().iter().copied().filter(|&x| x <= i));
            let right = SimplexFace::new(n - i, s.subset().iter().filter(|&&x| x > i).map(|&x| x - i));
            ((left.expect("subset of [i]"), right.expect("subset of [n-i]")), Scalar::one())
        })
        .collect()
}

/// The cc coproduct carried over to subsets by `φ`.
pub fn deltasym_coproduct_transported(s: &SimplexFace) -> Tensor<SimplexFace> {
    cc_coproduct(&phi(s).to_composed()).map_keys(|(a, b)| (to_face(a), to_face(b)))
}

fn to_face(c: &CompositionBasis) -> SimplexFace {
    phi_inv(&Composition::from_composed(c))
}

/// Which way the cc product is carried over to subsets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DeltaVariant {
    /// `s·t = φ⁻¹(φ(t)·φ(s))`.
    #[default]
    Swap,
    /// `s·t = φ⁻¹(φ(s)·φ(t))`.
    NoSwap,
}

impl fmt::Display for DeltaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeltaVariant::Swap => "swap",
            DeltaVariant::NoSwap => "noswap",
        })
    }
}

impl FromStr for DeltaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "swap" => Ok(DeltaVariant::Swap),
            "noswap" => Ok(DeltaVariant::NoSwap),
            other => Err(Error::InvalidObject(format!("unknown variant `{other}`"))),
        }
    }
}

/// The cc right connection carried over by `φ`. Since CSym is commutative,
/// the order-swapped product is again a connection, acting on the left.
#[derive(Clone, Debug)]
pub struct DeltaSymConnection {
    variant: DeltaVariant,
    cc: CcRightConnection,
}

impl DeltaSymConnection {
    pub fn new(variant: DeltaVariant) -> Self {
        DeltaSymConnection {
            variant,
            cc: cc_right().0,
        }
    }

    pub fn variant(&self) -> DeltaVariant {
        self.variant
    }
}

impl Connection for DeltaSymConnection {
    type Source = DeltaSymCoalgebra;
    type Target = CSym;

    fn name(&self) -> String {
        match self.variant {
            DeltaVariant::Swap => "deltasym".into(),
            DeltaVariant::NoSwap => "deltasym-noswap".into(),
        }
    }

    fn source(&self) -> &DeltaSymCoalgebra {
        &DeltaSymCoalgebra
    }

    fn target(&self) -> &CSym {
        &CSym
    }

    fn flavor(&self) -> Flavor {
        match self.variant {
            DeltaVariant::Swap => Flavor::Left,
            DeltaVariant::NoSwap => Flavor::Right,
        }
    }

    fn connect(&self, s: &SimplexFace) -> Lin<Comb> {
        Lin::basis(Comb(s.n()))
    }

    fn act(&self, s: &SimplexFace, d: &Comb) -> Lin<SimplexFace> {
        self.cc.act(&phi(s).to_composed(), d).map_keys(to_face)
    }
}

pub fn deltasym_product(s: &SimplexFace, t: &SimplexFace, variant: DeltaVariant) -> Lin<SimplexFace> {
    deltasym(variant).product(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn face(s: &str) -> SimplexFace {
        s.parse().unwrap()
    }

    fn painted(s: &str) -> PaintedBasis {
        s.parse().unwrap()
    }

    #[test]
    fn native_coproduct_of_a_singleton() {
        let d = deltasym_coproduct_native(&face("{1}/4"));
        assert_eq!(d.len(), 5);
        for (l, r) in [("{}/0", "{1}/4"), ("{1}/1", "{}/3"), ("{1}/2", "{}/2"), ("{1}/3", "{}/1"), ("{1}/4", "{}/0")] {
            assert_eq!(d.coefficient(&(face(l), face(r))), int(1));
        }
        let one = face("{}/0");
        assert_eq!(deltasym_coproduct_native(&one), Lin::basis((one.clone(), one)));
    }

    #[test]
    fn native_and_transported_coproducts_agree() {
        for n in 0..=6 {
            for s in SimplexFace::all(n) {
                assert_eq!(deltasym_coproduct_native(&s), deltasym_coproduct_transported(&s), "{s}");
            }
        }
    }

    #[test]
    fn psym_unit_laws() {
        let unit = painted("{.}/.");
        for q in psym().basis(3) {
            assert_eq!(psym_product(&q, &unit), Lin::basis(q.clone()));
            assert_eq!(psym_product(&unit, &q), painted_completely(&q));
        }
    }

    #[test]
    fn deltasym_product_example_has_four_terms() {
        let p = deltasym_product(&face("{}/1"), &face("{}/3"), DeltaVariant::Swap);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn swap_variant_reverses_cc() {
        for n in 0..=3 {
            for m in 0..=3 - n {
                for s in SimplexFace::all(n) {
                    for t in SimplexFace::all(m) {
                        let via_cc = cc_product_right(&phi(&t).to_composed(), &phi(&s).to_composed()).map_keys(to_face);
                        assert_eq!(deltasym_product(&s, &t, DeltaVariant::Swap), via_cc);
                        let direct = cc_product_right(&phi(&s).to_composed(), &phi(&t).to_composed()).map_keys(to_face);
                        assert_eq!(deltasym_product(&s, &t, DeltaVariant::NoSwap), direct);
                    }
                }
            }
        }
    }
}
