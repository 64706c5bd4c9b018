use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{iterated_coproduct, HopfOperad};
use crate::combinat::{Atom, ComposedBasis, Graded};
use crate::compose::Composed;
use crate::error::{Error, Result};
use crate::exactalg::{
    tensor_power, Antipode, CoalgebraMap, GradedAlgebra, GradedCoalgebra, Lin, Tensor, UnitSide,
};

/// Side on which the operad acts on the connected coalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// `d ⋆ e`, product `e·e′ = f(e) ⋆ e′`, unit on the left.
    Left,
    /// `e ⋆ d`, product `e·e′ = e ⋆ f(e′)`, unit on the right.
    Right,
}

impl Flavor {
    pub fn unit_side(self) -> UnitSide {
        match self {
            Flavor::Left => UnitSide::Left,
            Flavor::Right => UnitSide::Right,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Left => "left",
            Flavor::Right => "right",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Flavor::Left),
            "right" => Ok(Flavor::Right),
            other => Err(Error::InvalidObject(format!("unknown flavor `{other}`"))),
        }
    }
}

type EBasis<K> = <<K as Connection>::Source as GradedCoalgebra>::Basis;
type DBasis<K> = <<K as Connection>::Target as GradedCoalgebra>::Basis;

/// A coalgebra map `f: E → D` together with a compatible action of `D` on `E`.
pub trait Connection: Send + Sync {
    type Source: GradedCoalgebra;
    type Target: GradedAlgebra;

    fn name(&self) -> String;
    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn flavor(&self) -> Flavor;

    /// `f(e)`.
    fn connect(&self, e: &EBasis<Self>) -> Lin<DBasis<Self>>;

    /// `e ⋆ d` for the right flavor, `d ⋆ e` for the left flavor.
    fn act(&self, e: &EBasis<Self>, d: &DBasis<Self>) -> Lin<EBasis<Self>>;

    fn connect_lin(&self, x: &Lin<EBasis<Self>>) -> Lin<DBasis<Self>> {
        x.flat_map(|e| self.connect(e))
    }

    fn act_lin(&self, x: &Lin<EBasis<Self>>, y: &Lin<DBasis<Self>>) -> Lin<EBasis<Self>> {
        let mut out = Lin::zero();
        for (e, ce) in x.iter() {
            for (d, cd) in y.iter() {
                out.add_scaled(&self.act(e, d), &(ce * cd));
            }
        }
        out
    }
}

/// The coalgebra of a connection together with its one-sided product.
#[derive(Clone, Debug)]
pub struct ConnectedAlgebra<K>(pub K);

impl<K: Connection> GradedCoalgebra for ConnectedAlgebra<K> {
    type Basis = EBasis<K>;

    fn name(&self) -> String {
        self.0.name()
    }

    fn one(&self) -> Self::Basis {
        self.0.source().one()
    }

    fn basis(&self, n: usize) -> Vec<Self::Basis> {
        self.0.source().basis(n)
    }

    fn coproduct(&self, b: &Self::Basis) -> Tensor<Self::Basis> {
        self.0.source().coproduct(b)
    }

    fn counit(&self, b: &Self::Basis) -> crate::exactalg::Scalar {
        self.0.source().counit(b)
    }

    fn dimension(&self, n: usize) -> usize {
        self.0.source().dimension(n)
    }
}

impl<K: Connection> GradedAlgebra for ConnectedAlgebra<K> {
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> Lin<Self::Basis> {
        one_sided_product(&self.0, a, b)
    }

    fn unit_side(&self) -> UnitSide {
        self.0.flavor().unit_side()
    }
}

/// `e ⋆ f(e′)` for the right flavor, `f(e) ⋆ e′` for the left flavor.
pub fn one_sided_product<K: Connection>(conn: &K, a: &EBasis<K>, b: &EBasis<K>) -> Lin<EBasis<K>> {
    match conn.flavor() {
        Flavor::Right => conn.connect(b).flat_map(|d| conn.act(a, d)),
        Flavor::Left => conn.connect(a).flat_map(|d| conn.act(b, d)),
    }
}

/// `ρ = (1⊗f)Δ`.
pub fn coaction_rho<K: Connection>(conn: &K, e: &EBasis<K>) -> Lin<(EBasis<K>, DBasis<K>)> {
    let mut out = Lin::zero();
    for ((x, y), c) in conn.source().coproduct(e).iter() {
        for (d, cd) in conn.connect(y).iter() {
            out.add_term((x.clone(), d.clone()), c * cd);
        }
    }
    out
}

/// Antipode of the one-sided algebra, solving the identity its unit side
/// allows.
pub fn one_sided_antipode<K: Connection + Clone>(conn: &K, e: &EBasis<K>) -> Result<Lin<EBasis<K>>> {
    let alg = ConnectedAlgebra(conn.clone());
    let s = Antipode::new(&alg)?;
    s.apply(e)
}

/// Connection on `D∘C` with the operad `D` as outer factor:
/// `f(d; c⃗) = γ(d; λc⃗)` and `e ⋆ d′ = Σ (γ(d′; d_0,…,d_k); c⃗_0 ⋯ c⃗_k)` over
/// `Δ⁽ᵏ⁾e = Σ (d_0; c⃗_0) ⊗ ⋯ ⊗ (d_k; c⃗_k)`.
#[derive(Clone, Debug)]
pub struct OuterConnection<D, C, L> {
    name: String,
    composed: Composed<D, C>,
    lambda: L,
}

impl<D, C, L> OuterConnection<D, C, L>
where
    D: HopfOperad,
    D::Basis: Atom,
    C: GradedCoalgebra + Clone,
    C::Basis: Atom,
    L: CoalgebraMap<Source = C, Target = D>,
{
    pub fn new(name: impl Into<String>, lambda: L) -> Self {
        let composed = Composed::new(lambda.target().clone(), lambda.source().clone());
        OuterConnection {
            name: name.into(),
            composed,
            lambda,
        }
    }

    pub fn composed(&self) -> &Composed<D, C> {
        &self.composed
    }
}

impl<D, C, L> Connection for OuterConnection<D, C, L>
where
    D: HopfOperad,
    D::Basis: Atom,
    C: GradedCoalgebra + Clone,
    C::Basis: Atom,
    L: CoalgebraMap<Source = C, Target = D>,
{
    type Source = Composed<D, C>;
    type Target = D;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn source(&self) -> &Composed<D, C> {
        &self.composed
    }

    fn target(&self) -> &D {
        &self.composed.outer
    }

    fn flavor(&self) -> Flavor {
        Flavor::Right
    }

    fn connect(&self, e: &ComposedBasis<D::Basis, C::Basis>) -> Lin<D::Basis> {
        let images: Vec<_> = e.inner.iter().map(|c| self.lambda.apply(c)).collect();
        let operad = &self.composed.outer;
        tensor_power(&images).map_keys(|forest| operad.gamma(&e.outer, forest).expect("arity of a composed element"))
    }

    fn act(&self, e: &ComposedBasis<D::Basis, C::Basis>, d: &D::Basis) -> Lin<ComposedBasis<D::Basis, C::Basis>> {
        let operad = &self.composed.outer;
        iterated_coproduct(&self.composed, e, d.degree()).map_keys(|pieces| {
            let outers: Vec<_> = pieces.iter().map(|p| p.outer.clone()).collect();
            let inner = pieces.iter().flat_map(|p| p.inner.iter().cloned()).collect();
            ComposedBasis::new(operad.gamma(d, &outers).expect("|d|+1 pieces"), inner)
                .expect("grafted outer has one leaf per inner slot")
        })
    }
}

/// Connection on `C∘D` with the operad `D` as inner factor:
/// `f(c; d⃗) = γ(λc; d⃗)` and `d′ ⋆ (c; d_0,…,d_n)` splits `d′` into one
/// piece per leaf of the inner elements and grafts the pieces onto them.
#[derive(Clone, Debug)]
pub struct InnerConnection<C, D, L> {
    name: String,
    composed: Composed<C, D>,
    lambda: L,
}

impl<C, D, L> InnerConnection<C, D, L>
where
    D: HopfOperad,
    D::Basis: Atom,
    C: GradedCoalgebra + Clone,
    C::Basis: Atom,
    L: CoalgebraMap<Source = C, Target = D>,
{
    pub fn new(name: impl Into<String>, lambda: L) -> Self {
        let composed = Composed::new(lambda.source().clone(), lambda.target().clone());
        InnerConnection {
            name: name.into(),
            composed,
            lambda,
        }
    }

    pub fn composed(&self) -> &Composed<C, D> {
        &self.composed
    }
}

impl<C, D, L> Connection for InnerConnection<C, D, L>
where
    D: HopfOperad,
    D::Basis: Atom,
    C: GradedCoalgebra + Clone,
    C::Basis: Atom,
    L: CoalgebraMap<Source = C, Target = D>,
{
    type Source = Composed<C, D>;
    type Target = D;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn source(&self) -> &Composed<C, D> {
        &self.composed
    }

    fn target(&self) -> &D {
        &self.composed.inner
    }

    fn flavor(&self) -> Flavor {
        Flavor::Left
    }

    fn connect(&self, e: &ComposedBasis<C::Basis, D::Basis>) -> Lin<D::Basis> {
        let operad = &self.composed.inner;
        self.lambda
            .apply(&e.outer)
            .map_keys(|base| operad.gamma(base, &e.inner).expect("arity of a composed element"))
    }

    fn act(&self, e: &ComposedBasis<C::Basis, D::Basis>, d: &D::Basis) -> Lin<ComposedBasis<C::Basis, D::Basis>> {
        let operad = &self.composed.inner;
        let leaves: usize = e.inner.iter().map(|x| x.degree() + 1).sum();
        iterated_coproduct(operad, d, leaves - 1).map_keys(|pieces| {
            let mut rest = pieces.as_slice();
            let inner = e
                .inner
                .iter()
                .map(|x| {
                    let (mine, tail) = rest.split_at(x.degree() + 1);
                    rest = tail;
                    operad.gamma(x, mine).expect("one piece per leaf")
                })
                .collect();
            ComposedBasis {
                outer: e.outer.clone(),
                inner,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basehopf::{CSym, KappaHat, YSym};
    use crate::combinat::{BinaryTree, Comb};
    use crate::exactalg::{int, Identity};

    #[test]
    fn cc_right_product_example() {
        let conn = OuterConnection::new("cc", Identity(CSym));
        let p = |s: &str| s.parse::<ComposedBasis<Comb, Comb>>().unwrap();
        let expected: Lin<_> = [(p("[1,1,3]"), int(2)), (p("[1,2,2]"), int(1)), (p("[1,3,1]"), int(1))]
            .into_iter()
            .collect();
        assert_eq!(one_sided_product(&conn, &p("[1,3]"), &p("[2]")), expected);
        // the unit is only a right identity
        assert_eq!(one_sided_product(&conn, &p("[2]"), &p("[1]")), Lin::basis(p("[2]")));
        assert_eq!(one_sided_product(&conn, &p("[1]"), &p("[2]")), Lin::basis(p("[1,1]")));
    }

    #[test]
    fn cksym_product_example() {
        let conn = InnerConnection::new("cksym", KappaHat);
        let w = |s: &str| s.parse::<ComposedBasis<BinaryTree, Comb>>().unwrap();
        let expected: Lin<_> = [
            ("3,2,1", 1),
            ("1,4,1", 3),
            ("1,2,3", 1),
            ("2,3,1", 2),
            ("2,2,2", 1),
            ("1,3,2", 2),
        ]
        .iter()
        .map(|(s, c)| (w(s), int(*c)))
        .collect();
        let product = one_sided_product(&conn, &w("2,1"), &w("1,2,1"));
        assert_eq!(product, expected);
        assert_eq!(product.coefficient_sum(), int(10));
    }

    #[test]
    fn antipode_of_a_primitive() {
        let conn = OuterConnection::new("psym", Identity(YSym));
        let e = conn.source().basis(1);
        for x in e {
            let unit_times: Lin<_> = one_sided_product(&conn, &conn.source().one(), &x);
            assert_eq!(one_sided_antipode(&conn, &x).unwrap(), -&unit_times);
        }
    }

    #[test]
    fn coaction_of_the_unit() {
        let conn = InnerConnection::new("cc-left", Identity(CSym));
        let one = conn.source().one();
        assert_eq!(coaction_rho(&conn, &one), Lin::basis((one, Comb(0))));
    }
}
