//! Composition of graded coalgebras: forests of inner elements over an
//! outer element.

use num_traits::Zero;

use crate::combinat::{Atom, ComposedBasis, Graded};
use crate::error::{Error, Result};
use crate::exactalg::{
    primitive_basis, tensor_power, CoalgebraMap, GradedCoalgebra, IntSeries, Lin, Scalar, Tensor,
};

/// `D∘C`, with `D` the outer (base) factor and `C` the inner (forest) factor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Composed<D, C> {
    pub outer: D,
    pub inner: C,
}

impl<D, C> Composed<D, C> {
    pub fn new(outer: D, inner: C) -> Self {
        Composed { outer, inner }
    }
}

impl<D, C> Composed<D, C>
where
    D: GradedCoalgebra,
    C: GradedCoalgebra,
    D::Basis: Atom,
    C::Basis: Atom,
{
    /// The compositional coproduct. Fails when a term of `Δ_D(d)` has a
    /// left factor of degree larger than `d`.
    pub fn try_coproduct(&self, e: &ComposedBasis<D::Basis, C::Basis>) -> Result<Tensor<ComposedBasis<D::Basis, C::Basis>>> {
        let n = e.outer.degree();
        let mut out = Lin::zero();
        for ((d1, d2), cd) in self.outer.coproduct(&e.outer).iter() {
            let i = d1.degree();
            if i > n || d1.degree() + d2.degree() != n {
                return Err(Error::MalformedCoproduct(format!(
                    "{} term {d1} ⊗ {d2} does not split degree {n}",
                    self.outer.name()
                )));
            }
            for ((c1, c2), cc) in self.inner.coproduct(&e.inner[i]).iter() {
                let mut left = e.inner[..i].to_vec();
                left.push(c1.clone());
                let mut right = vec![c2.clone()];
                right.extend_from_slice(&e.inner[i + 1..]);
                let key = (
                    ComposedBasis { outer: d1.clone(), inner: left },
                    ComposedBasis { outer: d2.clone(), inner: right },
                );
                out.add_term(key, cd * cc);
            }
        }
        Ok(out)
    }

    /// `(1_D; 1_C)`.
    pub fn unit_element(&self) -> ComposedBasis<D::Basis, C::Basis> {
        ComposedBasis {
            outer: self.outer.one(),
            inner: vec![self.inner.one()],
        }
    }

    /// Number of basis elements in degrees `0..=n`, counted from the factor
    /// dimensions.
    pub fn dimension_series(&self, n: usize) -> IntSeries {
        let d: IntSeries = (0..=n).map(|k| self.outer.dimension(k) as i128).collect();
        let c: IntSeries = (0..=n).map(|k| self.inner.dimension(k) as i128).collect();
        dims_general(&d, &c, n)
    }
}

impl<D, C> GradedCoalgebra for Composed<D, C>
where
    D: GradedCoalgebra,
    C: GradedCoalgebra,
    D::Basis: Atom,
    C::Basis: Atom,
{
    type Basis = ComposedBasis<D::Basis, C::Basis>;

    fn name(&self) -> String {
        format!("{}.{}", self.outer.name(), self.inner.name())
    }

    fn one(&self) -> Self::Basis {
        self.unit_element()
    }

    fn basis(&self, n: usize) -> Vec<Self::Basis> {
        ComposedBasis::enumerate(n, &|k| self.outer.basis(k), &|k| self.inner.basis(k))
    }

    fn coproduct(&self, e: &Self::Basis) -> Tensor<Self::Basis> {
        self.try_coproduct(e).expect("factor coproducts are graded")
    }

    fn counit(&self, e: &Self::Basis) -> Scalar {
        composed_counit(&self.outer, &self.inner, e)
    }

    fn dimension(&self, n: usize) -> usize {
        self.dimension_series(n)[n] as usize
    }
}

/// `ε_D(d) · Π ε_C(c_j)`.
pub fn composed_counit<D: GradedCoalgebra, C: GradedCoalgebra>(
    outer: &D,
    inner: &C,
    e: &ComposedBasis<D::Basis, C::Basis>,
) -> Scalar {
    let mut out = outer.counit(&e.outer);
    for c in &e.inner {
        if out.is_zero() {
            break;
        }
        out *= inner.counit(c);
    }
    out
}

/// `(d; c_0, …, c_n) ↦ (ψd; φc_0, …, φc_n)` for an inner map `φ` and an outer
/// map `ψ`.
#[derive(Clone, Debug)]
pub struct ComposedMorphism<F: CoalgebraMap, G: CoalgebraMap> {
    pub inner_map: F,
    pub outer_map: G,
    source: Composed<G::Source, F::Source>,
    target: Composed<G::Target, F::Target>,
}

impl<F, G> ComposedMorphism<F, G>
where
    F: CoalgebraMap,
    G: CoalgebraMap,
    F::Source: Clone,
    F::Target: Clone,
    G::Source: Clone,
    G::Target: Clone,
{
    pub fn new(inner_map: F, outer_map: G) -> Self {
        let source = Composed::new(outer_map.source().clone(), inner_map.source().clone());
        let target = Composed::new(outer_map.target().clone(), inner_map.target().clone());
        ComposedMorphism {
            inner_map,
            outer_map,
            source,
            target,
        }
    }
}

type SourceBasis<M> = <<M as CoalgebraMap>::Source as GradedCoalgebra>::Basis;
type TargetBasis<M> = <<M as CoalgebraMap>::Target as GradedCoalgebra>::Basis;

impl<F, G> CoalgebraMap for ComposedMorphism<F, G>
where
    F: CoalgebraMap,
    G: CoalgebraMap,
    SourceBasis<F>: Atom,
    TargetBasis<F>: Atom,
    SourceBasis<G>: Atom,
    TargetBasis<G>: Atom,
{
    type Source = Composed<G::Source, F::Source>;
    type Target = Composed<G::Target, F::Target>;

    fn source(&self) -> &Self::Source {
        &self.source
    }

    fn target(&self) -> &Self::Target {
        &self.target
    }

    fn apply(&self, e: &ComposedBasis<SourceBasis<G>, SourceBasis<F>>) -> Lin<ComposedBasis<TargetBasis<G>, TargetBasis<F>>> {
        let outer = self.outer_map.apply(&e.outer);
        let inner: Vec<_> = e.inner.iter().map(|c| self.inner_map.apply(c)).collect();
        let forests = tensor_power(&inner);
        let mut out = Lin::zero();
        for (d, cd) in outer.iter() {
            for (f, cf) in forests.iter() {
                let key = ComposedBasis::new(d.clone(), f.clone()).expect("coalgebra maps preserve degree");
                out.add_term(key, cd * cf);
            }
        }
        out
    }

    fn name(&self) -> String {
        format!("{}∘{}", self.outer_map.name(), self.inner_map.name())
    }
}

/// The vectors `(δ; 1, c_1, …, c_{m−1}, 1)` for outer primitives `δ` of
/// degree `m`, and `(1; γ)` for inner primitives `γ`, of total degree `n`.
/// They span the primitives of `D∘C` but need not be independent.
pub fn primitive_spanning_set<D, C>(
    e: &Composed<D, C>,
    n: usize,
    outer_primitives: &[Lin<D::Basis>],
    inner_primitives: &[Lin<C::Basis>],
) -> Vec<Lin<ComposedBasis<D::Basis, C::Basis>>>
where
    D: GradedCoalgebra,
    C: GradedCoalgebra,
    D::Basis: Atom,
    C::Basis: Atom,
{
    let one_c = e.inner.one();
    let one_d = e.outer.one();
    let mut out = Vec::new();
    for delta in outer_primitives {
        let Some(m) = delta.keys().next().map(Graded::degree) else { continue };
        if m == 0 || m > n {
            continue;
        }
        let middles = crate::combinat::forests(m - 1, n - m, &|k| e.inner.basis(k));
        for middle in middles {
            let mut inner = vec![one_c.clone()];
            inner.extend(middle);
            inner.push(one_c.clone());
            out.push(delta.map_keys(|d| ComposedBasis {
                outer: d.clone(),
                inner: inner.clone(),
            }));
        }
    }
    for gamma in inner_primitives {
        if gamma.keys().next().map(Graded::degree) == Some(n) {
            out.push(gamma.map_keys(|c| ComposedBasis {
                outer: one_d.clone(),
                inner: vec![c.clone()],
            }));
        }
    }
    out
}

/// The spanning set built from kernel bases of the factors' reduced
/// coproducts in degrees `1..=n`.
pub fn primitive_spanning_set_from_factors<D, C>(e: &Composed<D, C>, n: usize) -> Vec<Lin<ComposedBasis<D::Basis, C::Basis>>>
where
    D: GradedCoalgebra,
    C: GradedCoalgebra,
    D::Basis: Atom,
    C::Basis: Atom,
{
    let outer: Vec<_> = (1..=n).flat_map(|k| primitive_basis(&e.outer, k)).collect();
    let inner = primitive_basis(&e.inner, n);
    primitive_spanning_set(e, n, &outer, &inner)
}

/// `E_n = C_n + Σ_{i<n} C_i E_{n−i−1}`: dimensions when the outer factor
/// has one basis element per degree.
pub fn dims_comb_recursion(c: &[i128], n: usize) -> IntSeries {
    let mut e = vec![0i128; n + 1];
    for k in 0..=n {
        e[k] = c[k] + (0..k).map(|i| c[i] * e[k - i - 1]).sum::<i128>();
    }
    e
}

/// `E_n = C_n + Σ_{i<n} E_i E_{n−i−1}`: dimensions when the outer factor is
/// indexed by binary trees.
pub fn dims_tree_recursion(c: &[i128], n: usize) -> IntSeries {
    let mut e = vec![0i128; n + 1];
    for k in 0..=n {
        e[k] = c[k] + (0..k).map(|i| e[i] * e[k - i - 1]).sum::<i128>();
    }
    e
}

/// `E_n = Σ_m D_m [t^{n−m}] C(t)^{m+1}` for arbitrary factor dimensions.
pub fn dims_general(d: &[i128], c: &[i128], n: usize) -> IntSeries {
    let mut e = vec![0i128; n + 1];
    // power = C(t)^{m+1}, truncated at t^n
    let mut power: Vec<i128> = c[..=n].to_vec();
    for m in 0..=n {
        for k in m..=n {
            e[k] += d[m] * power[k - m];
        }
        let mut next = vec![0i128; n + 1];
        for (i, a) in power.iter().enumerate() {
            for (j, b) in c.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * b;
            }
        }
        power = next;
    }
    e
}

/// Picks the comb recursion for all-ones outer dimensions, the tree
/// recursion for Catalan ones, and the general convolution otherwise.
pub fn dims_for(outer: &[i128], inner: &[i128], n: usize) -> IntSeries {
    let catalan: Vec<i128> = (0..=n).map(crate::exactalg::catalan).collect();
    if outer[..=n].iter().all(|&x| x == 1) {
        dims_comb_recursion(inner, n)
    } else if outer[..=n] == catalan[..] {
        dims_tree_recursion(inner, n)
    } else {
        dims_general(outer, inner, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basehopf::{CSym, SSym, YSym};
    use crate::combinat::{BinaryTree, Comb};
    use crate::exactalg::{catalan, factorial, int, primitive_dimension, rank, reduced_coproduct, Identity};

    type Cc = ComposedBasis<Comb, Comb>;

    fn cc(s: &str) -> Cc {
        s.parse().unwrap()
    }

    fn tensor(pairs: &[(&str, &str)]) -> Tensor<Cc> {
        pairs.iter().map(|(a, b)| ((cc(a), cc(b)), int(1))).collect()
    }

    #[test]
    fn cc_coproduct_example() {
        let e = Composed::new(CSym, CSym);
        let expected = tensor(&[("[1]", "[1,3]"), ("[1,1]", "[3]"), ("[1,2]", "[2]"), ("[1,3]", "[1]")]);
        assert_eq!(e.coproduct(&cc("[1,3]")), expected);
        assert_eq!(e.coproduct(&cc("[1]")), tensor(&[("[1]", "[1]")]));
    }

    #[test]
    fn weighted_tree_coproduct_example() {
        let e = Composed::new(YSym, CSym);
        let w = |s: &str| s.parse::<ComposedBasis<BinaryTree, Comb>>().unwrap();
        let expected: Tensor<_> = [("1", "2,1,2"), ("2", "1,1,2"), ("2,1", "1,2"), ("2,1,1", "2"), ("2,1,2", "1")]
            .iter()
            .map(|(a, b)| ((w(a), w(b)), int(1)))
            .collect();
        assert_eq!(e.coproduct(&w("2,1,2")), expected);
    }

    #[test]
    fn counit_is_supported_in_degree_zero() {
        let e = Composed::new(YSym, YSym);
        for n in 0..=3 {
            for b in e.basis(n) {
                assert_eq!(e.counit(&b), int(i64::from(n == 0)));
            }
        }
    }

    #[test]
    fn recursions_match_known_sequences() {
        let ones = vec![1i128; 11];
        let fact: Vec<i128> = (0..=10).map(factorial).collect();
        let cat: Vec<i128> = (0..=10).map(catalan).collect();
        assert_eq!(dims_comb_recursion(&ones, 5), vec![1, 2, 4, 8, 16, 32]);
        assert_eq!(dims_comb_recursion(&fact, 5), vec![1, 2, 5, 15, 54, 235]);
        assert_eq!(dims_tree_recursion(&fact, 5), vec![1, 2, 6, 22, 92, 428]);
        assert_eq!(dims_comb_recursion(&cat, 4), vec![1, 2, 5, 14, 42]);
        for inner in [&ones, &fact, &cat] {
            assert_eq!(dims_general(&ones, inner, 8), dims_comb_recursion(inner, 8));
            assert_eq!(dims_general(&cat, inner, 8), dims_tree_recursion(inner, 8));
        }
    }

    #[test]
    fn enumeration_matches_series() {
        let e = Composed::new(SSym, YSym);
        let series = e.dimension_series(4);
        for (n, &dim) in series.iter().enumerate() {
            assert_eq!(e.basis(n).len() as i128, dim);
        }
    }

    #[test]
    fn cc_primitives_from_spanning_set() {
        let e = Composed::new(CSym, CSym);
        for n in 1..=5 {
            let span = primitive_spanning_set_from_factors(&e, n);
            for v in &span {
                assert!(v.flat_map(|b| reduced_coproduct(&e, b).unwrap()).is_zero());
            }
            assert_eq!(rank(&span), primitive_dimension(&e, n));
        }
        assert_eq!(primitive_spanning_set_from_factors(&e, 1).len(), 2);
        assert_eq!(primitive_dimension(&e, 2), 0);
    }

    #[test]
    fn identity_morphism() {
        let m = ComposedMorphism::new(Identity(CSym), Identity(YSym));
        for b in m.source().basis(3) {
            assert_eq!(m.apply(&b), Lin::basis(b.clone()));
        }
    }
}
