use cocomp::basehopf::{kappa_hat, tau_hat, CSym, SSym, YSym};
use cocomp::catalog::parse_combination;
use cocomp::combinat::{
    phi, phi_inv, split_word, standardize, tau, BinaryTree, Composition, Graded, OrderedTree, PaintedTree,
    SimplexFace,
};
use cocomp::compose::Composed;
use cocomp::exactalg::{
    int, lin_tensor, primitive_dimension, product_lin, Antipode, GradedAlgebra, GradedCoalgebra, Lin, Tensor,
};
use cocomp::named::{cksym, psym, DeltaSymCoalgebra};
use cocomp::operadic::{Connection, Flavor};
use proptest::prelude::*;
use proptest::sample::select;

fn element<A>(alg: A, max: usize) -> BoxedStrategy<A::Basis>
where
    A: GradedCoalgebra + Clone + 'static,
{
    (0..=max).prop_flat_map(move |n| select(alg.basis(n))).boxed()
}

fn trees(max: usize) -> BoxedStrategy<BinaryTree> {
    (0..=max).prop_flat_map(|n| select(BinaryTree::all(n))).boxed()
}

fn words(max: usize) -> BoxedStrategy<OrderedTree> {
    (0..=max).prop_flat_map(|n| select(OrderedTree::all(n))).boxed()
}

fn coassociative<A: GradedCoalgebra>(alg: &A, b: &A::Basis) -> Result<(), TestCaseError> {
    let d = alg.coproduct(b);
    let left = d.flat_map(|(x, y)| alg.coproduct(x).map_keys(|(p, q)| (p.clone(), q.clone(), y.clone())));
    let right = d.flat_map(|(x, y)| alg.coproduct(y).map_keys(|(p, q)| (x.clone(), p.clone(), q.clone())));
    prop_assert_eq!(left, right);
    let mut left_counit = Lin::zero();
    let mut right_counit = Lin::zero();
    for ((x, y), c) in d.iter() {
        left_counit.add_term(y.clone(), c * alg.counit(x));
        right_counit.add_term(x.clone(), c * alg.counit(y));
    }
    prop_assert_eq!(&left_counit, &Lin::basis(b.clone()));
    prop_assert_eq!(&right_counit, &Lin::basis(b.clone()));
    Ok(())
}

fn tensor_mul<A: GradedAlgebra>(alg: &A, x: &Tensor<A::Basis>, y: &Tensor<A::Basis>) -> Tensor<A::Basis> {
    let mut out = Lin::zero();
    for ((a1, a2), c) in x.iter() {
        for ((b1, b2), d) in y.iter() {
            out.add_scaled(&lin_tensor(&alg.product(a1, b1), &alg.product(a2, b2)), &(c * d));
        }
    }
    out
}

fn multiplicative<A: GradedAlgebra>(alg: &A, a: &A::Basis, b: &A::Basis) -> Result<(), TestCaseError> {
    let lhs = alg.product(a, b).flat_map(|x| alg.coproduct(x));
    let rhs = tensor_mul(alg, &alg.coproduct(a), &alg.coproduct(b));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

fn antipode_identity<A: GradedAlgebra>(alg: &A, b: &A::Basis) -> Result<(), TestCaseError> {
    let s = Antipode::new(alg).unwrap();
    let mut total = Lin::zero();
    for ((x, y), c) in alg.coproduct(b).iter() {
        let sx = s.apply(x).unwrap();
        for (z, cz) in sx.iter() {
            total.add_scaled(&alg.product(z, y), &(c * cz));
        }
    }
    prop_assert_eq!(total, Lin::term(alg.one(), alg.counit(b)));
    Ok(())
}

/// The same coalgebra with its basis listed in a different order.
#[derive(Clone)]
struct Reordered<A> {
    alg: A,
    seed: usize,
}

impl<A: GradedCoalgebra> GradedCoalgebra for Reordered<A> {
    type Basis = A::Basis;

    fn name(&self) -> String {
        self.alg.name()
    }

    fn one(&self) -> A::Basis {
        self.alg.one()
    }

    fn basis(&self, n: usize) -> Vec<A::Basis> {
        let mut b = self.alg.basis(n);
        let len = b.len();
        b.rotate_left(self.seed % len);
        if self.seed % 2 == 1 {
            b.reverse();
        }
        b
    }

    fn coproduct(&self, b: &A::Basis) -> Tensor<A::Basis> {
        self.alg.coproduct(b)
    }
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn split_then_graft_on_a_node_resplits(t in trees(5), i in 0usize..6) {
        prop_assume!(i <= t.degree());
        let (l, r) = t.split(i).unwrap();
        prop_assert_eq!(l.degree() + r.degree(), t.degree());
        let y = BinaryTree::comb(1);
        let joined = BinaryTree::graft(&[l.clone(), r.clone()], &y).unwrap();
        prop_assert_eq!(joined.split_multi(&[i, i + 1]).unwrap(), vec![l, y, r]);
    }

    #[test]
    fn graft_adds_degrees(base in trees(3), forest in prop::collection::vec(trees(3), 4)) {
        let forest = &forest[..base.degree() + 1];
        let grafted = BinaryTree::graft(forest, &base).unwrap();
        prop_assert_eq!(grafted.degree(), base.degree() + forest.iter().map(Graded::degree).sum::<usize>());
    }

    #[test]
    fn split_multi_preserves_degree(t in trees(5), cuts in prop::collection::vec(0usize..6, 0..4)) {
        prop_assume!(cuts.iter().all(|&c| c <= t.degree()));
        let parts = t.split_multi(&cuts).unwrap();
        prop_assert_eq!(parts.len(), cuts.len() + 1);
        prop_assert_eq!(parts.iter().map(Graded::degree).sum::<usize>(), t.degree());
    }

    #[test]
    fn tau_commutes_with_splitting(w in words(5), i in 0usize..6) {
        prop_assume!(i <= w.degree());
        let pieces = split_word(&w, &[i]).unwrap();
        let left = tau(&standardize(&pieces[0]).unwrap());
        let right = tau(&standardize(&pieces[1]).unwrap());
        prop_assert_eq!(tau(&w).split(i).unwrap(), (left, right));
    }

    #[test]
    fn phi_is_a_bijection(s in (0usize..=8).prop_flat_map(|n| select(SimplexFace::all(n)))) {
        let c: Composition = phi(&s);
        prop_assert_eq!(&phi_inv(&c), &s);
        prop_assert_eq!(phi(&phi_inv(&c)), c);
    }

    #[test]
    fn painted_trees_round_trip(q in element(psym(), 5)) {
        let painted = PaintedTree::from_composed(&q);
        prop_assert_eq!(painted.to_composed().unwrap(), q.clone());
        prop_assert_eq!(PaintedTree::new(painted.shape().clone(), painted.painted().clone()).unwrap(), painted);
    }

    #[test]
    fn base_coalgebras_are_coassociative(s in element(SSym, 5), y in element(YSym, 5), c in element(CSym, 8)) {
        coassociative(&SSym, &s)?;
        coassociative(&YSym, &y)?;
        coassociative(&CSym, &c)?;
    }

    #[test]
    fn compositions_are_coassociative(
        a in element(Composed::new(SSym, YSym), 4),
        b in element(Composed::new(YSym, SSym), 4),
        c in element(Composed::new(CSym, YSym), 5),
        d in element(Composed::new(YSym, CSym), 5),
        e in element(DeltaSymCoalgebra, 6),
    ) {
        coassociative(&Composed::new(SSym, YSym), &a)?;
        coassociative(&Composed::new(YSym, SSym), &b)?;
        coassociative(&Composed::new(CSym, YSym), &c)?;
        coassociative(&Composed::new(YSym, CSym), &d)?;
        coassociative(&DeltaSymCoalgebra, &e)?;
    }

    #[test]
    fn primitive_dimension_ignores_basis_order(n in 1usize..=4, seed in 0usize..50) {
        let e = Composed::new(YSym, YSym);
        let shuffled = Reordered { alg: e, seed };
        prop_assert_eq!(primitive_dimension(&shuffled, n), primitive_dimension(&e, n));
    }

    #[test]
    fn products_are_coalgebra_maps(a in element(SSym, 3), b in element(SSym, 2), s in element(YSym, 3), t in element(YSym, 2)) {
        multiplicative(&SSym, &a, &b)?;
        multiplicative(&YSym, &s, &t)?;
    }

    #[test]
    fn antipodes_invert_the_identity(a in element(SSym, 4), t in element(YSym, 5), c in element(cksym(), 3)) {
        antipode_identity(&SSym, &a)?;
        antipode_identity(&YSym, &t)?;
        // ckSym only has a left unit, so its antipode solves m(id⊗S)Δ = ηε instead
        let k = cksym();
        let s = Antipode::new(&k).unwrap();
        let mut total = Lin::zero();
        for ((x, y), coef) in k.coproduct(&c).iter() {
            for (z, cz) in s.apply(y).unwrap().iter() {
                total.add_scaled(&k.product(x, z), &(coef * cz));
            }
        }
        prop_assert_eq!(total, Lin::term(k.one(), k.counit(&c)));
    }

    #[test]
    fn tau_and_kappa_respect_products(a in element(SSym, 3), b in element(SSym, 2)) {
        let (ta, tb) = (tau_hat(&Lin::basis(a.clone())), tau_hat(&Lin::basis(b.clone())));
        let lhs = tau_hat(&SSym.product(&a, &b));
        prop_assert_eq!(&lhs, &product_lin(&YSym, &ta, &tb));
        prop_assert_eq!(kappa_hat(&lhs), product_lin(&CSym, &kappa_hat(&ta), &kappa_hat(&tb)));
    }

    #[test]
    fn cksym_coefficients_count_weak_compositions(a in element(cksym(), 3), b in element(cksym(), 3)) {
        let sum = cksym().product(&a, &b).coefficient_sum();
        prop_assert_eq!(sum, int(binom(a.degree() + b.degree(), b.degree())));
    }

    #[test]
    fn psym_connection_intertwines(e in element(psym(), 3), d in element(YSym, 2)) {
        let k = psym().0;
        prop_assert_eq!(k.flavor(), Flavor::Right);
        let lhs = k.connect_lin(&k.act(&e, &d));
        let rhs = k.connect(&e).flat_map(|x| YSym.product(x, &d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn combinations_round_trip(terms in prop::collection::vec((element(YSym, 4), -20i64..20, 1i64..6), 0..6)) {
        let x: Lin<BinaryTree> = terms.into_iter().map(|(t, p, q)| (t, int(p) / int(q))).collect();
        let text = x.to_string();
        let back = parse_combination::<BinaryTree>(&text).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn lin_never_stores_zeros(terms in prop::collection::vec((0usize..5, -3i64..3), 0..12)) {
        let x: Lin<usize> = terms.iter().map(|&(k, c)| (k, int(c))).collect();
        prop_assert!(x.iter().all(|(_, c)| *c != int(0)));
        let diff = &x - &x;
        prop_assert!(diff.is_zero());
    }
}
