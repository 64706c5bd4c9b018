//! The three base Hopf algebras in their fundamental bases and the
//! surjections between them.

use num_traits::One;

use crate::combinat::{graft_words, kappa, multisets, split_word, standardize, BinaryTree, Comb, Graded, OrderedTree};
use crate::exactalg::{
    binomial, catalan, factorial, int, CoalgebraMap, GradedAlgebra, GradedCoalgebra, GradedConnectedHopf, Lin, Scalar, Tensor,
};

/// Malvenuto–Reutenauer algebra of permutations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SSym;

/// Loday–Ronco algebra of planar binary trees.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct YSym;

/// Divided power algebra, indexed by combs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CSym;

impl GradedCoalgebra for SSym {
    type Basis = OrderedTree;

    fn name(&self) -> String {
        "ssym".into()
    }

    fn one(&self) -> OrderedTree {
        OrderedTree::empty()
    }

    fn basis(&self, n: usize) -> Vec<OrderedTree> {
        OrderedTree::all(n)
    }

    fn dimension(&self, n: usize) -> usize {
        factorial(n) as usize
    }

    fn coproduct(&self, w: &OrderedTree) -> Tensor<OrderedTree> {
        let letters = w.letters();
        (0..=letters.len())
            .map(|i| {
                let left = standardize(&letters[..i]).expect("letters of a permutation are distinct");
                let right = standardize(&letters[i..]).expect("letters of a permutation are distinct");
                ((left, right), Scalar::one())
            })
            .collect()
    }
}

impl GradedAlgebra for SSym {
    /// Split `u` at every multiset of `|v|` gaps and graft the pieces onto
    /// `v`, whose letters are raised by `|u|`.
    fn product(&self, u: &OrderedTree, v: &OrderedTree) -> Lin<OrderedTree> {
        multisets(u.degree(), v.degree())
            .into_iter()
            .map(|cuts| {
                let forest = split_word(u, &cuts).expect("cuts lie within the word");
                (graft_words(&forest, v).expect("forest has |v|+1 parts"), Scalar::one())
            })
            .collect()
    }
}

impl GradedConnectedHopf for SSym {}

impl GradedCoalgebra for YSym {
    type Basis = BinaryTree;

    fn name(&self) -> String {
        "ysym".into()
    }

    fn one(&self) -> BinaryTree {
        BinaryTree::Leaf
    }

    fn basis(&self, n: usize) -> Vec<BinaryTree> {
        BinaryTree::all(n)
    }

    fn dimension(&self, n: usize) -> usize {
        catalan(n) as usize
    }

    fn coproduct(&self, t: &BinaryTree) -> Tensor<BinaryTree> {
        (0..=t.degree())
            .map(|i| (t.split(i).expect("leaf in range"), Scalar::one()))
            .collect()
    }
}

impl GradedAlgebra for YSym {
    fn product(&self, s: &BinaryTree, t: &BinaryTree) -> Lin<BinaryTree> {
        multisets(s.degree(), t.degree())
            .into_iter()
            .map(|cuts| {
                let forest = s.split_multi(&cuts).expect("cuts lie within the tree");
                (BinaryTree::graft(&forest, t).expect("forest has |t|+1 parts"), Scalar::one())
            })
            .collect()
    }
}

impl GradedConnectedHopf for YSym {}

impl GradedCoalgebra for CSym {
    type Basis = Comb;

    fn name(&self) -> String {
        "csym".into()
    }

    fn one(&self) -> Comb {
        Comb(0)
    }

    fn basis(&self, n: usize) -> Vec<Comb> {
        vec![Comb(n)]
    }

    fn dimension(&self, _n: usize) -> usize {
        1
    }

    fn coproduct(&self, c: &Comb) -> Tensor<Comb> {
        (0..=c.0).map(|i| ((Comb(i), Comb(c.0 - i)), Scalar::one())).collect()
    }
}

impl GradedAlgebra for CSym {
    fn product(&self, a: &Comb, b: &Comb) -> Lin<Comb> {
        Lin::term(Comb(a.0 + b.0), int(binomial(a.0 + b.0, b.0) as i64))
    }
}

impl GradedConnectedHopf for CSym {}

/// The CSym product computed the long way: split the comb at every
/// multiset of leaves, graft onto the other comb and comb the result.
pub fn csym_product_by_grafting(a: &Comb, b: &Comb) -> Lin<Comb> {
    YSym.product(&a.tree(), &b.tree()).map_keys(kappa)
}

/// True iff CSym satisfies the divided power identities
/// `x⁽ᵐ⁾x⁽ⁿ⁾ = C(m+n,n) x⁽ᵐ⁺ⁿ⁾` and `Δx⁽ⁿ⁾ = Σ x⁽ⁱ⁾⊗x⁽ʲ⁾` through degree `n`.
pub fn divided_power_iso_check(n: usize) -> bool {
    let products = (0..=n).all(|total| {
        (0..=total).all(|m| {
            let expected = Lin::term(Comb(total), int(binomial(total, total - m) as i64));
            CSym.product(&Comb(m), &Comb(total - m)) == expected
                && csym_product_by_grafting(&Comb(m), &Comb(total - m)) == expected
        })
    });
    let coproducts = (0..=n).all(|k| {
        let expected: Tensor<Comb> = (0..=k).map(|i| ((Comb(i), Comb(k - i)), int(1))).collect();
        CSym.coproduct(&Comb(k)) == expected
    });
    products && coproducts && CSym.product(&Comb(0), &Comb(0)) == Lin::basis(Comb(0))
}

/// `F_w ↦ F_{τ(w)}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct TauHat;

/// `F_t ↦ F_{κ(t)}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct KappaHat;

impl CoalgebraMap for TauHat {
    type Source = SSym;
    type Target = YSym;

    fn source(&self) -> &SSym {
        &SSym
    }

    fn target(&self) -> &YSym {
        &YSym
    }

    fn apply(&self, w: &OrderedTree) -> Lin<BinaryTree> {
        Lin::basis(w.tau())
    }

    fn name(&self) -> String {
        "tau".into()
    }
}

impl CoalgebraMap for KappaHat {
    type Source = YSym;
    type Target = CSym;

    fn source(&self) -> &YSym {
        &YSym
    }

    fn target(&self) -> &CSym {
        &CSym
    }

    fn apply(&self, t: &BinaryTree) -> Lin<Comb> {
        Lin::basis(kappa(t))
    }

    fn name(&self) -> String {
        "kappa".into()
    }
}

pub fn tau_hat(x: &Lin<OrderedTree>) -> Lin<BinaryTree> {
    TauHat.apply_lin(x)
}

pub fn kappa_hat(x: &Lin<BinaryTree>) -> Lin<Comb> {
    KappaHat.apply_lin(x)
}
