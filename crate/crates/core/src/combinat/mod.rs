//! Combinatorial index sets and the structural maps between them.

mod comb;
mod composed;
mod labelled;
mod text;
mod tree;
mod word;

pub use comb::{kappa, Comb};
pub use composed::ComposedBasis;
pub use labelled::{phi, phi_inv, CompositeTree, Composition, PaintedTree, SimplexFace};
pub use text::{parse_rational, Atom};
pub use tree::BinaryTree;
pub use word::{graft_words, split_word, standardize, tau, OrderedTree};

use std::fmt;

/// Objects carrying a degree (number of internal nodes).
pub trait Graded {
    fn degree(&self) -> usize;
}

/// All weak compositions of `total` into `parts` nonnegative parts, in
/// lexicographic order.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// All multisets of size `size` drawn from `0..=max`, as nondecreasing
/// sequences in lexicographic order.
pub fn multisets(max: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(lo: usize, max: usize, size: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == size {
            out.push(prefix.clone());
            return;
        }
        for i in lo..=max {
            prefix.push(i);
            go(i, max, size, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(0, max, size, &mut Vec::with_capacity(size), &mut out);
    out
}

/// All forests of `slots` objects whose degrees sum to `total`, where
/// `by_degree(k)` lists the objects of degree `k`.
pub fn forests<T: Clone>(slots: usize, total: usize, by_degree: &dyn Fn(usize) -> Vec<T>) -> Vec<Vec<T>> {
    let tables: Vec<Vec<T>> = (0..=total).map(by_degree).collect();
    let mut out = Vec::new();
    for degrees in weak_compositions(total, slots) {
        let mut partial: Vec<Vec<T>> = vec![Vec::with_capacity(slots)];
        for &k in &degrees {
            let mut next = Vec::with_capacity(partial.len() * tables[k].len());
            for prefix in &partial {
                for item in &tables[k] {
                    let mut v = prefix.clone();
                    v.push(item.clone());
                    next.push(v);
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    out
}

/// The families accepted by [`enumerate_basis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Trees,
    Perms,
    Combs,
    Painted,
    Composite,
    Compositions,
    Subsets,
}

impl std::str::FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "trees" => Family::Trees,
            "perms" => Family::Perms,
            "combs" => Family::Combs,
            "painted" => Family::Painted,
            "composite" => Family::Composite,
            "compositions" => Family::Compositions,
            "subsets" => Family::Subsets,
            other => return Err(crate::Error::InvalidObject(format!("unknown family `{other}`"))),
        })
    }
}

/// One object of any family, for heterogeneous listings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Tree(BinaryTree),
    Perm(OrderedTree),
    Comb(Comb),
    Painted(PaintedTree),
    Composite(CompositeTree),
    Composition(Composition),
    Subset(SimplexFace),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Tree(t) => t.fmt(f),
            Object::Perm(w) => w.fmt(f),
            Object::Comb(c) => c.fmt(f),
            Object::Painted(p) => p.fmt(f),
            Object::Composite(c) => c.fmt(f),
            Object::Composition(c) => c.fmt(f),
            Object::Subset(s) => s.fmt(f),
        }
    }
}

/// Complete, duplicate-free enumeration of the degree-`n` objects of a family
/// in canonical order.
pub fn enumerate_basis(family: Family, n: usize) -> Vec<Object> {
    match family {
        Family::Trees => BinaryTree::all(n).into_iter().map(Object::Tree).collect(),
        Family::Perms => OrderedTree::all(n).into_iter().map(Object::Perm).collect(),
        Family::Combs => vec![Object::Comb(Comb(n))],
        Family::Painted => ComposedBasis::enumerate(n, &BinaryTree::all, &BinaryTree::all)
            .into_iter()
            .map(|cb| Object::Painted(PaintedTree::from_composed(&cb)))
            .collect(),
        Family::Composite => ComposedBasis::enumerate(n, &BinaryTree::all, &|k| vec![Comb(k)])
            .into_iter()
            .map(|cb| Object::Composite(CompositeTree::from_composed(&cb)))
            .collect(),
        Family::Compositions => ComposedBasis::enumerate(n, &|k| vec![Comb(k)], &|k| vec![Comb(k)])
            .into_iter()
            .map(|cb| Object::Composition(Composition::from_composed(&cb)))
            .collect(),
        Family::Subsets => SimplexFace::all(n).into_iter().map(Object::Subset).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weak_composition_counts() {
        assert_eq!(weak_compositions(2, 4).len(), 10);
        assert_eq!(weak_compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(weak_compositions(0, 0), vec![Vec::<usize>::new()]);
        assert!(weak_compositions(1, 0).is_empty());
    }

    #[test]
    fn multiset_counts() {
        // multisets of size 3 from 3 leaves: C(5,3)
        assert_eq!(multisets(2, 3).len(), 10);
        assert_eq!(multisets(4, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_basis(Family::Trees, 3).len(), 5);
        assert_eq!(enumerate_basis(Family::Subsets, 4).len(), 16);
        assert_eq!(enumerate_basis(Family::Perms, 0).len(), 1);
        assert_eq!(enumerate_basis(Family::Compositions, 5).len(), 32);
        assert_eq!(enumerate_basis(Family::Painted, 3).len(), 21);
        assert_eq!(enumerate_basis(Family::Composite, 3).len(), 15);
    }
}
