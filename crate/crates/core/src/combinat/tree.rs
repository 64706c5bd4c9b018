use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::Graded;
use crate::error::{Error, ParseError, Result};

/// A planar binary tree. Leaves are numbered `0..=n` left to right; internal
/// nodes are numbered `1..=n` in infix order, so node `i` sits in the gap
/// between leaves `i-1` and `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf,
    Node(Arc<Branch>),
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Branch {
    left: BinaryTree,
    right: BinaryTree,
    degree: usize,
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        let degree = left.degree() + right.degree() + 1;
        BinaryTree::Node(Arc::new(Branch { left, right, degree }))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(b) => Some((&b.left, &b.right)),
        }
    }

    /// The comb of degree `n`: every internal node on the right branch from
    /// the root.
    pub fn comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Leaf, |acc, _| BinaryTree::node(BinaryTree::Leaf, acc))
    }

    pub fn is_comb(&self) -> bool {
        let mut t = self;
        while let Some((l, r)) = t.children() {
            if !l.is_leaf() {
                return false;
            }
            t = r;
        }
        true
    }

    /// Split along the path from `leaf` to the root.
    pub fn split(&self, leaf: usize) -> Result<(BinaryTree, BinaryTree)> {
        if leaf > self.degree() {
            return Err(Error::IndexOutOfRange {
                index: leaf,
                max: self.degree(),
            });
        }
        Ok(self.split_unchecked(leaf))
    }

    fn split_unchecked(&self, leaf: usize) -> (BinaryTree, BinaryTree) {
        match self.children() {
            None => (BinaryTree::Leaf, BinaryTree::Leaf),
            Some((a, b)) => {
                let da = a.degree();
                if leaf <= da {
                    let (al, ar) = a.split_unchecked(leaf);
                    (al, BinaryTree::node(ar, b.clone()))
                } else {
                    let (bl, br) = b.split_unchecked(leaf - da - 1);
                    (BinaryTree::node(a.clone(), bl), br)
                }
            }
        }
    }

    /// Split at a multiset of leaves, producing `leaves.len() + 1` trees.
    /// Repeated indices produce empty trees between the cuts.
    pub fn split_multi(&self, leaves: &[usize]) -> Result<Vec<BinaryTree>> {
        let mut sorted = leaves.to_vec();
        sorted.sort_unstable();
        if let Some(&last) = sorted.last() {
            if last > self.degree() {
                return Err(Error::IndexOutOfRange {
                    index: last,
                    max: self.degree(),
                });
            }
        }
        let mut out = Vec::with_capacity(sorted.len() + 1);
        let mut rest = self.clone();
        let mut consumed = 0;
        for i in sorted {
            let (l, r) = rest.split_unchecked(i - consumed);
            consumed = i;
            out.push(l);
            rest = r;
        }
        out.push(rest);
        Ok(out)
    }

    /// Graft `forest[i]` onto leaf `i` of `base`.
    pub fn graft(forest: &[BinaryTree], base: &BinaryTree) -> Result<BinaryTree> {
        if forest.len() != base.degree() + 1 {
            return Err(Error::ArityMismatch {
                expected: base.degree() + 1,
                found: forest.len(),
            });
        }
        fn go(t: &BinaryTree, forest: &mut std::slice::Iter<'_, BinaryTree>) -> BinaryTree {
            match t.children() {
                None => forest.next().cloned().unwrap_or(BinaryTree::Leaf),
                Some((l, r)) => {
                    let l = go(l, forest);
                    let r = go(r, forest);
                    BinaryTree::node(l, r)
                }
            }
        }
        Ok(go(base, &mut forest.iter()))
    }

    /// All trees of degree `n` in canonical order.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
        for k in 1..=n {
            let mut level = Vec::new();
            for l in 0..k {
                for a in &table[l] {
                    for b in &table[k - 1 - l] {
                        level.push(BinaryTree::node(a.clone(), b.clone()));
                    }
                }
            }
            table.push(level);
        }
        table.swap_remove(n)
    }
}

impl Graded for BinaryTree {
    fn degree(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(b) => b.degree,
        }
    }
}

impl Ord for BinaryTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| match (self.children(), other.children()) {
            (Some((a, b)), Some((c, d))) => a.cmp(c).then_with(|| b.cmp(d)),
            _ => Ordering::Equal,
        })
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.children() {
            None => f.write_str("."),
            Some((l, r)) => write!(f, "({l} {r})"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BinaryTree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let tree = parse_tree(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(ParseError::new(pos, "trailing characters after tree"));
        }
        Ok(tree)
    }
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_tree(bytes: &[u8], pos: &mut usize) -> Result<BinaryTree, ParseError> {
    skip_ws(bytes, pos);
    match bytes.get(*pos) {
        Some(b'.') => {
            *pos += 1;
            Ok(BinaryTree::Leaf)
        }
        Some(b'(') => {
            *pos += 1;
            let l = parse_tree(bytes, pos)?;
            let r = parse_tree(bytes, pos)?;
            skip_ws(bytes, pos);
            if bytes.get(*pos) != Some(&b')') {
                return Err(ParseError::new(*pos, "expected `)`"));
            }
            *pos += 1;
            Ok(BinaryTree::node(l, r))
        }
        Some(_) => Err(ParseError::new(*pos, "expected `.` or `(`")),
        None => Err(ParseError::new(*pos, "unexpected end of tree")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    #[test]
    fn split_leaf_and_single_node() {
        let leaf = BinaryTree::Leaf;
        assert_eq!(leaf.split(0).unwrap(), (BinaryTree::Leaf, BinaryTree::Leaf));
        assert_eq!(t("(..)").split(0).unwrap(), (t("."), t("(..)")));
        assert_eq!(t("(..)").split(1).unwrap(), (t("(..)"), t(".")));
        assert!(matches!(t("(..)").split(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn comb_splits_into_combs() {
        let c3 = BinaryTree::comb(3);
        for i in 0..=3 {
            let (l, r) = c3.split(i).unwrap();
            assert_eq!(l, BinaryTree::comb(i));
            assert_eq!(r, BinaryTree::comb(3 - i));
        }
    }

    #[test]
    fn multi_split() {
        let c1 = t("(..)");
        assert_eq!(c1.split_multi(&[]).unwrap(), vec![c1.clone()]);
        assert_eq!(c1.split_multi(&[0, 0]).unwrap(), vec![t("."), t("."), c1.clone()]);
        let c2 = BinaryTree::comb(2);
        let forests: std::collections::BTreeSet<Vec<BinaryTree>> = super::super::multisets(2, 3)
            .iter()
            .map(|m| c2.split_multi(m).unwrap())
            .collect();
        assert_eq!(forests.len(), 10);
        for f in &forests {
            assert_eq!(f.len(), 4);
            assert_eq!(f.iter().map(Graded::degree).sum::<usize>(), 2);
        }
    }

    #[test]
    fn grafting() {
        let c1 = BinaryTree::comb(1);
        assert_eq!(BinaryTree::graft(&[t("."), t(".")], &c1).unwrap(), c1);
        assert_eq!(BinaryTree::graft(&[BinaryTree::comb(0), c1.clone()], &c1).unwrap(), BinaryTree::comb(2));
        assert_eq!(BinaryTree::graft(&[c1.clone(), t(".")], &c1).unwrap(), t("((..).)"));
        assert!(matches!(
            BinaryTree::graft(&[t(".")], &c1),
            Err(Error::ArityMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn graft_then_split_recovers_pieces() {
        let c1 = BinaryTree::comb(1);
        for n in 0..=4 {
            for m in 0..=(4 - n) {
                for a in BinaryTree::all(n) {
                    for b in BinaryTree::all(m) {
                        let g = BinaryTree::graft(&[a.clone(), b.clone()], &c1).unwrap();
                        let expected = (a.clone(), BinaryTree::graft(&[t("."), b.clone()], &c1).unwrap());
                        assert_eq!(g.split(a.degree()).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn split_graft_duality() {
        let c1 = BinaryTree::comb(1);
        for n in 0..=5 {
            for tree in BinaryTree::all(n) {
                for i in 0..=n {
                    let (l, r) = tree.split(i).unwrap();
                    let g = BinaryTree::graft(&[l.clone(), r.clone()], &c1).unwrap();
                    assert_eq!(g.degree(), n + 1);
                    let (l2, r2) = g.split(l.degree()).unwrap();
                    assert_eq!(l2, l);
                    assert_eq!(r2, BinaryTree::graft(&[t("."), r.clone()], &c1).unwrap());
                }
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_catalan() {
        let counts: Vec<usize> = (0..=7).map(|n| BinaryTree::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        for n in 0..=5 {
            let all = BinaryTree::all(n);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn text_syntax() {
        assert_eq!(t("( . ( . . ) )"), BinaryTree::comb(2));
        assert_eq!(BinaryTree::comb(2).to_string(), "(. (. .))");
        assert!("(..".parse::<BinaryTree>().is_err());
        assert!("..".parse::<BinaryTree>().is_err());
        let err = "(.x)".parse::<BinaryTree>().unwrap_err();
        assert_eq!(err.position, 2);
    }
}
