//! Painted trees, composite trees, compositions and simplex faces, with their
//! identifications as composed elements.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{BinaryTree, Comb, ComposedBasis, Graded};
use crate::error::{Error, ParseError, Result};

/// A binary tree with an upper order ideal of painted nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PaintedTree {
    shape: BinaryTree,
    painted: BTreeSet<usize>,
}

impl PaintedTree {
    /// Validates that `painted` is closed under taking ancestors.
    pub fn new(shape: BinaryTree, painted: BTreeSet<usize>) -> Result<Self> {
        let p = PaintedTree { shape, painted };
        p.to_composed()?;
        Ok(p)
    }

    pub fn shape(&self) -> &BinaryTree {
        &self.shape
    }

    pub fn painted(&self) -> &BTreeSet<usize> {
        &self.painted
    }

    pub fn from_composed(cb: &ComposedBasis<BinaryTree, BinaryTree>) -> Self {
        fn go(
            outer: &BinaryTree,
            forest: &mut std::slice::Iter<'_, BinaryTree>,
            counter: &mut usize,
            painted: &mut BTreeSet<usize>,
        ) -> BinaryTree {
            match outer.children() {
                None => {
                    let c = forest.next().cloned().unwrap_or(BinaryTree::Leaf);
                    *counter += c.degree();
                    c
                }
                Some((l, r)) => {
                    let l = go(l, forest, counter, painted);
                    *counter += 1;
                    painted.insert(*counter);
                    let r = go(r, forest, counter, painted);
                    BinaryTree::node(l, r)
                }
            }
        }
        let mut painted = BTreeSet::new();
        let shape = go(&cb.outer, &mut cb.inner.iter(), &mut 0, &mut painted);
        PaintedTree { shape, painted }
    }

    pub fn to_composed(&self) -> Result<ComposedBasis<BinaryTree, BinaryTree>> {
        fn go(
            t: &BinaryTree,
            offset: usize,
            painted: &BTreeSet<usize>,
            inner: &mut Vec<BinaryTree>,
        ) -> Result<BinaryTree> {
            match t.children() {
                None => {
                    inner.push(BinaryTree::Leaf);
                    Ok(BinaryTree::Leaf)
                }
                Some((l, r)) => {
                    let root = offset + l.degree() + 1;
                    if painted.contains(&root) {
                        let lo = go(l, offset, painted, inner)?;
                        let ro = go(r, root, painted, inner)?;
                        Ok(BinaryTree::node(lo, ro))
                    } else {
                        if painted.range(offset + 1..=offset + t.degree()).next().is_some() {
                            return Err(Error::InvalidObject(format!(
                                "painted nodes below unpainted node {root} do not form an upper ideal"
                            )));
                        }
                        inner.push(t.clone());
                        Ok(BinaryTree::Leaf)
                    }
                }
            }
        }
        if let Some(&max) = self.painted.iter().next_back() {
            if max == 0 || max > self.shape.degree() {
                return Err(Error::InvalidObject(format!("node {max} is not in the tree")));
            }
        }
        if self.painted.contains(&0) {
            return Err(Error::InvalidObject("nodes are numbered from 1".into()));
        }
        let mut inner = Vec::new();
        let outer = go(&self.shape, 0, &self.painted, &mut inner)?;
        ComposedBasis::new(outer, inner)
    }

    /// The same shape with every node painted.
    pub fn fully_painted(shape: BinaryTree) -> Self {
        let painted = (1..=shape.degree()).collect();
        PaintedTree { shape, painted }
    }
}

impl Graded for PaintedTree {
    fn degree(&self) -> usize {
        self.shape.degree()
    }
}

impl fmt::Display for PaintedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_composed() {
            Ok(cb) => cb.fmt(f),
            Err(_) => write!(f, "<invalid painting of {}>", self.shape),
        }
    }
}

/// A binary tree with a positive weight on each leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositeTree {
    pub shape: BinaryTree,
    pub weights: Vec<usize>,
}

impl CompositeTree {
    pub fn new(shape: BinaryTree, weights: Vec<usize>) -> Result<Self> {
        if weights.len() != shape.degree() + 1 {
            return Err(Error::ArityMismatch {
                expected: shape.degree() + 1,
                found: weights.len(),
            });
        }
        if weights.contains(&0) {
            return Err(Error::InvalidObject("weights must be positive".into()));
        }
        Ok(CompositeTree { shape, weights })
    }

    pub fn from_composed(cb: &ComposedBasis<BinaryTree, Comb>) -> Self {
        CompositeTree {
            shape: cb.outer.clone(),
            weights: cb.inner.iter().map(|c| c.0 + 1).collect(),
        }
    }

    pub fn to_composed(&self) -> ComposedBasis<BinaryTree, Comb> {
        ComposedBasis {
            outer: self.shape.clone(),
            inner: self.weights.iter().map(|w| Comb(w - 1)).collect(),
        }
    }
}

impl Graded for CompositeTree {
    fn degree(&self) -> usize {
        self.weights.iter().sum::<usize>() - 1
    }
}

impl fmt::Display for CompositeTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_composed().fmt(f)
    }
}

/// A composition `(a_1, …, a_k)` of `n+1`, read as combs over a comb.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidObject(format!("not a composition: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn from_composed(cb: &ComposedBasis<Comb, Comb>) -> Self {
        Composition(cb.inner.iter().map(|c| c.0 + 1).collect())
    }

    pub fn to_composed(&self) -> ComposedBasis<Comb, Comb> {
        ComposedBasis {
            outer: Comb(self.0.len() - 1),
            inner: self.0.iter().map(|a| Comb(a - 1)).collect(),
        }
    }
}

impl Graded for Composition {
    fn degree(&self) -> usize {
        self.0.iter().sum::<usize>() - 1
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_composed().fmt(f)
    }
}

impl FromStr for Composition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let cb: ComposedBasis<Comb, Comb> = s.parse()?;
        Ok(Composition::from_composed(&cb))
    }
}

/// A face of the `n`-simplex: a subset of `{1, …, n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplexFace {
    n: usize,
    subset: Vec<usize>,
}

impl SimplexFace {
    pub fn new(n: usize, subset: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = subset.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::InvalidObject(format!("{bad} is not in [1, {n}]")));
        }
        Ok(SimplexFace {
            n,
            subset: set.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// All subsets of `[n]`, ordered by size-independent lexicographic order
    /// of their sorted elements.
    pub fn all(n: usize) -> Vec<SimplexFace> {
        let mut out: Vec<SimplexFace> = (0u64..1 << n)
            .map(|mask| SimplexFace {
                n,
                subset: (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
            })
            .collect();
        out.sort();
        out
    }
}

impl Graded for SimplexFace {
    fn degree(&self) -> usize {
        self.n
    }
}

impl Ord for SimplexFace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n.cmp(&other.n).then_with(|| self.subset.cmp(&other.subset))
    }
}

impl PartialOrd for SimplexFace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SimplexFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.subset.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}/{}", items.join(","), self.n)
    }
}

impl fmt::Debug for SimplexFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SimplexFace {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let lead = s.len() - s.trim_start().len();
        let body = s.trim();
        let (set, n) = body
            .split_once('/')
            .ok_or_else(|| ParseError::new(lead, "expected `{…}/n`"))?;
        let inside = set
            .trim()
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(|| ParseError::new(lead, "expected a braced subset"))?;
        let n_at = lead + set.len() + 1;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| ParseError::new(n_at, "expected the ambient size n"))?;
        let mut items = Vec::new();
        if !inside.trim().is_empty() {
            let mut pos = lead + 1;
            for piece in inside.split(',') {
                let x: usize = piece
                    .trim()
                    .parse()
                    .map_err(|_| ParseError::new(pos, format!("expected an element, found `{}`", piece.trim())))?;
                items.push(x);
                pos += piece.len() + 1;
            }
        }
        SimplexFace::new(n, items).map_err(|e| ParseError::new(lead, e.to_string()))
    }
}

/// `{a < b < … < c} ⊆ [n]` ↦ `(a, b−a, …, n+1−c)`.
pub fn phi(s: &SimplexFace) -> Composition {
    let mut parts = Vec::with_capacity(s.subset.len() + 1);
    let mut prev = 0;
    for &x in &s.subset {
        parts.push(x - prev);
        prev = x;
    }
    parts.push(s.n + 1 - prev);
    Composition(parts)
}

/// Partial sums of a composition, dropping the final total.
pub fn phi_inv(c: &Composition) -> SimplexFace {
    let mut subset = Vec::with_capacity(c.0.len() - 1);
    let mut acc = 0;
    for &a in &c.0[..c.0.len() - 1] {
        acc += a;
        subset.push(acc);
    }
    SimplexFace {
        n: c.degree(),
        subset,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&SimplexFace::new(3, []).unwrap()), comp(&[4]));
        assert_eq!(phi(&SimplexFace::new(3, [1]).unwrap()), comp(&[1, 3]));
        assert_eq!(phi(&SimplexFace::new(9, [3, 5, 6]).unwrap()), comp(&[3, 2, 1, 4]));
        assert_eq!(phi_inv(&comp(&[1, 3])), SimplexFace::new(3, [1]).unwrap());
    }

    #[test]
    fn phi_is_a_bijection() {
        for n in 0..=8 {
            for s in SimplexFace::all(n) {
                let c = phi(&s);
                assert_eq!(c.degree(), n);
                assert_eq!(phi_inv(&c), s);
            }
            for cb in ComposedBasis::enumerate(n, &|k| vec![Comb(k)], &|k| vec![Comb(k)]) {
                let c = Composition::from_composed(&cb);
                assert_eq!(phi(&phi_inv(&c)), c);
            }
        }
    }

    #[test]
    fn painted_round_trip() {
        for n in 0..=5 {
            for cb in ComposedBasis::enumerate(n, &BinaryTree::all, &BinaryTree::all) {
                let p = PaintedTree::from_composed(&cb);
                assert_eq!(p.degree(), n);
                assert_eq!(p.painted().len(), cb.outer.degree());
                assert_eq!(p.to_composed().unwrap(), cb);
                let again = PaintedTree::new(p.shape().clone(), p.painted().clone()).unwrap();
                assert_eq!(again, p);
            }
        }
    }

    #[test]
    fn painting_must_be_an_upper_ideal() {
        // (.(..)): node 1 is the root, node 2 is its right child
        let shape: BinaryTree = "(.(..))".parse().unwrap();
        assert!(PaintedTree::new(shape.clone(), [1].into()).is_ok());
        assert!(PaintedTree::new(shape.clone(), [2].into()).is_err());
        assert!(PaintedTree::new(shape, [3].into()).is_err());
    }

    #[test]
    fn subset_text() {
        let s: SimplexFace = "{1,3}/4".parse().unwrap();
        assert_eq!(s.subset(), &[1, 3]);
        assert_eq!(s.to_string(), "{1,3}/4");
        assert_eq!("{}/2".parse::<SimplexFace>().unwrap().to_string(), "{}/2");
        assert!("{5}/4".parse::<SimplexFace>().is_err());
        assert!("{1}".parse::<SimplexFace>().is_err());
    }

    #[test]
    fn composite_and_composition_views() {
        let k = CompositeTree::new(BinaryTree::comb(2), vec![2, 1, 2]).unwrap();
        assert_eq!(k.degree(), 4);
        assert_eq!(k.to_string(), "2,1,2");
        assert!(CompositeTree::new(BinaryTree::comb(1), vec![1]).is_err());
        let c: Composition = "[3,2,1,4]".parse().unwrap();
        assert_eq!(c.degree(), 9);
        assert!(Composition::new(vec![]).is_err());
    }
}
