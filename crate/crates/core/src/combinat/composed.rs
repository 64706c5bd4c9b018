use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{forests, Atom, BinaryTree, Graded};
use crate::error::{Error, ParseError, Result};

/// An indecomposable tensor `(d; c_0, …, c_n)`: a forest of `n+1` inner
/// objects over an outer object of degree `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComposedBasis<D, C> {
    pub outer: D,
    pub inner: Vec<C>,
}

impl<D: Graded, C: Graded> ComposedBasis<D, C> {
    pub fn new(outer: D, inner: Vec<C>) -> Result<Self> {
        if inner.len() != outer.degree() + 1 {
            return Err(Error::ArityMismatch {
                expected: outer.degree() + 1,
                found: inner.len(),
            });
        }
        Ok(ComposedBasis { outer, inner })
    }
}

impl<D: Graded + Clone + Ord, C: Graded + Clone + Ord> ComposedBasis<D, C> {
    /// Every composed element of total degree `n`, sorted.
    pub fn enumerate(n: usize, outer: &dyn Fn(usize) -> Vec<D>, inner: &dyn Fn(usize) -> Vec<C>) -> Vec<Self> {
        let mut out = Vec::new();
        for m in 0..=n {
            let forests = forests(m + 1, n - m, inner);
            for d in outer(m) {
                for f in &forests {
                    out.push(ComposedBasis {
                        outer: d.clone(),
                        inner: f.clone(),
                    });
                }
            }
        }
        out.sort();
        out
    }
}

impl<D: Graded, C: Graded> Graded for ComposedBasis<D, C> {
    fn degree(&self) -> usize {
        self.outer.degree() + self.inner.iter().map(Graded::degree).sum::<usize>()
    }
}

impl<D: Graded + Ord, C: Graded + Ord> Ord for ComposedBasis<D, C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.outer.cmp(&other.outer))
            .then_with(|| self.inner.cmp(&other.inner))
    }
}

impl<D: Graded + Ord, C: Graded + Ord> PartialOrd for ComposedBasis<D, C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

enum Notation {
    Composition,
    Weighted,
    Forest,
}

fn notation<D: Atom, C: Atom>() -> Notation {
    let inner_combs = C::from_comb(0).is_some();
    if inner_combs && D::from_comb(0).is_some() {
        Notation::Composition
    } else if inner_combs && D::from_tree(BinaryTree::Leaf).is_some() {
        Notation::Weighted
    } else {
        Notation::Forest
    }
}

fn weights<C: Atom>(inner: &[C]) -> String {
    inner
        .iter()
        .map(|c| (c.degree() + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Combs over combs print as compositions `[1,3]`; combs over a tree print as
/// weights `2,1,2` (with `@ tree` unless the tree is a comb); everything else
/// prints as `{c0|c1|…|cn}/d`.
impl<D: Atom, C: Atom> fmt::Display for ComposedBasis<D, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match notation::<D, C>() {
            Notation::Composition => write!(f, "[{}]", weights(&self.inner)),
            Notation::Weighted => {
                f.write_str(&weights(&self.inner))?;
                match self.outer.as_tree() {
                    Some(t) if !t.is_comb() => write!(f, " @ {t}"),
                    _ => Ok(()),
                }
            }
            Notation::Forest => {
                f.write_str("{")?;
                for (i, c) in self.inner.iter().enumerate() {
                    if i > 0 {
                        f.write_str("|")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "}}/{}", self.outer)
            }
        }
    }
}

impl<D: Atom, C: Atom> fmt::Debug for ComposedBasis<D, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_weights(s: &str, offset: usize) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in s.split(',') {
        let w: usize = piece
            .trim()
            .parse()
            .map_err(|_| ParseError::new(pos, format!("expected a positive weight, found `{}`", piece.trim())))?;
        if w == 0 {
            return Err(ParseError::new(pos, "weights must be positive"));
        }
        out.push(w);
        pos += piece.len() + 1;
    }
    Ok(out)
}

fn combs_from_weights<C: Atom>(ws: &[usize]) -> Vec<C> {
    ws.iter()
        .map(|&w| C::from_comb(w - 1).expect("inner atoms are combs"))
        .collect()
}

impl<D: Atom, C: Atom> FromStr for ComposedBasis<D, C> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let lead = s.len() - s.trim_start().len();
        let body = s.trim();
        let arity = |outer: D, inner: Vec<C>| {
            ComposedBasis::new(outer, inner).map_err(|e| ParseError::new(lead, e.to_string()))
        };
        match notation::<D, C>() {
            Notation::Composition => {
                let inside = body
                    .strip_prefix('[')
                    .and_then(|b| b.strip_suffix(']'))
                    .ok_or_else(|| ParseError::new(lead, "expected a composition `[a,b,…]`"))?;
                let ws = parse_weights(inside, lead + 1)?;
                let outer = D::from_comb(ws.len() - 1).expect("outer atoms are combs");
                arity(outer, combs_from_weights(&ws))
            }
            Notation::Weighted => {
                let (ws_text, shape) = match body.split_once('@') {
                    Some((w, t)) => {
                        let at = lead + w.len() + 1;
                        let tree: BinaryTree = t.parse().map_err(|e: ParseError| e.shifted(at))?;
                        (w, Some(tree))
                    }
                    None => (body, None),
                };
                let ws = parse_weights(ws_text, lead)?;
                let tree = shape.unwrap_or_else(|| BinaryTree::comb(ws.len() - 1));
                let outer = D::from_tree(tree).expect("outer atoms are trees");
                arity(outer, combs_from_weights(&ws))
            }
            Notation::Forest => {
                if !body.starts_with('{') {
                    return Err(ParseError::new(lead, "expected `{`"));
                }
                let close = body
                    .find('}')
                    .ok_or_else(|| ParseError::new(lead + body.len(), "missing `}`"))?;
                let rest = body[close + 1..].trim_start();
                let slash_at = lead + body.len() - rest.len();
                let outer_text = rest
                    .strip_prefix('/')
                    .ok_or_else(|| ParseError::new(slash_at, "expected `/` after the forest"))?;
                let outer: D = outer_text.parse().map_err(|e: ParseError| e.shifted(slash_at + 1))?;
                let mut inner = Vec::new();
                let mut pos = lead + 1;
                for piece in body[1..close].split('|') {
                    inner.push(piece.parse::<C>().map_err(|e| e.shifted(pos))?);
                    pos += piece.len() + 1;
                }
                arity(outer, inner)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Comb, OrderedTree};
    use super::*;

    #[test]
    fn notations_round_trip() {
        let p: ComposedBasis<BinaryTree, BinaryTree> = "{.|(..)|.}/(.(..))".parse().unwrap();
        assert_eq!(p.outer.degree(), 2);
        assert_eq!(p.inner.len(), 3);
        assert_eq!(p.to_string(), "{.|(. .)|.}/(. (. .))");

        let c: ComposedBasis<Comb, Comb> = "[1,3]".parse().unwrap();
        assert_eq!(c.outer, Comb(1));
        assert_eq!(c.inner, vec![Comb(0), Comb(2)]);
        assert_eq!(c.degree(), 3);
        assert_eq!(c.to_string(), "[1,3]");

        let k: ComposedBasis<BinaryTree, Comb> = "2,1,2".parse().unwrap();
        assert_eq!(k.outer, BinaryTree::comb(2));
        assert_eq!(k.to_string(), "2,1,2");
        let k: ComposedBasis<BinaryTree, Comb> = "2,1,2 @ ((..).)".parse().unwrap();
        assert_eq!(k.to_string(), "2,1,2 @ ((. .) .)");

        let s: ComposedBasis<OrderedTree, Comb> = "{c0|c2}/1".parse().unwrap();
        assert_eq!(s.to_string(), "{c0|c2}/1");
    }

    #[test]
    fn malformed_literals() {
        assert!("[0,1]".parse::<ComposedBasis<Comb, Comb>>().is_err());
        assert!("1,3".parse::<ComposedBasis<Comb, Comb>>().is_err());
        assert!("{.|.}/.".parse::<ComposedBasis<BinaryTree, BinaryTree>>().is_err());
        assert!("{.}(..)".parse::<ComposedBasis<BinaryTree, BinaryTree>>().is_err());
        assert!("1,1 @ .".parse::<ComposedBasis<BinaryTree, Comb>>().is_err());
    }

    #[test]
    fn enumeration_matches_products() {
        let e = ComposedBasis::enumerate(3, &BinaryTree::all, &BinaryTree::all);
        assert_eq!(e.len(), 21);
        assert!(e.windows(2).all(|w| w[0] < w[1]));
    }
}
