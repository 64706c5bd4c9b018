use std::fmt::Display;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{BinaryTree, Comb, Graded, OrderedTree};
use crate::error::ParseError;

/// An index object that may appear inside a composed element. Combs and
/// trees expose themselves so that composed elements can use the weighted
/// and composition notations.
pub trait Atom: Graded + Clone + Display + FromStr<Err = ParseError> {
    fn as_comb(&self) -> Option<usize> {
        None
    }

    fn from_comb(_degree: usize) -> Option<Self> {
        None
    }

    fn as_tree(&self) -> Option<&BinaryTree> {
        None
    }

    fn from_tree(_tree: BinaryTree) -> Option<Self> {
        None
    }
}

impl Atom for BinaryTree {
    fn as_tree(&self) -> Option<&BinaryTree> {
        Some(self)
    }

    fn from_tree(tree: BinaryTree) -> Option<Self> {
        Some(tree)
    }
}

impl Atom for Comb {
    fn as_comb(&self) -> Option<usize> {
        Some(self.0)
    }

    fn from_comb(degree: usize) -> Option<Self> {
        Some(Comb(degree))
    }
}

impl Atom for OrderedTree {}

/// Parse `p`, `-p` or `p/q` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(num, den))
}
