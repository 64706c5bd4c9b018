use std::fmt;
use std::str::FromStr;

use super::{BinaryTree, Graded};
use crate::error::ParseError;

/// The unique comb of a given degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Comb(pub usize);

impl Comb {
    pub fn tree(self) -> BinaryTree {
        BinaryTree::comb(self.0)
    }
}

impl Graded for Comb {
    fn degree(&self) -> usize {
        self.0
    }
}

/// Shift every node of `t` onto the right branch.
pub fn kappa(t: &BinaryTree) -> Comb {
    Comb(t.degree())
}

impl fmt::Display for Comb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

impl fmt::Debug for Comb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `c3`, a bare degree `3`, or a comb-shaped tree such as `(.(..))`.
impl FromStr for Comb {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let trimmed = s.trim();
        let lead = s.len() - s.trim_start().len();
        let digits = trimmed.strip_prefix('c').unwrap_or(trimmed);
        if let Ok(n) = digits.parse::<usize>() {
            return Ok(Comb(n));
        }
        let tree: BinaryTree = trimmed.parse().map_err(|e: ParseError| e.shifted(lead))?;
        if !tree.is_comb() {
            return Err(ParseError::new(lead, "tree is not a comb"));
        }
        Ok(Comb(tree.degree()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_preserves_degree() {
        assert_eq!(kappa(&BinaryTree::Leaf), Comb(0));
        assert_eq!(kappa(&"((..).)".parse().unwrap()), Comb(2));
        for t in BinaryTree::all(5) {
            assert_eq!(kappa(&t), Comb(5));
        }
    }

    #[test]
    fn comb_text() {
        assert_eq!("c4".parse::<Comb>().unwrap(), Comb(4));
        assert_eq!("2".parse::<Comb>().unwrap(), Comb(2));
        assert_eq!("(.(..))".parse::<Comb>().unwrap(), Comb(2));
        assert!("((..).)".parse::<Comb>().is_err());
        assert_eq!(Comb(3).tree(), BinaryTree::comb(3));
    }
}
