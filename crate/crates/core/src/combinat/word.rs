use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{BinaryTree, Graded};
use crate::error::{Error, ParseError, Result};

/// An ordered tree, stored as the permutation read off the gaps between its
/// leaves. The largest letter labels the root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedTree(Vec<u32>);

impl OrderedTree {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &x in &word {
            let i = x as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::NotAPermutation(word));
            }
            seen[i - 1] = true;
        }
        Ok(OrderedTree(word))
    }

    pub fn empty() -> Self {
        OrderedTree(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<OrderedTree> {
        let mut out = Vec::new();
        let mut w: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(OrderedTree(w.clone()));
            // next permutation
            let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
                break;
            };
            let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("successor exists");
            w.swap(i - 1, j);
            w[i..].reverse();
        }
        out
    }

    pub fn tau(&self) -> BinaryTree {
        tau_letters(&self.0)
    }
}

impl Graded for OrderedTree {
    fn degree(&self) -> usize {
        self.0.len()
    }
}

impl Ord for OrderedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for OrderedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for OrderedTree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let trimmed = s.trim();
        let lead = s.len() - s.trim_start().len();
        if trimmed.is_empty() || trimmed == "()" {
            return Ok(OrderedTree::empty());
        }
        let mut word = Vec::new();
        let mut offset = lead;
        for piece in trimmed.split(',') {
            let letter = piece.trim().parse::<u32>().map_err(|_| {
                ParseError::new(offset, format!("expected a positive integer, found `{}`", piece.trim()))
            })?;
            word.push(letter);
            offset += piece.len() + 1;
        }
        OrderedTree::new(word).map_err(|e| ParseError::new(lead, e.to_string()))
    }
}

/// The underlying planar binary tree: the position of the largest letter
/// becomes the root, recursively.
pub fn tau(w: &OrderedTree) -> BinaryTree {
    w.tau()
}

fn tau_letters(letters: &[u32]) -> BinaryTree {
    match letters.iter().enumerate().max_by_key(|&(_, &x)| x) {
        None => BinaryTree::Leaf,
        Some((p, _)) => BinaryTree::node(tau_letters(&letters[..p]), tau_letters(&letters[p + 1..])),
    }
}

/// Replace each letter by its rank among the letters.
pub fn standardize(letters: &[u32]) -> Result<OrderedTree> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedLetter(w[0]));
    }
    let word = letters
        .iter()
        .map(|x| sorted.binary_search(x).expect("letter present") as u32 + 1)
        .collect();
    Ok(OrderedTree(word))
}

/// Cut a word at a multiset of gap positions `0..=n`, keeping labels.
pub fn split_word(w: &OrderedTree, positions: &[usize]) -> Result<Vec<Vec<u32>>> {
    let n = w.degree();
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    if let Some(&last) = sorted.last() {
        if last > n {
            return Err(Error::IndexOutOfRange { index: last, max: n });
        }
    }
    let mut out = Vec::with_capacity(sorted.len() + 1);
    let mut start = 0;
    for p in sorted {
        out.push(w.0[start..p].to_vec());
        start = p;
    }
    out.push(w.0[start..].to_vec());
    Ok(out)
}

/// Graft a labelled forest onto `base`: the letters of `base` are raised
/// above every letter of the forest and interleaved with the segments.
pub fn graft_words(forest: &[Vec<u32>], base: &OrderedTree) -> Result<OrderedTree> {
    if forest.len() != base.degree() + 1 {
        return Err(Error::ArityMismatch {
            expected: base.degree() + 1,
            found: forest.len(),
        });
    }
    let shift: u32 = forest.iter().map(|s| s.len() as u32).sum();
    let mut word = Vec::with_capacity(shift as usize + base.degree());
    for (i, segment) in forest.iter().enumerate() {
        if i > 0 {
            word.push(base.0[i - 1] + shift);
        }
        word.extend_from_slice(segment);
    }
    OrderedTree::new(word)
}
