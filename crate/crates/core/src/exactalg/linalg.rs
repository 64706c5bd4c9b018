use std::collections::BTreeMap;

use num_traits::One;

use super::{Lin, Scalar};

/// Row echelon form built one vector at a time. Each stored row is keyed by
/// its leading (smallest) key and normalized to leading coefficient one.
pub struct EchelonForm<K: Ord> {
    rows: BTreeMap<K, Lin<K>>,
}

impl<K: Ord + Clone> Default for EchelonForm<K> {
    fn default() -> Self {
        EchelonForm { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> EchelonForm<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` until its leading key is not a pivot. Each step applied to
    /// `v` is mirrored on `tag`.
    fn reduce<T: Ord + Clone>(&self, v: &mut Lin<K>, tag: &mut Lin<T>, tags: &BTreeMap<K, Lin<T>>) {
        while let Some((lead, c)) = v.terms.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            let Some(row) = self.rows.get(&lead) else { break };
            let scale = -c;
            v.add_scaled(row, &scale);
            if let Some(t) = tags.get(&lead) {
                tag.add_scaled(t, &scale);
            }
        }
    }

    /// Returns whether `v` was independent of the rows already present.
    pub fn insert(&mut self, v: Lin<K>) -> bool {
        let mut v = v;
        let mut unused: Lin<()> = Lin::zero();
        self.reduce(&mut v, &mut unused, &BTreeMap::new());
        self.push(v).is_some()
    }

    fn push(&mut self, v: Lin<K>) -> Option<(K, Scalar)> {
        let (lead, c) = v.terms.iter().next().map(|(k, c)| (k.clone(), c.clone()))?;
        let inv = Scalar::one() / &c;
        self.rows.insert(lead.clone(), v.scale(&inv));
        Some((lead, inv))
    }
}

pub fn rank<K: Ord + Clone>(vectors: &[Lin<K>]) -> usize {
    let mut form = EchelonForm::new();
    for v in vectors {
        form.insert(v.clone());
    }
    form.rank()
}

/// Basis of the kernel of the linear map sending `domain[i]` to `f(domain[i])`.
pub fn kernel_basis<B: Ord + Clone, K: Ord + Clone>(domain: &[B], f: impl Fn(&B) -> Lin<K>) -> Vec<Lin<B>> {
    let mut form = EchelonForm::new();
    let mut tags: BTreeMap<K, Lin<B>> = BTreeMap::new();
    let mut kernel = Vec::new();
    for b in domain {
        let mut v = f(b);
        let mut tag = Lin::basis(b.clone());
        form.reduce(&mut v, &mut tag, &tags);
        match form.push(v) {
            Some((lead, inv)) => {
                tags.insert(lead, tag.scale(&inv));
            }
            None => kernel.push(tag),
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn v(entries: &[(u8, i64)]) -> Lin<u8> {
        entries.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    #[test]
    fn rank_of_small_systems() {
        assert_eq!(rank::<u8>(&[]), 0);
        assert_eq!(rank(&[v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)])]), 1);
        assert_eq!(rank(&[v(&[(0, 1)]), v(&[(1, 1)]), v(&[(0, 1), (1, 1)])]), 2);
        assert_eq!(rank(&[v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (2, -1)])]), 2);
    }

    #[test]
    fn kernel_vectors_map_to_zero() {
        let domain = ['a', 'b', 'c', 'd'];
        let f = |x: &char| match x {
            'a' => v(&[(0, 1), (1, 1)]),
            'b' => v(&[(1, 1), (2, 1)]),
            'c' => v(&[(0, 1), (2, -1)]),
            _ => Lin::zero(),
        };
        let ker = kernel_basis(&domain, f);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            assert!(k.flat_map(f).is_zero());
        }
        assert_eq!(rank(&ker), 2);
    }
}
