use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite formal sum of keys with nonzero exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Lin<K: Ord> {
    pub(super) terms: BTreeMap<K, Scalar>,
}

pub type Tensor<B> = Lin<(B, B)>;

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: K, coefficient: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coefficient);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coefficient(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coefficient_sum(&self) -> Scalar {
        self.terms.values().fold(Scalar::zero(), |acc, c| acc + c)
    }

    pub fn add_term(&mut self, key: K, coefficient: Scalar) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &Lin<K>, scale: &Scalar) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Lin<K> {
        if s.is_zero() {
            return Lin::zero();
        }
        Lin {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// Linear extension of a map on keys.
    pub fn flat_map<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Lin<K2>) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, Scalar> {
        self.terms
    }

    /// Render with a custom key formatter: `2 a + b - 1/2 c`.
    pub fn format_with(&self, mut key: impl FnMut(&K) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push(' ');
            }
            out.push_str(&key(k));
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Lin::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> Add for &Lin<K> {
    type Output = Lin<K>;

    fn add(self, rhs: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl<K: Ord + Clone> Sub for &Lin<K> {
    type Output = Lin<K>;

    fn sub(self, rhs: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl<K: Ord + Clone> Neg for &Lin<K> {
    type Output = Lin<K>;

    fn neg(self) -> Lin<K> {
        self.scale(&-Scalar::one())
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|k| k.to_string()))
    }
}

impl<K: Ord + Clone + fmt::Debug> fmt::Debug for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|k| format!("{k:?}")))
    }
}

/// Bilinear tensor product.
pub fn lin_tensor<A: Ord + Clone, B: Ord + Clone>(x: &Lin<A>, y: &Lin<B>) -> Lin<(A, B)> {
    let mut out = Lin::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

/// `x_0 ⊗ x_1 ⊗ … ⊗ x_k`, keyed by the sequence of factors.
pub fn tensor_power<K: Ord + Clone>(factors: &[Lin<K>]) -> Lin<Vec<K>> {
    let mut acc: Lin<Vec<K>> = Lin::basis(Vec::with_capacity(factors.len()));
    for factor in factors {
        let mut next = Lin::zero();
        for (prefix, cp) in acc.iter() {
            for (k, ck) in factor.iter() {
                let mut v = prefix.clone();
                v.push(k.clone());
                next.add_term(v, cp * ck);
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_prune_zeros() {
        let a = Lin::basis("a");
        assert!((&a - &a).is_zero());
        assert_eq!((&a + &a).coefficient(&"a"), int(2));
        let ab: Lin<&str> = [("a", int(1)), ("b", int(1))].into_iter().collect();
        let scaled = ab.scale(&int(2));
        assert_eq!(scaled.coefficient(&"a"), int(2));
        assert_eq!(scaled.coefficient(&"b"), int(2));
        assert!(ab.scale(&int(0)).is_zero());
    }

    #[test]
    fn tensors_are_bilinear() {
        let ab: Lin<&str> = [("a", int(1)), ("b", int(1))].into_iter().collect();
        let c = Lin::basis("c");
        let t = lin_tensor(&ab, &c);
        assert_eq!(t.len(), 2);
        assert_eq!(t.coefficient(&("a", "c")), int(1));
        assert_eq!(t.coefficient(&("b", "c")), int(1));
        let p = tensor_power(&[ab.clone(), ab.clone(), c]);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn text_rendering() {
        let x: Lin<&str> = [("a", int(2)), ("b", int(1)), ("c", -int(1)), ("d", BigRational::new(1.into(), 2.into()))]
            .into_iter()
            .collect();
        assert_eq!(x.to_string(), "2 a + b - c + 1/2 d");
        assert_eq!(Lin::<&str>::zero().to_string(), "0");
        assert_eq!(Lin::term("a", int(-3)).to_string(), "-3 a");
    }
}
