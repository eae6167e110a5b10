use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::Coeff;

/// A finite linear combination of keys with nonzero coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// the combinations. Iteration follows the key order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord + fmt::Debug, C: fmt::Debug> fmt::Debug for Combination<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(&self.terms).finish()
    }
}

impl<K: Ord, C> Default for Combination<K, C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, C: Coeff> Combination<K, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The combination `c * key`.
    pub fn term(key: K, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    /// The basis element `key` with coefficient one.
    pub fn basis(key: K) -> Self {
        Self::term(key, C::one())
    }

    pub fn add_term(&mut self, key: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `scale * other` into `self`.
    pub fn add_scaled(&mut self, other: &Self, scale: &C) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone() * scale.clone());
        }
    }

    pub fn coeff(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn get(&self, key: &K) -> Option<&C> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, C> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, C> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`Combination::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// `Σ_k self[k] * other[k]`, the pairing that makes keys orthonormal.
    pub fn dot(&self, other: &Self) -> C {
        let mut acc = C::zero();
        for (k, c) in &self.terms {
            if let Some(d) = other.terms.get(k) {
                acc += c.clone() * d.clone();
            }
        }
        acc
    }

    pub fn scaled(&self, s: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filtered(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Relabels keys, merging coefficients of keys that collide.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> Combination<K2, C> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Converts coefficients, dropping any that become zero.
    pub fn map_coeffs<C2: Coeff>(&self, mut f: impl FnMut(&C) -> C2) -> Combination<K, C2> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Converts to another coefficient ring through exact machine integers.
    ///
    /// Returns `None` if some coefficient is not an integer that fits `i64`.
    pub fn try_convert<C2: Coeff>(&self) -> Option<Combination<K, C2>> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), C2::from_int(c.as_exact_int()?));
        }
        Some(out)
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, C)> for Combination<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Extend<(K, C)> for Combination<K, C> {
    fn extend<I: IntoIterator<Item = (K, C)>>(&mut self, iter: I) {
        for (k, c) in iter {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord, C> IntoIterator for Combination<K, C> {
    type Item = (K, C);
    type IntoIter = btree_map::IntoIter<K, C>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord, C> IntoIterator for &'a Combination<K, C> {
    type Item = (&'a K, &'a C);
    type IntoIter = btree_map::Iter<'a, K, C>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone, C: Coeff> AddAssign<&Combination<K, C>> for Combination<K, C> {
    fn add_assign(&mut self, rhs: &Combination<K, C>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone, C: Coeff> SubAssign<&Combination<K, C>> for Combination<K, C> {
    fn sub_assign(&mut self, rhs: &Combination<K, C>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: Ord + Clone, C: Coeff> Add for &Combination<K, C> {
    type Output = Combination<K, C>;

    fn add(self, rhs: Self) -> Combination<K, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Add for Combination<K, C> {
    type Output = Combination<K, C>;

    fn add(mut self, rhs: Self) -> Combination<K, C> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone, C: Coeff> Sub for &Combination<K, C> {
    type Output = Combination<K, C>;

    fn sub(self, rhs: Self) -> Combination<K, C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Sub for Combination<K, C> {
    type Output = Combination<K, C>;

    fn sub(mut self, rhs: Self) -> Combination<K, C> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone, C: Coeff> Neg for &Combination<K, C> {
    type Output = Combination<K, C>;

    fn neg(self) -> Combination<K, C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<K: Ord + Clone, C: Coeff> Neg for Combination<K, C> {
    type Output = Combination<K, C>;

    fn neg(self) -> Combination<K, C> {
        -&self
    }
}
