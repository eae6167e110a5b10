//! Integer partitions and the dimension formulas for `GL(n)` and `S_n` irreps.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Integer, Result};

/// A partition: weakly decreasing positive parts, trailing zeros stripped.
///
/// The empty partition labels the unit. `Ord` is the canonical basis order
/// used everywhere in the crate: ascending weight, then reverse
/// lexicographic within a weight, so `[4] < [3,1] < [2,2] < [2,1,1]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_row(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// True iff `inner` fits inside this diagram.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Every partition whose diagram fits inside this one, in canonical order.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        sub_partitions_rec(&self.0, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Multiplicities `m_i` of each part size `i`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Hook length of the box in row `i`, column `j` (both zero based).
    pub fn hook(&self, i: usize, j: usize, conj: &Partition) -> usize {
        self.0[i] - j + conj.0[j] - i - 1
    }

    /// Partition with every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// The union of the parts of both partitions, sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Removes `k` from every part (the parts must all be at least `k`).
    pub(crate) fn shifted_down(&self, k: usize) -> Partition {
        Partition::from_unsorted(self.0.iter().map(|p| p - k).collect())
    }
}

fn sub_partitions_rec(outer: &[usize], bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition(cur.clone()));
    let i = cur.len();
    if i == outer.len() {
        return;
    }
    for p in 1..=outer[i].min(bound) {
        cur.push(p);
        sub_partitions_rec(outer, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::text::parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl TryFrom<&[usize]> for Partition {
    type Error = Error;

    fn try_from(parts: &[usize]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// Free-function form of [`Partition::contains`]: true iff `mu` ⊆ `lambda`.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    lambda.contains(mu)
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// All partitions of `n`, optionally with at most `max_length` parts, in
/// canonical (reverse lexicographic) order.
pub fn partitions_of(n: usize, max_length: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    partitions_rec(n, n, max_length.unwrap_or(usize::MAX), &mut cur, &mut out);
    out
}

fn partitions_rec(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        cur.push(p);
        partitions_rec(n - p, p, max_len, cur, out);
        cur.pop();
    }
}

/// All partitions of weight `0..=n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(|k| partitions_of(k, None)).collect()
}

/// Dimension of the `GL(n)` irrep `{lambda}`, by the hook-content formula.
///
/// Zero when `lambda` has more than `n` parts.
pub fn dim_gl(lambda: &Partition, n: usize) -> Integer {
    if lambda.len() > n {
        return Integer::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            num *= n + j - i;
            den *= lambda.hook(i, j, &conj);
        }
    }
    num / den
}

/// Number of standard tableaux of shape `lambda`, by the hook length formula.
pub fn dim_sn(lambda: &Partition) -> Integer {
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    for k in 2..=lambda.weight() {
        num *= k;
    }
    let mut den = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            den *= lambda.hook(i, j, &conj);
        }
    }
    num / den
}

/// `z_rho = prod_i i^{m_i} m_i!`, the centralizer order of cycle type `rho`.
pub fn z_factor(rho: &Partition) -> Integer {
    let mut z = BigInt::one();
    for (i, &m) in rho.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= i * k;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Semistandard tableaux of shape `lambda` with entries `1..=n`, counted
    /// box by box in row reading order.
    fn count_ssyt(lambda: &Partition, n: usize) -> u64 {
        fn go(shape: &[usize], grid: &mut Vec<Vec<usize>>, r: usize, c: usize, n: usize) -> u64 {
            if r == shape.len() {
                return 1;
            }
            if c == shape[r] {
                return go(shape, grid, r + 1, 0, n);
            }
            let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
            let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=n {
                grid[r][c] = v;
                total += go(shape, grid, r, c + 1, n);
            }
            total
        }
        let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
        go(lambda.parts(), &mut grid, 0, 0, n)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_involution() {
        for lam in partitions_up_to(9) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().weight(), lam.weight());
        }
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[1, 1]), &p(&[2, 1])));
        assert!(!contains(&p(&[1, 1, 1]), &p(&[3, 1])));
        for lam in partitions_up_to(5) {
            assert!(contains(&Partition::empty(), &lam));
        }
    }

    #[test]
    fn construction_rejects_increasing_parts() {
        assert!(matches!(Partition::new(vec![1, 2]), Err(Error::NotDecreasing(_))));
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(partitions_of(0, None), vec![Partition::empty()]);
        assert_eq!(partitions_of(4, Some(2)), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
    }

    #[test]
    fn canonical_order_matches_enumeration() {
        let all = partitions_up_to(7);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert!(p(&[4]) < p(&[3, 1]) && p(&[3, 1]) < p(&[2, 2]));
    }

    #[test]
    fn dim_gl_examples() {
        assert_eq!(dim_gl(&p(&[2]), 4), 10.into());
        assert_eq!(dim_gl(&p(&[1, 1, 1, 1]), 4), 1.into());
        assert_eq!(dim_gl(&p(&[3, 1, 1]), 4), 36.into());
        assert_eq!(dim_gl(&p(&[1, 1, 1]), 2), 0.into());
    }

    #[test]
    fn dim_gl_matches_tableau_count() {
        for lam in partitions_up_to(6) {
            for n in 0..=5 {
                assert_eq!(dim_gl(&lam, n), count_ssyt(&lam, n).into(), "{lam} n={n}");
            }
        }
        assert_eq!(count_ssyt(&p(&[3, 1, 1]), 4), 36);
    }

    #[test]
    fn dim_sn_examples_and_sum_of_squares() {
        assert_eq!(dim_sn(&p(&[2, 1])), 2.into());
        assert_eq!(dim_sn(&p(&[5])), 1.into());
        assert_eq!(dim_sn(&p(&[1, 1, 1])), 1.into());
        let mut fact = BigInt::one();
        for n in 0..=8usize {
            if n > 0 {
                fact *= n;
            }
            let sum: BigInt = partitions_of(n, None).iter().map(|l| dim_sn(l).pow(2)).sum();
            assert_eq!(sum, fact);
        }
    }

    #[test]
    fn sub_partitions_of_21() {
        let subs = p(&[2, 1]).sub_partitions();
        assert_eq!(subs, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])]);
    }

    #[test]
    fn z_factor_values() {
        assert_eq!(z_factor(&p(&[1, 1, 1])), 6.into());
        assert_eq!(z_factor(&p(&[2, 1])), 2.into());
        assert_eq!(z_factor(&p(&[2, 2])), 8.into());
        assert_eq!(z_factor(&Partition::empty()), 1.into());
    }
}
