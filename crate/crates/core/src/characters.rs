//! Symmetric group characters and the inner (Kronecker) structure.
//!
//! Character values come from the Murnaghan-Nakayama rule on beta sets:
//! removing a rim hook of length `k` moves one bead from position `b` to the
//! free position `b - k`, with sign `(-1)` to the number of beads jumped.
//!
//! The inner product `*` and coproduct `δ` are defined degree by degree;
//! pairs of unequal degree multiply to zero and `δ(s_()) = s_() ⊗ s_()`.
//! Unlike the outer structure, `(*, δ)` is not a bialgebra, so only the
//! duality `<δ f | g ⊗ h> = <f | g * h>` is available.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, ToPrimitive, Zero};

use crate::partition::{partitions_of, z_factor};
use crate::{Coeff, Combination, Error, Integer, Partition, Rational, Result, SchurExpr, TensorExpr};

type Key = (Partition, Partition);

static CHARACTERS: LazyLock<RwLock<HashMap<Key, i64>>> = LazyLock::new(Default::default);
static KRONECKER: LazyLock<RwLock<HashMap<Key, crate::IntTable>>> = LazyLock::new(Default::default);

/// The irreducible character value `χ^λ(ρ)`.
pub fn sn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.weight() != rho.weight() {
        return Err(Error::WeightMismatch(lambda.clone(), lambda.weight(), rho.clone(), rho.weight()));
    }
    Ok(character(lambda, rho))
}

pub(crate) fn character(lambda: &Partition, rho: &Partition) -> i64 {
    if rho.is_empty() {
        return i64::from(lambda.is_empty());
    }
    // Trivial and sign characters need no recursion.
    if lambda.is_row() {
        return 1;
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = CHARACTERS.read().unwrap().get(&key) {
        return v;
    }
    let k = rho.parts()[0];
    let rest = Partition::from_parts_unchecked(rho.parts()[1..].to_vec());
    let len = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved.iter().enumerate().map(|(j, &x)| x + j + 1 - len).collect();
        let smaller = Partition::from_unsorted(parts);
        let v = character(&smaller, &rest);
        total += if jumped % 2 == 0 { v } else { -v };
    }
    CHARACTERS.write().unwrap().insert(key, total);
    total
}

/// Kronecker coefficient `γ^ν_{λμ}`, the multiplicity of `s_ν` in `s_λ * s_μ`.
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let n = lambda.weight();
    if mu.weight() != n || nu.weight() != n {
        return 0;
    }
    kronecker_row(lambda, mu)
        .iter()
        .find(|(p, _)| p == nu)
        .map_or(0, |(_, c)| *c)
}

/// `s_λ * s_μ = Σ_ν γ^ν_{λμ} s_ν` for `|λ| = |μ|`, in canonical order.
pub(crate) fn kronecker_row(lambda: &Partition, mu: &Partition) -> crate::IntTable {
    let key = if lambda <= mu { (lambda.clone(), mu.clone()) } else { (mu.clone(), lambda.clone()) };
    if let Some(t) = KRONECKER.read().unwrap().get(&key) {
        return t.clone();
    }
    let n = lambda.weight();
    let classes = partitions_of(n, None);
    let mut fact = Integer::one();
    for k in 2..=n {
        fact *= k;
    }
    // Σ_ρ |class ρ| χ^λ χ^μ χ^ν / n!
    let weights: Vec<Integer> = classes
        .iter()
        .map(|rho| {
            let class_size = &fact / z_factor(rho);
            class_size * character(lambda, rho) * character(mu, rho)
        })
        .collect();
    let mut row = Vec::new();
    for nu in &classes {
        let mut sum = Integer::zero();
        for (rho, w) in classes.iter().zip(&weights) {
            let chi = character(nu, rho);
            if chi != 0 {
                sum += w * chi;
            }
        }
        let gamma = &sum / &fact;
        debug_assert!((&gamma * &fact) == sum);
        if !gamma.is_zero() {
            row.push((nu.clone(), gamma.to_i64().expect("Kronecker coefficient fits i64")));
        }
    }
    let row = Arc::new(row);
    KRONECKER.write().unwrap().entry(key).or_insert(row).clone()
}

impl<C: Coeff> SchurExpr<C> {
    /// Inner (Kronecker) product, degree by degree.
    pub fn inner_product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self {
            for (b, cb) in other {
                if a.weight() != b.weight() {
                    continue;
                }
                let c = ca.clone() * cb.clone();
                if a.is_empty() {
                    out.add_term(Partition::empty(), c);
                    continue;
                }
                for (nu, g) in kronecker_row(a, b).iter() {
                    out.add_term(nu.clone(), c.clone() * C::from_int(*g));
                }
            }
        }
        out
    }

    /// `δ(s_λ) = Σ γ^λ_{μν} s_μ ⊗ s_ν`, dual to the inner product.
    pub fn inner_coproduct(&self) -> TensorExpr<C> {
        let mut out = TensorExpr::zero();
        for (lam, c) in self {
            let n = lam.weight();
            let parts = partitions_of(n, None);
            for mu in &parts {
                for nu in &parts {
                    let g = kronecker_coefficient(mu, nu, lam);
                    if n == 0 || g != 0 {
                        let g = if n == 0 { 1 } else { g };
                        out.add_term((mu.clone(), nu.clone()), c.clone() * C::from_int(g));
                    }
                }
            }
        }
        out
    }
}

/// Degree `d` piece of the Cauchy kernel, `Σ_{ξ ⊢ d} s_ξ ⊗ s_ξ`.
pub fn cauchy_kernel<C: Coeff>(d: usize) -> TensorExpr<C> {
    partitions_of(d, None)
        .into_iter()
        .map(|xi| ((xi.clone(), xi), C::one()))
        .collect()
}

/// A symmetric function in the power-sum basis with exact rational
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PowerSumExpr(Combination<Partition, Rational>);

impl PowerSumExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self(Combination::basis(Partition::empty()))
    }

    /// The single power sum `p_ρ`.
    pub fn p(rho: Partition) -> Self {
        Self(Combination::basis(rho))
    }

    pub fn terms(&self) -> &Combination<Partition, Rational> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `s_λ = Σ_ρ χ^λ(ρ) / z_ρ p_ρ`, extended linearly.
    pub fn from_schur<C: Coeff>(f: &SchurExpr<C>) -> Result<Self> {
        let mut out = Combination::zero();
        for (lam, c) in f {
            let c = Rational::from_integer(exact_integer(c)?);
            for rho in partitions_of(lam.weight(), None) {
                let chi = character(lam, &rho);
                if chi != 0 {
                    let w = Rational::new(Integer::from(chi), z_factor(&rho));
                    out.add_term(rho, w * c.clone());
                }
            }
        }
        Ok(Self(out))
    }

    /// `p_ρ = Σ_λ χ^λ(ρ) s_λ`, extended linearly.
    pub fn to_schur(&self) -> SchurExpr<Rational> {
        let mut out = SchurExpr::zero();
        let mut by_degree: HashMap<usize, Vec<Partition>> = HashMap::new();
        for (rho, c) in &self.0 {
            let lams = by_degree
                .entry(rho.weight())
                .or_insert_with(|| partitions_of(rho.weight(), None));
            for lam in lams.iter() {
                let chi = character(lam, rho);
                if chi != 0 {
                    out.add_term(lam.clone(), c.clone() * Rational::from_integer(chi.into()));
                }
            }
        }
        out
    }

    /// `p_k[f]`: every power sum index scaled by `k`.
    pub fn adams(&self, k: usize) -> Self {
        Self(self.0.map_keys(|rho| rho.scaled(k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Combination::zero();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                out.add_term(a.union(b), ca.clone() * cb.clone());
            }
        }
        Self(out)
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        self.0.add_scaled(&other.0, c);
    }
}

fn exact_integer<C: Coeff>(c: &C) -> Result<Integer> {
    c.as_exact_int()
        .map(Integer::from)
        .ok_or_else(|| Error::CoefficientOverflow(format!("{c:?}")))
}

pub(crate) fn export() -> (Vec<(Key, i64)>, Vec<(Key, crate::IntTable)>) {
    let mut chars: Vec<_> = CHARACTERS.read().unwrap().iter().map(|(k, v)| (k.clone(), *v)).collect();
    chars.sort();
    let mut kron: Vec<_> = KRONECKER.read().unwrap().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    kron.sort_by(|a, b| a.0.cmp(&b.0));
    (chars, kron)
}

pub(crate) fn import_character(key: Key, v: i64) {
    CHARACTERS.write().unwrap().entry(key).or_insert(v);
}

pub(crate) fn import_kronecker(key: Key, row: Vec<(Partition, i64)>) {
    KRONECKER.write().unwrap().entry(key).or_insert_with(|| Arc::new(row));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{dim_sn, partitions_up_to};
    use crate::{Schur, Tensor};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[usize]) -> Schur {
        Schur::s(parts)
    }

    #[test]
    fn character_examples() {
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        for rho in partitions_of(5, None) {
            assert_eq!(sn_character(&p(&[5]), &rho).unwrap(), 1);
        }
        assert!(matches!(sn_character(&p(&[2]), &p(&[1])), Err(Error::WeightMismatch(..))));
    }

    #[test]
    fn identity_class_gives_dimension_and_sign_character() {
        for lam in partitions_up_to(8) {
            let id = Partition::column(lam.weight());
            assert_eq!(Integer::from(character(&lam, &id)), dim_sn(&lam));
        }
        // χ^{1^n}(ρ) = sign(ρ) = (-1)^{n - ℓ(ρ)}
        for rho in partitions_of(6, None) {
            let sign = if (6 - rho.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(character(&Partition::column(6), &rho), sign);
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 0..=7 {
            let parts = partitions_of(n, None);
            for a in &parts {
                for b in &parts {
                    let sum: Rational = parts
                        .iter()
                        .map(|rho| Rational::new((character(a, rho) * character(b, rho)).into(), z_factor(rho)))
                        .sum();
                    let expect = if a == b { Rational::one() } else { Rational::zero() };
                    assert_eq!(sum, expect, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let mu = s(&[3, 1]) + s(&[2, 2]);
        assert_eq!(s(&[4]).inner_product(&mu), mu);
        assert_eq!(s(&[2, 1]).inner_product(&s(&[2, 1])), s(&[3]) + s(&[2, 1]) + s(&[1, 1, 1]));
        assert_eq!(s(&[1, 1]).inner_product(&s(&[1, 1])), s(&[2]));
        assert!(s(&[2]).inner_product(&s(&[1])).is_zero());
    }

    #[test]
    fn inner_coproduct_examples() {
        let t = |a: &[usize], b: &[usize]| Tensor::basis((p(a), p(b)));
        assert_eq!(s(&[1]).inner_coproduct(), t(&[1], &[1]));
        assert_eq!(s(&[2]).inner_coproduct(), t(&[2], &[2]) + t(&[1, 1], &[1, 1]));
        assert_eq!(Schur::one().inner_coproduct(), Tensor::one());
    }

    #[test]
    fn cauchy_kernel_pieces() {
        assert_eq!(cauchy_kernel::<Integer>(0), Tensor::one());
        assert_eq!(cauchy_kernel::<Integer>(2).len(), 2);
        assert_eq!(cauchy_kernel::<Integer>(3).len(), 3);
    }

    #[test]
    fn power_sum_roundtrip() {
        for lam in partitions_up_to(8) {
            let f = s(lam.parts());
            let back = PowerSumExpr::from_schur(&f).unwrap().to_schur();
            assert_eq!(back, f.map_coeffs(|c| Rational::from_integer(c.clone())));
        }
    }
}
