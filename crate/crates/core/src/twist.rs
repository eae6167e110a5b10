//! Branching to stabilizer subgroups and the twisted products on their
//! characters.
//!
//! A subgroup character `(λ)_π` is the image of `{λ}` under skewing by
//! `M_π = {π}∘M`; lifting back skews by `{π}∘L`. The product of subgroup
//! characters is the outer product twisted by the 2-cocycle `∂φ` of the
//! linear form `φ` of `M_π`. Three equivalent routes are provided:
//! proper-cut kernel, lift-multiply-branch and explicit cocycle.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use crate::partition::partitions_up_to;
use crate::series::proper_cut_kernel;
use crate::{Coeff, Error, Partition, Result, SchurExpr, SchurSeries, TensorExpr, TensorSeries};

/// A virtual character of the subgroup stabilizing a tensor of symmetry `pi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubgroupChar<C: Coeff> {
    pi: Partition,
    terms: SchurExpr<C>,
}

impl<C: Coeff> SubgroupChar<C> {
    pub fn new(pi: Partition, terms: SchurExpr<C>) -> Self {
        Self { pi, terms }
    }

    pub fn basis(pi: Partition, label: Partition) -> Self {
        Self { pi, terms: SchurExpr::basis(label) }
    }

    pub fn pi(&self) -> &Partition {
        &self.pi
    }

    pub fn terms(&self) -> &SchurExpr<C> {
        &self.terms
    }

    pub fn into_terms(self) -> SchurExpr<C> {
        self.terms
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.degree()
    }

    fn same_pi(&self, other: &Self) -> Result<()> {
        if self.pi != other.pi {
            return Err(Error::SymmetryMismatch(self.pi.clone(), other.pi.clone()));
        }
        Ok(())
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for SubgroupChar<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_with(&self.terms, |p| format!("({p})")))
    }
}

/// `f / Φ = (φ⊗id)Δf`, applied degree by degree.
pub fn skew_by_series<C: Coeff>(f: &SchurExpr<C>, phi: &SchurSeries<C>) -> Result<SchurExpr<C>> {
    let deg = f.degree().unwrap_or(0);
    if deg > phi.cutoff() {
        return Err(Error::CutoffExceeded { degree: deg, cutoff: phi.cutoff() });
    }
    let mut out = SchurExpr::zero();
    for d in 0..=deg {
        let piece = phi.piece(d);
        if !piece.is_zero() {
            out += &f.skew(piece);
        }
    }
    Ok(out)
}

fn check_pi(pi: &Partition) -> Result<()> {
    if pi.is_empty() {
        return Err(Error::EmptySymmetry);
    }
    Ok(())
}

/// Restriction `{λ} ↦ (λ/M_π)_π`.
pub fn branch<C: Coeff>(f: &SchurExpr<C>, pi: &Partition) -> Result<SubgroupChar<C>> {
    check_pi(pi)?;
    let cutoff = f.degree().unwrap_or(0);
    let m = SchurSeries::mpi(pi, cutoff)?;
    Ok(SubgroupChar::new(pi.clone(), skew_by_series(f, &m)?))
}

/// Inverse of [`branch`]: `(λ)_π ↦ {λ / ({π}∘L)}`.
pub fn lift<C: Coeff>(a: &SubgroupChar<C>) -> Result<SchurExpr<C>> {
    check_pi(&a.pi)?;
    let cutoff = a.degree().unwrap_or(0);
    let l = SchurSeries::mpi_inverse(&a.pi, cutoff)?;
    skew_by_series(&a.terms, &l)
}

/// The classical product `Σ_ξ (λ/ξ)·(μ/ξ)`, valid for `π = (2)` and `π = (1²)`.
pub fn newell_littlewood<C: Coeff>(a: &SubgroupChar<C>, b: &SubgroupChar<C>) -> Result<SubgroupChar<C>> {
    a.same_pi(b)?;
    if a.pi != Partition::row(2) && a.pi != Partition::column(2) {
        return Err(Error::UnsupportedSymmetry(a.pi.clone()));
    }
    let mut out = SchurExpr::zero();
    for (lam, cl) in &a.terms {
        for (mu, cm) in &b.terms {
            let c = cl.clone() * cm.clone();
            for xi in partitions_up_to(lam.weight().min(mu.weight())) {
                if !lam.contains(&xi) || !mu.contains(&xi) {
                    continue;
                }
                let x = SchurExpr::<C>::basis(xi);
                let left = SchurExpr::basis(lam.clone()).skew(&x);
                let right = SchurExpr::basis(mu.clone()).skew(&x);
                out.add_scaled(&left.outer_product(&right), &c);
            }
        }
    }
    Ok(SubgroupChar::new(a.pi.clone(), out))
}

static KERNELS: LazyLock<RwLock<HashMap<Partition, Arc<TensorSeries<i64>>>>> = LazyLock::new(Default::default);

/// Proper-cut kernel of `M_π` with at least the given cutoff, memoized.
fn kernel(pi: &Partition, cutoff: usize) -> Result<Arc<TensorSeries<i64>>> {
    if let Some(k) = KERNELS.read().unwrap().get(pi).filter(|k| k.cutoff() >= cutoff) {
        return Ok(k.clone());
    }
    let k = Arc::new(proper_cut_kernel::<i64>(pi, cutoff)?);
    let mut cache = KERNELS.write().unwrap();
    let slot = cache.entry(pi.clone()).or_insert_with(|| k.clone());
    if slot.cutoff() < cutoff {
        *slot = k.clone();
    }
    Ok(slot.clone())
}

/// Kernel route: `(λ)·(μ) = Σ_{k₁⊗k₂ ∈ K} (λ/k₁ · μ/k₂)` with `K` the proper-cut
/// kernel of `M_π`. The result is filtered, not graded: labels have weight
/// `|λ|+|μ| - j|π|`.
pub fn pi_newell_littlewood<C: Coeff>(
    a: &SubgroupChar<C>,
    b: &SubgroupChar<C>,
    cutoff: usize,
) -> Result<SubgroupChar<C>> {
    a.same_pi(b)?;
    check_pi(&a.pi)?;
    let need = a.degree().unwrap_or(0) + b.degree().unwrap_or(0);
    if need > cutoff {
        return Err(Error::CutoffExceeded { degree: need, cutoff });
    }
    let k = kernel(&a.pi, need)?;
    let mut out = SchurExpr::zero();
    for (lam, cl) in &a.terms {
        for (mu, cm) in &b.terms {
            let c = cl.clone() * cm.clone();
            let lam = SchurExpr::<C>::basis(lam.clone());
            let mu = SchurExpr::<C>::basis(mu.clone());
            for piece in k.pieces() {
                for ((k1, k2), ck) in piece {
                    let left = lam.skew(&SchurExpr::basis(k1.clone()));
                    if left.is_zero() {
                        continue;
                    }
                    let right = mu.skew(&SchurExpr::basis(k2.clone()));
                    if right.is_zero() {
                        continue;
                    }
                    out.add_scaled(&left.outer_product(&right), &(c.clone() * C::from_int(*ck)));
                }
            }
        }
    }
    Ok(SubgroupChar::new(a.pi.clone(), out))
}

/// Lift route: `branch(lift(a) · lift(b))`.
pub fn twisted_product_lift<C: Coeff>(a: &SubgroupChar<C>, b: &SubgroupChar<C>) -> Result<SubgroupChar<C>> {
    a.same_pi(b)?;
    let product = lift(a)?.outer_product(&lift(b)?);
    branch(&product, &a.pi)
}

static COCYCLES: LazyLock<RwLock<HashMap<Partition, Arc<Cochain2<i64>>>>> = LazyLock::new(Default::default);

fn cocycle(pi: &Partition, bound: usize) -> Result<Arc<Cochain2<i64>>> {
    if let Some(c) = COCYCLES.read().unwrap().get(pi).filter(|c| c.bound >= bound) {
        return Ok(c.clone());
    }
    let phi = Cochain1::from_series(&SchurSeries::<i64>::mpi(pi, bound)?);
    let phi_inv = Cochain1::from_series(&SchurSeries::<i64>::mpi_inverse(pi, bound)?);
    let c = Arc::new(coboundary1(&phi, &phi_inv)?);
    let mut cache = COCYCLES.write().unwrap();
    let slot = cache.entry(pi.clone()).or_insert_with(|| c.clone());
    if slot.bound < bound {
        *slot = c.clone();
    }
    Ok(slot.clone())
}

/// Cocycle route: `Σ ∂φ(λ₍₁₎, μ₍₁₎) · (λ₍₂₎ · μ₍₂₎)` with `φ` the linear form of `M_π`.
pub fn twisted_product_cocycle<C: Coeff>(a: &SubgroupChar<C>, b: &SubgroupChar<C>) -> Result<SubgroupChar<C>> {
    a.same_pi(b)?;
    check_pi(&a.pi)?;
    let bound = a.degree().unwrap_or(0) + b.degree().unwrap_or(0);
    let sigma = cocycle(&a.pi, bound)?;
    let da = a.terms.outer_coproduct();
    let db = b.terms.outer_coproduct();
    let mut out = SchurExpr::zero();
    for ((x1, x2), cx) in &da {
        for ((y1, y2), cy) in &db {
            let w = sigma.eval_basis(x1, y1);
            if w == 0 {
                continue;
            }
            let c = cx.clone() * cy.clone() * C::from_int(w);
            let prod = SchurExpr::<C>::basis(x2.clone()).outer_product(&SchurExpr::basis(y2.clone()));
            out.add_scaled(&prod, &c);
        }
    }
    Ok(SubgroupChar::new(a.pi.clone(), out))
}

/// A linear form on symmetric functions of degree at most `bound`, stored by
/// its values on Schur functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain1<C: Coeff> {
    bound: usize,
    values: SchurExpr<C>,
}

impl<C: Coeff> Cochain1<C> {
    /// The linear form `⟨Φ | ·⟩` of a series.
    pub fn from_series(phi: &SchurSeries<C>) -> Self {
        Self { bound: phi.cutoff(), values: phi.to_expr() }
    }

    /// The counit `ε`.
    pub fn counit(bound: usize) -> Self {
        Self { bound, values: SchurExpr::one() }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn eval_basis(&self, lam: &Partition) -> C {
        self.values.coeff(lam)
    }

    pub fn eval(&self, f: &SchurExpr<C>) -> Result<C> {
        if let Some(d) = f.degree().filter(|&d| d > self.bound) {
            return Err(Error::CutoffExceeded { degree: d, cutoff: self.bound });
        }
        Ok(self.values.dot(f))
    }

    /// `(c ★ c′)(x) = Σ c(x₍₁₎) c′(x₍₂₎)`.
    pub fn convolution(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let mut values = SchurExpr::zero();
        for lam in partitions_up_to(bound) {
            let mut acc = C::zero();
            for ((x1, x2), c) in &SchurExpr::<C>::basis(lam.clone()).outer_coproduct() {
                acc += c.clone() * self.eval_basis(x1) * other.eval_basis(x2);
            }
            values.add_term(lam, acc);
        }
        Self { bound, values }
    }
}

/// A bilinear form on pairs of symmetric functions of total degree at most
/// `bound`, stored by its values on pairs of Schur functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain2<C: Coeff> {
    bound: usize,
    values: TensorExpr<C>,
}

impl<C: Coeff> Cochain2<C> {
    /// `ε ⊗ ε`.
    pub fn trivial(bound: usize) -> Self {
        Self { bound, values: TensorExpr::one() }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn eval_basis(&self, x: &Partition, y: &Partition) -> C {
        self.values.coeff(&(x.clone(), y.clone()))
    }

    pub fn eval(&self, x: &SchurExpr<C>, y: &SchurExpr<C>) -> Result<C> {
        let d = x.degree().unwrap_or(0) + y.degree().unwrap_or(0);
        if d > self.bound {
            return Err(Error::CutoffExceeded { degree: d, cutoff: self.bound });
        }
        Ok(self.values.dot(&TensorExpr::tensor(x, y)))
    }

    pub fn is_trivial(&self) -> bool {
        self.values == TensorExpr::one()
    }

    pub fn values(&self) -> &TensorExpr<C> {
        &self.values
    }
}

/// `(∂φ)(x, y) = Σ φ⁻¹(x₍₁₎) φ⁻¹(y₍₁₎) φ(x₍₂₎·y₍₂₎)` on all basis pairs within
/// the common degree bound.
pub fn coboundary1<C: Coeff>(phi: &Cochain1<C>, phi_inv: &Cochain1<C>) -> Result<Cochain2<C>> {
    let bound = phi.bound.min(phi_inv.bound);
    let unit = phi.convolution(phi_inv);
    if let Some(bad) = unit.values.keys().find(|lam| !lam.is_empty()) {
        return Err(Error::NotConvolutionInverse(bad.weight()));
    }
    if unit.eval_basis(&Partition::empty()) != C::one() {
        return Err(Error::NotConvolutionInverse(0));
    }
    let labels = partitions_up_to(bound);
    let coproducts: HashMap<&Partition, TensorExpr<C>> =
        labels.iter().map(|lam| (lam, SchurExpr::basis(lam.clone()).outer_coproduct())).collect();
    let mut values = TensorExpr::zero();
    for x in &labels {
        for y in labels.iter().filter(|y| x.weight() + y.weight() <= bound) {
            let mut acc = C::zero();
            for ((x1, x2), cx) in &coproducts[x] {
                let fx = phi_inv.eval_basis(x1);
                if fx.is_zero() {
                    continue;
                }
                for ((y1, y2), cy) in &coproducts[y] {
                    let fy = phi_inv.eval_basis(y1);
                    if fy.is_zero() {
                        continue;
                    }
                    let prod = SchurExpr::<C>::basis(x2.clone()).outer_product(&SchurExpr::basis(y2.clone()));
                    let v = phi.values.dot(&prod);
                    acc += cx.clone() * cy.clone() * fx.clone() * fy * v;
                }
            }
            values.add_term((x.clone(), y.clone()), acc);
        }
    }
    Ok(Cochain2 { bound, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Schur, Series, SubChar};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[usize]) -> Schur {
        Schur::s(parts)
    }

    fn ch(pi: &[usize], f: Schur) -> SubChar {
        SubChar::new(p(pi), f)
    }

    #[test]
    fn branch_examples() {
        assert_eq!(branch(&s(&[1, 1, 1, 1]), &p(&[1, 1, 1])).unwrap(), ch(&[1, 1, 1], s(&[1, 1, 1, 1]) + s(&[1])));
        assert_eq!(branch(&s(&[2]), &p(&[2])).unwrap(), ch(&[2], s(&[2]) + s(&[])));
        assert_eq!(branch(&s(&[1]), &p(&[1, 1, 1])).unwrap(), ch(&[1, 1, 1], s(&[1])));
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift(&ch(&[1, 1, 1], s(&[1, 1, 1, 1]))).unwrap(), s(&[1, 1, 1, 1]) - s(&[1]));
        assert_eq!(lift(&ch(&[2], s(&[2]))).unwrap(), s(&[2]) - s(&[]));
        assert_eq!(lift(&ch(&[1, 1, 1], s(&[2, 1]))).unwrap(), s(&[2, 1]));
    }

    #[test]
    fn skew_by_series_examples() {
        let m = Series::m(5);
        assert_eq!(skew_by_series(&s(&[2, 1]), &m).unwrap(), s(&[2, 1]) + s(&[2]) + s(&[1, 1]) + s(&[1]));
        let f = s(&[3, 1]) - s(&[2]);
        assert_eq!(skew_by_series(&f, &Series::unit(4)).unwrap(), f);
        let c = Series::mpi(&p(&[2]), 6).unwrap();
        let back = skew_by_series(&skew_by_series(&f, &c).unwrap(), &c.invert().unwrap()).unwrap();
        assert_eq!(back, f);
        assert!(skew_by_series(&s(&[3]), &Series::m(2)).is_err());
    }

    #[test]
    fn newell_littlewood_examples() {
        let one = ch(&[2], s(&[1]));
        assert_eq!(newell_littlewood(&one, &one).unwrap(), ch(&[2], s(&[2]) + s(&[1, 1]) + s(&[])));
        let lam = ch(&[2], s(&[2, 1]));
        assert_eq!(newell_littlewood(&lam, &ch(&[2], s(&[]))).unwrap(), lam);
        let bad = ch(&[3], s(&[1]));
        assert_eq!(newell_littlewood(&bad, &bad), Err(Error::UnsupportedSymmetry(p(&[3]))));
        let sp = ch(&[1, 1], s(&[1, 1]));
        assert_eq!(newell_littlewood(&sp, &sp).unwrap(), twisted_product_lift(&sp, &sp).unwrap());
    }

    #[test]
    fn h13_table_rows() {
        let two = ch(&[1, 1, 1], s(&[2]));
        let r = pi_newell_littlewood(&two, &two, 12).unwrap();
        assert_eq!(r, ch(&[1, 1, 1], s(&[4]) + s(&[3, 1]) + s(&[2, 2])));
        let r = pi_newell_littlewood(&ch(&[1, 1, 1], s(&[1, 1, 1])), &two, 12).unwrap();
        assert_eq!(r, ch(&[1, 1, 1], s(&[3, 1, 1]) + s(&[2, 1, 1, 1]) + s(&[2]) + s(&[1, 1])));
        assert!(pi_newell_littlewood(&two, &two, 3).is_err());
    }

    #[test]
    fn routes_agree_small() {
        for pi in [p(&[2]), p(&[1, 1, 1]), p(&[1])] {
            for a in partitions_up_to(3) {
                for b in partitions_up_to(2) {
                    let x = SubChar::basis(pi.clone(), a.clone());
                    let y = SubChar::basis(pi.clone(), b.clone());
                    let lift_route = twisted_product_lift(&x, &y).unwrap();
                    assert_eq!(pi_newell_littlewood(&x, &y, 12).unwrap(), lift_route, "{pi}: {a}*{b}");
                    assert_eq!(twisted_product_cocycle(&x, &y).unwrap(), lift_route, "{pi}: {a}*{b}");
                }
            }
        }
    }

    #[test]
    fn trivial_twist_is_the_outer_product() {
        let x = SubChar::basis(p(&[1]), p(&[2, 1]));
        let y = SubChar::basis(p(&[1]), p(&[1, 1]));
        assert_eq!(twisted_product_lift(&x, &y).unwrap().into_terms(), s(&[2, 1]) * s(&[1, 1]));
        let zero = SubChar::basis(p(&[2]), p(&[]));
        assert_eq!(twisted_product_lift(&zero, &zero).unwrap(), zero);
    }

    #[test]
    fn convolution_examples() {
        let m = Cochain1::from_series(&Series::m(6));
        let l = Cochain1::from_series(&Series::l(6));
        let eps = Cochain1::counit(6);
        assert_eq!(eps.convolution(&m), m);
        assert_eq!(m.convolution(&l), eps);
        assert_eq!(m.convolution(&m).eval_basis(&p(&[1])), 2.into());
    }

    #[test]
    fn coboundary_examples() {
        let m = Cochain1::from_series(&Series::m(6));
        let l = Cochain1::from_series(&Series::l(6));
        assert!(coboundary1(&m, &l).unwrap().is_trivial());
        let eps = Cochain1::<crate::Integer>::counit(6);
        assert_eq!(coboundary1(&eps, &eps).unwrap(), Cochain2::trivial(6));
        let m2 = Cochain1::from_series(&Series::mpi(&p(&[2]), 6).unwrap());
        let l2 = Cochain1::from_series(&Series::mpi_inverse(&p(&[2]), 6).unwrap());
        let d = coboundary1(&m2, &l2).unwrap();
        assert_eq!(d.eval_basis(&p(&[1]), &p(&[1])), 1.into());
        assert_eq!(coboundary1(&m, &m), Err(Error::NotConvolutionInverse(1)));
    }

    #[test]
    fn symmetry_mismatch() {
        let a = SubChar::basis(p(&[2]), p(&[1]));
        let b = SubChar::basis(p(&[1, 1]), p(&[1]));
        assert!(matches!(twisted_product_lift(&a, &b), Err(Error::SymmetryMismatch(..))));
    }
}
