//! Plethysm `{inner} ∘ {outer} = s_outer[s_inner]`.
//!
//! Computed in the power-sum basis: `s_ν[f] = Σ_ρ χ^ν(ρ)/z_ρ Π_i p_{ρ_i}[f]`
//! with `p_k[p_ρ] = p_{kρ}`, then converted back to Schur functions.
//! The inner argument must be Schur-positive with integer coefficients and
//! no constant term; negative inner arguments would need λ-ring sign
//! conventions, which are not modelled.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use crate::characters::character;
use crate::partition::{partitions_of, z_factor};
use crate::{Coeff, Error, Integer, Partition, PowerSumExpr, Rational, Result, SchurExpr, SchurSeries};

type Key = (Partition, Partition);

static SINGLE: LazyLock<RwLock<HashMap<Key, crate::IntTable>>> = LazyLock::new(Default::default);

/// `s_outer[s_inner]` for single Schur functions, memoized.
///
/// `inner` must be nonempty.
pub(crate) fn single(inner: &Partition, outer: &Partition) -> crate::IntTable {
    debug_assert!(!inner.is_empty());
    let key = (inner.clone(), outer.clone());
    if let Some(t) = SINGLE.read().unwrap().get(&key) {
        return t.clone();
    }
    let f = PowerSumExpr::from_schur(&SchurExpr::<Integer>::basis(inner.clone())).expect("integer input");
    let result = compose_power_sums(&f, outer);
    let table: Vec<(Partition, i64)> = result
        .iter()
        .map(|(lam, c)| (lam.clone(), c.as_exact_int().expect("plethysm coefficients are integers")))
        .collect();
    let table = Arc::new(table);
    SINGLE.write().unwrap().entry(key).or_insert(table).clone()
}

/// `s_ν[f]` for `f` given in power sums.
fn compose_power_sums(f: &PowerSumExpr, nu: &Partition) -> SchurExpr<Rational> {
    let n = nu.weight();
    let mut adams: HashMap<usize, PowerSumExpr> = HashMap::new();
    let mut acc = PowerSumExpr::zero();
    for rho in partitions_of(n, None) {
        let chi = character(nu, &rho);
        if chi == 0 {
            continue;
        }
        let mut term = PowerSumExpr::one();
        for &k in rho.parts() {
            let pk = adams.entry(k).or_insert_with(|| f.adams(k));
            term = term.mul(pk);
        }
        acc.add_scaled(&term, &Rational::new(chi.into(), z_factor(&rho)));
    }
    acc.to_schur()
}

fn check_inner<C: Coeff>(inner: &SchurExpr<C>) -> Result<()> {
    for (lam, c) in inner {
        let ok = !lam.is_empty() && c.as_exact_int().is_some_and(|v| v > 0);
        if !ok {
            return Err(Error::InvalidPlethysmInner);
        }
    }
    Ok(())
}

/// `{inner} ∘ {outer} = s_outer[s_inner]`, bilinear in `outer`.
pub fn plethysm<C: Coeff>(inner: &SchurExpr<C>, outer: &SchurExpr<C>) -> Result<SchurExpr<C>> {
    check_inner(inner)?;
    let mut out = SchurExpr::zero();
    if inner.is_zero() {
        // s_ν[0] vanishes unless ν is empty.
        out.add_term(Partition::empty(), outer.counit());
        return Ok(out);
    }
    let single_inner = match inner.iter().next() {
        Some((lam, c)) if inner.len() == 1 && c.is_one() => Some(lam.clone()),
        _ => None,
    };
    let general = match single_inner {
        Some(_) => None,
        None => Some(PowerSumExpr::from_schur(inner)?),
    };
    for (nu, c) in outer {
        if nu.is_empty() {
            out.add_term(Partition::empty(), c.clone());
            continue;
        }
        match (&single_inner, &general) {
            (Some(lam), _) => {
                for (mu, m) in single(lam, nu).iter() {
                    out.add_term(mu.clone(), c.clone() * C::from_int(*m));
                }
            }
            (None, Some(f)) => {
                for (mu, m) in compose_power_sums(f, nu).iter() {
                    let m = m.as_exact_int().ok_or_else(|| Error::CoefficientOverflow(m.to_string()))?;
                    out.add_term(mu.clone(), c.clone() * C::from_int(m));
                }
            }
            (None, None) => unreachable!(),
        }
    }
    Ok(out)
}

/// Single-term convenience: `{inner} ∘ {outer}` for two partitions.
pub fn plethysm_single<C: Coeff>(inner: &Partition, outer: &Partition) -> Result<SchurExpr<C>> {
    plethysm(&SchurExpr::basis(inner.clone()), &SchurExpr::basis(outer.clone()))
}

/// `{inner} ∘ Φ`: the degree `m·|inner|` piece is `{inner} ∘ Φ_m`. The
/// result keeps the cutoff of `outer`.
pub fn plethysm_series<C: Coeff>(inner: &Partition, outer: &SchurSeries<C>) -> Result<SchurSeries<C>> {
    if inner.is_empty() {
        return Err(Error::EmptySymmetry);
    }
    let w = inner.weight();
    let cutoff = outer.cutoff();
    let inner_expr = SchurExpr::basis(inner.clone());
    let mut pieces = vec![SchurExpr::zero(); cutoff + 1];
    for m in 0..=cutoff / w {
        pieces[m * w] = plethysm(&inner_expr, outer.piece(m))?;
    }
    SchurSeries::from_pieces(pieces)
}

pub(crate) fn export() -> Vec<(Key, crate::IntTable)> {
    let mut v: Vec<_> = SINGLE.read().unwrap().iter().map(|(k, t)| (k.clone(), t.clone())).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

pub(crate) fn import(key: Key, table: Vec<(Partition, i64)>) {
    SINGLE.write().unwrap().entry(key).or_insert_with(|| Arc::new(table));
}
