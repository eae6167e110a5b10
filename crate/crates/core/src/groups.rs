//! The subgroup `H_{1³}(4) ⊂ GL(4)` stabilizing a totally antisymmetric
//! rank-3 tensor: formal dimensions, determinant modification rules, a table
//! of products and the stabilizer condition on matrices.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::partition::dim_gl;
use crate::series::DEFAULT_CUTOFF;
use crate::twist::{branch, lift, pi_newell_littlewood};
use crate::{Combination, Error, Integer, Partition, Rational, Result, Schur, SubChar};

/// Rank of the ambient general linear group.
pub const RANK: usize = 4;

/// The symmetry type `(1,1,1)` of the stabilized tensor.
pub fn h13() -> Partition {
    Partition::column(3)
}

/// `Σ c · dim {ν}` over the lift of `a` to `GL(n)`; negative for virtual
/// characters.
pub fn formal_dimension(a: &SubChar, n: usize) -> Result<Integer> {
    Ok(lift(a)?.iter().map(|(nu, c)| c * dim_gl(nu, n)).sum())
}

/// Splits off the determinant: `{λ} = ε^k {λ - k(1^n)}` with `k = λ_n`.
pub fn gl_det_factor(lambda: &Partition, n: usize) -> Result<(usize, Partition)> {
    if lambda.len() > n {
        return Err(Error::TooManyParts(lambda.clone(), n));
    }
    let k = if lambda.len() == n { lambda.part(n - 1) } else { 0 };
    Ok((k, lambda.shifted_down(k)))
}

/// `coefficient · ε^det_power · (label)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonChar {
    pub det_power: usize,
    pub label: Partition,
    pub coefficient: Integer,
}

impl EpsilonChar {
    fn symbol(&self) -> String {
        let eps = match self.det_power {
            0 => String::new(),
            1 => "ε".into(),
            k => format!("ε^{k}"),
        };
        if self.label.is_empty() && self.det_power > 0 {
            eps
        } else {
            format!("{eps}({})", self.label)
        }
    }
}

/// A rewriting of the too-long label `(label)` into determinant powers times
/// labels of length at most 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModificationRelation {
    pub label: Partition,
    /// `(label) = {label} - Σ raw`, read off the branching of `{label}`.
    pub raw: SubChar,
    pub reduced: Vec<EpsilonChar>,
    pub dimension: Integer,
    /// Formal dimension of each reduced term, sign included.
    pub term_dimensions: Vec<Integer>,
}

impl fmt::Display for ModificationRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) = ", self.label)?;
        for (i, t) in self.reduced.iter().enumerate() {
            let neg = t.coefficient < Integer::zero();
            let abs = if neg { -t.coefficient.clone() } else { t.coefficient.clone() };
            match (i, neg) {
                (0, false) => {}
                (0, true) => f.write_str("- ")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            f.write_str(&t.symbol())?;
        }
        write!(f, "    dims: {} = ", self.dimension)?;
        for (i, d) in self.term_dimensions.iter().enumerate() {
            let neg = *d < Integer::zero();
            let abs = if neg { -d.clone() } else { d.clone() };
            match (i, neg) {
                (0, false) => write!(f, "{abs}")?,
                (0, true) => write!(f, "-{abs}")?,
                (_, false) => write!(f, " + {abs}")?,
                (_, true) => write!(f, " - {abs}")?,
            }
        }
        Ok(())
    }
}

type EpsExpr = Combination<(usize, Partition), Integer>;

struct Modifier {
    pi: Partition,
    memo: HashMap<Partition, EpsExpr>,
}

impl Modifier {
    fn basis(&self, label: &Partition) -> Result<Schur> {
        Ok(branch(&Schur::basis(label.clone()), &self.pi)?.into_terms())
    }

    /// Rewrites the subgroup label `(ν)` in terms of labels of length < RANK.
    fn label(&mut self, nu: &Partition) -> Result<EpsExpr> {
        match nu.len() {
            l if l < RANK => Ok(EpsExpr::basis((0, nu.clone()))),
            l if l == RANK => self.long(nu),
            _ => Err(Error::TooManyParts(nu.clone(), RANK)),
        }
    }

    fn long(&mut self, mu: &Partition) -> Result<EpsExpr> {
        if let Some(e) = self.memo.get(mu) {
            return Ok(e.clone());
        }
        let (k, rho) = gl_det_factor(mu, RANK)?;
        let mut out = EpsExpr::zero();
        for (nu, c) in &self.basis(&rho)? {
            out.add_term((k, nu.clone()), c.clone());
        }
        for (nu, c) in &self.others(mu)? {
            let e = self.label(nu)?;
            out.add_scaled(&e, &-c.clone());
        }
        self.memo.insert(mu.clone(), out.clone());
        Ok(out)
    }

    /// Terms of the branching of `{μ}` other than `(μ)` itself.
    fn others(&self, mu: &Partition) -> Result<Schur> {
        let mut b = self.basis(mu)?;
        if b.coeff(mu) != Integer::one() {
            return Err(Error::RelationFailed(mu.clone(), "leading term is not (μ)".into()));
        }
        b.add_term(mu.clone(), -Integer::one());
        Ok(b)
    }
}

fn subgroup_dim(label: &Partition) -> Result<Integer> {
    formal_dimension(&SubChar::basis(h13(), label.clone()), RANK)
}

/// Labels with four parts whose modification rules are tabulated.
pub const MODIFIED_LABELS: [&[usize]; 6] = [
    &[1, 1, 1, 1],
    &[2, 1, 1, 1],
    &[2, 2, 1, 1],
    &[2, 2, 2, 1],
    &[2, 2, 2, 2],
    &[3, 1, 1, 1],
];

/// Derives the six modification rules of `H_{1³}(4)` from branching and
/// checks each against formal dimensions.
pub fn modification_relations_h13() -> Result<Vec<ModificationRelation>> {
    let mut m = Modifier { pi: h13(), memo: HashMap::new() };
    let mut out = Vec::new();
    for parts in MODIFIED_LABELS {
        let label = Partition::new(parts.to_vec())?;
        let reduced_expr = m.long(&label)?;
        let raw = SubChar::new(h13(), m.others(&label)?);
        let dimension = subgroup_dim(&label)?;
        let mut reduced = Vec::new();
        let mut term_dimensions = Vec::new();
        // Highest determinant power first, then canonical label order.
        let mut keys: Vec<_> = reduced_expr.iter().collect();
        keys.sort_by(|((ka, la), _), ((kb, lb), _)| kb.cmp(ka).then(la.cmp(lb)));
        for ((k, lam), c) in keys {
            term_dimensions.push(c * subgroup_dim(lam)?);
            reduced.push(EpsilonChar { det_power: *k, label: lam.clone(), coefficient: c.clone() });
        }
        let total: Integer = term_dimensions.iter().sum();
        if total != dimension {
            return Err(Error::RelationFailed(label, format!("dimensions {dimension} vs {total}")));
        }
        out.push(ModificationRelation { label, raw, reduced, dimension, term_dimensions });
    }
    Ok(out)
}

/// One row `(left)·(right)` of the product table with formal dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductRow {
    pub left: Partition,
    pub right: Partition,
    pub left_dim: Integer,
    pub right_dim: Integer,
    pub product: SubChar,
    pub term_dims: Vec<(Partition, Integer)>,
}

impl fmt::Display for ProductRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})_{} · ({})_{} = ", self.left, self.left_dim, self.right, self.right_dim)?;
        for (i, ((lam, c), (_, d))) in self.product.terms().iter().zip(&self.term_dims).enumerate() {
            if i > 0 {
                f.write_str(if *c < Integer::zero() { " - " } else { " + " })?;
            } else if *c < Integer::zero() {
                f.write_str("- ")?;
            }
            let abs = if *c < Integer::zero() { -c.clone() } else { c.clone() };
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "({lam})_{d}")?;
        }
        Ok(())
    }
}

/// Left factors of the tabulated products, each multiplied by `(2)`.
pub const TABLE_ROWS: [&[usize]; 5] = [&[2], &[1, 1], &[3], &[2, 1], &[1, 1, 1]];

/// Products `(λ)·(2)` in `H_{1³}(4)`, each checked for
/// `Σ dims = dim(λ) · dim(2)`.
pub fn product_table_h13() -> Result<Vec<ProductRow>> {
    let right = Partition::row(2);
    let right_dim = subgroup_dim(&right)?;
    let b = SubChar::basis(h13(), right.clone());
    let mut rows = Vec::new();
    for parts in TABLE_ROWS {
        let left = Partition::new(parts.to_vec())?;
        let a = SubChar::basis(h13(), left.clone());
        let product = pi_newell_littlewood(&a, &b, DEFAULT_CUTOFF)?;
        let left_dim = subgroup_dim(&left)?;
        let mut total = Integer::zero();
        let mut term_dims = Vec::new();
        for (lam, c) in product.terms() {
            let d = subgroup_dim(lam)?;
            total += c * &d;
            term_dims.push((lam.clone(), d));
        }
        if total != &left_dim * &right_dim {
            return Err(Error::RelationFailed(left, format!("row dimension {total} ≠ {left_dim}·{right_dim}")));
        }
        rows.push(ProductRow { left, right: right.clone(), left_dim, right_dim: right_dim.clone(), product, term_dims });
    }
    Ok(rows)
}

/// A 4×4 matrix of exact rationals, indexed `[row][column]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix4(pub [[Rational; 4]; 4]);

impl RationalMatrix4 {
    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn from_integers(rows: [[i64; 4]; 4]) -> Self {
        Self::from_fn(|i, j| Rational::from_integer(rows[i][j].into()))
    }
}

impl FromStr for RationalMatrix4 {
    type Err = Error;

    /// Four non-empty lines of four entries, each an integer or `p/q`.
    fn from_str(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != 4 {
            return Err(Error::Parse { column: 1, message: format!("expected 4 rows, found {}", lines.len()) });
        }
        let mut m = Self::identity();
        for (i, line) in lines.iter().enumerate() {
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != 4 {
                return Err(Error::Parse {
                    column: 1,
                    message: format!("row {} has {} entries, expected 4", i + 1, entries.len()),
                });
            }
            for (j, e) in entries.iter().enumerate() {
                m.0[i][j] = e.parse().map_err(|_| Error::Parse {
                    column: line.find(e).unwrap_or(0) + 1,
                    message: format!("row {}: invalid entry {e:?}", i + 1),
                })?;
            }
        }
        Ok(m)
    }
}

/// The tensor `η_{pqr}`: the Levi-Civita symbol on the first three indices.
fn eta(p: usize, q: usize, r: usize) -> i64 {
    if p >= 3 || q >= 3 || r >= 3 || p == q || q == r || p == r {
        return 0;
    }
    // Sign of the permutation (p, q, r) of (0, 1, 2).
    let inversions = (p > q) as usize + (p > r) as usize + (q > r) as usize;
    if inversions.is_multiple_of(2) { 1 } else { -1 }
}

/// Whether `A^x_p A^y_q A^z_r η_{pqr} = η_{xyz}` for all `x, y, z`.
pub fn stabilizer_check(a: &RationalMatrix4) -> bool {
    let a = &a.0;
    for x in 0..4 {
        for y in 0..4 {
            for z in 0..4 {
                let mut acc = Rational::zero();
                for p in 0..3 {
                    for q in 0..3 {
                        for r in 0..3 {
                            let e = eta(p, q, r);
                            if e != 0 {
                                acc += &a[x][p] * &a[y][q] * &a[z][r] * Rational::from_integer(e.into());
                            }
                        }
                    }
                }
                if acc != Rational::from_integer(eta(x, y, z).into()) {
                    return false;
                }
            }
        }
    }
    true
}
