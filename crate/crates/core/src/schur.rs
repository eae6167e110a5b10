//! The Hopf algebra of symmetric functions in the Schur basis.
//!
//! The outer product is the Littlewood-Richardson product, the outer
//! coproduct is its dual under the Schur-Hall scalar product (Schur
//! functions orthonormal), and skewing is the adjoint of multiplication.

use std::collections::BTreeMap;
use std::ops::Mul;

use crate::{lr, Coeff, Combination, Partition};

/// A finite linear combination of Schur functions `s_lambda`.
pub type SchurExpr<C> = Combination<Partition, C>;

/// A finite linear combination of `s_lambda ⊗ s_mu` in `Λ ⊗ Λ`.
pub type TensorExpr<C> = Combination<(Partition, Partition), C>;

impl<C: Coeff> SchurExpr<C> {
    /// The unit `s_()`.
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    /// A single Schur function from its parts.
    ///
    /// # Panics
    ///
    /// Panics if `parts` is not weakly decreasing.
    pub fn s(parts: &[usize]) -> Self {
        Self::basis(Partition::new(parts.to_vec()).expect("weakly decreasing parts"))
    }

    /// Largest weight among the terms, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.keys().map(Partition::weight).max()
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.keys().all(|p| p.weight() == d)
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        self.filtered(|p| p.weight() == d)
    }

    pub fn outer_product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self {
            for (b, cb) in other {
                let c = ca.clone() * cb.clone();
                for (nu, m) in lr::product(a, b).iter() {
                    out.add_term(nu.clone(), c.clone() * C::from_count(*m));
                }
            }
        }
        out
    }

    /// `Δ(s_λ) = Σ c^λ_{μη} s_μ ⊗ s_η`, extended linearly.
    pub fn outer_coproduct(&self) -> TensorExpr<C> {
        let mut out = TensorExpr::zero();
        for (lam, c) in self {
            for mu in lam.sub_partitions() {
                for (eta, m) in lr::skew(lam, &mu).iter() {
                    out.add_term((mu.clone(), eta.clone()), c.clone() * C::from_count(*m));
                }
            }
        }
        out
    }

    /// Schur-Hall scalar product.
    pub fn scalar(&self, other: &Self) -> C {
        self.dot(other)
    }

    /// Skew `self / g`, the adjoint of multiplication by `g`.
    pub fn skew(&self, g: &Self) -> Self {
        let mut out = Self::zero();
        for (nu, cf) in self {
            for (mu, cg) in g {
                if !nu.contains(mu) {
                    continue;
                }
                let c = cf.clone() * cg.clone();
                for (lam, m) in lr::skew(nu, mu).iter() {
                    out.add_term(lam.clone(), c.clone() * C::from_count(*m));
                }
            }
        }
        out
    }

    /// `S(s_λ) = (-1)^{|λ|} s_{λ'}`.
    pub fn antipode(&self) -> Self {
        self.iter()
            .map(|(lam, c)| {
                let c = if lam.weight() % 2 == 0 { c.clone() } else { -c.clone() };
                (lam.conjugate(), c)
            })
            .collect()
    }

    /// Coefficient of the unit.
    pub fn counit(&self) -> C {
        self.coeff(&Partition::empty())
    }

    /// Expansion in `n` variables as exponent vector → coefficient, by
    /// enumerating semistandard tableaux of each shape.
    pub fn monomial_expansion(&self, n: usize) -> BTreeMap<Vec<usize>, C> {
        let mut out: BTreeMap<Vec<usize>, C> = BTreeMap::new();
        for (lam, c) in self {
            for (exp, count) in ssyt_weights(lam, n) {
                let v = out.entry(exp).or_insert_with(C::zero);
                *v += c.clone() * C::from_count(count);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl<C: Coeff> Mul for &SchurExpr<C> {
    type Output = SchurExpr<C>;

    fn mul(self, rhs: Self) -> SchurExpr<C> {
        self.outer_product(rhs)
    }
}

impl<C: Coeff> Mul for SchurExpr<C> {
    type Output = SchurExpr<C>;

    fn mul(self, rhs: Self) -> SchurExpr<C> {
        self.outer_product(&rhs)
    }
}

/// Weights of all semistandard tableaux of shape `lam` with entries `< n`.
fn ssyt_weights(lam: &Partition, n: usize) -> BTreeMap<Vec<usize>, u64> {
    fn go(
        shape: &[usize],
        grid: &mut [Vec<usize>],
        r: usize,
        c: usize,
        n: usize,
        weight: &mut Vec<usize>,
        out: &mut BTreeMap<Vec<usize>, u64>,
    ) {
        if r == shape.len() {
            *out.entry(weight.clone()).or_default() += 1;
            return;
        }
        if c == shape[r] {
            go(shape, grid, r + 1, 0, n, weight, out);
            return;
        }
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        // Entries below row r must still fit in the column.
        let rows_below = (r + 1..shape.len()).take_while(|&i| shape[i] > c).count();
        for v in lo_row.max(lo_col)..n.saturating_sub(rows_below) {
            grid[r][c] = v;
            weight[v] += 1;
            go(shape, grid, r, c + 1, n, weight, out);
            weight[v] -= 1;
        }
    }
    let mut out = BTreeMap::new();
    if lam.len() > n {
        return out;
    }
    let mut grid: Vec<Vec<usize>> = lam.parts().iter().map(|&l| vec![0; l]).collect();
    let mut weight = vec![0; n];
    go(lam.parts(), &mut grid, 0, 0, n, &mut weight, &mut out);
    out
}

/// Littlewood-Richardson coefficient `c^ν_{λμ}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    lr::lr_coefficient(lambda, mu, nu)
}

impl<C: Coeff> TensorExpr<C> {
    pub fn one() -> Self {
        Self::basis((Partition::empty(), Partition::empty()))
    }

    /// `f ⊗ g`, bilinear.
    pub fn tensor(f: &SchurExpr<C>, g: &SchurExpr<C>) -> Self {
        let mut out = Self::zero();
        for (a, ca) in f {
            for (b, cb) in g {
                out.add_term((a.clone(), b.clone()), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn tensor_product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), cx) in self {
            for ((c, d), cy) in other {
                let coeff = cx.clone() * cy.clone();
                let left = lr::product(a, c);
                let right = lr::product(b, d);
                for (l, ml) in left.iter() {
                    for (r, mr) in right.iter() {
                        out.add_term((l.clone(), r.clone()), coeff.clone() * C::from_count(ml * mr));
                    }
                }
            }
        }
        out
    }

    /// Scalar product on `Λ⊗Λ`: the product of the factorwise scalars.
    pub fn scalar(&self, other: &Self) -> C {
        self.dot(other)
    }

    /// Largest total weight among the terms.
    pub fn degree(&self) -> Option<usize> {
        self.keys().map(|(a, b)| a.weight() + b.weight()).max()
    }

    pub fn total_degree_part(&self, d: usize) -> Self {
        self.filtered(|(a, b)| a.weight() + b.weight() == d)
    }

    /// `a⊗b ↦ b⊗a`.
    pub fn swapped(&self) -> Self {
        self.map_keys(|(a, b)| (b.clone(), a.clone()))
    }

    /// Applies `f` to the left factor and `g` to the right factor.
    pub fn map_factors(
        &self,
        mut f: impl FnMut(&Partition) -> SchurExpr<C>,
        mut g: impl FnMut(&Partition) -> SchurExpr<C>,
    ) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in self {
            let t = Self::tensor(&f(a), &g(b));
            out.add_scaled(&t, c);
        }
        out
    }

    /// `m ∘ (f ⊗ g)`: multiplies the factors after mapping them.
    pub fn contract(
        &self,
        mut f: impl FnMut(&Partition) -> SchurExpr<C>,
        mut g: impl FnMut(&Partition) -> SchurExpr<C>,
    ) -> SchurExpr<C> {
        let mut out = SchurExpr::zero();
        for ((a, b), c) in self {
            out.add_scaled(&f(a).outer_product(&g(b)), c);
        }
        out
    }
}

impl<C: Coeff> Mul for &TensorExpr<C> {
    type Output = TensorExpr<C>;

    fn mul(self, rhs: Self) -> TensorExpr<C> {
        self.tensor_product(rhs)
    }
}

impl<C: Coeff> Mul for TensorExpr<C> {
    type Output = TensorExpr<C>;

    fn mul(self, rhs: Self) -> TensorExpr<C> {
        self.tensor_product(&rhs)
    }
}
