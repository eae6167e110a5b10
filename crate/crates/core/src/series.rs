//! Degree-truncated Schur function series.
//!
//! The formal variable `t` is the degree grading itself: piece `d` of a
//! series is the homogeneous degree-`d` part. Series combine only when their
//! cutoffs agree; mixing cutoffs is an error rather than a silent truncation.

use std::fmt;
use std::str::FromStr;

use crate::plethysm::plethysm_series;
use crate::{Coeff, Error, Partition, Result, SchurExpr, TensorExpr};

pub const DEFAULT_CUTOFF: usize = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurSeries<C: Coeff> {
    pieces: Vec<SchurExpr<C>>,
}

impl<C: Coeff> SchurSeries<C> {
    /// Builds a series from its pieces `0..=cutoff`; every piece must be
    /// homogeneous of its index degree.
    pub fn from_pieces(pieces: Vec<SchurExpr<C>>) -> Result<Self> {
        assert!(!pieces.is_empty(), "a series has at least its constant piece");
        for (d, piece) in pieces.iter().enumerate() {
            if let Some(bad) = piece.keys().find(|p| p.weight() != d) {
                return Err(Error::CutoffExceeded { degree: bad.weight(), cutoff: d });
            }
        }
        Ok(Self { pieces })
    }

    /// Splits `f` into homogeneous pieces.
    pub fn from_expr(f: &SchurExpr<C>, cutoff: usize) -> Result<Self> {
        if let Some(d) = f.degree().filter(|&d| d > cutoff) {
            return Err(Error::CutoffExceeded { degree: d, cutoff });
        }
        Ok(Self { pieces: (0..=cutoff).map(|d| f.homogeneous_part(d)).collect() })
    }

    pub fn unit(cutoff: usize) -> Self {
        let mut pieces = vec![SchurExpr::zero(); cutoff + 1];
        pieces[0] = SchurExpr::one();
        Self { pieces }
    }

    /// `M = Σ_m {m}`.
    pub fn m(cutoff: usize) -> Self {
        Self { pieces: (0..=cutoff).map(|d| SchurExpr::basis(Partition::row(d))).collect() }
    }

    /// `L = Σ_m (-1)^m {1^m}`, the inverse of `M`.
    pub fn l(cutoff: usize) -> Self {
        let pieces = (0..=cutoff)
            .map(|d| {
                let sign = if d % 2 == 0 { C::one() } else { -C::one() };
                SchurExpr::term(Partition::column(d), sign)
            })
            .collect();
        Self { pieces }
    }

    /// `M_π = {π} ∘ M`.
    pub fn mpi(pi: &Partition, cutoff: usize) -> Result<Self> {
        plethysm_series(pi, &Self::m(cutoff))
    }

    /// `M_π^{-1} = {π} ∘ L`.
    pub fn mpi_inverse(pi: &Partition, cutoff: usize) -> Result<Self> {
        plethysm_series(pi, &Self::l(cutoff))
    }

    /// One of the named classical series.
    pub fn named(name: SeriesName, pi: Option<&Partition>, cutoff: usize) -> Result<Self> {
        let two = Partition::row(2);
        let one_one = Partition::column(2);
        match name {
            SeriesName::M => Ok(Self::m(cutoff)),
            SeriesName::L => Ok(Self::l(cutoff)),
            SeriesName::A => Self::mpi_inverse(&one_one, cutoff),
            SeriesName::B => Self::mpi(&one_one, cutoff),
            SeriesName::C => Self::mpi_inverse(&two, cutoff),
            SeriesName::D => Self::mpi(&two, cutoff),
            SeriesName::Mpi => Self::mpi(pi.ok_or(Error::EmptySymmetry)?, cutoff),
            SeriesName::MpiInv => Self::mpi_inverse(pi.ok_or(Error::EmptySymmetry)?, cutoff),
        }
    }

    pub fn cutoff(&self) -> usize {
        self.pieces.len() - 1
    }

    /// Piece of degree `d`; panics beyond the cutoff.
    pub fn piece(&self, d: usize) -> &SchurExpr<C> {
        &self.pieces[d]
    }

    pub fn pieces(&self) -> &[SchurExpr<C>] {
        &self.pieces
    }

    /// The sum of all pieces.
    pub fn to_expr(&self) -> SchurExpr<C> {
        let mut out = SchurExpr::zero();
        for p in &self.pieces {
            out += p;
        }
        out
    }

    fn check_cutoff(&self, other: &Self) -> Result<()> {
        if self.cutoff() != other.cutoff() {
            return Err(Error::CutoffMismatch(self.cutoff(), other.cutoff()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_cutoff(other)?;
        let n = self.cutoff();
        let mut pieces = vec![SchurExpr::zero(); n + 1];
        for (i, a) in self.pieces.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.pieces[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    pieces[i + j] += &a.outer_product(b);
                }
            }
        }
        Ok(Self { pieces })
    }

    /// Degree-by-degree inverse: `ψ_0 = 1`, `ψ_d = -Σ_{k≥1} φ_k ψ_{d-k}`.
    pub fn invert(&self) -> Result<Self> {
        if self.pieces[0] != SchurExpr::one() {
            return Err(Error::NotInvertible);
        }
        let n = self.cutoff();
        let mut inv: Vec<SchurExpr<C>> = vec![SchurExpr::one()];
        for d in 1..=n {
            let mut acc = SchurExpr::zero();
            for k in 1..=d {
                if !self.pieces[k].is_zero() && !inv[d - k].is_zero() {
                    acc -= &self.pieces[k].outer_product(&inv[d - k]);
                }
            }
            inv.push(acc);
        }
        Ok(Self { pieces: inv })
    }

    pub fn is_unit(&self) -> bool {
        *self == Self::unit(self.cutoff())
    }

    /// Degreewise outer coproduct.
    pub fn coproduct(&self) -> TensorSeries<C> {
        TensorSeries { pieces: self.pieces.iter().map(SchurExpr::outer_coproduct).collect() }
    }

    /// `<Φ | f>`, the associated linear form.
    pub fn linear_form(&self, f: &SchurExpr<C>) -> Result<C> {
        if let Some(d) = f.degree().filter(|&d| d > self.cutoff()) {
            return Err(Error::CutoffExceeded { degree: d, cutoff: self.cutoff() });
        }
        let mut acc = C::zero();
        for (lam, c) in f {
            if let Some(v) = self.pieces[lam.weight()].get(lam) {
                acc += c.clone() * v.clone();
            }
        }
        Ok(acc)
    }

    /// Whether `Δ(Φ) = Φ ⊗ Φ` up to the cutoff.
    pub fn is_grouplike(&self) -> bool {
        self.coproduct() == TensorSeries::external(self, self).expect("same cutoff")
    }
}

/// Named series accepted by [`SchurSeries::named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesName {
    M,
    L,
    A,
    B,
    C,
    D,
    Mpi,
    MpiInv,
}

impl FromStr for SeriesName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "M" => Self::M,
            "L" => Self::L,
            "A" => Self::A,
            "B" => Self::B,
            "C" => Self::C,
            "D" => Self::D,
            "Mpi" => Self::Mpi,
            "MpiInv" => Self::MpiInv,
            other => return Err(format!("unknown series {other:?}")),
        })
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A truncated series in `Λ ⊗ Λ`, graded by total degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSeries<C: Coeff> {
    pieces: Vec<TensorExpr<C>>,
}

impl<C: Coeff> TensorSeries<C> {
    pub fn unit(cutoff: usize) -> Self {
        let mut pieces = vec![TensorExpr::zero(); cutoff + 1];
        pieces[0] = TensorExpr::one();
        Self { pieces }
    }

    pub fn from_pieces(pieces: Vec<TensorExpr<C>>) -> Result<Self> {
        for (d, piece) in pieces.iter().enumerate() {
            if let Some((a, b)) = piece.keys().find(|(a, b)| a.weight() + b.weight() != d) {
                return Err(Error::CutoffExceeded { degree: a.weight() + b.weight(), cutoff: d });
            }
        }
        Ok(Self { pieces })
    }

    /// `Φ(x) Ψ(y)`, i.e. `Φ ⊗ Ψ` truncated by total degree.
    pub fn external(left: &SchurSeries<C>, right: &SchurSeries<C>) -> Result<Self> {
        left.check_cutoff(right)?;
        let n = left.cutoff();
        let mut pieces = vec![TensorExpr::zero(); n + 1];
        for (i, a) in left.pieces.iter().enumerate() {
            for (j, b) in right.pieces[..=n - i].iter().enumerate() {
                pieces[i + j] += &TensorExpr::tensor(a, b);
            }
        }
        Ok(Self { pieces })
    }

    /// Series whose degree `2d` piece is the Cauchy kernel piece `Σ_{ξ⊢d} s_ξ⊗s_ξ`.
    pub fn cauchy(cutoff: usize) -> Self {
        let mut pieces = vec![TensorExpr::zero(); cutoff + 1];
        for d in 0..=cutoff / 2 {
            pieces[2 * d] = crate::characters::cauchy_kernel(d);
        }
        Self { pieces }
    }

    pub fn cutoff(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn piece(&self, d: usize) -> &TensorExpr<C> {
        &self.pieces[d]
    }

    pub fn pieces(&self) -> &[TensorExpr<C>] {
        &self.pieces
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cutoff() != other.cutoff() {
            return Err(Error::CutoffMismatch(self.cutoff(), other.cutoff()));
        }
        let n = self.cutoff();
        let mut pieces = vec![TensorExpr::zero(); n + 1];
        for (i, a) in self.pieces.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.pieces[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    pieces[i + j] += &a.tensor_product(b);
                }
            }
        }
        Ok(Self { pieces })
    }

    /// Restricts to pieces `0..=cutoff`.
    pub fn truncated(&self, cutoff: usize) -> Self {
        Self { pieces: self.pieces[..=cutoff.min(self.cutoff())].to_vec() }
    }

    /// All terms of all pieces in one tensor expression.
    pub fn to_expr(&self) -> TensorExpr<C> {
        let mut out = TensorExpr::zero();
        for p in &self.pieces {
            out += p;
        }
        out
    }

    pub fn map_coeffs<C2: Coeff>(&self, f: impl Fn(&C) -> C2) -> TensorSeries<C2> {
        TensorSeries { pieces: self.pieces.iter().map(|p| p.map_coeffs(&f)).collect() }
    }
}

/// `K = (M_π^{-1} ⊗ M_π^{-1}) · Δ M_π`, the proper-cut part of `Δ M_π`.
pub fn proper_cut_kernel<C: Coeff>(pi: &Partition, cutoff: usize) -> Result<TensorSeries<C>> {
    let m = SchurSeries::<C>::mpi(pi, cutoff)?;
    let inv = SchurSeries::<C>::mpi_inverse(pi, cutoff)?;
    TensorSeries::external(&inv, &inv)?.mul(&m.coproduct())
}
