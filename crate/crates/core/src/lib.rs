//! Exact symmetric functions in the Schur basis.
//!
//! The crate covers the Hopf algebra of symmetric functions (outer product and
//! coproduct, skew, antipode), the inner (Kronecker) structure, plethysm,
//! degree-truncated Schur function series, branching to stabilizer subgroups
//! `H_pi` of `GL(n)` and the twisted products on their character rings.
//!
//! All algebra is generic over the coefficient type through [`Coeff`]. The
//! aliases below fix the usual exact choices.

pub mod cache;
pub mod characters;
mod coeff;
mod combination;
mod error;
pub mod groups;
mod lr;
pub mod partition;
pub mod plethysm;
pub mod schur;
pub mod series;
pub mod text;
pub mod twist;

pub use characters::PowerSumExpr;
pub use coeff::Coeff;
pub use combination::Combination;
pub use error::{Error, Result};
pub use partition::Partition;
pub use schur::{SchurExpr, TensorExpr};
pub use series::{SchurSeries, SeriesName, TensorSeries};
pub use twist::{Cochain1, Cochain2, SubgroupChar};

/// A memoized expansion: labels with machine-integer coefficients.
pub(crate) type IntTable = std::sync::Arc<Vec<(Partition, i64)>>;

/// Arbitrary precision integers, the default coefficient ring.
pub type Integer = num_bigint::BigInt;
/// Exact rationals, used by the power-sum route.
pub type Rational = num_rational::BigRational;

/// Schur expressions with integer coefficients.
pub type Schur = SchurExpr<Integer>;
/// Elements of the tensor square with integer coefficients.
pub type Tensor = TensorExpr<Integer>;
/// Integer Schur function series.
pub type Series = SchurSeries<Integer>;
/// Integer tensor series.
pub type TensorSer = TensorSeries<Integer>;
/// Integer subgroup characters.
pub type SubChar = SubgroupChar<Integer>;
/// Schur expressions over the rationals.
pub type SchurQ = SchurExpr<Rational>;
/// Schur expressions with machine floating point coefficients.
pub type SchurF64 = SchurExpr<f64>;
