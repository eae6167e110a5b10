use std::fmt::Debug;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Coefficient ring for symmetric function expressions.
///
/// Any commutative numeric type from `num-traits` qualifies: machine
/// integers, `BigInt`, `BigRational`, `f32`/`f64`. Structure constants are
/// integers and enter through [`FromPrimitive`].
pub trait Coeff:
    Num
    + Clone
    + Debug
    + PartialOrd
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer structure constant representable in coefficient type")
    }

    fn from_count(v: u64) -> Self {
        Self::from_u64(v).expect("integer structure constant representable in coefficient type")
    }

    /// The value as an exact machine integer, if it is one.
    fn as_exact_int(&self) -> Option<i64> {
        let v = self.to_i64()?;
        (Self::from_i64(v)? == *self).then_some(v)
    }
}

impl<T> Coeff for T where
    T: Num
        + Clone
        + Debug
        + PartialOrd
        + Neg<Output = T>
        + AddAssign
        + SubAssign
        + MulAssign
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
