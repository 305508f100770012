//! The coefficient ring behind every Laurent polynomial in the crate.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{AddAssign, MulAssign, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Exact integer coefficients.
///
/// Anything that behaves like `Z` qualifies. [`num_bigint::BigInt`] is the
/// default everywhere (see the aliases at the crate root); the fixed-width
/// primitives are accepted too and are handy in tests, but their arithmetic
/// overflows silently in release builds once q-factorials get large.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + FromStr
    + Eq
    + Ord
    + Hash
    + Integer
    + Signed
    + FromPrimitive
    + Send
    + Sync
    + 'static
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + FromStr
        + Eq
        + Ord
        + Hash
        + Integer
        + Signed
        + FromPrimitive
        + Send
        + Sync
        + 'static
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
{
}
