//! Exact count scalars.
//!
//! Every count in this crate is a nonnegative integer that may grow like
//! `2^n`. The [`Count`] trait abstracts over fixed-width integers (which use
//! checked arithmetic and report [`Error::Overflow`]) and [`BigUint`], which
//! never overflows.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive, Unsigned};

use crate::error::{Error, Result};

/// An exact, unsigned integer type usable for counts and dyadic numerators.
pub trait Count:
    Integer
    + Unsigned
    + Clone
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + ToPrimitive
    + FromPrimitive
    + Display
    + Debug
    + Hash
    + Send
    + Sync
    + 'static
{
    /// Short name used in overflow diagnostics.
    const NAME: &'static str;

    /// Lossless conversion to an arbitrary-precision integer.
    fn to_big(&self) -> BigUint;

    /// Conversion back from an arbitrary-precision integer, if it fits.
    fn from_big(value: &BigUint) -> Option<Self>;

    /// Number of trailing zero bits; `None` for zero.
    fn trailing_zero_bits(&self) -> Option<u64>;

    /// `self >> shift`.
    fn shr_bits(&self, shift: u64) -> Self;

    /// `self << shift`, or `None` if the result does not fit.
    fn shl_exact(&self, shift: u64) -> Option<Self>;
}

macro_rules! count_impl {
    ($($t:ty)*) => ($(
        impl Count for $t {
            const NAME: &'static str = stringify!($t);

            fn to_big(&self) -> BigUint {
                BigUint::from(*self)
            }

            fn from_big(value: &BigUint) -> Option<Self> {
                value.to_u128().and_then(|v| <$t>::try_from(v).ok())
            }

            fn trailing_zero_bits(&self) -> Option<u64> {
                (*self != 0).then(|| u64::from(<$t>::trailing_zeros(*self)))
            }

            fn shr_bits(&self, shift: u64) -> Self {
                if shift >= u64::from(<$t>::BITS) { 0 } else { *self >> shift }
            }

            fn shl_exact(&self, shift: u64) -> Option<Self> {
                if *self == 0 {
                    return Some(0);
                }
                if shift >= u64::from(<$t>::BITS) || <$t>::leading_zeros(*self) < shift as u32 {
                    return None;
                }
                Some(*self << shift)
            }
        }
    )*)
}

count_impl!(u32 u64 u128);

impl Count for BigUint {
    const NAME: &'static str = "BigUint";

    fn to_big(&self) -> BigUint {
        self.clone()
    }

    fn from_big(value: &BigUint) -> Option<Self> {
        Some(value.clone())
    }

    fn trailing_zero_bits(&self) -> Option<u64> {
        BigUint::trailing_zeros(self)
    }

    fn shr_bits(&self, shift: u64) -> Self {
        self >> shift
    }

    fn shl_exact(&self, shift: u64) -> Option<Self> {
        Some(self << shift)
    }
}

pub(crate) fn overflow<C: Count>(context: &'static str) -> Error {
    Error::Overflow {
        type_name: C::NAME,
        context,
    }
}

pub(crate) fn add<C: Count>(a: &C, b: &C, context: &'static str) -> Result<C> {
    a.checked_add(b).ok_or_else(|| overflow::<C>(context))
}

/// `2^exp` in the count type.
pub fn pow2<C: Count>(exp: u64) -> Result<C> {
    C::one()
        .shl_exact(exp)
        .ok_or_else(|| overflow::<C>("a power of two"))
}

/// Converts a `u64` into the count type.
pub fn from_u64<C: Count>(value: u64) -> Result<C> {
    C::from_u64(value).ok_or_else(|| overflow::<C>("a conversion from u64"))
}
