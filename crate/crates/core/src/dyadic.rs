//! Exact nonnegative dyadic rationals `k / 2^e`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Count};

/// A nonnegative rational with a power-of-two denominator.
///
/// Always kept in lowest terms: the numerator is odd, or the value is zero
/// with exponent 0. Equality is therefore structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational<C> {
    numerator: C,
    exponent: u64,
}

impl<C: Count> DyadicRational<C> {
    /// `numerator / 2^exponent`, reduced.
    pub fn new(numerator: C, exponent: u64) -> Self {
        match numerator.trailing_zero_bits() {
            None => Self::zero(),
            Some(tz) => {
                let shift = tz.min(exponent);
                Self {
                    numerator: numerator.shr_bits(shift),
                    exponent: exponent - shift,
                }
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            numerator: C::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::integer(C::one())
    }

    pub fn integer(value: C) -> Self {
        Self::new(value, 0)
    }

    pub fn numerator(&self) -> &C {
        &self.numerator
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Both numerators rescaled to the larger exponent.
    fn aligned(&self, other: &Self) -> Result<(C, C, u64)> {
        let e = self.exponent.max(other.exponent);
        let shift = |v: &Self| {
            v.numerator
                .shl_exact(e - v.exponent)
                .ok_or_else(|| scalar::overflow::<C>("dyadic alignment"))
        };
        Ok((shift(self)?, shift(other)?, e))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (a, b, e) = self.aligned(other)?;
        Ok(Self::new(scalar::add(&a, &b, "a dyadic sum")?, e))
    }

    /// `self - other`; fails with [`Error::NegativeResult`] if `other > self`.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let (a, b, e) = self.aligned(other)?;
        let diff = a.checked_sub(&b).ok_or(Error::NegativeResult)?;
        Ok(Self::new(diff, e))
    }

    /// Exact comparison against the fraction `num / den` (`den > 0`).
    pub fn cmp_fraction(&self, num: &BigUint, den: &BigUint) -> Ordering {
        assert!(!den.is_zero(), "zero denominator");
        let lhs = self.numerator.to_big() * den;
        let rhs = num << self.exponent;
        lhs.cmp(&rhs)
    }

    /// Nearest `f64`; for display only.
    pub fn to_f64(&self) -> f64 {
        let mut value = self.numerator.to_big();
        let mut exponent = self.exponent;
        // Keep the numerator within f64 range before scaling.
        let bits = value.bits();
        if bits > 1000 {
            let drop = (bits - 1000).min(exponent);
            value >>= drop;
            exponent -= drop;
        }
        let mut f = value.to_f64().unwrap_or(f64::INFINITY);
        while exponent > 0 {
            let step = exponent.min(1000);
            f *= 2f64.powi(-(step as i32));
            exponent -= step;
        }
        f
    }

    /// Exact decimal expansion. Every dyadic rational terminates in base ten.
    pub fn to_decimal_string(&self) -> String {
        let exp = self.exponent as usize;
        if exp == 0 {
            return self.numerator.to_string();
        }
        // k / 2^e = k * 5^e / 10^e
        let digits =
            (self.numerator.to_big() * BigUint::from(5u8).pow(self.exponent as u32)).to_string();
        let digits = format!("{digits:0>width$}", width = exp + 1);
        let (int, frac) = digits.split_at(digits.len() - exp);
        format!("{int}.{frac}")
    }

    /// Converts to another count type.
    pub fn convert<D: Count>(&self) -> Result<DyadicRational<D>> {
        let numerator = D::from_big(&self.numerator.to_big())
            .ok_or_else(|| scalar::overflow::<D>("a dyadic conversion"))?;
        Ok(DyadicRational {
            numerator,
            exponent: self.exponent,
        })
    }
}

impl<C: Count> PartialOrd for DyadicRational<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Count> Ord for DyadicRational<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        let a = self.numerator.to_big() << (e - self.exponent);
        let b = other.numerator.to_big() << (e - other.exponent);
        a.cmp(&b)
    }
}

/// Renders as a reduced fraction, e.g. `3/16`, or an integer.
impl<C: Count> fmt::Display for DyadicRational<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, BigUint::one() << self.exponent)
        }
    }
}
