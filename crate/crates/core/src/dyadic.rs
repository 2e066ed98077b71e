//! Exact arithmetic in Z[1/2], the ring of dyadic rationals.
//!
//! A value is stored as `mantissa * 2^exponent` with the mantissa an
//! arbitrary-precision integer. The representation is canonical: the mantissa
//! is odd, except that zero is stored as `0 * 2^0`. Equality is therefore
//! structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// A dyadic rational `mantissa * 2^exponent` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyadicRational {
    mantissa: BigInt,
    exponent: i64,
}

impl DyadicRational {
    /// Builds a value from any mantissa/exponent pair, normalizing it.
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        let mut v = DyadicRational { mantissa, exponent };
        v.normalize();
        v
    }

    pub fn zero() -> Self {
        DyadicRational { mantissa: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        DyadicRational { mantissa: BigInt::one(), exponent: 0 }
    }

    pub fn from_integer<T: Into<BigInt>>(value: T) -> Self {
        DyadicRational::new(value.into(), 0)
    }

    /// `1 / 2^k`.
    pub fn inverse_power_of_two(k: i64) -> Self {
        DyadicRational { mantissa: BigInt::one(), exponent: -k }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0 && self.mantissa.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// True when the value lies in Z.
    pub fn is_integer(&self) -> bool {
        self.exponent >= 0
    }

    /// The value as a `BigInt`, if it is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.exponent < 0 {
            return None;
        }
        Some(&self.mantissa << (self.exponent as u64))
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        if let Some(tz) = self.mantissa.trailing_zeros() {
            if tz > 0 {
                self.mantissa >>= tz;
                self.exponent += tz as i64;
            }
        }
    }

    /// Exact division. Returns `None` when the quotient leaves Z[1/2],
    /// i.e. when the odd part of `rhs` does not divide the mantissa.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(DyadicRational::zero());
        }
        let (q, r) = self.mantissa.div_rem(&rhs.mantissa);
        if !r.is_zero() {
            return None;
        }
        Some(DyadicRational::new(q, self.exponent - rhs.exponent))
    }

    /// Divides by `2^k`.
    pub fn div_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        DyadicRational { mantissa: self.mantissa.clone(), exponent: self.exponent - k }
    }

    pub fn abs(&self) -> Self {
        DyadicRational { mantissa: self.mantissa.abs(), exponent: self.exponent }
    }

    /// Parses the textual forms produced by `Display`: an optional sign,
    /// then either `m` or `m/2^k` with `m` an integer and `k >= 0`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            None => (text, None),
            Some((a, b)) => (a.trim(), Some(b.trim())),
        };
        let mantissa: BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {num:?}")))?;
        let exponent = match den {
            None => 0,
            Some(d) => {
                let k = d
                    .strip_prefix("2^")
                    .and_then(|k| k.parse::<i64>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad denominator {d:?}")))?;
                -k
            }
        };
        Ok(DyadicRational::new(mantissa, exponent))
    }
}

impl fmt::Display for DyadicRational {
    /// Integers print as integers; other values print as `m/2^k` with odd `m`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2^{}", self.mantissa, -self.exponent),
        }
    }
}

impl Add for &DyadicRational {
    type Output = DyadicRational;
    fn add(self, rhs: &DyadicRational) -> DyadicRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(rhs.exponent);
        let a = &self.mantissa << ((self.exponent - e) as u64);
        let b = &rhs.mantissa << ((rhs.exponent - e) as u64);
        DyadicRational::new(a + b, e)
    }
}

impl Sub for &DyadicRational {
    type Output = DyadicRational;
    fn sub(self, rhs: &DyadicRational) -> DyadicRational {
        self + &(-rhs)
    }
}

impl Mul for &DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: &DyadicRational) -> DyadicRational {
        if self.is_zero() || rhs.is_zero() {
            return DyadicRational::zero();
        }
        // odd * odd stays odd, so no renormalization is needed
        DyadicRational {
            mantissa: &self.mantissa * &rhs.mantissa,
            exponent: self.exponent + rhs.exponent,
        }
    }
}

impl Neg for &DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        DyadicRational { mantissa: -&self.mantissa, exponent: self.exponent }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for DyadicRational {
            type Output = DyadicRational;
            fn $method(self, rhs: DyadicRational) -> DyadicRational {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        -&self
    }
}

impl AddAssign<&DyadicRational> for DyadicRational {
    fn add_assign(&mut self, rhs: &DyadicRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&DyadicRational> for DyadicRational {
    fn sub_assign(&mut self, rhs: &DyadicRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&DyadicRational> for DyadicRational {
    fn mul_assign(&mut self, rhs: &DyadicRational) {
        *self = &*self * rhs;
    }
}

impl From<i64> for DyadicRational {
    fn from(v: i64) -> Self {
        DyadicRational::from_integer(v)
    }
}
