//! Exact scalars: rationals, signs and elements of ½ℤ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Arbitrary-precision rational in canonical form (positive denominator, reduced).
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Sign of a real number, or the extended sign of a rational function at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(x: &Rat) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn from_i64(v: i64) -> Sign {
        match v.signum() {
            -1 => Sign::Neg,
            0 => Sign::Zero,
            _ => Sign::Pos,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i64(self.to_i64() * rhs.to_i64())
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign::from_i64(-self.to_i64())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Neg => "-1",
            Sign::Zero => "0",
            Sign::Pos => "1",
        })
    }
}

/// Element of ½ℤ stored as its double.
///
/// Every Cauchy index is bounded in absolute value by the degree of the
/// denominator, so machine integers hold all reachable values exactly; the
/// arithmetic below is checked and panics rather than wrapping.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };

    pub fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt {
            doubled: n.checked_mul(2).expect("half-integer overflow"),
        }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    pub fn to_rat(self) -> Rat {
        rat(self.doubled, 2)
    }

    pub fn abs(self) -> Self {
        HalfInt {
            doubled: self.doubled.abs(),
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            doubled: self
                .doubled
                .checked_add(rhs.doubled)
                .expect("half-integer overflow"),
        }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        *self = *self + rhs;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            doubled: self
                .doubled
                .checked_sub(rhs.doubled)
                .expect("half-integer overflow"),
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            doubled: -self.doubled,
        }
    }
}

impl Mul<Sign> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: Sign) -> HalfInt {
        HalfInt {
            doubled: self.doubled * rhs.to_i64(),
        }
    }
}

impl std::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, |acc, x| acc + x)
    }
}

/// Integers print bare, proper halves as `n/2`.
impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

pub(crate) fn rat_pow(x: &Rat, e: usize) -> Rat {
    num_traits::pow(x.clone(), e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_int_rendering() {
        assert_eq!(HalfInt::from_doubled(1).to_string(), "1/2");
        assert_eq!(HalfInt::from_doubled(-5).to_string(), "-5/2");
        assert_eq!(HalfInt::from_doubled(4).to_string(), "2");
        assert_eq!(HalfInt::from_doubled(-2).to_string(), "-1");
        assert_eq!(HalfInt::ZERO.to_string(), "0");
    }

    #[test]
    fn half_int_integrality() {
        assert_eq!(HalfInt::from_doubled(6).to_integer(), Some(3));
        assert_eq!(HalfInt::from_doubled(7).to_integer(), None);
        assert_eq!(HalfInt::from_doubled(-3).to_rat(), rat(-3, 2));
    }

    #[test]
    fn rationals_are_canonical() {
        let x = rat(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        let z = rat(0, 7);
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn sign_products() {
        assert_eq!(Sign::Neg * Sign::Neg, Sign::Pos);
        assert_eq!(Sign::Neg * Sign::Zero, Sign::Zero);
        assert_eq!(-Sign::Pos, Sign::Neg);
        assert_eq!(Sign::of(&rat(-1, 3)), Sign::Neg);
    }
}
