//! Exact scalar arithmetic: arbitrary-precision integers and rationals.
//!
//! Invariant: a `Ratio` value never has denominator 1. Arithmetic demotes
//! integral rationals back to `Int`, so equality is structural and the
//! integer fast path stays active whenever the inputs are integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactScalar {
    Int(BigInt),
    Ratio(BigRational),
}

use ExactScalar::{Int, Ratio};

impl ExactScalar {
    pub fn zero() -> Self {
        Int(BigInt::zero())
    }

    pub fn one() -> Self {
        Int(BigInt::one())
    }

    pub fn from_i64(v: i64) -> Self {
        Int(BigInt::from(v))
    }

    /// Reduced rational; demotes to Int when the denominator is 1.
    pub fn ratio(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_rational(BigRational::new(num, den))
    }

    pub fn from_rational(r: BigRational) -> Self {
        if r.is_integer() {
            Int(r.to_integer())
        } else {
            Ratio(r)
        }
    }

    pub fn to_rational(&self) -> BigRational {
        match self {
            Int(v) => BigRational::from_integer(v.clone()),
            Ratio(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Int(v) => v.is_zero(),
            Ratio(_) => false, // reduced non-integral rationals are nonzero
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Int(_))
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Int(v) => Some(v),
            Ratio(_) => None,
        }
    }

    /// -1, 0, or 1.
    pub fn signum(&self) -> i8 {
        let s = match self {
            Int(v) => v.sign(),
            Ratio(r) => r.numer().sign(),
        };
        match s {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Exact division; panics on zero divisor. Exactness is automatic:
    /// the result is a reduced rational, demoted when integral.
    pub fn div_exact(&self, other: &ExactScalar) -> ExactScalar {
        assert!(!other.is_zero(), "division by zero");
        match (self, other) {
            (Int(a), Int(b)) => {
                let (q, r) = num_integer::Integer::div_rem(a, b);
                if r.is_zero() {
                    Int(q)
                } else {
                    Self::from_rational(BigRational::new(a.clone(), b.clone()))
                }
            }
            _ => Self::from_rational(self.to_rational() / other.to_rational()),
        }
    }

    pub fn abs(&self) -> ExactScalar {
        match self {
            Int(v) => Int(v.abs()),
            Ratio(r) => Ratio(r.abs()),
        }
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, other: &ExactScalar) -> ExactScalar {
        match (self, other) {
            (Int(a), Int(b)) => Int(a + b),
            _ => ExactScalar::from_rational(self.to_rational() + other.to_rational()),
        }
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, other: &ExactScalar) -> ExactScalar {
        match (self, other) {
            (Int(a), Int(b)) => Int(a - b),
            _ => ExactScalar::from_rational(self.to_rational() - other.to_rational()),
        }
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, other: &ExactScalar) -> ExactScalar {
        match (self, other) {
            (Int(a), Int(b)) => Int(a * b),
            _ => ExactScalar::from_rational(self.to_rational() * other.to_rational()),
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            Int(v) => Int(-v),
            Ratio(r) => Ratio(-r),
        }
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        Self::from_i64(v)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(v: BigInt) -> Self {
        Int(v)
    }
}

/// Decimal for integers, `p/q` for rationals; never truncated.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int(v) => write!(f, "{v}"),
            Ratio(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> ExactScalar {
        ExactScalar::ratio(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn rationals_demote_to_int() {
        assert_eq!(r(4, 2), ExactScalar::from_i64(2));
        assert_eq!(&r(1, 3) + &r(2, 3), ExactScalar::one());
        assert_eq!(&r(1, 2) * &r(4, 1), ExactScalar::from_i64(2));
        assert!(matches!(r(1, 3), Ratio(_)));
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = r(1, 3);
        let mut acc = ExactScalar::zero();
        for _ in 0..3000 {
            acc = &acc + &third;
        }
        assert_eq!(acc, ExactScalar::from_i64(1000));
    }

    #[test]
    fn division_is_exact() {
        assert_eq!(
            ExactScalar::from_i64(6).div_exact(&ExactScalar::from_i64(3)),
            ExactScalar::from_i64(2)
        );
        assert_eq!(ExactScalar::from_i64(1).div_exact(&r(1, 7)), ExactScalar::from_i64(7));
        assert_eq!(ExactScalar::from_i64(3).div_exact(&ExactScalar::from_i64(6)), r(1, 2));
    }

    #[test]
    fn signs_and_display() {
        assert_eq!(r(-3, 6).signum(), -1);
        assert_eq!(ExactScalar::zero().signum(), 0);
        assert_eq!(format!("{}", r(-1, 2)), "-1/2");
        assert_eq!(format!("{}", ExactScalar::from_i64(42)), "42");
    }
}
