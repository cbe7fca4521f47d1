use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, ParseBigIntError};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision nonnegative integer.
///
/// Closed under `+` and `*`; division is only offered in its exact form
/// ([`Nat::exact_div`]), which panics on a nonzero remainder.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nat(BigUint);

impl Nat {
    pub fn zero() -> Self {
        Nat(BigUint::zero())
    }

    pub fn one() -> Self {
        Nat(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Quotient of an exact division.
    ///
    /// Panics if `divisor` is zero or does not divide `self`; either would
    /// mean an indexing or arithmetic bug upstream.
    pub fn exact_div(&self, divisor: &Nat) -> Nat {
        assert!(!divisor.is_zero(), "exact_div by zero");
        let (q, r) = self.0.div_rem(&divisor.0);
        assert!(r.is_zero(), "inexact division: {} / {} leaves {}", self, divisor, r);
        Nat(q)
    }

    /// Like [`Nat::exact_div`] but reports the remainder instead of panicking.
    pub fn checked_exact_div(&self, divisor: &Nat) -> Option<Nat> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(Nat(q))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Nonnegative integers only; `None` for negative input.
    pub fn from_bigint(v: &BigInt) -> Option<Nat> {
        v.to_biguint().map(Nat)
    }
}

impl From<u64> for Nat {
    fn from(v: u64) -> Self {
        Nat(BigUint::from(v))
    }
}

impl From<u32> for Nat {
    fn from(v: u32) -> Self {
        Nat(BigUint::from(v))
    }
}

impl From<usize> for Nat {
    fn from(v: usize) -> Self {
        Nat(BigUint::from(v))
    }
}

impl From<BigUint> for Nat {
    fn from(v: BigUint) -> Self {
        Nat(v)
    }
}

impl FromStr for Nat {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s).map(Nat)
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl PartialEq<u64> for Nat {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl PartialOrd<u64> for Nat {
    fn partial_cmp(&self, other: &u64) -> Option<std::cmp::Ordering> {
        Some(self.0.cmp(&BigUint::from(*other)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr for Nat {
            type Output = Nat;
            fn $m(self, rhs: Nat) -> Nat {
                Nat(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Nat> for &'a Nat {
            type Output = Nat;
            fn $m(self, rhs: &'a Nat) -> Nat {
                Nat((&self.0).$m(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Nat> for Nat {
            type Output = Nat;
            fn $m(self, rhs: &'a Nat) -> Nat {
                Nat(self.0.$m(&rhs.0))
            }
        }
        impl $atr for Nat {
            fn $am(&mut self, rhs: Nat) {
                self.0.$am(rhs.0);
            }
        }
        impl<'a> $atr<&'a Nat> for Nat {
            fn $am(&mut self, rhs: &'a Nat) {
                self.0.$am(&rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Sum for Nat {
    fn sum<I: Iterator<Item = Nat>>(iter: I) -> Nat {
        iter.fold(Nat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Nat> for Nat {
    fn sum<I: Iterator<Item = &'a Nat>>(iter: I) -> Nat {
        iter.fold(Nat::zero(), |acc, x| acc + x)
    }
}

impl Product for Nat {
    fn product<I: Iterator<Item = Nat>>(iter: I) -> Nat {
        iter.fold(Nat::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Nat> for Nat {
    fn product<I: Iterator<Item = &'a Nat>>(iter: I) -> Nat {
        iter.fold(Nat::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_div_ok() {
        assert_eq!(Nat::from(122522400u64).exact_div(&Nat::from(900u64)), 136136u64);
    }

    #[test]
    #[should_panic(expected = "inexact division")]
    fn exact_div_rejects_remainder() {
        Nat::from(7u64).exact_div(&Nat::from(2u64));
    }

    #[test]
    fn parse_and_display() {
        let n: Nat = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(n.to_string(), "123456789012345678901234567890");
        assert_eq!(Nat::from_bigint(&BigInt::from(-1)), None);
    }
}
