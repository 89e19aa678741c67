//! Coefficient fields: exact rationals and word-sized prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Rational = BigRational;

pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Multiplicative inverse; panics on zero.
    fn inverse(&self) -> Self;

    fn from_i64(v: i64) -> Self;

    /// Image of a rational number, `None` if the denominator vanishes.
    fn from_rational(q: &Rational) -> Option<Self>;
}

impl Field for Rational {
    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
}

/// Integers modulo the prime `P` (`P < 2^32`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn from_bigint(v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(P));
        Fp(r.to_u64().expect("residue fits"))
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(self.0 * o.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inverse(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(P - 2)
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        let den = Self::from_bigint(q.denom());
        if den.is_zero() {
            return None;
        }
        Some(Self::from_bigint(q.numer()) * den.inverse())
    }
}

/// Prime used by the modular generic-initial-ideal path.
pub const GIN_PRIME: u64 = 2_147_483_647;
/// The two primes used by dual-prime rank computations.
pub const RANK_PRIMES: (u64, u64) = (32_003, 65_537);

pub type GinField = Fp<GIN_PRIME>;

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_arithmetic() {
        for a in 1..7 {
            let x = F7::new(a);
            assert_eq!(x * x.inverse(), F7::one());
            assert_eq!(x + (-x), F7::zero());
        }
        assert_eq!(F7::from_i64(-1), F7::new(6));
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(F7::from_rational(&half), Some(F7::new(4)));
        let bad = Rational::new(BigInt::from(1), BigInt::from(7));
        assert_eq!(F7::from_rational(&bad), None);
    }

    #[test]
    fn gin_prime_products_fit() {
        let big = GinField::new(GIN_PRIME - 1);
        assert_eq!(big * big, GinField::one());
    }
}
