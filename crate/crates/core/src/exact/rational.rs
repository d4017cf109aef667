//! The group `Z[1/p]` of rationals with denominator a power of `p`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exact::{is_prime, pow_p};
use crate::Result;

/// An element `num / p^exp` of `Z[1/p]`, kept in reduced form: the
/// exponent is minimal, i.e. `p` does not divide `num` unless `exp = 0`,
/// and zero is stored as `0 / p^0`.
///
/// All the multiplier and cocycle formulas of this crate read numerator
/// and exponent off this reduced form, so reduction is enforced at
/// construction and after every arithmetic operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicRational {
    p: u64,
    num: BigInt,
    exp: u32,
}

impl PadicRational {
    pub fn new(p: u64, num: impl Into<BigInt>, exp: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut num = num.into();
        let mut exp = exp;
        let bp = BigInt::from(p);
        if num.is_zero() {
            exp = 0;
        } else {
            while exp > 0 && (&num % &bp).is_zero() {
                num /= &bp;
                exp -= 1;
            }
        }
        Ok(PadicRational { p, num, exp })
    }

    pub fn zero(p: u64) -> Self {
        PadicRational { p, num: BigInt::zero(), exp: 0 }
    }

    pub fn one(p: u64) -> Self {
        PadicRational { p, num: BigInt::one(), exp: 0 }
    }

    /// Parses an arbitrary rational, failing when its denominator has a
    /// prime factor other than `p`.
    pub fn from_rational(p: u64, r: &BigRational) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let bp = BigInt::from(p);
        let mut den = r.denom().clone();
        let mut exp = 0u32;
        while (&den % &bp).is_zero() {
            den /= &bp;
            exp += 1;
        }
        if !den.is_one() {
            return Err(Error::DenominatorNotPPower(r.to_string()));
        }
        PadicRational::new(p, r.numer().clone(), exp)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), pow_p(self.p, self.exp))
    }

    /// `p`-adic valuation; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        if self.exp > 0 {
            return Some(-(self.exp as i64));
        }
        let bp = BigInt::from(self.p);
        let mut v = 0i64;
        let mut n = self.num.clone();
        while (&n % &bp).is_zero() {
            n /= &bp;
            v += 1;
        }
        Some(v)
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch { left: self.p, right: other.p });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let m = self.exp.max(other.exp);
        let num = &self.num * pow_p(self.p, m - self.exp) + &other.num * pow_p(self.p, m - other.exp);
        PadicRational::new(self.p, num, m)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PadicRational { p: self.p, num: -&self.num, exp: self.exp }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        PadicRational::new(self.p, &self.num * &other.num, self.exp + other.exp)
    }

    pub fn scale(&self, z: &BigInt) -> Self {
        PadicRational::new(self.p, &self.num * z, self.exp).expect("prime already validated")
    }
}

impl fmt::Display for PadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

/// `|r|_p = p^{-v_p(r)}`, with `|0|_p = 0`.
pub fn padic_norm(r: &PadicRational) -> BigRational {
    match r.valuation() {
        None => BigRational::zero(),
        Some(v) if v >= 0 => BigRational::new(BigInt::one(), pow_p(r.prime(), v as u32)),
        Some(v) => BigRational::from(pow_p(r.prime(), (-v) as u32)),
    }
}

impl PadicRational {
    /// Absolute value of the numerator plus the denominator exponent;
    /// handy as a size measure in search bounds.
    pub fn height(&self) -> BigInt {
        self.num.abs() + BigInt::from(self.exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, num: i64, exp: u32) -> PadicRational {
        PadicRational::new(p, num, exp).unwrap()
    }

    #[test]
    fn reduction() {
        let r = q(5, 10, 2);
        assert_eq!(r.numer(), &BigInt::from(2));
        assert_eq!(r.exp(), 1);
        let z = q(5, 0, 3);
        assert_eq!(z.exp(), 0);
        assert!(z.is_zero());
    }

    #[test]
    fn composite_p_rejected() {
        assert_eq!(PadicRational::new(6, 1, 0).unwrap_err(), Error::NotPrime(6));
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = q(2, 1, 1);
        let b = q(2, 1, 1);
        let s = a.add(&b).unwrap();
        assert_eq!(s, q(2, 1, 0));
        let m = a.mul(&b).unwrap();
        assert_eq!(m, q(2, 1, 2));
        assert_eq!(a.sub(&a).unwrap(), PadicRational::zero(2));
    }

    #[test]
    fn prime_mismatch() {
        let a = q(2, 1, 1);
        let b = q(3, 1, 1);
        assert!(matches!(a.add(&b), Err(Error::PrimeMismatch { .. })));
    }

    #[test]
    fn norm_examples() {
        // |0|_p = 0
        assert_eq!(padic_norm(&PadicRational::zero(3)), BigRational::zero());
        // |9|_3 = 1/9, by factoring out 3^2
        assert_eq!(padic_norm(&q(3, 9, 0)), BigRational::new(BigInt::one(), BigInt::from(9)));
        // |1/3|_3 = 3
        assert_eq!(padic_norm(&q(3, 1, 1)), BigRational::from(BigInt::from(3)));
    }

    #[test]
    fn from_rational_validates_denominator() {
        let r = BigRational::new(BigInt::from(5), BigInt::from(8));
        let v = PadicRational::from_rational(2, &r).unwrap();
        assert_eq!(v, q(2, 5, 3));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(6));
        assert!(matches!(PadicRational::from_rational(2, &bad), Err(Error::DenominatorNotPPower(_))));
    }
}
