//! Exact circle values, stored additively modulo one.
//!
//! A phase is the class of an [`ExactReal`] modulo 1.  The canonical
//! representative keeps the rational (`s^0`) coefficient in `[0,1)` and
//! all symbolic coefficients untouched, so phase equality is plain
//! structural equality.  Complex exponentials never appear here; turning
//! a phase into `e^{2*pi*i*...}` is a display concern.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exact::ExactReal;
use crate::Result;

/// An element of `R/Z`, exact, at most one irrational symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Phase(ExactReal);

impl Phase {
    pub fn zero() -> Self {
        Phase(ExactReal::zero())
    }

    /// Reduces a real value modulo one.
    pub fn from_real(x: &ExactReal) -> Self {
        let c = x.coeff(0);
        let floor = c.floor();
        if floor.is_zero() {
            return Phase(x.clone());
        }
        Phase(x.add_rational(&(-floor)))
    }

    pub fn from_rational(c: &BigRational) -> Self {
        Phase::from_real(&ExactReal::from_rational(c.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The canonical representative, rational part in `[0,1)`.
    pub fn representative(&self) -> &ExactReal {
        &self.0
    }

    pub fn add(&self, other: &Phase) -> Result<Phase> {
        Ok(Phase::from_real(&self.0.add(&other.0)?))
    }

    pub fn sub(&self, other: &Phase) -> Result<Phase> {
        Ok(Phase::from_real(&self.0.sub(&other.0)?))
    }

    pub fn neg(&self) -> Phase {
        Phase::from_real(&self.0.neg())
    }

    /// Scaling by an integer is well defined on classes modulo one.
    pub fn scale_int(&self, z: &BigInt) -> Phase {
        Phase::from_real(&self.0.scale(&BigRational::from(z.clone())))
    }

    /// Scaling by a general rational acts on the canonical
    /// representative (the result depends on the representative, which
    /// is pinned to rational part in `[0,1)`).
    pub fn scale_rat(&self, c: &BigRational) -> Phase {
        Phase::from_real(&self.0.scale(c))
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod 1)", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Symbol;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn half_plus_half_is_zero() {
        let h = Phase::from_rational(&rat(1, 2));
        assert!(h.add(&h).unwrap().is_zero());
    }

    #[test]
    fn symbolic_components_add() {
        let s = Symbol::new("sigma");
        let a = Phase::from_real(&ExactReal::affine(rat(1, 4), rat(1, 1), s.clone()));
        let b = Phase::from_real(&ExactReal::affine(rat(3, 4), rat(1, 1), s.clone()));
        let sum = a.add(&b).unwrap();
        assert_eq!(sum.representative(), &ExactReal::affine(rat(0, 1), rat(2, 1), s));
    }

    #[test]
    fn rational_scaling_reduces() {
        let third = Phase::from_rational(&rat(1, 3));
        assert_eq!(third.scale_rat(&rat(5, 1)), Phase::from_rational(&rat(2, 3)));
    }

    #[test]
    fn negative_values_normalize() {
        let m = Phase::from_rational(&rat(-1, 4));
        assert_eq!(m, Phase::from_rational(&rat(3, 4)));
        let z = Phase::from_rational(&rat(7, 1));
        assert!(z.is_zero());
    }
}
