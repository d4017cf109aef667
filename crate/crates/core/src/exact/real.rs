//! Exact real scalars: rational Laurent expressions in one irrational symbol.
//!
//! Multiplier phases and traces are affine in a single irrational
//! parameter; products of two such values are quadratic, and the
//! annihilator-lattice formulas divide by the parameter.  Closing under
//! all of those means working with finite sums `sum_k c_k * s^k` with
//! rational `c_k` and integer `k` (possibly negative).  The symbol is
//! opaque: no algebraic relation is ever assumed for it, so equality is
//! coefficientwise, and sign questions are answered from an optional
//! decimal approximant interval or not at all.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// An opaque irrational symbol, optionally carrying a decimal
/// approximant used only for display and for sign decisions.
///
/// Two symbols are the same exactly when their names coincide; the
/// approximant never takes part in equality.
#[derive(Debug, Clone)]
pub struct Symbol {
    name: String,
    approx: Option<Approx>,
}

#[derive(Debug, Clone, PartialEq)]
struct Approx {
    center: BigRational,
    radius: BigRational,
}

impl Symbol {
    pub fn new(name: impl Into<String>) -> Self {
        Symbol { name: name.into(), approx: None }
    }

    /// Attaches a decimal approximant such as `"0.3333"`.  The true value
    /// is taken to lie within half a unit of the last printed digit.
    pub fn with_approx(name: impl Into<String>, decimal: &str) -> Result<Self> {
        let approx = parse_decimal(decimal)
            .ok_or_else(|| Error::Invalid(format!("cannot parse decimal approximant `{decimal}`")))?;
        Ok(Symbol { name: name.into(), approx: Some(approx) })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn approx_value(&self) -> Option<&BigRational> {
        self.approx.as_ref().map(|a| &a.center)
    }

    fn interval(&self) -> Option<(BigRational, BigRational)> {
        self.approx.as_ref().map(|a| (&a.center - &a.radius, &a.center + &a.radius))
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for Symbol {}

impl std::hash::Hash for Symbol {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name.hash(state);
    }
}

fn parse_decimal(s: &str) -> Option<Approx> {
    let s = s.trim();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
    let digits: BigInt = format!("{}{}", if int_part.is_empty() { "0" } else { int_part }, frac_part)
        .parse()
        .ok()?;
    let center = BigRational::new(BigInt::from(sign) * digits, scale.clone());
    let radius = BigRational::new(BigInt::one(), scale * BigInt::from(2));
    Some(Approx { center, radius })
}

/// A finite rational Laurent expression `sum_k c_k * s^k` in at most one
/// irrational symbol `s`.  Purely rational values carry no symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactReal {
    sym: Option<Symbol>,
    coeffs: BTreeMap<i32, BigRational>,
}

impl ExactReal {
    pub fn zero() -> Self {
        ExactReal { sym: None, coeffs: BTreeMap::new() }
    }

    pub fn from_rational(c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        ExactReal { sym: None, coeffs }
    }

    pub fn from_int(z: impl Into<BigInt>) -> Self {
        ExactReal::from_rational(BigRational::from(z.into()))
    }

    /// The bare symbol `s`.
    pub fn symbol(sym: Symbol) -> Self {
        ExactReal::monomial(sym, 1, BigRational::one())
    }

    /// `c * s^k`.
    pub fn monomial(sym: Symbol, k: i32, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        let mut v = ExactReal { sym: Some(sym), coeffs };
        v.normalize();
        v
    }

    /// `c0 + c1 * s`.
    pub fn affine(c0: BigRational, c1: BigRational, sym: Symbol) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c0.is_zero() {
            coeffs.insert(0, c0);
        }
        if !c1.is_zero() {
            coeffs.insert(1, c1);
        }
        let mut v = ExactReal { sym: Some(sym), coeffs };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        self.coeffs.retain(|_, c| !c.is_zero());
        if self.coeffs.keys().all(|&k| k == 0) {
            self.sym = None;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.sym.is_none()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    /// Coefficient of `s^k` (zero when absent).
    pub fn coeff(&self, k: i32) -> BigRational {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn symbol_ref(&self) -> Option<&Symbol> {
        self.sym.as_ref()
    }

    /// The non-constant part, i.e. the value minus its `s^0` coefficient.
    pub fn symbolic_part(&self) -> ExactReal {
        let mut v = self.clone();
        v.coeffs.remove(&0);
        v.normalize();
        v
    }

    fn unify(a: &Option<Symbol>, b: &Option<Symbol>) -> Result<Option<Symbol>> {
        match (a, b) {
            (None, s) => Ok(s.clone()),
            (s, None) => Ok(s.clone()),
            (Some(x), Some(y)) => {
                if x.name() != y.name() {
                    return Err(Error::SymbolMismatch {
                        left: x.name().to_string(),
                        right: y.name().to_string(),
                    });
                }
                // Keep whichever copy carries an approximant.
                Ok(Some(if x.approx.is_some() { x.clone() } else { y.clone() }))
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let sym = Self::unify(&self.sym, &other.sym)?;
        let mut coeffs = self.coeffs.clone();
        for (&k, c) in &other.coeffs {
            let entry = coeffs.entry(k).or_insert_with(BigRational::zero);
            *entry += c;
        }
        let mut v = ExactReal { sym, coeffs };
        v.normalize();
        Ok(v)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ExactReal {
            sym: self.sym.clone(),
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn add_rational(&self, c: &BigRational) -> Self {
        self.add(&ExactReal::from_rational(c.clone())).expect("rational operand carries no symbol")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let sym = Self::unify(&self.sym, &other.sym)?;
        let mut coeffs: BTreeMap<i32, BigRational> = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                let entry = coeffs.entry(i + j).or_insert_with(BigRational::zero);
                *entry += a * b;
            }
        }
        let mut v = ExactReal { sym, coeffs };
        v.normalize();
        Ok(v)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return ExactReal::zero();
        }
        ExactReal {
            sym: self.sym.clone(),
            coeffs: self.coeffs.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    /// Exact multiplicative inverse.  Defined for nonzero rationals and
    /// for monomials `c * s^k`; anything else has no Laurent inverse in
    /// one opaque symbol.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput("inverted value"));
        }
        if self.coeffs.len() == 1 {
            let (&k, c) = self.coeffs.iter().next().expect("nonempty");
            let inv = c.recip();
            return Ok(match &self.sym {
                None => ExactReal::from_rational(inv),
                Some(s) => ExactReal::monomial(s.clone(), -k, inv),
            });
        }
        Err(Error::NonInvertibleSymbolic(self.to_string()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }

    /// Encloses the value in a rational interval, using the symbol's
    /// approximant.  `None` when no approximant is stored or when a
    /// negative power is requested over an interval containing zero.
    pub fn interval(&self) -> Option<(BigRational, BigRational)> {
        if self.is_rational() {
            let v = self.coeff(0);
            return Some((v.clone(), v));
        }
        let (slo, shi) = self.sym.as_ref()?.interval()?;
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (&k, c) in &self.coeffs {
            let (tlo, thi) = power_interval(&slo, &shi, k)?;
            let (tlo, thi) = if c.is_negative() { (c * thi, c * tlo) } else { (c * tlo, c * thi) };
            lo += tlo;
            hi += thi;
        }
        Some((lo, hi))
    }

    /// Sign of the value: exact for rationals, interval-decided for
    /// symbolic values, `None` when the approximant cannot settle it.
    pub fn sign(&self) -> Option<Ordering> {
        if self.is_rational() {
            return Some(self.coeff(0).cmp(&BigRational::zero()));
        }
        let (lo, hi) = self.interval()?;
        if lo.is_positive() {
            Some(Ordering::Greater)
        } else if hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// Display-only floating approximation.
    pub fn to_f64(&self) -> Option<f64> {
        let mut acc = 0.0f64;
        for (&k, c) in &self.coeffs {
            let c = c.to_f64()?;
            if k == 0 {
                acc += c;
            } else {
                let s = self.sym.as_ref()?.approx_value()?.to_f64()?;
                acc += c * s.powi(k);
            }
        }
        Some(acc)
    }
}

/// Interval of `x^k` for `x` ranging over `[lo, hi]`.
fn power_interval(lo: &BigRational, hi: &BigRational, k: i32) -> Option<(BigRational, BigRational)> {
    if k == 0 {
        return Some((BigRational::one(), BigRational::one()));
    }
    if k > 0 {
        let (a, b) = (pow_rat(lo, k as u32), pow_rat(hi, k as u32));
        if k % 2 == 1 {
            return Some((a, b));
        }
        // Even power: minimum at zero if the interval straddles it.
        if !lo.is_negative() {
            return Some((a, b));
        }
        if !hi.is_positive() {
            return Some((b, a));
        }
        return Some((BigRational::zero(), a.max(b)));
    }
    // Negative power: only defined away from zero.
    if lo.is_positive() {
        let (a, b) = power_interval(lo, hi, -k)?;
        Some((b.recip(), a.recip()))
    } else if hi.is_negative() {
        let (a, b) = power_interval(lo, hi, -k)?;
        Some((b.recip(), a.recip()))
    } else {
        None
    }
}

fn pow_rat(x: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let name = self.sym.as_ref().map(|s| s.name()).unwrap_or("s");
        let mut first = true;
        for (&k, c) in &self.coeffs {
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "{name}")?,
                1 => write!(f, "{a}*{name}")?,
                _ if a.is_one() => write!(f, "{name}^{k}")?,
                _ => write!(f, "{a}*{name}^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_fast_paths() {
        let a = ExactReal::from_rational(rat(1, 2));
        let b = ExactReal::from_rational(rat(1, 3));
        assert_eq!(a.add(&b).unwrap().as_rational().unwrap(), rat(5, 6));
        assert_eq!(a.mul(&b).unwrap().as_rational().unwrap(), rat(1, 6));
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn symbol_mixing_is_an_error() {
        let s = ExactReal::symbol(Symbol::new("sigma"));
        let t = ExactReal::symbol(Symbol::new("theta"));
        assert!(matches!(s.add(&t), Err(Error::SymbolMismatch { .. })));
        assert!(s.add(&s).is_ok());
    }

    #[test]
    fn products_extend_exponents() {
        let s = Symbol::new("theta");
        let a = ExactReal::affine(rat(1, 2), rat(1, 1), s.clone());
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq.coeff(0), rat(1, 4));
        assert_eq!(sq.coeff(1), rat(1, 1));
        assert_eq!(sq.coeff(2), rat(1, 1));
        let inv = ExactReal::symbol(s.clone()).inverse().unwrap();
        let prod = ExactReal::symbol(s).mul(&inv).unwrap();
        assert_eq!(prod.as_rational().unwrap(), rat(1, 1));
    }

    #[test]
    fn affine_inverse_rejected() {
        let s = Symbol::new("theta");
        let a = ExactReal::affine(rat(1, 1), rat(1, 1), s);
        assert!(matches!(a.inverse(), Err(Error::NonInvertibleSymbolic(_))));
    }

    #[test]
    fn sign_from_approximant() {
        let s = Symbol::with_approx("sigma", "0.3333").unwrap();
        let v = ExactReal::affine(rat(-1, 1), rat(1, 1), s.clone());
        assert_eq!(v.sign(), Some(Ordering::Less));
        let w = ExactReal::symbol(s.clone());
        assert_eq!(w.sign(), Some(Ordering::Greater));
        // 3*sigma - 1 is too close to zero for a 4-digit approximant.
        let tight = ExactReal::affine(rat(-1, 1), rat(3, 1), s);
        assert_eq!(tight.sign(), None);
        // No approximant at all.
        let bare = ExactReal::symbol(Symbol::new("sigma"));
        assert_eq!(bare.sign(), None);
    }

    #[test]
    fn zero_symbolic_coefficients_collapse_to_rational() {
        let s = Symbol::new("sigma");
        let v = ExactReal::affine(rat(1, 2), rat(0, 1), s);
        assert!(v.is_rational());
        assert_eq!(v, ExactReal::from_rational(rat(1, 2)));
    }

    #[test]
    fn decimal_parsing() {
        let s = Symbol::with_approx("t", "0.25").unwrap();
        assert_eq!(s.approx_value().unwrap(), &rat(1, 4));
        let neg = Symbol::with_approx("t", "-1.5").unwrap();
        assert_eq!(neg.approx_value().unwrap(), &rat(-3, 2));
        assert!(Symbol::with_approx("t", "abc").is_err());
    }
}
