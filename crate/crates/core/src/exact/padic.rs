//! Rational p-adic integers and numbers as eventually periodic digit words.
//!
//! A p-adic integer with an eventually periodic digit expansion is
//! exactly a rational number whose denominator is coprime to `p`; a
//! p-adic number adds a power of `p` in front.  That class is closed
//! under field operations and covers every element this crate needs, so
//! digit words give a finite exact representation with invertible
//! rational reconstruction.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exact::digits::DigitWord;
use crate::exact::rational::PadicRational;
use crate::exact::{is_prime, pow_p};
use crate::Result;

/// A p-adic integer with eventually periodic digits `b_0, b_1, ...`,
/// i.e. the coherent sequence of truncations `J_k = sum_{j<k} b_j p^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicInt {
    p: u64,
    word: DigitWord,
}

impl PadicInt {
    pub fn new(p: u64, word: DigitWord) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if let Some(bad) = word.iter_support().find(|&d| d >= p) {
            return Err(Error::DigitOutOfRange { digit: bad.to_string(), p });
        }
        Ok(PadicInt { p, word })
    }

    pub fn zero(p: u64) -> Self {
        PadicInt { p, word: DigitWord::zero() }
    }

    pub fn from_bigint(p: u64, z: &BigInt) -> Result<Self> {
        Self::from_rational(p, &BigRational::from(z.clone()))
    }

    /// Expands a rational with denominator coprime to `p`.
    pub fn from_rational(p: u64, r: &BigRational) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r.denom().mod_floor(&BigInt::from(p)).is_zero() {
            return Err(Error::DenominatorDivisibleByP(r.to_string()));
        }
        Ok(PadicInt { p, word: expand(p, r.numer().clone(), r.denom().clone()) })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn word(&self) -> &DigitWord {
        &self.word
    }

    pub fn digit(&self, j: usize) -> u64 {
        self.word.digit(j)
    }

    pub fn is_zero(&self) -> bool {
        self.word.is_zero()
    }

    /// Truncation `J_k = sum_{j<k} b_j p^j`.
    pub fn truncation(&self, k: usize) -> BigInt {
        let bp = BigInt::from(self.p);
        let mut acc = BigInt::zero();
        let mut pk = BigInt::one();
        for j in 0..k {
            acc += BigInt::from(self.digit(j)) * &pk;
            pk *= &bp;
        }
        acc
    }

    /// Exact rational reconstruction: `pre`-part plus a geometric tail.
    pub fn to_rational(&self) -> BigRational {
        let bp = BigInt::from(self.p);
        let pre_len = self.word.pre().len();
        let per_len = self.word.per().len();
        let pre_val = self.truncation(pre_len);
        let mut per_val = BigInt::zero();
        let mut pk = BigInt::one();
        for &d in self.word.per() {
            per_val += BigInt::from(d) * &pk;
            pk *= &bp;
        }
        // tail = p^pre_len * per_val / (1 - p^per_len)
        let tail = BigRational::new(
            pow_p(self.p, pre_len as u32) * per_val,
            BigInt::one() - pow_p(self.p, per_len as u32),
        );
        BigRational::from(pre_val) + tail
    }

    /// Digitwise difference with borrows, resolved on the eventually
    /// periodic words by running the borrow automaton until its state
    /// (positions inside both periods plus the borrow bit) repeats.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch { left: self.p, right: other.p });
        }
        let pre_a = self.word.pre().len();
        let per_a = self.word.per().len();
        let pre_b = other.word.pre().len();
        let per_b = other.word.per().len();
        let settled = pre_a.max(pre_b);

        let mut digits: Vec<u64> = Vec::new();
        let mut seen: HashMap<(usize, usize, u8), usize> = HashMap::new();
        let mut borrow: i64 = 0;
        let mut i = 0usize;
        loop {
            if i >= settled {
                let key = ((i - pre_a) % per_a, (i - pre_b) % per_b, borrow as u8);
                if let Some(&j) = seen.get(&key) {
                    let per = digits.split_off(j);
                    return PadicInt::new(self.p, DigitWord::new(digits, per));
                }
                seen.insert(key, i);
            }
            let mut d = self.digit(i) as i64 - other.digit(i) as i64 - borrow;
            if d < 0 {
                d += self.p as i64;
                borrow = 1;
            } else {
                borrow = 0;
            }
            digits.push(d as u64);
            i += 1;
        }
    }

    /// Whether this p-adic integer lies in `Z`: the digit tail is
    /// eventually all `0` (nonnegative) or all `p-1` (negative).
    pub fn is_integer(&self) -> bool {
        self.word.per() == [0] || self.word.per() == [self.p - 1]
    }
}

/// Digit expansion of `a/b` in `Z_p`, `gcd(b, p) = 1`.
///
/// Each step emits `d = a * b^{-1} mod p` and replaces `a` by
/// `(a - d*b)/p`; the numerator state is bounded, so it eventually
/// revisits a value and the digits from the first visit repeat.
fn expand(p: u64, a: BigInt, b: BigInt) -> DigitWord {
    debug_assert!(b.is_positive(), "Ratio keeps denominators positive");
    let bp = BigInt::from(p);
    let b_mod = b.mod_floor(&bp).to_u64().expect("residue fits u64");
    let b_inv = mod_inverse(b_mod, p);
    let mut digits: Vec<u64> = Vec::new();
    let mut seen: HashMap<BigInt, usize> = HashMap::new();
    let mut a = a;
    loop {
        if let Some(&j) = seen.get(&a) {
            let per = digits.split_off(j);
            return DigitWord::new(digits, per);
        }
        seen.insert(a.clone(), digits.len());
        let a_mod = a.mod_floor(&bp).to_u64().expect("residue fits u64");
        let d = mul_mod(a_mod, b_inv, p);
        digits.push(d);
        a = (a - BigInt::from(d) * &b) / &bp;
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse modulo a prime, via Fermat.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// A p-adic number `p^valuation * unit` with the unit's first digit
/// nonzero; zero is stored with valuation 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicNumber {
    p: u64,
    unit: PadicInt,
    valuation: i64,
}

impl PadicNumber {
    pub fn new(unit: PadicInt, valuation: i64) -> Self {
        let p = unit.prime();
        if unit.is_zero() {
            return PadicNumber { p, unit, valuation: 0 };
        }
        let mut unit = unit;
        let mut valuation = valuation;
        if unit.digit(0) == 0 {
            let k = unit
                .word
                .position(|d| d != 0)
                .expect("nonzero word has a nonzero digit");
            unit = PadicInt { p, word: unit.word.shift(k) };
            valuation += k as i64;
        }
        PadicNumber { p, unit, valuation }
    }

    pub fn zero(p: u64) -> Self {
        PadicNumber { p, unit: PadicInt::zero(p), valuation: 0 }
    }

    pub fn one(p: u64) -> Self {
        PadicNumber::from_rational(p, &BigRational::one()).expect("1 expands in any Z_p")
    }

    /// Expands an arbitrary rational: the power of `p` is split off and
    /// the coprime part becomes the unit.
    pub fn from_rational(p: u64, r: &BigRational) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r.is_zero() {
            return Ok(PadicNumber::zero(p));
        }
        let bp = BigInt::from(p);
        let mut num = r.numer().clone();
        let mut den = r.denom().clone();
        let mut v = 0i64;
        while (&num % &bp).is_zero() {
            num /= &bp;
            v += 1;
        }
        while (&den % &bp).is_zero() {
            den /= &bp;
            v -= 1;
        }
        let unit = PadicInt { p, word: expand(p, num, den) };
        Ok(PadicNumber::new(unit, v))
    }

    pub fn from_padic_rational(r: &PadicRational) -> Self {
        PadicNumber::from_rational(r.prime(), &r.to_rational()).expect("prime already validated")
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn unit(&self) -> &PadicInt {
        &self.unit
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    /// `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.valuation)
        }
    }

    pub fn to_rational(&self) -> BigRational {
        let u = self.unit.to_rational();
        if self.valuation >= 0 {
            u * BigRational::from(pow_p(self.p, self.valuation as u32))
        } else {
            u / BigRational::from(pow_p(self.p, (-self.valuation) as u32))
        }
    }

    /// Digit at position `j` of the full expansion (position 0 is the
    /// `p^0` digit; negative positions index the fractional part).
    pub fn value_digit(&self, j: i64) -> u64 {
        if self.is_zero() || j < self.valuation {
            0
        } else {
            self.unit.digit((j - self.valuation) as usize)
        }
    }

    /// The digit word of the expansion read from position 0, defined for
    /// valuation >= 0 (i.e. for elements of `Z_p`).
    pub fn integer_digits(&self) -> Result<DigitWord> {
        if self.is_zero() {
            return Ok(DigitWord::zero());
        }
        if self.valuation < 0 {
            return Err(Error::NegativeValuation);
        }
        let mut pre = vec![0u64; self.valuation as usize];
        pre.extend_from_slice(self.unit.word.pre());
        Ok(DigitWord::new(pre, self.unit.word.per().to_vec()))
    }

    pub fn to_padic_int(&self) -> Result<PadicInt> {
        Ok(PadicInt { p: self.p, word: self.integer_digits()? })
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch { left: self.p, right: other.p });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        PadicNumber::from_rational(self.p, &(self.to_rational() + other.to_rational()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        PadicNumber::from_rational(self.p, &(self.to_rational() - other.to_rational()))
    }

    pub fn neg(&self) -> Self {
        PadicNumber::from_rational(self.p, &(-self.to_rational())).expect("same prime")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        PadicNumber::from_rational(self.p, &(self.to_rational() * other.to_rational()))
    }

    pub fn mul_rational(&self, c: &BigRational) -> Self {
        PadicNumber::from_rational(self.p, &(self.to_rational() * c)).expect("same prime")
    }

    /// Fractional part `{x}_p`: the sum of the negative-power terms of
    /// the expansion, as an exact rational in `[0,1)`.
    pub fn frac_part(&self) -> BigRational {
        if self.is_zero() || self.valuation >= 0 {
            return BigRational::zero();
        }
        let w = (-self.valuation) as u32;
        BigRational::new(self.unit.truncation(w as usize), pow_p(self.p, w))
    }
}

/// Multiplicative inverse in `Q_p`, by rational reconstruction, exact
/// inversion and re-expansion.
pub fn padic_invert(x: &PadicNumber) -> Result<PadicNumber> {
    if x.is_zero() {
        return Err(Error::ZeroInput("inverted p-adic number"));
    }
    PadicNumber::from_rational(x.prime(), &x.to_rational().recip())
}

/// `{x*q}_p` for `q = a/p^k` in `Z[1/p]`: the fractional part of the
/// product, read off a digit window of `x`.
///
/// Only the digits of `x` below position `k - v` (v the valuation)
/// contribute: with `x = p^v * u`, the product is `u*a / p^{k-v}` and
/// `{x*q}_p = (J_{k-v}(u) * a mod p^{k-v}) / p^{k-v}`.
pub fn frac_p(x: &PadicNumber, q: &PadicRational) -> Result<BigRational> {
    if x.prime() != q.prime() {
        return Err(Error::PrimeMismatch { left: x.prime(), right: q.prime() });
    }
    if x.is_zero() || q.is_zero() {
        return Ok(BigRational::zero());
    }
    let w = q.exp() as i64 - x.valuation;
    if w <= 0 {
        return Ok(BigRational::zero());
    }
    let modulus = pow_p(x.prime(), w as u32);
    let t = (x.unit.truncation(w as usize) * q.numer()).mod_floor(&modulus);
    Ok(BigRational::new(t, modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn expansion_round_trips() {
        // -1/62 in Z_5 has purely periodic digits 2,0,0.
        let x = PadicInt::from_rational(5, &rat(-1, 62)).unwrap();
        assert_eq!(x.word().pre(), &[] as &[u64]);
        assert_eq!(x.word().per(), &[2, 0, 0]);
        assert_eq!(x.to_rational(), rat(-1, 62));
        // -1 in Z_2 is all ones.
        let m = PadicInt::from_rational(2, &rat(-1, 1)).unwrap();
        assert_eq!(m.word().pre(), &[] as &[u64]);
        assert_eq!(m.word().per(), &[1]);
        // 1 terminates.
        let one = PadicInt::from_bigint(2, &BigInt::one()).unwrap();
        assert_eq!(one.word().pre(), &[1]);
        assert_eq!(one.word().per(), &[0]);
    }

    #[test]
    fn truncations_are_coherent() {
        let x = PadicInt::from_rational(5, &rat(-1, 62)).unwrap();
        // J_1 = 2, J_3 = 2, J_4 = 2 + 2*625
        assert_eq!(x.truncation(1), BigInt::from(2));
        assert_eq!(x.truncation(3), BigInt::from(2));
        assert_eq!(x.truncation(4), BigInt::from(2 + 2 * 625));
        for k in 0..8 {
            let a = x.truncation(k);
            let b = x.truncation(k + 1);
            assert!((b - a).mod_floor(&pow_p(5, k as u32)).is_zero());
        }
    }

    #[test]
    fn denominator_divisible_by_p_rejected() {
        assert!(matches!(
            PadicInt::from_rational(5, &rat(1, 10)),
            Err(Error::DenominatorDivisibleByP(_))
        ));
    }

    #[test]
    fn number_normalizes_valuation() {
        let x = PadicNumber::from_rational(3, &rat(18, 1)).unwrap();
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(x.unit().digit(0), 2);
        assert_eq!(x.to_rational(), rat(18, 1));
        let y = PadicNumber::from_rational(3, &rat(5, 27)).unwrap();
        assert_eq!(y.valuation(), Some(-3));
        assert_eq!(y.to_rational(), rat(5, 27));
    }

    #[test]
    fn invert_examples() {
        // 1^{-1} = 1
        let one = PadicNumber::one(5);
        assert_eq!(padic_invert(&one).unwrap(), one);
        // (-1)^{-1} = -1 with digits all 1 in Z_2
        let m = PadicNumber::from_rational(2, &rat(-1, 1)).unwrap();
        let inv = padic_invert(&m).unwrap();
        assert_eq!(inv, m);
        // (-1/62)^{-1} = -62 in Q_5, and the product expands to 1.
        let x = PadicNumber::from_rational(5, &rat(-1, 62)).unwrap();
        let inv = padic_invert(&x).unwrap();
        assert_eq!(inv.to_rational(), rat(-62, 1));
        let prod = x.mul(&inv).unwrap();
        assert_eq!(prod, PadicNumber::one(5));
        assert_eq!(prod.unit().word().pre(), &[1]);
        assert_eq!(prod.unit().word().per(), &[0]);
        // Inverting zero fails.
        assert!(padic_invert(&PadicNumber::zero(5)).is_err());
    }

    #[test]
    fn frac_examples() {
        // {p^{-n}}_p = p^{-n} for x = 1.
        let one = PadicNumber::one(3);
        for n in 1..5u32 {
            let q = PadicRational::new(3, 1, n).unwrap();
            assert_eq!(frac_p(&one, &q).unwrap(), BigRational::new(BigInt::one(), pow_p(3, n)));
        }
        // p=2, x=-1 (all ones), q=1/8: {-1/8}_2 = 7/8.
        let m = PadicNumber::from_rational(2, &rat(-1, 1)).unwrap();
        let q = PadicRational::new(2, 1, 3).unwrap();
        assert_eq!(frac_p(&m, &q).unwrap(), rat(7, 8));
        // p=5, x=-1/62 (digits 2,0,0 repeating), q=1/5: J_1 = 2, so 2/5.
        let x = PadicNumber::from_rational(5, &rat(-1, 62)).unwrap();
        let q = PadicRational::new(5, 1, 1).unwrap();
        assert_eq!(frac_p(&x, &q).unwrap(), rat(2, 5));
    }

    #[test]
    fn frac_prime_mismatch() {
        let x = PadicNumber::one(3);
        let q = PadicRational::new(5, 1, 1).unwrap();
        assert!(matches!(frac_p(&x, &q), Err(Error::PrimeMismatch { .. })));
    }

    #[test]
    fn digit_subtraction_matches_rationals() {
        let cases = [
            (rat(1, 1), rat(0, 1)),
            (rat(-1, 62), rat(0, 1)),
            (rat(-1, 62), rat(1, 1)),
            (rat(3, 7), rat(22, 1)),
            (rat(-5, 3), rat(4, 21)),
        ];
        for (a, b) in cases {
            let ja = PadicInt::from_rational(5, &a).unwrap();
            let jb = PadicInt::from_rational(5, &b).unwrap();
            let d = ja.sub(&jb).unwrap();
            assert_eq!(d.to_rational(), &a - &b, "{a} - {b}");
        }
    }

    #[test]
    fn integer_tail_detection() {
        let five = PadicInt::from_bigint(7, &BigInt::from(5)).unwrap();
        assert!(five.is_integer());
        let neg = PadicInt::from_bigint(7, &BigInt::from(-13)).unwrap();
        assert!(neg.is_integer());
        let frac = PadicInt::from_rational(7, &rat(1, 2)).unwrap();
        assert!(!frac.is_integer());
    }
}
