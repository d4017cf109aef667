//! Eventually periodic digit words.
//!
//! A word is a finite preperiod followed by a repeating period, read as
//! an infinite sequence of digits.  Words are kept in canonical form:
//! minimal period first, then minimal preperiod.  Canonical form makes
//! equality, shifting and periodicity questions finite inspections.

use std::fmt;

/// An eventually periodic infinite digit sequence `pre ++ per ++ per ++ ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitWord {
    pre: Vec<u64>,
    per: Vec<u64>,
}

impl DigitWord {
    /// Builds the canonical form of `pre ++ per^infinity`.
    ///
    /// Panics if `per` is empty; an infinite word always has a period.
    pub fn new(pre: Vec<u64>, per: Vec<u64>) -> Self {
        assert!(!per.is_empty(), "period of a digit word must be nonempty");
        let mut word = DigitWord { pre, per };
        word.canonicalize();
        word
    }

    /// The all-zero word.
    pub fn zero() -> Self {
        DigitWord { pre: Vec::new(), per: vec![0] }
    }

    pub fn is_zero(&self) -> bool {
        self.pre.is_empty() && self.per == [0]
    }

    pub fn pre(&self) -> &[u64] {
        &self.pre
    }

    pub fn per(&self) -> &[u64] {
        &self.per
    }

    /// Digit at position `j` of the infinite sequence.
    pub fn digit(&self, j: usize) -> u64 {
        if j < self.pre.len() {
            self.pre[j]
        } else {
            self.per[(j - self.pre.len()) % self.per.len()]
        }
    }

    /// All digits occurring anywhere in the word.
    pub fn iter_support(&self) -> impl Iterator<Item = u64> + '_ {
        self.pre.iter().chain(self.per.iter()).copied()
    }

    /// Index of the first digit satisfying `f`, if any.
    pub fn position(&self, f: impl Fn(u64) -> bool) -> Option<usize> {
        (0..self.pre.len() + self.per.len()).find(|&j| f(self.digit(j)))
    }

    /// The word with the first `k` digits removed.
    pub fn shift(&self, k: usize) -> Self {
        if k <= self.pre.len() {
            DigitWord::new(self.pre[k..].to_vec(), self.per.clone())
        } else {
            let m = (k - self.pre.len()) % self.per.len();
            let mut per = self.per[m..].to_vec();
            per.extend_from_slice(&self.per[..m]);
            DigitWord::new(Vec::new(), per)
        }
    }

    /// Applies `f` to every digit.
    pub fn map(&self, f: impl Fn(u64) -> u64) -> Self {
        DigitWord::new(
            self.pre.iter().map(|&d| f(d)).collect(),
            self.per.iter().map(|&d| f(d)).collect(),
        )
    }

    fn canonicalize(&mut self) {
        // Minimal period divides the stored one.
        let n = self.per.len();
        for d in 1..n {
            if n % d == 0 && (0..n).all(|i| self.per[i] == self.per[i % d]) {
                self.per.truncate(d);
                break;
            }
        }
        // Absorb preperiod digits that already follow the period.
        while let Some(&last) = self.pre.last() {
            if last == *self.per.last().expect("period nonempty") {
                self.pre.pop();
                self.per.rotate_right(1);
            } else {
                break;
            }
        }
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pre: Vec<String> = self.pre.iter().map(|d| d.to_string()).collect();
        let per: Vec<String> = self.per.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}({})...]", pre.join(","), per.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_minimal_period() {
        let w = DigitWord::new(vec![], vec![2, 0, 2, 0]);
        assert_eq!(w.per(), &[2, 0]);
        let w = DigitWord::new(vec![], vec![1, 1, 1]);
        assert_eq!(w.per(), &[1]);
    }

    #[test]
    fn canonical_minimal_preperiod() {
        // 1,0,1,0,... is purely periodic with period [1,0].
        let w = DigitWord::new(vec![1], vec![0, 1]);
        assert_eq!(w.pre(), &[] as &[u64]);
        assert_eq!(w.per(), &[1, 0]);
        // 2,0,0,0,... keeps its preperiod.
        let w = DigitWord::new(vec![2], vec![0]);
        assert_eq!(w.pre(), &[2]);
        assert_eq!(w.per(), &[0]);
    }

    #[test]
    fn digits_and_shift() {
        let w = DigitWord::new(vec![3], vec![1, 2]);
        let first: Vec<u64> = (0..6).map(|j| w.digit(j)).collect();
        assert_eq!(first, vec![3, 1, 2, 1, 2, 1]);
        let s = w.shift(2);
        let first: Vec<u64> = (0..4).map(|j| s.digit(j)).collect();
        assert_eq!(first, vec![2, 1, 2, 1]);
        assert_eq!(w.shift(0), w);
    }

    #[test]
    fn shift_inside_period() {
        let w = DigitWord::new(vec![], vec![2, 0, 0]);
        let s = w.shift(4);
        assert_eq!((0..6).map(|j| s.digit(j)).collect::<Vec<_>>(), vec![0, 0, 2, 0, 0, 2]);
    }
}
