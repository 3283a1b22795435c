//! Vanishing sequences `0 <= a_0 < a_1 < ... < a_r`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Orders of vanishing imposed at a marked point. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VanishingSequence(Vec<u32>);

impl VanishingSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parameter("vanishing sequence must be non-empty".into()));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parameter(format!(
                "vanishing sequence {entries:?} is not strictly increasing"
            )));
        }
        Ok(Self(entries))
    }

    /// `(0, 1, ..., r)`, the sequence that imposes no condition beyond rank.
    pub fn trivial(r: u32) -> Self {
        Self((0..=r).collect())
    }

    /// `(start, start + step, ..., start + r*step)`; `step` must be positive.
    pub fn arithmetic(start: u32, step: u32, r: u32) -> Self {
        assert!(step > 0, "arithmetic vanishing sequence needs a positive step");
        Self((0..=r).map(|i| start + step * i).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> u32 {
        (self.0.len() - 1) as u32
    }

    pub fn last(&self) -> u32 {
        *self.0.last().expect("non-empty")
    }

    /// `|a| = sum a_i`.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    /// `sum (a_i - i)`, the ramification weight.
    pub fn ramification(&self) -> u64 {
        self.weight() - u64::from(crate::arith::triangular(self.rank()))
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &a)| a as usize == i)
    }

    pub fn all_same_parity(&self) -> bool {
        self.0.iter().all(|a| a % 2 == self.0[0] % 2)
    }

    pub fn min_gap(&self) -> Option<u32> {
        self.0.windows(2).map(|w| w[1] - w[0]).min()
    }
}

impl fmt::Display for VanishingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Parses `0,2,5`, optionally wrapped in parentheses.
impl FromStr for VanishingSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parameter(format!("bad vanishing order {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_increasing() {
        assert!(VanishingSequence::new(vec![1, 1]).is_err());
        assert!(VanishingSequence::new(vec![3, 2]).is_err());
        assert!(VanishingSequence::new(vec![]).is_err());
    }

    #[test]
    fn derived_quantities() {
        let a = VanishingSequence::new(vec![3, 5]).unwrap();
        assert_eq!(a.rank(), 1);
        assert_eq!(a.weight(), 8);
        assert_eq!(a.ramification(), 7);
        assert!(a.all_same_parity());
        assert_eq!(a.min_gap(), Some(2));
        assert!(VanishingSequence::trivial(4).is_trivial());
        assert_eq!(VanishingSequence::trivial(0).min_gap(), None);
    }

    #[test]
    fn parse_and_display() {
        let a: VanishingSequence = "0, 2,5".parse().unwrap();
        assert_eq!(a.to_string(), "(0,2,5)");
        assert_eq!("(0,2,5)".parse::<VanishingSequence>().unwrap(), a);
        assert!("0,x".parse::<VanishingSequence>().is_err());
        assert!("2,1".parse::<VanishingSequence>().is_err());
    }
}
