//! Classes of Lagrangian degeneracy loci as Schur Q~-polynomials in the Chern
//! classes of the isotropic subbundle.
//!
//! For a strict partition `λ` the two-part values are
//!
//! ```text
//! Q~(a,b) = c_a c_b + 2 Σ_{j=1}^{b} (-1)^j c_{a+j} c_{b-j},   Q~(a,0) = c_a,
//! ```
//!
//! and longer partitions (padded with one zero part to even length) are the
//! Pfaffian of the antisymmetric matrix of these values. `P~λ = Q~λ / 2^ℓ(λ)`.
//! With `c_i = θ'^i / i!` every `Q~λ` is a rational multiple of `θ'^|λ|`.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, int, pow2, ratio};
use crate::error::{Error, Result};
use crate::formulas::{chern_series_w, ChernSeries};
use crate::sequence::VanishingSequence;
use crate::theta_ring::{Generator, ThetaClass};

/// Strictly decreasing positive parts `λ_1 > λ_2 > ... > λ_ℓ > 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Parameter(format!(
                "{parts:?} is not a strictly decreasing sequence of positive parts"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(m, m-1, ..., 1)`.
    pub fn staircase(m: u32) -> Self {
        Self((1..=m).rev().collect())
    }

    /// `λ_i = a_{r-i} + 1`, the degeneracy ranks of the pointed locus.
    pub fn from_vanishing(a: &VanishingSequence) -> Self {
        Self(a.entries().iter().rev().map(|&x| x + 1).collect())
    }

    /// Inverse of [`StrictPartition::from_vanishing`]; `None` for the empty
    /// partition.
    pub fn to_vanishing(&self) -> Option<VanishingSequence> {
        if self.0.is_empty() {
            return None;
        }
        let entries = self.0.iter().rev().map(|&x| x - 1).collect();
        Some(VanishingSequence::new(entries).expect("strict parts give a strict sequence"))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All strict partitions of `n`, in reverse lexicographic order of parts.
    pub fn of_weight(n: u32) -> Vec<StrictPartition> {
        fn go(remaining: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if remaining == 0 {
                out.push(StrictPartition(acc.clone()));
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                acc.push(p);
                go(remaining - p, p - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All non-empty strict partitions of weight at most `n`.
    pub fn up_to_weight(n: u32) -> Vec<StrictPartition> {
        (1..=n).flat_map(StrictPartition::of_weight).collect()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Q~ evaluator for a fixed Chern series, memoizing sub-Pfaffians.
pub struct PfaffianEngine {
    chern: ChernSeries,
    memo: HashMap<Vec<u32>, BigRational>,
}

impl PfaffianEngine {
    pub fn new(chern: ChernSeries) -> Self {
        Self { chern, memo: HashMap::new() }
    }

    pub fn chern(&self) -> &ChernSeries {
        &self.chern
    }

    fn check_order(&self, needed: u32) -> Result<()> {
        if (needed as usize) > self.chern.order() {
            return Err(Error::Truncation { needed: needed as usize, available: self.chern.order() });
        }
        Ok(())
    }

    /// `Q~(a,b)` for `a > b >= 0`.
    pub fn q_two(&self, a: u32, b: u32) -> Result<BigRational> {
        if a <= b {
            return Err(Error::Parameter(format!("Q~({a},{b}) needs a > b")));
        }
        self.check_order(a + b)?;
        let c = |i: u32| self.chern.get(i as usize);
        let mut acc = c(a)? * c(b)?;
        for j in 1..=b {
            let term = c(a + j)? * c(b - j)? * int(2);
            if j % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        Ok(acc)
    }

    /// Entry `(i, j)` of the antisymmetric matrix on `parts`.
    fn entry(&self, parts: &[u32], i: usize, j: usize) -> Result<BigRational> {
        if i < j {
            self.q_two(parts[i], parts[j])
        } else {
            Ok(-self.q_two(parts[j], parts[i])?)
        }
    }

    fn padded(parts: &[u32]) -> Vec<u32> {
        let mut v = parts.to_vec();
        if v.len() % 2 == 1 {
            v.push(0);
        }
        v
    }

    /// `Q~λ` as a rational multiple of `θ^|λ|`.
    pub fn q_tilde(&mut self, lambda: &StrictPartition) -> Result<BigRational> {
        self.check_order(lambda.weight())?;
        self.pfaffian(&Self::padded(lambda.parts()))
    }

    /// `Q~λ` computed by expanding the Pfaffian along `row` (0-based, in the
    /// zero-padded matrix) instead of the first row.
    pub fn q_tilde_along_row(&mut self, lambda: &StrictPartition, row: usize) -> Result<BigRational> {
        self.check_order(lambda.weight())?;
        let parts = Self::padded(lambda.parts());
        if parts.is_empty() {
            return Ok(BigRational::one());
        }
        if row >= parts.len() {
            return Err(Error::Parameter(format!(
                "row {row} out of range for a {0}x{0} Pfaffian",
                parts.len()
            )));
        }
        let mut acc = BigRational::zero();
        for j in (0..parts.len()).filter(|&j| j != row) {
            // (-1)^{i+j+1+[i>j]} in 0-based indices
            let odd = (row + j + 1 + usize::from(row > j)) % 2 == 1;
            let minor = Self::without(&parts, row, j);
            let term = self.entry(&parts, row, j)? * self.pfaffian(&minor)?;
            if odd {
                acc -= term;
            } else {
                acc += term;
            }
        }
        Ok(acc)
    }

    fn without(parts: &[u32], i: usize, j: usize) -> Vec<u32> {
        parts
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != i && t != j)
            .map(|(_, &p)| p)
            .collect()
    }

    /// Pfaffian of an even-length decreasing part list (a trailing 0 allowed).
    fn pfaffian(&mut self, parts: &[u32]) -> Result<BigRational> {
        match parts.len() {
            0 => return Ok(BigRational::one()),
            2 => return self.q_two(parts[0], parts[1]),
            _ => {}
        }
        if let Some(v) = self.memo.get(parts) {
            return Ok(v.clone());
        }
        let mut acc = BigRational::zero();
        for j in 1..parts.len() {
            let minor = Self::without(parts, 0, j);
            let term = self.q_two(parts[0], parts[j])? * self.pfaffian(&minor)?;
            // 0-based j odd ⇔ 1-based index even ⇔ sign +
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        self.memo.insert(parts.to_vec(), acc.clone());
        Ok(acc)
    }
}

/// `Q~(a,b)` evaluated at `c`, as a class of exponent `a + b`.
pub fn q_two(a: u32, b: u32, c: &ChernSeries) -> Result<ThetaClass> {
    let engine = PfaffianEngine::new(c.clone());
    Ok(ThetaClass::new(engine.q_two(a, b)?, a + b, Generator::ThetaPrime))
}

/// `Q~λ` evaluated at `c`.
pub fn q_tilde(lambda: &StrictPartition, c: &ChernSeries) -> Result<ThetaClass> {
    let mut engine = PfaffianEngine::new(c.clone());
    Ok(ThetaClass::new(engine.q_tilde(lambda)?, lambda.weight(), Generator::ThetaPrime))
}

/// `P~λ = Q~λ / 2^ℓ(λ)`, with `ℓ` counting only non-zero parts.
pub fn p_tilde(lambda: &StrictPartition, c: &ChernSeries) -> Result<ThetaClass> {
    let q = q_tilde(lambda, c)?;
    let coeff = q.coeff() / int(pow2(lambda.len() as u32));
    Ok(ThetaClass::new(coeff, q.exponent(), q.generator()))
}

/// Class of `V^a_eta(f,p)` as the type C degeneracy class `Q~_{a+1}` at the
/// Chern data of `W^∨`.
pub fn lagrangian_class_pointed(a: &VanishingSequence) -> ThetaClass {
    let lambda = StrictPartition::from_vanishing(a);
    let c = chern_series_w(lambda.weight() as usize);
    q_tilde(&lambda, &c).expect("series is sized to the partition")
}

/// `prod 1/λ_i! · prod_{i<j} (λ_i - λ_j)/(λ_i + λ_j)`, the closed-form value of
/// `Q~λ` at `c_i = 1/i!`.
pub fn eval_identity(lambda: &StrictPartition) -> BigRational {
    let p = lambda.parts();
    let mut acc = BigRational::one();
    for (i, &li) in p.iter().enumerate() {
        acc /= int(factorial(li));
        for &lj in &p[i + 1..] {
            acc *= ratio(li - lj, li + lj);
        }
    }
    acc
}
