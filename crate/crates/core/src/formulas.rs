//! Closed-form classes of Prym-Brill-Noether loci and the Chern data that
//! feeds the degeneracy-locus engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, int, pow2, ratio, triangular};
use crate::error::{Error, Result};
use crate::sequence::VanishingSequence;
use crate::theta_ring::{Generator, PrymSpace, ThetaClass};

/// Truncated total Chern class `1 + q_1 θ + q_2 θ^2 + ... + q_N θ^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernSeries {
    coeffs: Vec<BigRational>,
}

impl ChernSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        match coeffs.first() {
            Some(q0) if q0.is_one() => Ok(Self { coeffs }),
            Some(q0) => Err(Error::Parameter(format!("Chern series must start with 1, got {q0}"))),
            None => Err(Error::Parameter("empty Chern series".into())),
        }
    }

    /// Highest stored index `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn get(&self, i: usize) -> Result<&BigRational> {
        self.coeffs.get(i).ok_or(Error::Truncation { needed: i, available: self.order() })
    }
}

/// Chern classes of the dual of the Lagrangian subbundle `W`:
/// `c_i(W^∨) = θ'^i / i!`.
pub fn chern_series_w(order: usize) -> ChernSeries {
    let coeffs = (0..=order)
        .map(|i| BigRational::new(BigInt::one(), factorial(i as u32)))
        .collect();
    ChernSeries { coeffs }
}

/// `prod_{i=1}^{m} i!/(2i)!`.
pub(crate) fn half_factorial_product(m: u32) -> BigRational {
    (1..=m).fold(BigRational::one(), |acc, i| {
        acc * BigRational::new(factorial(i), factorial(2 * i))
    })
}

/// `[V^r_eta(f)] = prod_{i=1}^{r+1} i!/(2i)! · θ'^{(r+1)(r+2)/2}`.
pub fn twisted_class(r: u32) -> ThetaClass {
    ThetaClass::new(half_factorial_product(r + 1), triangular(r + 1), Generator::ThetaPrime)
}

/// `[V^a_eta(f,p)] = prod 1/(a_i+1)! · prod_{j<i} (a_i-a_j)/(a_i+a_j+2) · θ'^{|a|+r+1}`.
pub fn twisted_pointed_class(a: &VanishingSequence) -> ThetaClass {
    let e = a.entries();
    let mut coeff = BigRational::one();
    for (i, &ai) in e.iter().enumerate() {
        coeff /= int(factorial(ai + 1));
        for &aj in &e[..i] {
            coeff *= ratio(ai - aj, ai + aj + 2);
        }
    }
    let exponent = a.weight() as u32 + a.rank() + 1;
    ThetaClass::new(coeff, exponent, Generator::ThetaPrime)
}

/// `[V^r(f)] = 2^{r(r+1)/2} prod_{i=1}^{r} i!/(2i)! · ξ^{r(r+1)/2}` on `P±`.
pub fn unramified_class(r: u32) -> ThetaClass {
    let e = triangular(r);
    let coeff = int(pow2(e)) * half_factorial_product(r);
    ThetaClass::new(coeff, e, Generator::Xi)
}

/// Number of points of a zero-dimensional locus with the given class.
/// A non-integral degree is reported as an invariant violation, never
/// rounded.
pub fn count_points(class: &ThetaClass, space: &PrymSpace) -> Result<BigInt> {
    let deg = class.degree(space)?;
    if !deg.is_integer() {
        return Err(Error::InvariantViolation(format!(
            "degree {deg} of {class} on a {}-dimensional space is not an integer",
            space.dim()
        )));
    }
    if deg.is_zero() && !class.is_zero() {
        return Err(Error::InvariantViolation(format!("non-zero class {class} has degree 0")));
    }
    Ok(deg.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta_ring::SpaceFlavor;

    fn seq(v: &[u32]) -> VanishingSequence {
        VanishingSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn chern_w() {
        let c = chern_series_w(3);
        assert_eq!(c.coeffs(), &[int(1), int(1), ratio(1, 2), ratio(1, 6)]);
        assert_eq!(chern_series_w(0).coeffs(), &[int(1)]);
        assert_eq!(c.get(2).unwrap().to_string(), "1/2");
        assert_eq!(c.get(4), Err(Error::Truncation { needed: 4, available: 3 }));
        assert!(ChernSeries::new(vec![int(2)]).is_err());
        assert!(ChernSeries::new(vec![]).is_err());
    }

    #[test]
    fn twisted_examples() {
        let tp = |n, d, e| ThetaClass::new(ratio(n, d), e, Generator::ThetaPrime);
        assert_eq!(twisted_class(0), tp(1, 2, 1));
        assert_eq!(twisted_class(1), tp(1, 24, 3));
        assert_eq!(twisted_class(2), tp(1, 2880, 6));
        assert_eq!(twisted_pointed_class(&seq(&[0, 1])), tp(1, 6, 3));
        assert_eq!(twisted_pointed_class(&seq(&[0, 2])), tp(1, 12, 4));
        assert_eq!(twisted_pointed_class(&seq(&[0, 1, 2])), tp(1, 360, 6));
    }

    #[test]
    fn unramified_examples() {
        let xi = |n, d, e| ThetaClass::new(ratio(n, d), e, Generator::Xi);
        assert_eq!(unramified_class(0), xi(1, 1, 0));
        assert_eq!(unramified_class(1), xi(1, 1, 1));
        assert_eq!(unramified_class(2), xi(1, 3, 3));
    }

    #[test]
    fn count_examples() {
        let k1 = |g| PrymSpace::new(SpaceFlavor::RamifiedTwisted, g, 1).unwrap();
        assert_eq!(count_points(&twisted_class(1), &k1(3)).unwrap(), BigInt::from(2));
        assert_eq!(count_points(&twisted_class(2), &k1(6)).unwrap(), BigInt::from(16));
        let k2 = PrymSpace::new(SpaceFlavor::RamifiedTwisted, 2, 2).unwrap();
        assert_eq!(count_points(&twisted_class(1), &k2).unwrap(), BigInt::from(1));
        assert!(matches!(
            count_points(&twisted_class(1), &k1(4)),
            Err(Error::DimensionMismatch { .. })
        ));
        let odd = ThetaClass::new(ratio(1, 96), 3, Generator::ThetaPrime);
        assert!(matches!(count_points(&odd, &k1(3)), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn pointed_trivial_sequence_relation() {
        for r in 0..=10 {
            let pointed = twisted_pointed_class(&VanishingSequence::trivial(r));
            let unpointed = twisted_class(r);
            assert_eq!(pointed.exponent(), unpointed.exponent());
            assert_eq!(pointed.coeff(), &(unpointed.coeff() * int(pow2(r + 1))));
        }
    }

    #[test]
    fn counts_are_positive_integers_at_dimension_zero() {
        for r in 0..=5u32 {
            let t = triangular(r + 1);
            // k = 1 at g = T(r+1), k = 2 at g = T(r+1) - 1 (genus must stay positive).
            for (k, g) in [(1, t), (2, t - 1)] {
                if g == 0 {
                    continue;
                }
                let space = PrymSpace::new(SpaceFlavor::RamifiedTwisted, g, k).unwrap();
                let n = count_points(&twisted_class(r), &space).unwrap();
                assert!(n > BigInt::zero(), "k={k} r={r}");
            }
        }
    }
}
