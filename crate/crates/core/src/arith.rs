//! Small exact-arithmetic helpers shared across modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `T(n) = n(n+1)/2`.
pub fn triangular(n: u32) -> u32 {
    n * (n + 1) / 2
}

/// Reduced `p/q` form, always with an explicit denominator.
pub fn format_ratio(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(21).to_string(), "51090942171709440000");
    }

    #[test]
    fn ratio_is_reduced() {
        assert_eq!(format_ratio(&ratio(6, 36)), "1/6");
        assert_eq!(format_ratio(&int(3)), "3/1");
        assert_eq!(format_ratio(&ratio(2, -4)), "-1/2");
    }
}
