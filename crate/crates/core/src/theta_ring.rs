//! Numerical classes on a Prym torsor, restricted to the line spanned by the
//! powers of a single theta class.
//!
//! Two torsors occur:
//! - `P±`, the two components of the norm fibre over `omega_C` for an
//!   unramified cover. Each is a translate of a principally polarized abelian
//!   variety of dimension `g - 1` with theta class `xi`, so
//!   `deg(xi^(g-1)) = (g-1)!`.
//! - `P`, the fibre over `omega_C ⊗ eta` for a cover branched at `2k` points,
//!   with `theta'` the restriction of the theta divisor of the Picard variety
//!   of `C~`. Its top self-intersection is `2^g g!` for `k = 1` and
//!   `2^g (g+1)!` for `k = 2`; for `k = 0` it is not known here.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, format_ratio, pow2};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceFlavor {
    /// `P±` for an unramified cover, generator `xi`.
    UnramifiedPm,
    /// `P` for the twist by `eta`, generator `theta'`.
    RamifiedTwisted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    ThetaPrime,
    Xi,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::ThetaPrime => "theta_prime",
            Generator::Xi => "xi",
        }
    }
}

impl SpaceFlavor {
    pub fn name(self) -> &'static str {
        match self {
            SpaceFlavor::UnramifiedPm => "unramified_pm",
            SpaceFlavor::RamifiedTwisted => "ramified_twisted",
        }
    }

    pub fn generator(self) -> Generator {
        match self {
            SpaceFlavor::UnramifiedPm => Generator::Xi,
            SpaceFlavor::RamifiedTwisted => Generator::ThetaPrime,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrymSpace {
    flavor: SpaceFlavor,
    g: u32,
    k: u32,
    dim: u32,
    theta_top: Option<BigInt>,
}

impl PrymSpace {
    /// Builds the torsor for base genus `g` and `2k` branch points.
    pub fn new(flavor: SpaceFlavor, g: u32, k: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::Parameter("genus must be positive".into()));
        }
        let (dim, theta_top) = match (flavor, k) {
            (SpaceFlavor::UnramifiedPm, 0) => (g - 1, Some(factorial(g - 1))),
            (SpaceFlavor::RamifiedTwisted, 0) => (g - 1, None),
            (SpaceFlavor::RamifiedTwisted, 1) => (g, Some(pow2(g) * factorial(g))),
            (SpaceFlavor::RamifiedTwisted, 2) => (g + 1, Some(pow2(g) * factorial(g + 1))),
            _ => {
                return Err(Error::Parameter(format!(
                    "no {} space with k = {k}",
                    flavor.name()
                )))
            }
        };
        Ok(Self { flavor, g, k, dim, theta_top })
    }

    pub fn flavor(&self) -> SpaceFlavor {
        self.flavor
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Degree of `generator^dim`, when known.
    pub fn theta_top(&self) -> Option<&BigInt> {
        self.theta_top.as_ref()
    }
}

/// `coeff * generator^exponent`. The zero class always has exponent 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaClass {
    coeff: BigRational,
    exponent: u32,
    generator: Generator,
}

impl ThetaClass {
    pub fn new(coeff: BigRational, exponent: u32, generator: Generator) -> Self {
        let exponent = if coeff.is_zero() { 0 } else { exponent };
        Self { coeff, exponent, generator }
    }

    pub fn one(generator: Generator) -> Self {
        Self::new(BigRational::one(), 0, generator)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn multiply(&self, other: &ThetaClass) -> Result<ThetaClass> {
        if self.generator != other.generator {
            return Err(Error::GeneratorMismatch {
                left: self.generator.name(),
                right: other.generator.name(),
            });
        }
        Ok(ThetaClass::new(
            &self.coeff * &other.coeff,
            self.exponent + other.exponent,
            self.generator,
        ))
    }

    /// Degree of a top-dimensional class. The zero class has degree 0 on any
    /// space.
    pub fn degree(&self, space: &PrymSpace) -> Result<BigRational> {
        if self.generator != space.flavor.generator() {
            return Err(Error::GeneratorMismatch {
                left: self.generator.name(),
                right: space.flavor.generator().name(),
            });
        }
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if self.exponent != space.dim {
            return Err(Error::DimensionMismatch { exponent: self.exponent, dim: space.dim });
        }
        let top = space.theta_top.as_ref().ok_or_else(|| {
            Error::UnsupportedSpace(format!(
                "top self-intersection of theta' is not available for {} with k = {}",
                space.flavor.name(),
                space.k
            ))
        })?;
        Ok(&self.coeff * BigRational::from_integer(top.clone()))
    }

    /// Rewrites a `theta'` class in terms of `xi` using `theta' = 2 xi` on `P±`.
    pub fn theta_prime_as_2xi(&self) -> Result<ThetaClass> {
        if self.generator != Generator::ThetaPrime {
            return Err(Error::GeneratorMismatch {
                left: self.generator.name(),
                right: Generator::ThetaPrime.name(),
            });
        }
        let scale = BigRational::from_integer(pow2(self.exponent));
        Ok(ThetaClass::new(&self.coeff * scale, self.exponent, Generator::Xi))
    }
}

impl fmt::Display for ThetaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.generator {
            Generator::ThetaPrime => "θ'",
            Generator::Xi => "ξ",
        };
        write!(f, "{} · {}^{}", format_ratio(&self.coeff), sym, self.exponent)
    }
}
