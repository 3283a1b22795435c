//! Brill-Noether numbers and expected-dimension reports for the
//! Prym-Brill-Noether loci `V^r(f)`, `V^r_eta(f)`, their pointed versions and
//! their twists by a generic effective divisor `D` of degree `d`.

use crate::error::{Error, Result};
use crate::sequence::VanishingSequence;

/// `rho(g, r, d) = g - (r+1)(g - d + r)`. Signed and never clamped.
pub fn rho(g: u32, r: u32, d: u32) -> i64 {
    let (g, r, d) = (i64::from(g), i64::from(r), i64::from(d));
    g - (r + 1) * (g - d + r)
}

/// Adjusted Brill-Noether number `rho(g, r, d) - sum (a_i - i)` of a `g^r_d`
/// with vanishing sequence `a` at a point.
pub fn rho_pointed(g: u32, r: u32, d: u32, a: &VanishingSequence) -> Result<i64> {
    if a.rank() != r {
        return Err(Error::Parameter(format!(
            "vanishing sequence {a} has {} entries, rank {r} needs {}",
            a.rank() + 1,
            r + 1
        )));
    }
    Ok(rho(g, r, d) - a.ramification() as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    TheoremExact,
    LowerBoundOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emptiness {
    Empty,
    Nonempty,
    Unknown,
}

impl Exactness {
    pub fn name(self) -> &'static str {
        match self {
            Exactness::TheoremExact => "theorem_exact",
            Exactness::LowerBoundOnly => "lower_bound_only",
        }
    }
}

impl Emptiness {
    pub fn name(self) -> &'static str {
        match self {
            Emptiness::Empty => "empty",
            Emptiness::Nonempty => "nonempty",
            Emptiness::Unknown => "unknown",
        }
    }
}

/// An expected-dimension verdict together with the result it rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimReport {
    pub value: i64,
    pub exactness: Exactness,
    pub emptiness: Emptiness,
    pub source: &'static str,
}

impl DimReport {
    /// Exact dimension; empty below zero, `nonempty_proved` decides the
    /// verdict at or above zero.
    fn exact(value: i64, nonempty_proved: bool, source: &'static str) -> Self {
        let emptiness = match (value < 0, nonempty_proved) {
            (true, _) => Emptiness::Empty,
            (false, true) => Emptiness::Nonempty,
            (false, false) => Emptiness::Unknown,
        };
        Self { value, exactness: Exactness::TheoremExact, emptiness, source }
    }

    /// A lower bound proves nothing about emptiness in either direction.
    fn lower_bound(value: i64, source: &'static str) -> Self {
        Self { value, exactness: Exactness::LowerBoundOnly, emptiness: Emptiness::Unknown, source }
    }
}

const KANEV_BOUND: &str = "Kanev: every component of V^r(f) for f in R_{g,2k} has dimension at least g-1+k-k(r+1)-r(r+1)/2";
const UNRAMIFIED_DIM: &str = "V^r(f) for generic f in R_g: dimension g-1-r(r+1)/2 (Welters, Bertram; recovered from Prym limits over Delta_1), empty when negative";
const RAMIFIED_DIM: &str = "V^r(f) for generic f in R_{g,2}: dimension g-(r+1)(r+2)/2, non-empty when non-negative";
const TWISTED_DIM: &str = "V^r_eta(f) for generic f in R_{g,2k}, k<=2: dimension g+k-1-(r+1)(r+2)/2; non-empty when non-negative for k=1,2";
const TWISTED_UNRAMIFIED_DIM: &str = "V^r_eta(f) for generic f in R_g: dimension g-1-(r+1)(r+2)/2 by degeneration to Delta_0^ram";
const POINTED_TWISTED_DIM: &str = "V^a_eta(f,p) for generic f in R_{g,2k}, k<=2, generic p: dimension g+k-r-2-|a|, empty when negative (coupled Gieseker-Petri)";
const DIVISOR_DIM: &str = "V^r(f,D) for generic f in R_g and generic D of degree d: all components of dimension g-1-r(r+1)/2-d(r+1), empty when negative";
const DIVISOR_KANEV_BOUND: &str = "Kanev: V^r(f,D) for f in R_{g,2k} has dimension at least g-1+k-(d+k)(r+1)-r(r+1)/2";
const TWISTED_DIVISOR_DIM: &str = "V^r_eta(f,D) for generic f in R_{g,2k}, k<=2, generic D of degree d: dimension g-1+k-(r+1)(r+2)/2-d(r+1), empty when negative";

fn tri(n: u32) -> i64 {
    i64::from(crate::arith::triangular(n))
}

fn check_genus(g: u32) -> Result<()> {
    if g == 0 {
        return Err(Error::Parameter("genus must be positive".into()));
    }
    Ok(())
}

fn check_twist_k(k: u32) -> Result<()> {
    if k > 2 {
        return Err(Error::UnsupportedSpace(format!(
            "twisted loci are only treated for at most 4 branch points, got k = {k}"
        )));
    }
    Ok(())
}

/// `V^r(f)` for a cover branched at `2k` points.
pub fn expected_dim_v(g: u32, k: u32, r: u32) -> Result<DimReport> {
    check_genus(g)?;
    let (g64, k64, r64) = (i64::from(g), i64::from(k), i64::from(r));
    let value = g64 - 1 + k64 - k64 * (r64 + 1) - tri(r);
    Ok(match k {
        0 => DimReport::exact(value, true, UNRAMIFIED_DIM),
        1 => DimReport::exact(value, true, RAMIFIED_DIM),
        _ => DimReport::lower_bound(value, KANEV_BOUND),
    })
}

/// `V^r_eta(f)`, line bundles of norm `omega_C ⊗ eta` with `r+1` sections.
pub fn expected_dim_v_eta(g: u32, k: u32, r: u32) -> Result<DimReport> {
    check_genus(g)?;
    check_twist_k(k)?;
    let value = i64::from(g) + i64::from(k) - 1 - tri(r + 1);
    Ok(match k {
        0 => DimReport::exact(value, false, TWISTED_UNRAMIFIED_DIM),
        _ => DimReport::exact(value, true, TWISTED_DIM),
    })
}

/// `V^a_eta(f, p)`. Orders beyond `deg L = 2g-2+k` cannot be attained, and
/// for them the formula is already negative, so they report `Empty`.
pub fn expected_dim_v_eta_pointed(g: u32, k: u32, a: &VanishingSequence) -> Result<DimReport> {
    check_genus(g)?;
    check_twist_k(k)?;
    let value = i64::from(g) + i64::from(k) - i64::from(a.rank()) - 2 - a.weight() as i64;
    debug_assert!(i64::from(a.last()) <= 2 * i64::from(g) - 2 + i64::from(k) || value < 0);
    Ok(DimReport::exact(value, false, POINTED_TWISTED_DIM))
}

/// `V^r(f, D)` for a generic effective divisor `D` of degree `d` on `C`.
pub fn expected_dim_v_divisor(g: u32, k: u32, r: u32, d: u32) -> Result<DimReport> {
    check_genus(g)?;
    let (g64, k64, r64, d64) = (i64::from(g), i64::from(k), i64::from(r), i64::from(d));
    let value = g64 - 1 + k64 - (d64 + k64) * (r64 + 1) - tri(r);
    Ok(if k == 0 {
        DimReport::exact(value, false, DIVISOR_DIM)
    } else {
        DimReport::lower_bound(value, DIVISOR_KANEV_BOUND)
    })
}

/// `V^r_eta(f, D)`.
pub fn expected_dim_v_eta_divisor(g: u32, k: u32, r: u32, d: u32) -> Result<DimReport> {
    check_genus(g)?;
    check_twist_k(k)?;
    let (g64, k64, r64, d64) = (i64::from(g), i64::from(k), i64::from(r), i64::from(d));
    let value = g64 - 1 + k64 - d64 * (r64 + 1) - tri(r + 1);
    Ok(DimReport::exact(value, false, TWISTED_DIVISOR_DIM))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[u32]) -> VanishingSequence {
        VanishingSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(9, 1, 8), 5);
        assert_eq!(rho(10, 1, 10), 8);
        for g in 0..10 {
            for d in 0..20 {
                assert_eq!(rho(g, 0, d), i64::from(d));
            }
        }
    }

    #[test]
    fn rho_pointed_examples() {
        assert_eq!(rho_pointed(4, 1, 8, &seq(&[3, 5])).unwrap(), 3);
        assert_eq!(rho_pointed(4, 1, 4, &seq(&[0, 2])).unwrap(), 1);
        assert_eq!(rho_pointed(7, 3, 9, &VanishingSequence::trivial(3)).unwrap(), rho(7, 3, 9));
        assert!(rho_pointed(4, 2, 8, &seq(&[3, 5])).is_err());
    }

    #[test]
    fn v_examples() {
        let rep = expected_dim_v(10, 1, 2).unwrap();
        assert_eq!(
            (rep.value, rep.exactness, rep.emptiness),
            (4, Exactness::TheoremExact, Emptiness::Nonempty)
        );
        let rep = expected_dim_v(5, 0, 3).unwrap();
        assert_eq!(
            (rep.value, rep.exactness, rep.emptiness),
            (-2, Exactness::TheoremExact, Emptiness::Empty)
        );
        for g in 1..20 {
            let rep = expected_dim_v(g, 1, 0).unwrap();
            assert_eq!((rep.value, rep.exactness), (i64::from(g) - 1, Exactness::TheoremExact));
        }
        let rep = expected_dim_v(3, 2, 2).unwrap();
        assert_eq!((rep.exactness, rep.emptiness), (Exactness::LowerBoundOnly, Emptiness::Unknown));
    }

    #[test]
    fn v_eta_examples() {
        assert_eq!(expected_dim_v_eta(3, 1, 1).unwrap().value, 0);
        assert_eq!(expected_dim_v_eta(3, 1, 1).unwrap().emptiness, Emptiness::Nonempty);
        assert_eq!(expected_dim_v_eta(2, 2, 1).unwrap().value, 0);
        let rep = expected_dim_v_eta(1, 0, 1).unwrap();
        assert_eq!((rep.value, rep.emptiness), (-3, Emptiness::Empty));
        assert_eq!(expected_dim_v_eta(9, 0, 1).unwrap().emptiness, Emptiness::Unknown);
        assert!(matches!(expected_dim_v_eta(4, 3, 1), Err(Error::UnsupportedSpace(_))));
    }

    #[test]
    fn pointed_examples() {
        assert_eq!(expected_dim_v_eta_pointed(5, 1, &seq(&[0, 2])).unwrap().value, 1);
        let rep = expected_dim_v_eta_pointed(2, 0, &seq(&[0, 3])).unwrap();
        assert_eq!((rep.value, rep.emptiness), (-4, Emptiness::Empty));
        assert!(expected_dim_v_eta_pointed(5, 3, &seq(&[0, 2])).is_err());
    }

    #[test]
    fn divisor_examples() {
        let rep = expected_dim_v_divisor(10, 0, 1, 2).unwrap();
        assert_eq!((rep.value, rep.exactness), (4, Exactness::TheoremExact));
        let rep = expected_dim_v_divisor(4, 0, 1, 2).unwrap();
        assert_eq!((rep.value, rep.emptiness), (-2, Emptiness::Empty));
        let rep = expected_dim_v_divisor(4, 1, 1, 2).unwrap();
        assert_eq!((rep.exactness, rep.emptiness), (Exactness::LowerBoundOnly, Emptiness::Unknown));
        assert_eq!(expected_dim_v_eta_divisor(6, 1, 1, 1).unwrap().value, 1);
        let rep = expected_dim_v_eta_divisor(3, 0, 1, 1).unwrap();
        assert_eq!((rep.value, rep.emptiness), (-3, Emptiness::Empty));
        assert!(expected_dim_v_eta_divisor(3, 3, 1, 1).is_err());
    }

    #[test]
    fn serre_duality_symmetry() {
        for g in 0..=20u32 {
            for d in 0..=(2 * g).saturating_sub(2) {
                for r in 0..=g {
                    let dual_rank = i64::from(g) - i64::from(d) + i64::from(r) - 1;
                    if dual_rank < 0 {
                        continue;
                    }
                    assert_eq!(rho(g, r, d), rho(g, dual_rank as u32, 2 * g - 2 - d), "{g} {r} {d}");
                }
            }
        }
    }

    #[test]
    fn kanev_bound_at_one_branch_pair() {
        for g in 1..=50u32 {
            for r in 0..=10u32 {
                let v = expected_dim_v(g, 1, r).unwrap().value;
                assert_eq!(v, i64::from(g) - tri(r + 1));
            }
        }
    }

    #[test]
    fn trivial_sequence_and_zero_divisor_reduce() {
        for g in 1..=50u32 {
            for k in 0..=2 {
                for r in 0..=8 {
                    let pointed = expected_dim_v_eta_pointed(g, k, &VanishingSequence::trivial(r));
                    assert_eq!(pointed.unwrap().value, expected_dim_v_eta(g, k, r).unwrap().value);
                    assert_eq!(
                        expected_dim_v_eta_divisor(g, k, r, 0).unwrap().value,
                        expected_dim_v_eta(g, k, r).unwrap().value
                    );
                    assert_eq!(
                        expected_dim_v_divisor(g, k, r, 0).unwrap().value,
                        expected_dim_v(g, k, r).unwrap().value
                    );
                }
            }
        }
    }

    fn strict_seq() -> impl Strategy<Value = VanishingSequence> {
        proptest::collection::btree_set(0u32..30, 1..6)
            .prop_map(|s| VanishingSequence::new(s.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn pointed_rho_never_exceeds_rho(g in 0u32..30, d in 0u32..40, a in strict_seq()) {
            let r = a.rank();
            let adjusted = rho_pointed(g, r, d, &a).unwrap();
            prop_assert!(adjusted <= rho(g, r, d));
            prop_assert_eq!(adjusted == rho(g, r, d), a.is_trivial());
        }
    }
}
