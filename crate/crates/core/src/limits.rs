//! Vanishing orders of Prym limit linear series on the boundary.
//!
//! Three degenerations are modelled:
//! - `UnramifiedDelta1`: a cover in `Δ_1 ⊂ R̄_g`, source `Y_1 ∪ E~ ∪ Y_2` with
//!   `Y_i` of genus `g-1`, limit `g^r_{2g-2}`; the elliptic bridge forces
//!   `a_i + b_{r-i} = 2g-2`.
//! - `RamifiedXPlusY`: a cover in `Δ_{0:g,{O}} ⊂ R̄_{g,2}`, aspects on genus `g`
//!   components, limit `g^r_{2g}` of `V^r(f, x+y)`.
//! - `RamifiedDual`: the same boundary cover, limit `g^r_{2g-2}` of `V^r(f)`,
//!   obtained from `V^{r+1}(f, x+y)` by Serre duality.
//!
//! [`enumerate_candidates`] is the brute-force side: every sequence that the
//! rho-additivity, complementarity and parity (or gap) constraints allow.
//! [`solve_unique`] applies the endpoint conditions and checks that exactly
//! the closed-form sequence survives.

use itertools::Itertools;

use crate::arith::triangular;
use crate::error::{Error, Result};
use crate::numerics::{rho, rho_pointed};
use crate::sequence::VanishingSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LimitFlavor {
    UnramifiedDelta1,
    RamifiedXPlusY,
    RamifiedDual,
}

impl LimitFlavor {
    pub const ALL: [LimitFlavor; 3] =
        [LimitFlavor::UnramifiedDelta1, LimitFlavor::RamifiedXPlusY, LimitFlavor::RamifiedDual];

    pub fn name(self) -> &'static str {
        match self {
            LimitFlavor::UnramifiedDelta1 => "unramified_delta1",
            LimitFlavor::RamifiedXPlusY => "ramified_x_plus_y",
            LimitFlavor::RamifiedDual => "ramified_dual",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LimitProblem {
    pub flavor: LimitFlavor,
    pub g: u32,
    pub r: u32,
}

impl LimitProblem {
    pub fn new(flavor: LimitFlavor, g: u32, r: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::Parameter("genus must be positive".into()));
        }
        Ok(Self { flavor, g, r })
    }

    /// Degree of each aspect.
    pub fn degree(&self) -> u32 {
        match self.flavor {
            LimitFlavor::UnramifiedDelta1 | LimitFlavor::RamifiedDual => 2 * self.g - 2,
            LimitFlavor::RamifiedXPlusY => 2 * self.g,
        }
    }

    /// Genus of the components `Y_1`, `Y_2` carrying the aspects.
    pub fn component_genus(&self) -> u32 {
        match self.flavor {
            LimitFlavor::UnramifiedDelta1 => self.g - 1,
            LimitFlavor::RamifiedXPlusY | LimitFlavor::RamifiedDual => self.g,
        }
    }

    /// Dimension of the locus being degenerated; each aspect has adjusted
    /// Brill-Noether number exactly `s`.
    pub fn s(&self) -> i64 {
        let g = i64::from(self.g);
        match self.flavor {
            LimitFlavor::UnramifiedDelta1 => g - 1 - i64::from(triangular(self.r)),
            LimitFlavor::RamifiedXPlusY => g - i64::from(triangular(self.r)),
            LimitFlavor::RamifiedDual => g - i64::from(triangular(self.r + 1)),
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.s() >= 0
    }

    /// `Σ a_i` forced by `rho(a) = s`.
    pub fn target_sum(&self) -> i64 {
        rho(self.component_genus(), self.r, self.degree()) + i64::from(triangular(self.r)) - self.s()
    }

    /// Closed form of the generic aspect's vanishing orders.
    pub fn closed_form(&self) -> Result<VanishingSequence> {
        match self.flavor {
            LimitFlavor::UnramifiedDelta1 => prym_limit_vanishing(self.g, self.r),
            LimitFlavor::RamifiedXPlusY => prym_limit_vanishing_ramified(self.g, self.r),
            LimitFlavor::RamifiedDual => prym_limit_vanishing_dual(self.g, self.r),
        }
    }

    fn no_solution(&self) -> Error {
        Error::NoSolution(format!(
            "{} with g = {}, r = {} has s = {} < 0",
            self.flavor.name(),
            self.g,
            self.r,
            self.s()
        ))
    }
}

/// `b_{r-i} = d - a_i`.
pub fn complementary_vanishing(d: u32, a: &VanishingSequence) -> Result<VanishingSequence> {
    if a.last() > d {
        return Err(Error::Parameter(format!("vanishing order {} exceeds degree {d}", a.last())));
    }
    VanishingSequence::new(a.entries().iter().rev().map(|&x| d - x).collect())
}

/// `(g-r-1, g-r+1, ..., g+r-1)` for the unramified `Δ_1` degeneration.
pub fn prym_limit_vanishing(g: u32, r: u32) -> Result<VanishingSequence> {
    let p = LimitProblem::new(LimitFlavor::UnramifiedDelta1, g, r)?;
    if !p.is_solvable() {
        return Err(p.no_solution());
    }
    Ok(VanishingSequence::arithmetic(g - r - 1, 2, r))
}

/// `(g-r, g-r+2, ..., g+r)` for `V^r(f, x+y)` on `Δ_{0:g,{O}}`.
pub fn prym_limit_vanishing_ramified(g: u32, r: u32) -> Result<VanishingSequence> {
    let p = LimitProblem::new(LimitFlavor::RamifiedXPlusY, g, r)?;
    if !p.is_solvable() {
        return Err(p.no_solution());
    }
    Ok(VanishingSequence::arithmetic(g - r, 2, r))
}

/// One Riemann-Roch reading: exactly `sections` of the vanishing orders are
/// `>= order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderCount {
    pub order: i64,
    pub sections: i64,
}

impl OrderCount {
    fn holds(&self, a: &VanishingSequence) -> bool {
        let n = a.entries().iter().filter(|&&x| i64::from(x) >= self.order).count();
        n as i64 == self.sections
    }
}

/// Translates the orders `m` of the dual aspect `ω_Y(2g p) ⊗ L_1^{-1}` (a
/// `g^{r+1}_{2g}` with `h^0(M - m_i p) = r+2-i`) into counts for `L_1`:
/// `h^0(L_1 - (2g - m_i) p) = m_i + r + 1 - g - i`.
pub fn dual_order_counts(g: u32, r: u32, m: &VanishingSequence) -> Result<Vec<OrderCount>> {
    if m.rank() != r + 1 {
        return Err(Error::Parameter(format!("dual aspect {m} must have rank {}", r + 1)));
    }
    let (g, r) = (i64::from(g), i64::from(r));
    m.entries()
        .iter()
        .enumerate()
        .map(|(i, &mi)| {
            let mi = i64::from(mi);
            let sections = mi + r + 1 - g - i as i64;
            if !(0..=r + 1).contains(&sections) {
                return Err(Error::InvariantViolation(format!(
                    "dual aspect {m} gives h^0 = {sections} outside [0, {}]",
                    r + 1
                )));
            }
            Ok(OrderCount { order: 2 * g - mi, sections })
        })
        .collect()
}

/// Sequences of rank `r` in `[0, d]` with the given sum that meet every count.
fn sequences_meeting_counts(
    r: u32,
    d: u32,
    sum: i64,
    counts: &[OrderCount],
) -> Vec<VanishingSequence> {
    let r_us = r as usize;
    let mut lo = vec![0i64; r_us + 1];
    let mut hi = vec![i64::from(d); r_us + 1];
    for c in counts {
        let h = c.sections as usize;
        if h <= r_us {
            let j = r_us - h;
            hi[j] = hi[j].min(c.order - 1);
        }
        if h >= 1 {
            let j = r_us + 1 - h;
            lo[j] = lo[j].max(c.order);
        }
    }
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Vec::new();
    }
    lo.iter()
        .zip(&hi)
        .map(|(&l, &h)| l..=h)
        .multi_cartesian_product()
        .filter(|v| v.iter().sum::<i64>() == sum)
        .filter_map(|v| VanishingSequence::new(v.into_iter().map(|x| x as u32).collect()).ok())
        .filter(|a| counts.iter().all(|c| c.holds(a)))
        .collect()
}

/// `(g-r-1, g-r+1, ..., g+r-1)` for `V^r(f)` on `Δ_{0:g,{O}}`, derived from
/// the `V^{r+1}(f, x+y)` orders through Riemann-Roch and checked against the
/// closed form.
pub fn prym_limit_vanishing_dual(g: u32, r: u32) -> Result<VanishingSequence> {
    let p = LimitProblem::new(LimitFlavor::RamifiedDual, g, r)?;
    if !p.is_solvable() {
        return Err(p.no_solution());
    }
    let dual = prym_limit_vanishing_ramified(g, r + 1)?;
    let counts = dual_order_counts(g, r, &dual)?;
    let found = sequences_meeting_counts(r, p.degree(), p.target_sum(), &counts);
    let expected = VanishingSequence::arithmetic(g - r - 1, 2, r);
    match found.as_slice() {
        [only] if *only == expected => Ok(expected),
        _ => Err(Error::InvariantViolation(format!(
            "dual bookkeeping for g = {g}, r = {r} gave {} instead of {expected}",
            found.iter().join(", ")
        ))),
    }
}

/// Every sequence allowed by complementarity, parity (or the gap condition
/// for `RamifiedXPlusY`) and `rho = s` on both aspects, in lexicographic order.
pub fn enumerate_candidates(p: &LimitProblem) -> Vec<VanishingSequence> {
    if !p.is_solvable() {
        return Vec::new();
    }
    let d = p.degree();
    let genus = p.component_genus();
    let s = p.s();
    (0..=d)
        .combinations(p.r as usize + 1)
        .map(|v| VanishingSequence::new(v).expect("combinations are strictly increasing"))
        .filter(|a| match p.flavor {
            LimitFlavor::RamifiedXPlusY => a.min_gap().is_none_or(|gap| gap >= 2),
            _ => a.all_same_parity(),
        })
        .filter(|a| {
            let Ok(b) = complementary_vanishing(d, a) else { return false };
            rho_pointed(genus, p.r, d, a).ok() == Some(s) && rho_pointed(genus, p.r, d, &b).ok() == Some(s)
        })
        .collect()
}

/// `g+r-1-a_{r-i}-i = #{j : a_j >= a_{r-i}+2}` for every `i`.
fn unramified_endpoint_filter(g: u32, a: &VanishingSequence) -> bool {
    let e = a.entries();
    let r = e.len() - 1;
    (0..=r).all(|i| {
        let pivot = e[r - i];
        let lhs = i64::from(g) + r as i64 - 1 - i64::from(pivot) - i as i64;
        let rhs = e.iter().filter(|&&x| x >= pivot + 2).count() as i64;
        lhs == rhs
    })
}

/// Candidates that also satisfy the endpoint conditions of the flavor.
pub fn surviving_candidates(p: &LimitProblem) -> Result<Vec<VanishingSequence>> {
    let candidates = enumerate_candidates(p);
    Ok(match p.flavor {
        LimitFlavor::UnramifiedDelta1 => {
            candidates.into_iter().filter(|a| unramified_endpoint_filter(p.g, a)).collect()
        }
        LimitFlavor::RamifiedXPlusY => {
            let (lo, hi) = (p.g - p.r, p.g + p.r);
            candidates
                .into_iter()
                .filter(|a| a.entries()[0] == lo && a.last() == hi)
                .collect()
        }
        LimitFlavor::RamifiedDual => {
            let dual = solve_unique(&LimitProblem::new(LimitFlavor::RamifiedXPlusY, p.g, p.r + 1)?)?;
            let counts = dual_order_counts(p.g, p.r, &dual)?;
            candidates.into_iter().filter(|a| counts.iter().all(|c| c.holds(a))).collect()
        }
    })
}

/// The unique generic aspect, found by brute force and checked against the
/// closed form.
pub fn solve_unique(p: &LimitProblem) -> Result<VanishingSequence> {
    if !p.is_solvable() {
        return Err(p.no_solution());
    }
    let survivors = surviving_candidates(p)?;
    let [only] = survivors.as_slice() else {
        return Err(Error::InvariantViolation(format!(
            "{} with g = {}, r = {}: expected one survivor, got [{}]",
            p.flavor.name(),
            p.g,
            p.r,
            survivors.iter().join(", ")
        )));
    };
    let closed = p.closed_form()?;
    if *only != closed {
        return Err(Error::InvariantViolation(format!(
            "{} with g = {}, r = {}: survivor {only} differs from closed form {closed}",
            p.flavor.name(),
            p.g,
            p.r
        )));
    }
    Ok(closed)
}

/// The rho-additivity chain `rho(2g-1, r, 2g-2) >= rho(Y_1) + rho(E~) + rho(Y_2)`
/// for a limit on `Y_1 ∪ E~ ∪ Y_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditivityReport {
    pub lhs: i64,
    pub s: i64,
    pub aspect_rhos: (i64, i64),
    pub bridge_rho: i64,
    /// Both aspects equal `s` and the bridge equals `-r`.
    pub equality: bool,
}

impl AdditivityReport {
    pub fn total(&self) -> i64 {
        self.aspect_rhos.0 + self.aspect_rhos.1 + self.bridge_rho
    }
}

/// `a`, `b` are the orders of the `Y_1`, `Y_2` aspects at the nodes; the
/// elliptic bridge carries the complementary orders at both nodes.
pub fn additivity_report(
    g: u32,
    r: u32,
    a: &VanishingSequence,
    b: &VanishingSequence,
) -> Result<AdditivityReport> {
    let p = LimitProblem::new(LimitFlavor::UnramifiedDelta1, g, r)?;
    let d = p.degree();
    let genus = p.component_genus();
    let aspect_rhos = (rho_pointed(genus, r, d, a)?, rho_pointed(genus, r, d, b)?);
    let at_x1 = complementary_vanishing(d, a)?;
    let at_x2 = complementary_vanishing(d, b)?;
    let bridge_rho =
        rho(1, r, d) - at_x1.ramification() as i64 - at_x2.ramification() as i64;
    let s = p.s();
    Ok(AdditivityReport {
        lhs: rho(2 * g - 1, r, d),
        s,
        aspect_rhos,
        bridge_rho,
        equality: aspect_rhos == (s, s) && bridge_rho == -i64::from(r),
    })
}

/// Adjusted Brill-Noether number of `W^r_{d,a}(Y)` on a genus `g_y` curve.
pub fn w_locus_expected_dim(g_y: u32, d: u32, a: &VanishingSequence) -> i64 {
    rho_pointed(g_y, a.rank(), d, a).expect("rank taken from the sequence")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> VanishingSequence {
        VanishingSequence::new(v.to_vec()).unwrap()
    }

    fn problem(flavor: LimitFlavor, g: u32, r: u32) -> LimitProblem {
        LimitProblem::new(flavor, g, r).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complementary_vanishing(8, &seq(&[3, 5])).unwrap(), seq(&[3, 5]));
        assert_eq!(complementary_vanishing(8, &seq(&[0, 8])).unwrap(), seq(&[0, 8]));
        let a = seq(&[1, 4, 6]);
        let b = complementary_vanishing(9, &a).unwrap();
        assert_eq!(b, seq(&[3, 5, 8]));
        assert_eq!(complementary_vanishing(9, &b).unwrap(), a);
        assert!(complementary_vanishing(5, &seq(&[0, 6])).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(prym_limit_vanishing(5, 1).unwrap(), seq(&[3, 5]));
        assert_eq!(prym_limit_vanishing(4, 2).unwrap(), seq(&[1, 3, 5]));
        assert_eq!(prym_limit_vanishing(7, 0).unwrap(), seq(&[6]));
        assert_eq!(prym_limit_vanishing_ramified(5, 1).unwrap(), seq(&[4, 6]));
        assert_eq!(prym_limit_vanishing_ramified(3, 2).unwrap(), seq(&[1, 3, 5]));
        assert_eq!(prym_limit_vanishing_ramified(7, 0).unwrap(), seq(&[7]));
        assert_eq!(prym_limit_vanishing_dual(5, 1).unwrap(), seq(&[3, 5]));
        assert_eq!(prym_limit_vanishing_dual(6, 2).unwrap(), seq(&[3, 5, 7]));
        assert_eq!(prym_limit_vanishing_dual(7, 0).unwrap(), seq(&[6]));
        assert!(matches!(prym_limit_vanishing(2, 2), Err(Error::NoSolution(_))));
        assert!(matches!(prym_limit_vanishing_ramified(2, 2), Err(Error::NoSolution(_))));
        assert!(matches!(prym_limit_vanishing_dual(5, 2), Err(Error::NoSolution(_))));
    }

    #[test]
    fn candidate_examples() {
        let p = problem(LimitFlavor::UnramifiedDelta1, 5, 1);
        let want: Vec<_> = [[0, 8], [1, 7], [2, 6], [3, 5]].iter().map(|v| seq(v)).collect();
        assert_eq!(enumerate_candidates(&p), want);
        let p = problem(LimitFlavor::UnramifiedDelta1, 3, 1);
        assert_eq!(enumerate_candidates(&p), vec![seq(&[0, 4]), seq(&[1, 3])]);
        for flavor in LimitFlavor::ALL {
            assert!(enumerate_candidates(&problem(flavor, 2, 3)).is_empty());
        }
    }

    #[test]
    fn target_sums() {
        for g in 1..=30 {
            for r in 0..=6 {
                let (g64, r64) = (i64::from(g), i64::from(r));
                let un = problem(LimitFlavor::UnramifiedDelta1, g, r);
                assert_eq!(un.target_sum(), (r64 + 1) * (g64 - 1));
                let ram = problem(LimitFlavor::RamifiedXPlusY, g, r);
                assert_eq!(ram.target_sum(), (r64 + 1) * g64);
                let dual = problem(LimitFlavor::RamifiedDual, g, r);
                assert_eq!(dual.target_sum(), (r64 + 1) * (g64 - 1));
            }
        }
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_unique(&problem(LimitFlavor::UnramifiedDelta1, 5, 1)).unwrap(), seq(&[3, 5]));
        assert_eq!(solve_unique(&problem(LimitFlavor::RamifiedXPlusY, 5, 1)).unwrap(), seq(&[4, 6]));
        assert_eq!(solve_unique(&problem(LimitFlavor::UnramifiedDelta1, 4, 2)).unwrap(), seq(&[1, 3, 5]));
        assert_eq!(solve_unique(&problem(LimitFlavor::RamifiedDual, 6, 2)).unwrap(), seq(&[3, 5, 7]));
        assert!(matches!(
            solve_unique(&problem(LimitFlavor::UnramifiedDelta1, 2, 2)),
            Err(Error::NoSolution(_))
        ));
    }

    #[test]
    fn dual_counts_match_riemann_roch() {
        // h^0(L_1 - (g+r+1-2i) p) = i
        let counts = dual_order_counts(5, 1, &prym_limit_vanishing_ramified(5, 2).unwrap()).unwrap();
        let pairs: Vec<_> = counts.iter().map(|c| (c.order, c.sections)).collect();
        assert_eq!(pairs, vec![(7, 0), (5, 1), (3, 2)]);
    }

    #[test]
    fn additivity_examples() {
        let rep = additivity_report(5, 1, &seq(&[3, 5]), &seq(&[3, 5])).unwrap();
        assert_eq!((rep.lhs, rep.aspect_rhos, rep.bridge_rho, rep.equality), (5, (3, 3), -1, true));
        let rep = additivity_report(5, 1, &seq(&[0, 8]), &seq(&[0, 8])).unwrap();
        assert_eq!((rep.aspect_rhos, rep.bridge_rho, rep.equality), ((3, 3), -1, true));
        for g in 1..10 {
            let a = seq(&[g - 1]);
            let rep = additivity_report(g, 0, &a, &a).unwrap();
            assert_eq!(rep.lhs, 2 * rep.s);
            assert_eq!(rep.bridge_rho, 0);
            assert!(rep.equality);
        }
    }

    #[test]
    fn w_locus_examples() {
        assert_eq!(w_locus_expected_dim(4, 6, &seq(&[0, 2])), 5);
        assert_eq!(w_locus_expected_dim(4, 5, &seq(&[0, 2])), 3);
        for g_y in 0..10 {
            for r in 0..5 {
                // rho(g, r, g + r) = g and the trivial sequence adjusts nothing
                assert_eq!(w_locus_expected_dim(g_y, g_y + r, &VanishingSequence::trivial(r)), i64::from(g_y));
            }
        }
    }

    #[test]
    fn self_complementary() {
        for g in 1..=20 {
            for r in 0..=5 {
                if let Ok(a) = prym_limit_vanishing(g, r) {
                    assert_eq!(complementary_vanishing(2 * g - 2, &a).unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn sum_identities() {
        for g in 1..=50u32 {
            for r in 0..=8u32 {
                if let Ok(a) = prym_limit_vanishing(g, r) {
                    assert_eq!(a.weight(), u64::from((r + 1) * (g - 1)));
                }
                if let Ok(a) = prym_limit_vanishing_ramified(g, r) {
                    assert_eq!(a.weight(), u64::from((r + 1) * g));
                }
            }
        }
    }
}
