//! Cross-module identity suites. Each suite stops at its first
//! counterexample.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{int, pow2, triangular};
use crate::engine::{eval_identity, PfaffianEngine, StrictPartition};
use crate::formulas::{
    count_points, half_factorial_product, twisted_class, twisted_pointed_class, unramified_class,
    ChernSeries,
};
use crate::limits::{additivity_report, solve_unique, w_locus_expected_dim, LimitFlavor, LimitProblem};
use crate::numerics::{
    expected_dim_v, expected_dim_v_divisor, expected_dim_v_eta, expected_dim_v_eta_divisor,
    expected_dim_v_eta_pointed,
};
use crate::sequence::VanishingSequence;
use crate::theta_ring::{Generator, PrymSpace, SpaceFlavor, ThetaClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBounds {
    /// Largest `|λ|` fed to the Pfaffian engine.
    pub max_weight: u32,
    pub max_g: u32,
    pub max_r: u32,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        Self { max_weight: 24, max_g: 12, max_r: 4 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn first_failure(&self) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| !s.passed())
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
    counterexample: Option<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, counterexample: None }
    }

    /// Records one case; returns `false` once a counterexample is known.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok {
            self.counterexample = Some(describe());
        }
        ok
    }

    fn fail(&mut self, msg: String) {
        self.cases += 1;
        self.counterexample = Some(msg);
    }

    fn finish(self) -> SuiteResult {
        SuiteResult { name: self.name, cases: self.cases, counterexample: self.counterexample }
    }
}

/// Runs every suite. The engine suites evaluate Q~ against `chern(order)`;
/// pass [`crate::formulas::chern_series_w`] for the real check.
pub fn run_all(bounds: &VerifyBounds, chern: &dyn Fn(usize) -> ChernSeries) -> VerifyReport {
    let mut engine = PfaffianEngine::new(chern(bounds.max_weight as usize));
    VerifyReport {
        suites: vec![
            engine_oracle(bounds, &mut engine),
            pointed_formula(bounds, &mut engine),
            staircase_relation(bounds, &mut engine),
            unramified_reproduction(bounds, &mut engine),
            count_integrality(bounds),
            limit_uniqueness(bounds),
            w_consistency(bounds),
            dimension_identities(bounds),
        ],
    }
}

fn engine_oracle(bounds: &VerifyBounds, engine: &mut PfaffianEngine) -> SuiteResult {
    let mut suite = Suite::new("engine_oracle");
    for lambda in StrictPartition::up_to_weight(bounds.max_weight) {
        let want = eval_identity(&lambda);
        match engine.q_tilde(&lambda) {
            Ok(got) => {
                if !suite.check(got == want, || format!("Q~{lambda} = {got}, product formula {want}")) {
                    break;
                }
            }
            Err(e) => {
                suite.fail(format!("Q~{lambda}: {e}"));
                break;
            }
        }
    }
    suite.finish()
}

fn pointed_formula(bounds: &VerifyBounds, engine: &mut PfaffianEngine) -> SuiteResult {
    let mut suite = Suite::new("pointed_formula");
    for lambda in StrictPartition::up_to_weight(bounds.max_weight) {
        let a = lambda.to_vanishing().expect("non-empty partition");
        let want = twisted_pointed_class(&a);
        let got = engine
            .q_tilde(&lambda)
            .map(|q| ThetaClass::new(q, lambda.weight(), Generator::ThetaPrime));
        let ok = got.as_ref() == Ok(&want);
        if !suite.check(ok, || format!("a = {a}: engine {got:?}, closed form {want}")) {
            break;
        }
    }
    suite.finish()
}

fn staircase_relation(bounds: &VerifyBounds, engine: &mut PfaffianEngine) -> SuiteResult {
    let mut suite = Suite::new("staircase_relation");
    for r in (0..).take_while(|&r| triangular(r + 1) <= bounds.max_weight) {
        let lambda = StrictPartition::staircase(r + 1);
        let want = int(pow2(r + 1)) * half_factorial_product(r + 1);
        debug_assert_eq!(&want, &(twisted_class(r).coeff() * int(pow2(r + 1))));
        let got = engine.q_tilde(&lambda);
        if !suite.check(got.as_ref() == Ok(&want), || format!("r = {r}: Q~{lambda} = {got:?}, want {want}")) {
            break;
        }
    }
    suite.finish()
}

fn unramified_reproduction(bounds: &VerifyBounds, engine: &mut PfaffianEngine) -> SuiteResult {
    let mut suite = Suite::new("unramified_reproduction");
    for r in (1..).take_while(|&r| triangular(r) <= bounds.max_weight) {
        let lambda = StrictPartition::staircase(r);
        let want = unramified_class(r);
        let got = engine.q_tilde(&lambda).and_then(|q| {
            let p = ThetaClass::new(q / int(pow2(r)), triangular(r), Generator::ThetaPrime);
            p.theta_prime_as_2xi()
        });
        if !suite.check(got.as_ref() == Ok(&want), || format!("r = {r}: P~ gives {got:?}, want {want}")) {
            break;
        }
    }
    suite.finish()
}

/// The genus at which `V^r_eta(f)` is zero-dimensional, when it is positive.
pub fn dimension_zero_genus(k: u32, r: u32) -> Option<u32> {
    (triangular(r + 1) + 1).checked_sub(k).filter(|&g| g > 0)
}

fn count_integrality(bounds: &VerifyBounds) -> SuiteResult {
    let mut suite = Suite::new("count_integrality");
    'outer: for k in 1..=2 {
        for r in 0..=bounds.max_r {
            let Some(g) = dimension_zero_genus(k, r) else { continue };
            let space = PrymSpace::new(SpaceFlavor::RamifiedTwisted, g, k).expect("valid space");
            let got = count_points(&twisted_class(r), &space);
            let ok = matches!(&got, Ok(n) if *n > BigInt::zero());
            if !suite.check(ok, || format!("k = {k}, r = {r}, g = {g}: {got:?}")) {
                break 'outer;
            }
        }
    }
    suite.finish()
}

fn limit_uniqueness(bounds: &VerifyBounds) -> SuiteResult {
    let mut suite = Suite::new("limit_uniqueness");
    'outer: for flavor in LimitFlavor::ALL {
        for g in 1..=bounds.max_g {
            for r in 0..=bounds.max_r {
                let p = LimitProblem::new(flavor, g, r).expect("positive genus");
                if !p.is_solvable() {
                    continue;
                }
                let solved = solve_unique(&p).and_then(|a| {
                    if flavor == LimitFlavor::UnramifiedDelta1 {
                        let rep = additivity_report(g, r, &a, &a)?;
                        if !rep.equality {
                            return Err(crate::Error::InvariantViolation(format!(
                                "additivity chain not tight: {rep:?}"
                            )));
                        }
                    }
                    Ok(a)
                });
                if !suite.check(solved.is_ok(), || format!("{} g = {g} r = {r}: {solved:?}", flavor.name())) {
                    break 'outer;
                }
            }
        }
    }
    suite.finish()
}

fn w_consistency(bounds: &VerifyBounds) -> SuiteResult {
    let mut suite = Suite::new("w_consistency");
    'outer: for g in 1..=bounds.max_g {
        for r in 0..=bounds.max_r {
            let a = VanishingSequence::arithmetic(0, 2, r);
            let got = w_locus_expected_dim(g - 1, g + r - 1, &a);
            let want = expected_dim_v(g, 0, r).expect("positive genus").value;
            if !suite.check(got == want, || format!("g = {g} r = {r}: W gives {got}, V gives {want}")) {
                break 'outer;
            }
        }
    }
    suite.finish()
}

fn dimension_identities(bounds: &VerifyBounds) -> SuiteResult {
    let mut suite = Suite::new("dimension_identities");
    'outer: for g in 1..=bounds.max_g {
        for r in 0..=bounds.max_r {
            let kanev = expected_dim_v(g, 1, r).map(|d| d.value);
            if !suite.check(kanev == Ok(i64::from(g) - i64::from(triangular(r + 1))), || {
                format!("Kanev bound at k = 1, g = {g}, r = {r}: {kanev:?}")
            }) {
                break 'outer;
            }
            for k in 0..=2 {
                let base = expected_dim_v_eta(g, k, r).map(|d| d.value);
                let pointed =
                    expected_dim_v_eta_pointed(g, k, &VanishingSequence::trivial(r)).map(|d| d.value);
                let twisted_div = expected_dim_v_eta_divisor(g, k, r, 0).map(|d| d.value);
                let div = expected_dim_v_divisor(g, k, r, 0).map(|d| d.value);
                let v = expected_dim_v(g, k, r).map(|d| d.value);
                let ok = base.is_ok() && pointed == base && twisted_div == base && div == v;
                if !suite.check(ok, || {
                    format!("g = {g}, k = {k}, r = {r}: V_eta {base:?}, pointed {pointed:?}, V_eta(D=0) {twisted_div:?}, V {v:?}, V(D=0) {div:?}")
                }) {
                    break 'outer;
                }
            }
        }
    }
    suite.finish()
}
