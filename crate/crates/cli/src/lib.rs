//! `pbn`: command-line access to the Prym-Brill-Noether computations.
//!
//! Exit codes: 0 on success (including an empty locus), 1 when an invariant
//! is violated, 2 on usage errors.

pub mod record;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use pbn_core::limits::{self, LimitFlavor, LimitProblem};
use pbn_core::numerics;
use pbn_core::verify::{self, VerifyBounds};
use pbn_core::{
    chern_series_w, count_points, formulas, twisted_class, twisted_pointed_class, unramified_class,
    ChernSeries, PrymSpace, SpaceFlavor, StrictPartition, VanishingSequence,
};

pub use record::{Format, OutputRecord};

#[derive(Debug, Parser)]
#[command(name = "pbn", version, about = "Exact invariants of Prym-Brill-Noether loci")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expected dimension and emptiness of a locus.
    Dim(DimArgs),
    /// Class of a locus as a multiple of a theta power.
    Class(ClassArgs),
    /// Number of points of a zero-dimensional twisted locus.
    Count(CountArgs),
    /// Vanishing orders of boundary Prym limits.
    Limits(LimitsArgs),
    /// Run the cross-module identity suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DimLocus {
    #[value(name = "V")]
    V,
    #[value(name = "V_eta")]
    VEta,
    #[value(name = "V_eta_pointed")]
    VEtaPointed,
    #[value(name = "V_div")]
    VDiv,
    #[value(name = "V_eta_div")]
    VEtaDiv,
}

#[derive(Debug, Args)]
pub struct DimArgs {
    #[arg(long, value_enum)]
    pub locus: DimLocus,
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub d: Option<u32>,
    /// Vanishing sequence, e.g. `0,2`.
    #[arg(long)]
    pub a: Option<VanishingSequence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassLocus {
    #[value(name = "V_unramified")]
    VUnramified,
    #[value(name = "V_eta")]
    VEta,
    #[value(name = "V_eta_pointed")]
    VEtaPointed,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    #[arg(long, value_enum)]
    pub locus: ClassLocus,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub a: Option<VanishingSequence>,
    /// Also evaluate the Pfaffian engine and compare.
    #[arg(long)]
    pub engine: bool,
    /// Genus of the base curve; when given, the degree on the Prym torsor is reported.
    #[arg(long)]
    pub g: Option<u32>,
    /// Half the number of branch points for the twisted torsor (1 or 2).
    #[arg(long)]
    pub k: Option<u32>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub r: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    /// Unramified cover over the boundary divisor Delta_1.
    Unramified,
    /// V^r(f, x+y) for a cover branched at two points.
    Ramified,
    /// V^r(f) for a cover branched at two points, via Serre duality.
    #[value(name = "ramified_dual")]
    RamifiedDual,
}

impl From<FlavorArg> for LimitFlavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Unramified => LimitFlavor::UnramifiedDelta1,
            FlavorArg::Ramified => LimitFlavor::RamifiedXPlusY,
            FlavorArg::RamifiedDual => LimitFlavor::RamifiedDual,
        }
    }
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    #[arg(long, value_enum)]
    pub flavor: FlavorArg,
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub r: u32,
    /// Also list every candidate before the endpoint filter.
    #[arg(long)]
    pub show_candidates: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = VerifyBounds::default().max_weight)]
    pub max_weight: u32,
    #[arg(long, default_value_t = VerifyBounds::default().max_g)]
    pub max_g: u32,
    #[arg(long, default_value_t = VerifyBounds::default().max_r)]
    pub max_r: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Invariant(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Invariant(m) => m,
        }
    }
}

impl From<pbn_core::Error> for CliError {
    fn from(e: pbn_core::Error) -> Self {
        match e {
            pbn_core::Error::InvariantViolation(_) => CliError::Invariant(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Everything `main` needs to finish the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn failed(err: CliError) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {}\n", err.message()), code: err.exit_code() }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Dim(a) => cmd_dim(a),
        Command::Class(a) => cmd_class(a),
        Command::Count(a) => cmd_count(a),
        Command::Limits(a) => cmd_limits(a),
        Command::Verify(a) => {
            let bounds = VerifyBounds { max_weight: a.max_weight, max_g: a.max_g, max_r: a.max_r };
            return verify_outcome(&bounds, &chern_series_w, cli.format);
        }
    };
    match result {
        Ok(rec) => Outcome { stdout: rec.render(cli.format), stderr: String::new(), code: 0 },
        Err(e) => Outcome::failed(e),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn require<T: Copy>(value: Option<T>, flag: &str, locus: &str) -> Result<T, CliError> {
    value.ok_or_else(|| usage(format!("--{flag} is required for locus {locus}")))
}

fn forbid<T>(value: &Option<T>, flag: &str, locus: &str) -> Result<(), CliError> {
    match value {
        Some(_) => Err(usage(format!("--{flag} does not apply to locus {locus}"))),
        None => Ok(()),
    }
}

pub fn cmd_dim(args: &DimArgs) -> Result<OutputRecord, CliError> {
    let (g, k) = (args.g, args.k);
    let name = args.locus.to_possible_value().expect("named").get_name().to_string();
    let report = match args.locus {
        DimLocus::V | DimLocus::VEta => {
            forbid(&args.d, "d", &name)?;
            forbid(&args.a, "a", &name)?;
            let r = require(args.r, "r", &name)?;
            if args.locus == DimLocus::V {
                numerics::expected_dim_v(g, k, r)?
            } else {
                numerics::expected_dim_v_eta(g, k, r)?
            }
        }
        DimLocus::VEtaPointed => {
            forbid(&args.r, "r", &name)?;
            forbid(&args.d, "d", &name)?;
            let a = args.a.as_ref().ok_or_else(|| usage("--a is required for locus V_eta_pointed"))?;
            numerics::expected_dim_v_eta_pointed(g, k, a)?
        }
        DimLocus::VDiv | DimLocus::VEtaDiv => {
            forbid(&args.a, "a", &name)?;
            let r = require(args.r, "r", &name)?;
            let d = require(args.d, "d", &name)?;
            if args.locus == DimLocus::VDiv {
                numerics::expected_dim_v_divisor(g, k, r, d)?
            } else {
                numerics::expected_dim_v_eta_divisor(g, k, r, d)?
            }
        }
    };
    let mut rec = OutputRecord::new("dim")
        .param("locus", name)
        .param("g", g)
        .param("k", k)
        .param_opt("r", args.r)
        .param_opt("d", args.d)
        .param_opt("a", args.a.as_ref().map(record::sequence))
        .cite(report.source);
    rec.result = record::dim_report(&report);
    Ok(rec)
}

const TWISTED_CLASS_CITE: &str = "class of V^r_eta(f) for generic f in R_{g,2k}, k=1,2: prod_{i=1}^{r+1} i!/(2i)! theta'^{(r+1)(r+2)/2}";
const POINTED_CLASS_CITE: &str = "class of V^a_eta(f,p): prod 1/(a_i+1)! prod_{j<i} (a_i-a_j)/(a_i+a_j+2) theta'^{|a|+r+1}, a type C Lagrangian degeneracy class";
const UNRAMIFIED_CLASS_CITE: &str = "class of V^r(f) in P^± (De Concini-Pragacz): 2^{r(r+1)/2} prod_{i=1}^r i!/(2i)! xi^{r(r+1)/2}";
const CHERN_CITE: &str = "Chern data of the Lagrangian subbundles: c_i(W^∨) = theta'^i/i!, c_i(U) = 0";

pub fn cmd_class(args: &ClassArgs) -> Result<OutputRecord, CliError> {
    let name = args.locus.to_possible_value().expect("named").get_name().to_string();
    let mut rec = OutputRecord::new("class")
        .param("locus", name.clone())
        .param("engine", args.engine)
        .param_opt("r", args.r)
        .param_opt("a", args.a.as_ref().map(record::sequence))
        .param_opt("g", args.g)
        .param_opt("k", args.k);

    let (closed, lambda, space_flavor) = match args.locus {
        ClassLocus::VUnramified => {
            forbid(&args.a, "a", &name)?;
            let r = require(args.r, "r", &name)?;
            rec = rec.cite(UNRAMIFIED_CLASS_CITE);
            (unramified_class(r), StrictPartition::staircase(r), SpaceFlavor::UnramifiedPm)
        }
        ClassLocus::VEta => {
            forbid(&args.a, "a", &name)?;
            let r = require(args.r, "r", &name)?;
            rec = rec.cite(TWISTED_CLASS_CITE);
            (twisted_class(r), StrictPartition::staircase(r + 1), SpaceFlavor::RamifiedTwisted)
        }
        ClassLocus::VEtaPointed => {
            forbid(&args.r, "r", &name)?;
            let a = args.a.as_ref().ok_or_else(|| usage("--a is required for locus V_eta_pointed"))?;
            rec = rec.cite(POINTED_CLASS_CITE);
            (twisted_pointed_class(a), StrictPartition::from_vanishing(a), SpaceFlavor::RamifiedTwisted)
        }
    };

    let mut result = serde_json::Map::new();
    result.insert("class".into(), record::class(&closed));

    if let Some(g) = args.g {
        let k = match space_flavor {
            SpaceFlavor::UnramifiedPm => {
                forbid(&args.k, "k", &name)?;
                0
            }
            SpaceFlavor::RamifiedTwisted => args.k.unwrap_or(1),
        };
        let space = PrymSpace::new(space_flavor, g, k)?;
        let degree = closed.degree(&space)?;
        result.insert("degree".into(), record::rational(&degree));
        result.insert("space".into(), record::space(&space));
    } else if args.k.is_some() {
        return Err(usage("--k needs --g"));
    }

    if args.engine {
        let c = chern_series_w(lambda.weight() as usize);
        let engine = match args.locus {
            ClassLocus::VUnramified => pbn_core::p_tilde(&lambda, &c)?.theta_prime_as_2xi()?,
            _ => pbn_core::q_tilde(&lambda, &c)?,
        };
        let ratio: Option<BigRational> = if closed.is_zero() || engine.exponent() != closed.exponent() {
            None
        } else {
            Some(engine.coeff() / closed.coeff())
        };
        result.insert("engine".into(), record::class(&engine));
        result.insert("engine_partition".into(), json!(lambda.parts()));
        result.insert("agrees".into(), json!(engine == closed));
        result.insert("engine_to_formula".into(), ratio.as_ref().map_or(Value::Null, record::rational));
        rec = rec.cite(CHERN_CITE);
    }
    rec.result = Value::Object(result);
    Ok(rec)
}

const COUNT_K1_CITE: &str = "cardinality of V^r_eta(f) for generic f in R_{g,2} with g = (r+1)(r+2)/2: 2^g g! prod_{i=1}^{r+1} i!/(2i)!";
const COUNT_K2_CITE: &str = "V^r_eta(f) for generic f in R_{g,4} with g+1 = (r+1)(r+2)/2 consists of (g+1)! 2^g prod_{i=1}^{r+1} i!/(2i)! reduced points";

pub fn cmd_count(args: &CountArgs) -> Result<OutputRecord, CliError> {
    let (g, k, r) = (args.g, args.k, args.r);
    match k {
        0 => {
            return Err(CliError::Usage(
                pbn_core::Error::UnsupportedSpace(
                    "the top self-intersection of theta' is not available for k = 0".into(),
                )
                .to_string(),
            ))
        }
        1 | 2 => {}
        _ => return Err(usage(format!("counts are only available for k = 1, 2, got k = {k}"))),
    }
    let dim = numerics::expected_dim_v_eta(g, k, r)?;
    if dim.value != 0 {
        return Err(usage(format!(
            "V^{r}_eta has expected dimension {} for g = {g}, k = {k}; counts need dimension 0 (g = {})",
            dim.value,
            verify::dimension_zero_genus(k, r).map_or("none".to_string(), |g0| g0.to_string())
        )));
    }
    let class = twisted_class(r);
    let space = PrymSpace::new(SpaceFlavor::RamifiedTwisted, g, k)?;
    let count: BigInt = count_points(&class, &space)?;
    let mut rec = OutputRecord::new("count")
        .param("g", g)
        .param("k", k)
        .param("r", r)
        .cite(if k == 1 { COUNT_K1_CITE } else { COUNT_K2_CITE });
    rec.result = json!({
        "count": record::integer(&count),
        "class": record::class(&class),
        "space": record::space(&space),
    });
    Ok(rec)
}

fn limits_citation(flavor: LimitFlavor) -> &'static str {
    match flavor {
        LimitFlavor::UnramifiedDelta1 => "generic Prym limit g^r_{2g-2} over Delta_1: Y_1 and Y_2 aspects vanish to orders (g-r-1, g-r+1, ..., g+r-1)",
        LimitFlavor::RamifiedXPlusY => "generic limit in V^r(f,x+y) over Delta_{0:g,{O}}: Y_1 aspect vanishes to orders (g-r, g-r+2, ..., g+r)",
        LimitFlavor::RamifiedDual => "generic limit in V^r(f) over Delta_{0:g,{O}}, via Serre duality with V^{r+1}(f,x+y): orders (g-r-1, g-r+1, ..., g+r-1)",
    }
}

pub fn cmd_limits(args: &LimitsArgs) -> Result<OutputRecord, CliError> {
    let flavor = LimitFlavor::from(args.flavor);
    let p = LimitProblem::new(flavor, args.g, args.r)?;
    let mut rec = OutputRecord::new("limits")
        .param("flavor", args.flavor.to_possible_value().expect("named").get_name())
        .param("g", args.g)
        .param("r", args.r)
        .param("show_candidates", args.show_candidates)
        .cite(limits_citation(flavor));

    let mut result = serde_json::Map::new();
    result.insert("problem".into(), json!(flavor.name()));
    result.insert("degree".into(), json!(p.degree()));
    result.insert("component_genus".into(), json!(p.component_genus()));
    result.insert("s".into(), json!(p.s()));
    if p.is_solvable() {
        let solution = limits::solve_unique(&p)?;
        result.insert("status".into(), json!("solved"));
        result.insert("solution".into(), record::sequence(&solution));
        if flavor == LimitFlavor::UnramifiedDelta1 {
            let rep = limits::additivity_report(p.g, p.r, &solution, &solution)?;
            result.insert("additivity".into(), record::additivity(&rep));
        }
    } else {
        result.insert("status".into(), json!("empty"));
        result.insert("solution".into(), Value::Null);
    }
    if args.show_candidates {
        let cands: Vec<Value> = limits::enumerate_candidates(&p).iter().map(record::sequence).collect();
        result.insert("candidates".into(), Value::Array(cands));
    }
    rec.result = Value::Object(result);
    Ok(rec)
}

/// Runs the suites against `chern` and maps the verdict to an exit code.
pub fn verify_outcome(
    bounds: &VerifyBounds,
    chern: &dyn Fn(usize) -> ChernSeries,
    format: Format,
) -> Outcome {
    let report = verify::run_all(bounds, chern);
    let mut rec = OutputRecord::new("verify")
        .param("max_weight", bounds.max_weight)
        .param("max_g", bounds.max_g)
        .param("max_r", bounds.max_r);
    rec.result = record::verify_report(&report);
    let (code, stderr) = match report.first_failure() {
        None => (0, String::new()),
        Some(s) => (
            1,
            format!(
                "suite {} failed: {}\n",
                s.name,
                s.counterexample.as_deref().unwrap_or("no counterexample recorded")
            ),
        ),
    };
    Outcome { stdout: rec.render(format), stderr, code }
}

/// Chern data with `c_3` replaced, for exercising the failure path.
pub fn corrupted_chern_series(order: usize) -> ChernSeries {
    let mut c = formulas::chern_series_w(order).coeffs().to_vec();
    if order >= 3 {
        c[3] = BigRational::new(1.into(), 5.into());
    }
    ChernSeries::new(c).expect("starts with 1")
}
