//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use permprod_core::chain::{extend_with_seed, ChainError};
use permprod_core::hurwitz::{branch_data_report, genus, BranchSpec, HurwitzError};
use permprod_core::notation::parse_tuple;
use permprod_core::oracle::{min_degree_with, Interrupt, OracleError, SearchBudget, FEASIBILITY_BOUND};
use permprod_core::solver::{restore_slots, solve_with_seed};
use permprod_core::Permutation;

use crate::check::{self, Check, Images};
use crate::envelope::{CommandEcho, Envelope, PermJson, Timing, TreeJson, Verification, SCHEMA};
use crate::survey;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "permprod", version, about = "Product-one permutation tuples of prescribed orders")]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "PERMPROD_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock timings in the output.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// x, y, z of orders a, b, c with xyz = 1 in degree at most max + 2.
    Solve {
        #[arg(value_parser = order)]
        a: usize,
        #[arg(value_parser = order)]
        b: usize,
        #[arg(value_parser = order)]
        c: usize,
    },
    /// x_1 ⋯ x_r = 1 with the given orders in S_{max+2}.
    Extend {
        #[arg(required = true, num_args = 3.., value_parser = order)]
        orders: Vec<usize>,
    },
    /// Checks every order triple in every S_n up to the given degree.
    Survey {
        #[arg(long = "max-n", value_parser = clap::value_parser!(u64).range(4..))]
        max_n: u64,
        /// Worker threads; defaults to one per core.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
    },
    /// Genus of each orbit of a product-one tuple.
    Genus {
        /// Permutations in cycle notation, as separate arguments or joined by ';'.
        #[arg(required = true)]
        tuple: Vec<String>,
    },
    /// Least degree admitting a product-one triple of orders a, b, c.
    Mindegree {
        #[arg(value_parser = order)]
        a: usize,
        #[arg(value_parser = order)]
        b: usize,
        #[arg(value_parser = order)]
        c: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Monodromy and genus of a cover with the given branch orders.
    Cover {
        #[arg(required = true, num_args = 3.., value_parser = order)]
        orders: Vec<usize>,
        /// Comma-separated branch point labels.
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<String>>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Solve { .. } => "solve",
            Command::Extend { .. } => "extend",
            Command::Survey { .. } => "survey",
            Command::Genus { .. } => "genus",
            Command::Mindegree { .. } => "mindegree",
            Command::Cover { .. } => "cover",
        }
    }
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    #[arg(long = "max-degree", default_value_t = FEASIBILITY_BOUND)]
    pub max_degree: usize,
    #[arg(long = "max-nodes", default_value_t = 2_000_000_000)]
    pub max_nodes: u64,
    /// Seconds before the search gives up.
    #[arg(long = "time-cap", default_value_t = 600)]
    pub time_cap: u64,
}

fn order(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|e| format!("{e}"))?;
    if v < 2 {
        return Err(format!("order must be at least 2, got {v}"));
    }
    Ok(v)
}

struct Deadline(Instant);

impl Interrupt for Deadline {
    fn should_stop(&self) -> bool {
        Instant::now() >= self.0
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
    Inconclusive(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Internal(_) => EXIT_VERIFY,
            Failure::Inconclusive(_) => EXIT_INCONCLUSIVE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Internal(m) | Failure::Inconclusive(m) => m,
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        if e.is_inconclusive() {
            Failure::Inconclusive(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

impl From<ChainError> for Failure {
    fn from(e: ChainError) -> Self {
        match e {
            ChainError::Oracle(o) => o.into(),
            ChainError::InvalidArity(_) | ChainError::OutOfRange { .. } => Failure::Usage(e.to_string()),
            e => Failure::Internal(e.to_string()),
        }
    }
}

impl From<HurwitzError> for Failure {
    fn from(e: HurwitzError) -> Self {
        match e {
            HurwitzError::Chain(c) => c.into(),
            HurwitzError::Refinement { .. } => Failure::Internal(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

/// What a command hands back for printing.
struct Outcome<T> {
    result: T,
    checks: Vec<Check>,
    text: String,
    max_solve: Option<Duration>,
}

fn images(ps: &[Permutation]) -> Vec<Images> {
    ps.iter().map(Permutation::images).collect()
}

fn perms(ps: &[Permutation]) -> Vec<PermJson> {
    ps.iter().map(PermJson::from).collect()
}

fn write_elements(text: &mut String, names: &[String], ps: &[Permutation]) {
    for (name, p) in names.iter().zip(ps) {
        let _ = writeln!(text, "{name} = {p}");
    }
}

#[derive(Debug, Serialize)]
struct SolvePayload {
    orders: [usize; 3],
    degree: usize,
    case: &'static str,
    trace: Vec<[usize; 3]>,
    exceptional_transposition_holder: Option<String>,
    elements: Vec<PermJson>,
}

fn cmd_solve(orders: [usize; 3], seed: u64) -> Result<Outcome<SolvePayload>, Failure> {
    let mut sorted = orders;
    sorted.sort_unstable();
    let [a, b, c] = sorted;
    let r = solve_with_seed(a, b, c, seed).map_err(|e| Failure::Internal(e.to_string()))?;
    let elements = restore_slots(&r, orders).map_err(|e| Failure::Internal(e.to_string()))?;
    let degree = r.degree();
    let mut checks = check::tuple_checks(&images(&elements), &orders);
    checks.push(Check::new("degree_bound", degree <= c + 2));
    let mut text = String::new();
    write_elements(&mut text, &["x", "y", "z"].map(String::from), &elements);
    let _ = writeln!(text, "case: {}", r.case.kind);
    let _ = writeln!(text, "degree: {degree}");
    Ok(Outcome {
        result: SolvePayload {
            orders,
            degree,
            case: r.case.kind.name(),
            trace: r.case.trace.iter().map(|&(a, b, c)| [a, b, c]).collect(),
            exceptional_transposition_holder: r.exceptional_transposition_holder.map(|s| s.to_string()),
            elements: perms(&elements),
        },
        checks,
        text,
        max_solve: None,
    })
}

#[derive(Debug, Serialize)]
struct ExtendPayload {
    orders: Vec<usize>,
    degree: usize,
    split_tree: TreeJson,
    elements: Vec<PermJson>,
}

fn cmd_extend(orders: &[usize], seed: u64) -> Result<Outcome<ExtendPayload>, Failure> {
    let r = extend_with_seed(orders, seed)?;
    let mut checks = check::tuple_checks(&images(&r.elements), orders);
    let max = orders.iter().copied().max().unwrap_or(0);
    checks.push(Check::new("degree_is_max_plus_2", r.elements.iter().all(|p| p.degree() == max + 2)));
    let mut text = String::new();
    let names: Vec<String> = (1..=orders.len()).map(|i| format!("x{i}")).collect();
    write_elements(&mut text, &names, &r.elements);
    let _ = writeln!(text, "degree: {}", r.degree);
    Ok(Outcome {
        result: ExtendPayload {
            orders: orders.to_vec(),
            degree: r.degree,
            split_tree: (&r.split_tree).into(),
            elements: perms(&r.elements),
        },
        checks,
        text,
        max_solve: None,
    })
}

#[derive(Debug, Serialize)]
struct SurveyPayload {
    #[serde(flatten)]
    summary: survey::SurveySummary,
}

fn cmd_survey(max_n: usize, jobs: Option<usize>, seed: u64) -> Result<Outcome<SurveyPayload>, Failure> {
    let run = survey::run(max_n, seed, jobs).map_err(|e| Failure::Usage(e.to_string()))?;
    let s = &run.summary;
    let checks = vec![
        Check::new("all_cells_pass", s.is_clean()),
    ];
    let mut text = String::new();
    let _ = writeln!(text, "cells: {}  passed: {}  failed: {}", s.cells, s.passed, s.failures.len());
    for f in &s.failures {
        let _ = writeln!(text, "  n={} orders={:?}: {}", f.n, f.orders, f.reason);
    }
    if let Some(o) = run.slowest {
        let _ = writeln!(text, "max solve time: {:.3} ms at {:?}", run.max_solve.as_secs_f64() * 1e3, o);
    }
    Ok(Outcome {
        result: SurveyPayload { summary: run.summary },
        checks,
        text,
        max_solve: Some(run.max_solve),
    })
}

#[derive(Debug, Serialize)]
struct OrbitJson {
    orbit: Vec<usize>,
    genus: usize,
}

#[derive(Debug, Serialize)]
struct GenusPayload {
    degree: usize,
    elements: Vec<PermJson>,
    orbits: Vec<OrbitJson>,
}

fn genus_checks(tuple: &[Images], claimed: &[OrbitJson]) -> Vec<Check> {
    let twice = check::twice_genus_per_orbit(tuple);
    let agree = twice.len() == claimed.len()
        && twice
            .iter()
            .zip(claimed)
            .all(|((o, t), c)| *o == c.orbit && *t >= 0 && *t == 2 * c.genus as i64);
    vec![Check::new("genus_per_orbit", agree)]
}

fn parse_input_tuple(args: &[String]) -> Result<Vec<Permutation>, Failure> {
    let mut tuple = Vec::new();
    for a in args {
        tuple.extend(parse_tuple(a).map_err(|e| Failure::Usage(format!("{a:?}: {e}")))?);
    }
    let n = tuple.iter().map(Permutation::degree).max().ok_or_else(|| Failure::Usage("empty tuple".into()))?;
    tuple
        .iter()
        .map(|p| p.embed(n).map_err(|e| Failure::Usage(e.to_string())))
        .collect()
}

fn cmd_genus(args: &[String]) -> Result<Outcome<GenusPayload>, Failure> {
    let tuple = parse_input_tuple(args)?;
    let orbits: Vec<OrbitJson> = genus(&tuple)?
        .into_iter()
        .map(|o| OrbitJson { orbit: o.orbit, genus: o.genus })
        .collect();
    let imgs = images(&tuple);
    let mut checks = vec![Check::new(
        "product_identity",
        check::product(&imgs).is_some_and(|p| check::is_identity(&p)),
    )];
    checks.extend(genus_checks(&imgs, &orbits));
    let mut text = String::new();
    for o in &orbits {
        let _ = writeln!(text, "orbit {:?}: genus {}", o.orbit, o.genus);
    }
    Ok(Outcome {
        result: GenusPayload {
            degree: tuple[0].degree(),
            elements: perms(&tuple),
            orbits,
        },
        checks,
        text,
        max_solve: None,
    })
}

#[derive(Debug, Serialize)]
struct MinDegreePayload {
    orders: [usize; 3],
    min_degree: usize,
    absent_at: Vec<usize>,
    witness: Vec<PermJson>,
}

fn cmd_mindegree(orders: [usize; 3], b: &BudgetArgs) -> Result<Outcome<MinDegreePayload>, Failure> {
    let budget = SearchBudget {
        max_degree: b.max_degree,
        max_nodes: b.max_nodes,
        time_cap_secs: b.time_cap,
    };
    let deadline = Deadline(Instant::now() + Duration::from_secs(b.time_cap));
    let [x, y, z] = orders;
    let m = min_degree_with(x, y, z, &budget, &deadline)?;
    let checks = check::tuple_checks(&images(&m.witness), &orders)
        .into_iter()
        .filter(|c| c.name != "cycle_shape")
        .chain([Check::new(
            "absence_below",
            m.absent_at == (1..m.degree).collect::<Vec<_>>(),
        )])
        .collect();
    let mut text = String::new();
    let _ = writeln!(text, "{}", m.degree);
    write_elements(&mut text, &["x", "y", "z"].map(String::from), &m.witness);
    Ok(Outcome {
        result: MinDegreePayload {
            orders,
            min_degree: m.degree,
            absent_at: m.absent_at,
            witness: perms(&m.witness),
        },
        checks,
        text,
        max_solve: None,
    })
}

#[derive(Debug, Serialize)]
struct PointJson {
    label: String,
    order: usize,
    cycle_lengths: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct CoverPayload {
    degree: usize,
    branch_points: Vec<PointJson>,
    orbits: Vec<OrbitJson>,
    split_tree: TreeJson,
    elements: Vec<PermJson>,
}

fn cmd_cover(orders: &[usize], labels: Option<&[String]>) -> Result<Outcome<CoverPayload>, Failure> {
    let spec = match labels {
        Some(l) => BranchSpec::new(orders.to_vec(), l.to_vec())?,
        None => BranchSpec::with_default_labels(orders.to_vec())?,
    };
    let r = branch_data_report(&spec)?;
    let orbits: Vec<OrbitJson> = r
        .genus_per_orbit
        .into_iter()
        .map(|o| OrbitJson { orbit: o.orbit, genus: o.genus })
        .collect();
    let imgs = images(&r.tuple.elements);
    let mut checks = check::tuple_checks(&imgs, orders);
    checks.extend(genus_checks(&imgs, &orbits));
    let mut text = String::new();
    let _ = writeln!(text, "degree: {}", r.degree);
    for p in &r.per_point_ramification {
        let _ = writeln!(text, "{} (order {}): {:?}", p.label, p.order, p.cycle_lengths);
    }
    for o in &orbits {
        let _ = writeln!(text, "orbit of size {}: genus {}", o.orbit.len(), o.genus);
    }
    write_elements(&mut text, spec.branch_points(), &r.tuple.elements);
    Ok(Outcome {
        result: CoverPayload {
            degree: r.degree,
            branch_points: r
                .per_point_ramification
                .into_iter()
                .map(|p| PointJson {
                    label: p.label,
                    order: p.order,
                    cycle_lengths: p.cycle_lengths,
                })
                .collect(),
            orbits,
            split_tree: (&r.tuple.split_tree).into(),
            elements: perms(&r.tuple.elements),
        },
        checks,
        text,
        max_solve: None,
    })
}

struct Emitter<'a> {
    cli: &'a Cli,
    echo: CommandEcho,
    start: Instant,
    out: &'a mut dyn Write,
}

impl Emitter<'_> {
    fn emit<T: Serialize>(&mut self, r: Result<Outcome<T>, Failure>, err: &mut dyn Write) -> i32 {
        let o = match r {
            Ok(o) => o,
            Err(f) => {
                let _ = writeln!(err, "error: {}", f.message());
                return f.code();
            }
        };
        let verification = Verification::from_checks(o.checks);
        let passed = verification.passed;
        let written = if self.cli.json {
            let env = Envelope {
                schema: SCHEMA,
                command: self.echo.clone(),
                seed: self.cli.seed,
                result: o.result,
                timing: self.cli.timing.then(|| Timing {
                    elapsed_ms: self.start.elapsed().as_secs_f64() * 1e3,
                    max_solve_ms: o.max_solve.map(|d| d.as_secs_f64() * 1e3),
                }),
                verification,
            };
            serde_json::to_writer_pretty(&mut *self.out, &env)
                .map_err(std::io::Error::from)
                .and_then(|()| writeln!(self.out))
        } else {
            let mut text = o.text;
            let failed: Vec<&str> = verification.checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect();
            if failed.is_empty() {
                let _ = writeln!(text, "verified: {} checks passed", verification.checks.len());
            } else {
                let _ = writeln!(text, "verification FAILED: {}", failed.join(", "));
            }
            if self.cli.timing {
                let _ = writeln!(text, "elapsed: {:.3} ms", self.start.elapsed().as_secs_f64() * 1e3);
            }
            self.out.write_all(text.as_bytes())
        };
        if let Err(e) = written {
            let _ = writeln!(err, "error: {e}");
            return EXIT_VERIFY;
        }
        if passed {
            EXIT_OK
        } else {
            let _ = writeln!(err, "error: emitted result failed verification");
            EXIT_VERIFY
        }
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let echo = CommandEcho {
        name: cli.command.name().to_string(),
        args: args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
    };
    let seed = cli.seed;
    let mut em = Emitter {
        cli: &cli,
        echo,
        start: Instant::now(),
        out,
    };
    match &cli.command {
        Command::Solve { a, b, c } => em.emit(cmd_solve([*a, *b, *c], seed), err),
        Command::Extend { orders } => em.emit(cmd_extend(orders, seed), err),
        Command::Survey { max_n, jobs } => em.emit(cmd_survey(*max_n as usize, jobs.map(|j| j as usize), seed), err),
        Command::Genus { tuple } => em.emit(cmd_genus(tuple), err),
        Command::Mindegree { a, b, c, budget } => em.emit(cmd_mindegree([*a, *b, *c], budget), err),
        Command::Cover { orders, labels } => em.emit(cmd_cover(orders, labels.as_deref()), err),
    }
}
