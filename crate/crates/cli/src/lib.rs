//! Command-line front end: instance generation, splitting, exact search,
//! verification and the reproduction tables.

pub mod checks;
pub mod corpus;
pub mod tables;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use covering::exact::{covering_number_exact, feasible_k_counted, Feasibility, SolverLimits};
use covering::format::{parse_hyg, parse_partition, write_hyg, write_partition, LevellingSidecar};
use covering::generators as gens;
use covering::graph_cover::{cover_graph_k, cover_multigraph_k, hall_cover};
use covering::lll::{cover_recursive, BalanceRule, CoverCase, LllParams, DEFAULT_LAMBDA};
use covering::{
    level, verify_cover_partition, CoverPartition, Error, MultiHypergraph, Verification,
};
use serde::Serialize;
use serde_json::{json, Value};

use tables::{run_table, TableFormat, TableId, TableSpec};

#[derive(Debug, Parser)]
#[command(
    name = "covering",
    version,
    about = "Split hypergraph edges into covering classes"
)]
pub struct Cli {
    /// Suppress progress and summary messages.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Print a machine-readable run record instead of the usual output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Master seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an instance.
    Gen(GenArgs),
    /// Split an instance into k covering classes.
    Cover(CoverArgs),
    /// Exact covering number, or decide a single k.
    Exact(ExactArgs),
    /// Check a partition file against an instance.
    Verify { input: PathBuf, partition: PathBuf },
    /// Print a reproduction table.
    Table(TableArgs),
    /// Write the dual hypergraph.
    Dual {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write an (r, d)-levelling and its edge map.
    Level(LevelArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub family: Family,
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Points and hyperplanes of PG(t, q), q prime.
    Pg {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        q: usize,
    },
    /// The Fano plane.
    Fano,
    /// Large subsets of [d] against the sets containing each i.
    Cube {
        #[arg(long)]
        d: usize,
    },
    /// Weighted triangle with covering number below k.
    Triangle {
        #[arg(long)]
        k: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// Graph on k+2 vertices with degrees (k+1, k, ..., k), k odd.
    Oddnear {
        #[arg(long)]
        k: usize,
    },
    /// Add one new vertex to every edge.
    Extend { input: PathBuf },
    /// Repeat every edge s times.
    Multiply {
        input: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// The (s, d)-expansion.
    Expand {
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        copies: Option<usize>,
    },
    /// Configuration-model d-regular r-uniform multihypergraph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Graph,
    Multigraph,
    Hall,
    Lll,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ForceCase {
    Direct,
    Recursive,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub algo: Algo,
    #[arg(long)]
    pub k: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Degree-threshold multiplier for the recursive randomized splitter.
    #[arg(long, default_value_t = DEFAULT_LAMBDA)]
    pub lambda: f64,
    /// Resampling rounds (lll) or search nodes (exact).
    #[arg(long)]
    pub budget: Option<u64>,
    /// Demand the ⌈d/2 − Λ⌉ balance instead of the practical one.
    #[arg(long)]
    pub strict_balance: bool,
    #[arg(long, value_enum)]
    pub force_case: Option<ForceCase>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub k: Option<usize>,
    /// Search-node budget per decision.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Sequential search (the search is always sequential; accepted for scripts).
    #[arg(long)]
    pub deterministic: bool,
    /// Where to write the witness partition.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub id: TableId,
    #[arg(long, default_value = "text")]
    pub format: TableFormat,
    #[arg(long, default_value_t = 2)]
    pub k_min: usize,
    #[arg(long, default_value_t = 6)]
    pub k_max: usize,
    /// Instances per corpus cell.
    #[arg(long, default_value_t = 100)]
    pub corpus: usize,
}

#[derive(Debug, Args)]
pub struct LevelArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Where to write the edge-map sidecar.
    #[arg(long)]
    pub map: Option<PathBuf>,
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exit {
    Success,
    /// Verification or feasibility failure.
    Failure,
    InputError,
    BudgetExhausted,
}

impl Exit {
    pub fn code(self) -> i32 {
        match self {
            Exit::Success => 0,
            Exit::Failure => 1,
            Exit::InputError => 2,
            Exit::BudgetExhausted => 3,
        }
    }

    fn of(e: &Error) -> Self {
        match e {
            Error::Input(_) | Error::Parse { .. } | Error::Unsupported(_) => Exit::InputError,
            Error::Exhausted { .. } => Exit::BudgetExhausted,
            Error::Infeasible(_) | Error::Internal(_) => Exit::Failure,
        }
    }
}

/// Machine-readable summary of one invocation.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub command: String,
    pub inputs: Value,
    pub seed: u64,
    pub exit: Exit,
    pub result: Value,
    pub timings: Value,
}

/// Everything an invocation produces; `main` only prints and exits.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub log: Vec<String>,
    pub record: RunRecord,
}

struct Step {
    stdout: String,
    log: Vec<String>,
    result: Value,
    exit: Exit,
}

impl Step {
    fn ok(stdout: String, result: Value) -> Self {
        Self {
            stdout,
            log: Vec::new(),
            result,
            exit: Exit::Success,
        }
    }
}

type StepResult = std::result::Result<Step, CliError>;

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn read(path: &Path) -> std::result::Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_hyg(path: &Path) -> std::result::Result<MultiHypergraph, CliError> {
    parse_hyg(&read(path)?).map_err(|e| match e {
        Error::Parse { line, msg } => CliError::Core(Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        }),
        other => other.into(),
    })
}

fn write_or_stdout(path: Option<&Path>, text: String) -> std::result::Result<String, CliError> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn describe(h: &MultiHypergraph) -> Value {
    json!({
        "vertices": h.n_vertices(),
        "edges": h.edge_count(),
        "instances": h.instance_count(),
        "min_degree": h.min_degree(),
        "max_edge_size": h.max_edge_size(),
    })
}

fn classes_json(p: &CoverPartition) -> Value {
    serde_json::to_value(covering::format::PartitionFile::from_partition(p)).expect("plain data")
}

pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let (command, inputs) = describe_command(&cli.command);
    let step = match &cli.command {
        Command::Gen(a) => gen(a, cli.seed),
        Command::Cover(a) => cover(a, cli.seed),
        Command::Exact(a) => exact(a),
        Command::Verify { input, partition } => verify(input, partition),
        Command::Table(a) => table(a, cli.seed),
        Command::Dual { input, output } => dual(input, output.as_deref()),
        Command::Level(a) => level_cmd(a),
    };
    let step = step.unwrap_or_else(|e| {
        let (exit, msg, extra) = match &e {
            CliError::Core(err) => {
                let extra = match err {
                    Error::Exhausted { bad_vertices, .. } => {
                        json!({ "bad_vertices": bad_vertices })
                    }
                    _ => json!({}),
                };
                (Exit::of(err), err.to_string(), extra)
            }
            CliError::Io(msg) => (Exit::InputError, msg.clone(), json!({})),
        };
        Step {
            stdout: String::new(),
            log: vec![format!("error: {msg}")],
            result: json!({ "error": msg, "detail": extra }),
            exit,
        }
    });
    let elapsed = start.elapsed();
    Outcome {
        stdout: step.stdout,
        log: step.log,
        record: RunRecord {
            command,
            inputs,
            seed: cli.seed,
            exit: step.exit,
            result: step.result,
            timings: json!({ "elapsed_ms": elapsed.as_secs_f64() * 1000.0 }),
        },
    }
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn describe_command(c: &Command) -> (String, Value) {
    match c {
        Command::Gen(a) => ("gen".into(), json!({ "family": format!("{:?}", a.family) })),
        Command::Cover(a) => (
            "cover".into(),
            json!({
                "input": path_str(&a.input),
                "algo": a.algo,
                "k": a.k,
                "lambda": a.lambda,
                "budget": a.budget,
                "strict_balance": a.strict_balance,
                "force_case": a.force_case.map(|f| format!("{f:?}").to_lowercase()),
            }),
        ),
        Command::Exact(a) => (
            "exact".into(),
            json!({ "input": path_str(&a.input), "k": a.k, "budget": a.budget }),
        ),
        Command::Verify { input, partition } => (
            "verify".into(),
            json!({ "input": path_str(input), "partition": path_str(partition) }),
        ),
        Command::Table(a) => (
            "table".into(),
            json!({ "id": a.id, "k_min": a.k_min, "k_max": a.k_max, "corpus": a.corpus }),
        ),
        Command::Dual { input, .. } => ("dual".into(), json!({ "input": path_str(input) })),
        Command::Level(a) => (
            "level".into(),
            json!({ "input": path_str(&a.input), "r": a.r, "d": a.d }),
        ),
    }
}

fn gen(a: &GenArgs, seed: u64) -> StepResult {
    let h = match &a.family {
        Family::Pg { t, q } => gens::gen_projective(*t, *q)?,
        Family::Fano => gens::gen_fano(),
        Family::Cube { d } => gens::gen_cube(*d)?,
        Family::Triangle { k } => gens::gen_triangle_multi(*k)?,
        Family::Complete { n } => gens::gen_complete(*n)?,
        Family::Oddnear { k } => gens::gen_odd_near_regular(*k)?,
        Family::Extend { input } => gens::extend_by_vertex(&read_hyg(input)?)?,
        Family::Multiply { input, s } => gens::multiply_edges(&read_hyg(input)?, *s)?,
        Family::Expand {
            input,
            s,
            d,
            copies,
        } => {
            let x = gens::expand(&read_hyg(input)?, *s, *d, *copies)?;
            let text = write_hyg(&x.hypergraph);
            let mut step = Step::ok(
                write_or_stdout(a.output.as_deref(), text)?,
                json!({ "hypergraph": describe(&x.hypergraph), "copies": x.copies, "embedded": x.embedded }),
            );
            step.log.push(format!(
                "{} copies; embedded set is vertices 0..{}",
                x.copies,
                x.embedded.len()
            ));
            return Ok(step);
        }
        Family::Random { n, r, d } => gens::gen_random_regular_uniform(*n, *r, *d, seed)?,
    };
    let text = write_hyg(&h);
    Ok(Step::ok(
        write_or_stdout(a.output.as_deref(), text)?,
        json!({ "hypergraph": describe(&h) }),
    ))
}

fn cover(a: &CoverArgs, seed: u64) -> StepResult {
    let h = read_hyg(&a.input)?;
    let mut extra = json!({});
    let p = match a.algo {
        Algo::Graph => cover_graph_k(&h, a.k)?,
        Algo::Multigraph => cover_multigraph_k(&h, a.k)?,
        Algo::Hall => hall_cover(&h, a.k)?,
        Algo::Lll => {
            let params = LllParams {
                lambda: a.lambda,
                round_budget: a.budget,
                seed,
                balance: if a.strict_balance {
                    BalanceRule::Strict
                } else {
                    BalanceRule::Practical
                },
                force_case: a.force_case.map(|f| match f {
                    ForceCase::Direct => CoverCase::Direct,
                    ForceCase::Recursive => CoverCase::Recursive,
                }),
            };
            let out = cover_recursive(&h, a.k, &params)?;
            extra = json!({
                "depth": out.depth,
                "leaves": out.leaves,
                "below_threshold": out.below_threshold,
            });
            out.partition
        }
        Algo::Exact => {
            let limits = SolverLimits {
                node_budget: a.budget.unwrap_or(SolverLimits::default().node_budget),
                ..SolverLimits::default()
            };
            match feasible_k_counted(&h, a.k, limits)?.0 {
                Feasibility::Feasible(p) => p,
                Feasibility::Infeasible => {
                    return Err(Error::Infeasible(format!(
                        "no split into {} covering classes",
                        a.k
                    ))
                    .into())
                }
                Feasibility::Unknown => {
                    return Err(Error::Exhausted {
                        context: "exact search node budget".into(),
                        bad_vertices: vec![],
                    }
                    .into())
                }
            }
        }
    };
    if let Verification::Uncovered { class, vertex } = verify_cover_partition(&h, &p)? {
        return Err(Error::Internal(format!("class {class} misses vertex {vertex}")).into());
    }
    let mut step = Step::ok(
        write_or_stdout(a.output.as_deref(), write_partition(&p))?,
        json!({
            "instance": describe(&h),
            "class_sizes": p.class_sizes(),
            "partition": classes_json(&p),
            "details": extra,
        }),
    );
    step.log.push(format!(
        "verified {}-class partition, class sizes {:?}",
        p.k(),
        p.class_sizes()
    ));
    Ok(step)
}

fn exact(a: &ExactArgs) -> StepResult {
    let h = read_hyg(&a.input)?;
    let limits = SolverLimits {
        node_budget: a.budget.unwrap_or(SolverLimits::default().node_budget),
        ..SolverLimits::default()
    };
    if let Some(k) = a.k {
        let (f, nodes) = feasible_k_counted(&h, k, limits)?;
        let (word, exit, witness) = match &f {
            Feasibility::Feasible(p) => ("feasible", Exit::Success, Some(p)),
            Feasibility::Infeasible => ("infeasible", Exit::Failure, None),
            Feasibility::Unknown => ("unknown", Exit::BudgetExhausted, None),
        };
        let mut step = Step::ok(
            format!("{word}\n"),
            json!({ "k": k, "status": word, "nodes": nodes }),
        );
        step.exit = exit;
        if let Some(p) = witness {
            step.result["witness"] = classes_json(p);
            if let Some(path) = &a.output {
                write_or_stdout(Some(path), write_partition(p))?;
            }
        }
        step.log.push(match f {
            Feasibility::Infeasible => {
                format!("k={k}: every assignment refuted by exhaustive search ({nodes} nodes)")
            }
            Feasibility::Unknown => format!("k={k}: node budget exhausted after {nodes} nodes"),
            Feasibility::Feasible(_) => format!("k={k}: witness found after {nodes} nodes"),
        });
        return Ok(step);
    }
    let out = covering_number_exact(&h, limits)?;
    let mut log = vec![format!(
        "upper bound {} from min degree and edge count / minimum cover",
        out.upper.max(out.lower)
    )];
    for k in &out.refuted {
        log.push(format!("k={k}: refuted by exhaustive search"));
    }
    let stdout = match out.value {
        Some(v) => format!("{v}\n"),
        None => format!("unknown {}..{}\n", out.lower, out.upper),
    };
    let mut step = Step::ok(
        stdout,
        json!({
            "value": out.value,
            "lower": out.lower,
            "upper": out.upper,
            "refuted": out.refuted,
            "nodes": out.nodes,
            "witness": out.witness.as_ref().map(classes_json),
        }),
    );
    if let (Some(path), Some(w)) = (&a.output, &out.witness) {
        write_or_stdout(Some(path), write_partition(w))?;
    }
    if out.value.is_none() {
        step.exit = Exit::BudgetExhausted;
    }
    step.log = log;
    Ok(step)
}

fn verify(input: &Path, partition: &Path) -> StepResult {
    let h = read_hyg(input)?;
    let p = parse_partition(&read(partition)?, &h)?;
    Ok(match verify_cover_partition(&h, &p)? {
        Verification::Valid => Step::ok("valid\n".into(), json!({ "valid": true })),
        Verification::Uncovered { class, vertex } => {
            let mut step = Step::ok(
                format!("invalid: class {class} does not cover vertex {vertex}\n"),
                json!({ "valid": false, "class": class, "vertex": vertex }),
            );
            step.exit = Exit::Failure;
            step
        }
    })
}

fn table(a: &TableArgs, seed: u64) -> StepResult {
    let spec = TableSpec {
        k_range: (a.k_min, a.k_max),
        corpus: a.corpus,
        seed,
        ..TableSpec::new(a.id)
    };
    let t = run_table(&spec)?;
    let mut step = Step::ok(
        t.render(a.format),
        json!({ "headers": t.headers, "rows": t.rows, "unknown": t.unknown, "failed": t.failed }),
    );
    step.exit = if t.unknown {
        Exit::BudgetExhausted
    } else if t.failed {
        Exit::Failure
    } else {
        Exit::Success
    };
    Ok(step)
}

fn dual(input: &Path, output: Option<&Path>) -> StepResult {
    let h = read_hyg(input)?;
    let d = h.dualize()?;
    Ok(Step::ok(
        write_or_stdout(output, write_hyg(&d))?,
        json!({ "hypergraph": describe(&d) }),
    ))
}

fn level_cmd(a: &LevelArgs) -> StepResult {
    let h = read_hyg(&a.input)?;
    let map = level(&h, a.r, a.d)?;
    let target_name = a.output.as_deref().map_or("-".to_string(), path_str);
    if let Some(path) = &a.map {
        let sidecar = LevellingSidecar::new(&map, &path_str(&a.input), &target_name);
        let text = serde_json::to_string(&sidecar).expect("plain data") + "\n";
        write_or_stdout(Some(path), text)?;
    }
    Ok(Step::ok(
        write_or_stdout(a.output.as_deref(), write_hyg(map.target()))?,
        json!({ "target": describe(map.target()) }),
    ))
}
