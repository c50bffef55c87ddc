//! Command-line front end. [`run`] returns the process exit code:
//! 0 when the property holds or the sweep passes, 1 when it fails, 2 on usage
//! or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use factorspec_core::{
    graph6, rho_hnb, spectral_radius, strictly_less, ConditionReport, DeciderCaps, DegreeBounds,
    DegreeFunctions, FactorMode, Graph, SplitJoin, StrictVerdict, VertexSet, DEFAULT_TOL,
};

use crate::catalog::{open_graph6, read_graph6_file};
use crate::error::{Error, Result};
use crate::mine::{mine_extremal, MineReport};
use crate::report::{round_sig, to_json};
use crate::suite::{equivalence_suite, SuiteKind, SuiteReport};
use crate::verify::{self, VerifyReport};
use crate::worker_pool;

#[derive(Debug, Parser)]
#[command(
    name = "factorspec",
    version,
    about = "Exact factor deciders and spectral checks for small graphs"
)]
struct Cli {
    /// Print one JSON document instead of a text table.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timings in reports (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide a factor property for one graph.
    Check(CheckArgs),
    /// Spectral radius of a graph or of H_{n,b}.
    Rho(RhoArgs),
    /// Emit an extremal graph as graph6.
    Construct {
        #[command(subcommand)]
        shape: Shape,
    },
    /// Run a parameter-grid check.
    Verify {
        #[command(subcommand)]
        check: VerifyCmd,
    },
    /// Find the largest spectral radius among catalog graphs lacking the property.
    Mine(MineArgs),
    /// Compare a decider with its oracle over a catalog.
    Suite(SuiteArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMode {
    /// all [a,b]-factors
    Integer,
    /// all fractional [a,b]-factors
    Fractional,
    /// a (g,f)-factor
    Gf,
    /// all (g,f)-factors
    AllGf,
    /// a fractional (g,f)-factor
    FractionalGf,
    /// all fractional (g,f)-factors
    AllFractionalGf,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Graph as a graph6 record.
    #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
    g6: Option<String>,
    /// Edge-list file: first line the order, then one `u v` pair per line.
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long, value_enum, default_value_t = CheckMode::Integer)]
    mode: CheckMode,
    /// Lower degree function, one integer per vertex.
    #[arg(long, value_name = "FILE")]
    g: Option<PathBuf>,
    /// Upper degree function, one integer per vertex.
    #[arg(long, value_name = "FILE")]
    f: Option<PathBuf>,
    /// Largest order the exhaustive deciders accept.
    #[arg(long, value_name = "N")]
    cap: Option<usize>,
}

#[derive(Debug, Args)]
struct RhoArgs {
    #[arg(long, conflicts_with = "hnb", required_unless_present = "hnb")]
    g6: Option<String>,
    /// H_{n,b} given as `n,b`, evaluated through its quotient matrix.
    #[arg(long, value_name = "N,B")]
    hnb: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Debug, Subcommand)]
enum Shape {
    /// K_{b-1} ∇ (K_1 ∪ K_{n-b})
    Hnb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        b: usize,
    },
    /// K_{c+2b-4} ∇ (K_2 ∪ K_{n-c-2b+2}), c = ceil((2b^2+2b)/a)
    G1 {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        n: usize,
    },
    /// K_{4b} ∇ (K_2 ∪ K_{n-4b-2})
    G2 {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        n: usize,
    },
    /// K_1 ∇ (K_r ∪ K_{n-1-r})
    K1join {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// G1 and G2 stay below n-2 at the smallest admissible order.
    Lemma23 {
        #[arg(long, default_value_t = 5)]
        b_max: usize,
    },
    /// The H_{n,b} witness values δ = -2 and θ = -1.
    Lemma24 {
        #[arg(long, default_value_t = 40)]
        n_max: usize,
    },
    /// ρ(G) <= sqrt(2m - n + 1) over catalog files.
    Hong {
        #[arg(long, value_name = "FILE", required = true, num_args = 1..)]
        input: Vec<PathBuf>,
    },
    /// Quotient and dense spectral radii of H_{n,b} agree.
    Quotient {
        #[arg(long, value_delimiter = ',', default_values_t = [10, 100, 1000])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 5])]
        b: Vec<usize>,
    },
    /// K_1 ∇ (K_r ∪ K_{n-1-r}) stays below n-2.
    K1join {
        #[arg(long, value_delimiter = ',', default_values_t = [10, 20, 50, 100])]
        n: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMode {
    Integer,
    Fractional,
}

impl From<SweepMode> for FactorMode {
    fn from(m: SweepMode) -> FactorMode {
        match m {
            SweepMode::Integer => FactorMode::Integer,
            SweepMode::Fractional => FactorMode::Fractional,
        }
    }
}

#[derive(Debug, Args)]
struct MineArgs {
    /// graph6 catalog; every graph must have the same order.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, value_enum, default_value_t = SweepMode::Integer)]
    mode: SweepMode,
    /// Skip malformed records instead of failing.
    #[arg(long)]
    lenient: bool,
    #[arg(long, value_name = "N")]
    cap: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteMode {
    Integer,
    Fractional,
    GfSpecialization,
    LuSpecialization,
}

#[derive(Debug, Args)]
struct SuiteArgs {
    #[arg(long, value_name = "FILE", required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    /// Largest order included (default 7 integer, 8 fractional, 6 specializations).
    #[arg(long)]
    nmax: Option<usize>,
    /// Parameter pairs as `a:b`, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = ["1:2".to_string(), "1:3".to_string(), "2:3".to_string()])]
    grid: Vec<String>,
    #[arg(long, value_enum, default_value_t = SuiteMode::Integer)]
    mode: SuiteMode,
}

struct Outcome {
    text: String,
    json: String,
    code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let body = if cli.json { o.json } else { o.text };
            let _ = writeln!(out, "{}", body.trim_end());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Check(args) => check(args),
        Command::Rho(args) => rho(args),
        Command::Construct { shape } => construct(shape),
        Command::Verify { check } => verify_cmd(check),
        Command::Mine(args) => mine(args, cli.timing),
        Command::Suite(args) => suite(args, cli.timing),
    }
}

fn code(holds: bool) -> i32 {
    if holds {
        0
    } else {
        1
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_num(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| {
        Error::Input(format!(
            "line {line}: expected a non-negative integer, got {token:?}"
        ))
    })
}

/// Edge list: the first data line holds the order, every later one an edge.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (line, first) = lines.next().ok_or_else(|| {
        Error::Input("edge list is empty; expected the vertex count first".into())
    })?;
    let n = parse_num(first, line)?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Input(format!(
                "line {line}: expected `u v`, got {l:?}"
            )));
        }
        edges.push((parse_num(toks[0], line)?, parse_num(toks[1], line)?));
    }
    Ok(Graph::from_edge_list(n, edges)?)
}

fn parse_function(path: &Path) -> Result<Vec<usize>> {
    let text = read_text(path)?;
    let mut values = Vec::new();
    for (line, l) in data_lines(&text) {
        for tok in l.split_whitespace() {
            values.push(parse_num(tok, line)?);
        }
    }
    Ok(values)
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    match (&input.g6, &input.edges) {
        (Some(code), _) => Ok(graph6::parse(code.as_bytes())?),
        (None, Some(path)) => parse_edge_list(&read_text(path)?),
        (None, None) => Err(Error::Input("either --g6 or --edges is required".into())),
    }
}

fn bounds(a: Option<usize>, b: Option<usize>) -> Result<DegreeBounds> {
    match (a, b) {
        (Some(a), Some(b)) => Ok(DegreeBounds::new(a, b)?),
        _ => Err(Error::Input(
            "--a and --b are required for this mode".into(),
        )),
    }
}

fn caps(cap: Option<usize>) -> DeciderCaps {
    match cap {
        Some(c) => DeciderCaps {
            pair_cap: c,
            subset_cap: c,
        },
        None => DeciderCaps::default(),
    }
}

#[derive(Serialize)]
struct CheckJson {
    mode: &'static str,
    n: usize,
    a: Option<usize>,
    b: Option<usize>,
    verdict: bool,
    min_value: i64,
    threshold: i64,
    witness_s: Vec<usize>,
    witness_t: Option<Vec<usize>>,
    pairs_examined: u64,
}

fn check(args: &CheckArgs) -> Result<Outcome> {
    let g = load_graph(&args.input)?;
    let caps = caps(args.cap);
    let functions = || -> Result<DegreeFunctions> {
        match (&args.g, &args.f) {
            (Some(gp), Some(fp)) => Ok(DegreeFunctions::new(
                parse_function(gp)?,
                parse_function(fp)?,
            )?),
            (None, None) => Ok(DegreeFunctions::constant(g.n(), bounds(args.a, args.b)?)),
            _ => Err(Error::Input("--g and --f must be given together".into())),
        }
    };
    let (name, report): (&'static str, ConditionReport) = match args.mode {
        CheckMode::Integer => (
            "integer",
            caps.has_all_ab_factors(&g, bounds(args.a, args.b)?)?,
        ),
        CheckMode::Fractional => (
            "fractional",
            caps.has_all_fractional_ab_factors(&g, bounds(args.a, args.b)?)?,
        ),
        CheckMode::Gf => ("gf", caps.has_gf_factor(&g, &functions()?)?),
        CheckMode::AllGf => ("all-gf", caps.has_all_gf_factors(&g, &functions()?)?),
        CheckMode::FractionalGf => (
            "fractional-gf",
            caps.anstee_fractional_gf(&g, &functions()?)?,
        ),
        CheckMode::AllFractionalGf => (
            "all-fractional-gf",
            caps.lu_all_fractional_gf(&g, &functions()?)?,
        ),
    };
    let members = |s: &VertexSet| s.iter().collect::<Vec<_>>();
    let body = CheckJson {
        mode: name,
        n: g.n(),
        a: args.a,
        b: args.b,
        verdict: report.verdict,
        min_value: report.min_value,
        threshold: report.threshold,
        witness_s: members(&report.witness_s),
        witness_t: report.witness_t.as_ref().map(members),
        pairs_examined: report.pairs_examined,
    };
    let (first, second) = match args.mode {
        CheckMode::Integer | CheckMode::Fractional => ("S", "T"),
        _ => ("D", "S"),
    };
    let mut text = String::new();
    let _ = writeln!(text, "mode       {name}");
    let _ = writeln!(text, "order      {}", g.n());
    let _ = writeln!(
        text,
        "verdict    {}",
        if report.verdict { "holds" } else { "fails" }
    );
    let _ = writeln!(
        text,
        "minimum    {} (threshold {})",
        report.min_value, report.threshold
    );
    let _ = writeln!(text, "{first:<10} {}", report.witness_s);
    if let Some(t) = &report.witness_t {
        let _ = writeln!(text, "{second:<10} {t}");
    }
    let _ = writeln!(text, "examined   {}", report.pairs_examined);
    Ok(Outcome {
        text,
        json: to_json("check", &body),
        code: code(report.verdict),
    })
}

#[derive(Serialize)]
struct RhoJson {
    n: usize,
    rho: f64,
    n_minus_2: i64,
    exceeds: bool,
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Input(format!("expected `n,b`, got {s:?}"));
    let (x, y) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        x.trim().parse().map_err(|_| bad())?,
        y.trim().parse().map_err(|_| bad())?,
    ))
}

fn rho(args: &RhoArgs) -> Result<Outcome> {
    let (n, value) = match (&args.g6, &args.hnb) {
        (Some(code), _) => {
            let g = graph6::parse(code.as_bytes())?;
            (g.n(), spectral_radius(&g, args.tol)?.rho)
        }
        (None, Some(pair)) => {
            let (n, b) = parse_pair(pair)?;
            (n, rho_hnb(n, b)?)
        }
        (None, None) => return Err(Error::Input("either --g6 or --hnb is required".into())),
    };
    let n_minus_2 = n as i64 - 2;
    let exceeds = strictly_less(n_minus_2 as f64, value, args.tol) == StrictVerdict::Holds;
    let body = RhoJson {
        n,
        rho: round_sig(value),
        n_minus_2,
        exceeds,
    };
    let text = format!(
        "rho        {}\nn-2        {n_minus_2}\nexceeds    {}\n",
        round_sig(value),
        if exceeds { "yes" } else { "no" }
    );
    Ok(Outcome {
        text,
        json: to_json("rho", &body),
        code: 0,
    })
}

#[derive(Serialize)]
struct ConstructJson {
    graph6: String,
    n: usize,
    left: usize,
    center: usize,
    right: usize,
}

fn construct(shape: &Shape) -> Result<Outcome> {
    let s = match *shape {
        Shape::Hnb { n, b } => SplitJoin::hnb(n, b)?,
        Shape::G1 { a, b, n } => SplitJoin::g1(a, b, n)?,
        Shape::G2 { b, n } => SplitJoin::g2(b, n)?,
        Shape::K1join { n, r } => SplitJoin::k1_join(n, r)?,
    };
    let code6 = graph6::encode_string(&s.graph());
    let body = ConstructJson {
        graph6: code6.clone(),
        n: s.order(),
        left: s.left,
        center: s.center,
        right: s.right,
    };
    Ok(Outcome {
        text: code6,
        json: to_json("construct", &body),
        code: 0,
    })
}

fn verify_cmd(check: &VerifyCmd) -> Result<Outcome> {
    let report = match check {
        VerifyCmd::Lemma23 { b_max } => verify::lemma23(*b_max)?,
        VerifyCmd::Lemma24 { n_max } => verify::lemma24(*n_max)?,
        VerifyCmd::Hong { input } => {
            let mut graphs = Vec::new();
            for path in input {
                graphs.extend(read_graph6_file(path)?);
            }
            verify::hong(&graphs)?
        }
        VerifyCmd::Quotient { n, b } => verify::quotient(n, b)?,
        VerifyCmd::K1join { n } => verify::k1_join(n)?,
    };
    Ok(Outcome {
        text: verify_text(&report),
        json: to_json("verify", &report),
        code: code(report.passed()),
    })
}

fn verify_text(report: &VerifyReport) -> String {
    let mut text = String::new();
    for c in &report.cases {
        let values: Vec<String> = c.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(
            text,
            "{:<6} {:<24} {}",
            if c.holds { "ok" } else { "FAIL" },
            c.params,
            values.join(" ")
        );
    }
    let _ = writeln!(
        text,
        "{}: {} cases, {} failures",
        report.check, report.cases_run, report.failures
    );
    text
}

fn mine(args: &MineArgs, timing: bool) -> Result<Outcome> {
    let bounds = DegreeBounds::new(args.a, args.b)?;
    let caps = caps(args.cap);
    let pool = worker_pool()?;
    let stream = open_graph6(&args.input)?.lenient(args.lenient);
    let mut report: MineReport =
        pool.install(|| mine_extremal(stream, bounds, args.mode.into(), &caps))?;
    if !timing {
        report.elapsed = None;
    }
    let opt = |x: Option<f64>| x.map_or("-".to_string(), |v| v.to_string());
    let mut text = String::new();
    let p = &report.params;
    let _ = writeln!(
        text,
        "params         n={} a={} b={} {}",
        p.n, p.a, p.b, p.mode
    );
    let _ = writeln!(text, "examined       {}", report.graphs_examined);
    let _ = writeln!(text, "failing        {}", report.failing_count);
    let _ = writeln!(text, "max rho        {}", opt(report.max_rho_failing));
    let _ = writeln!(
        text,
        "argmax         {}",
        report.argmax_graph.as_deref().unwrap_or("-")
    );
    let _ = writeln!(text, "rho(H_n,b)     {}", opt(report.rho_hnb_reference));
    let _ = writeln!(text, "argmax is Hnb  {}", report.hnb_is_argmax);
    if let Some(t) = report.elapsed {
        let _ = writeln!(text, "elapsed        {t}s");
    }
    Ok(Outcome {
        text,
        json: to_json("mine", &report),
        code: 0,
    })
}

fn parse_grid(items: &[String]) -> Result<Vec<DegreeBounds>> {
    items
        .iter()
        .map(|s| {
            let bad = || Error::Input(format!("grid entries look like `a:b`, got {s:?}"));
            let (a, b) = s.split_once(':').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            Ok(DegreeBounds::new(a, b)?)
        })
        .collect()
}

fn suite(args: &SuiteArgs, timing: bool) -> Result<Outcome> {
    let kind = match args.mode {
        SuiteMode::Integer => SuiteKind::Integer,
        SuiteMode::Fractional => SuiteKind::Fractional,
        SuiteMode::GfSpecialization => SuiteKind::GfSpecialization,
        SuiteMode::LuSpecialization => SuiteKind::LuSpecialization,
    };
    let grid = parse_grid(&args.grid)?;
    let mut graphs = Vec::new();
    for path in &args.input {
        graphs.extend(read_graph6_file(path)?);
    }
    let pool = worker_pool()?;
    let n_max = args.nmax.unwrap_or(kind.default_n_max());
    let mut report: SuiteReport =
        pool.install(|| equivalence_suite(&graphs, n_max, &grid, kind))?;
    if !timing {
        report.elapsed = None;
    }
    let mut text = String::new();
    for m in &report.mismatches {
        let _ = writeln!(
            text,
            "mismatch  {}  a={} b={}  decider={} oracle={}",
            m.graph6, m.a, m.b, m.decider, m.oracle
        );
    }
    let _ = writeln!(
        text,
        "{}: {} cases, {} mismatches",
        report.suite,
        report.cases_run,
        report.mismatches.len()
    );
    if let Some(t) = report.elapsed {
        let _ = writeln!(text, "elapsed {t}s");
    }
    Ok(Outcome {
        text,
        json: to_json("suite", &report),
        code: code(report.passed()),
    })
}
