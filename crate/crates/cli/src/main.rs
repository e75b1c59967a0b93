//! Command-line front end: arrowing checks, exact solves, bound tables,
//! family construction and the property suite, with table or JSON output.
//!
//! Exit codes: 0 success (including a decided "fails" verdict), 1 property
//! failures, 2 expression parse errors, 3 cap/parameter errors, 4 undecided
//! within the given budget.

mod expr;

use std::fmt;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::{json, Value};

use matchwise_core::arrowing::{
    arrows_auto, arrows_bipartite_cover, arrows_generic, ArrowVerdict, Coloring, Decision,
    SearchLimits,
};
use matchwise_core::bounds::{
    bounded_degree_upper, bundle_reports, core_growth_envelope, family_for_alpha,
    generic_reports, ratio_envelope_bundle, ratio_envelope_graph, AsymptoticParams, BoundReport,
    FamilyCase, RatioSequence,
};
use matchwise_core::constructions::{build_bundle, BundleParams};
use matchwise_core::solver::{
    exact_matching_size_ramsey, LevelScan, SolveValue, SolverCaps,
};
use matchwise_core::verify::{run_suite, SuiteConfig};
use matchwise_core::Graph;

use expr::{graph_from_text, parse_graph_expr, GraphExpr};

#[derive(Debug)]
pub enum CliError {
    Parse(expr::ParseError),
    Core(matchwise_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(_) => 3,
        }
    }
}

impl From<matchwise_core::Error> for CliError {
    fn from(e: matchwise_core::Error) -> CliError {
        CliError::Core(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Generic,
    Cover,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFmt {
    G6,
    Dot,
}

#[derive(Parser, Debug)]
#[command(name = "matchwise", version, about = "matching-versus-graph size Ramsey toolkit")]
struct Cli {
    /// worker threads for parallel scans (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Decide host -> (t disjoint edges, target) and show a certificate
    Arrows {
        #[arg(long)]
        host: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// search budget in embedding nodes
        #[arg(long)]
        node_budget: Option<u64>,
    },
    /// Exact matching-target value by canonical host enumeration
    Solve {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 12)]
        max_edges: usize,
        /// defaults to 2 * max-edges, capped at 64
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        node_budget: Option<u64>,
        #[arg(long)]
        wall_clock_secs: Option<u64>,
    },
    /// Closed-form lower/upper bounds per t plus the limit-value bracket
    Bounds {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 8)]
        t_max: u64,
    },
    /// Bundle family member realizing a requested limit value
    Family {
        /// rational in [0,1], e.g. 1, 1/2, 0
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t_max: Option<u64>,
    },
    /// Build a graph expression and serialize it
    Construct {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = OutFmt::G6)]
        out: OutFmt,
    },
    /// Run the randomized property suite
    Verify {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        max_t: Option<u64>,
    },
    /// Decay-envelope curves over core order, as CSV
    Envelope {
        /// degree-growth exponent (also the degree cap for the second curve)
        #[arg(long)]
        c: u64,
        #[arg(long)]
        m_max: u64,
        /// leading constant of the core-growth envelope
        #[arg(long)]
        kc: f64,
        /// when given, adds the bounded-degree host curve with this constant
        #[arg(long)]
        cdelta: Option<f64>,
    },
}

fn rat_str(r: Rational64) -> String {
    r.to_string()
}

fn rat_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn edges_json(edges: &[matchwise_core::Edge]) -> Value {
    Value::Array(
        edges
            .iter()
            .map(|e| json!([e.u, e.v]))
            .collect(),
    )
}

fn print_report(format: Format, table: String, json_value: Value) {
    match format {
        Format::Table => print!("{table}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&json_value).unwrap()),
    }
}

fn certificate_json(cert: Option<&Coloring>) -> Value {
    match cert {
        None => Value::Null,
        Some(c) => json!({
            "host_g6": c.host().to_graph6(),
            "red": edges_json(&c.red_edges()),
            "blue": edges_json(&c.blue_edges()),
        }),
    }
}

fn run_arrows(
    format: Format,
    host_text: &str,
    t: usize,
    target_text: &str,
    method: MethodArg,
    node_budget: Option<u64>,
) -> Result<i32, CliError> {
    let host = graph_from_text(host_text)?;
    let target = graph_from_text(target_text)?;
    let budget = node_budget.unwrap_or(SearchLimits::matching().node_budget);
    let limits = SearchLimits {
        max_edges: host.edge_count().max(1),
        node_budget: budget,
    };
    let verdict: ArrowVerdict = match method {
        MethodArg::Auto => arrows_auto(&host, t, &target, limits)?,
        MethodArg::Generic => {
            let tk2 = Graph::matching(t)?;
            arrows_generic(&host, &tk2, &target, limits)?
        }
        MethodArg::Cover => arrows_bipartite_cover(&host, t, &target)?,
    };
    let (word, cert) = match &verdict.decision {
        Decision::Arrows => ("arrows", None),
        Decision::Fails(c) => ("fails", Some(c.as_ref())),
        Decision::Undecided => ("undecided", None),
    };

    let mut table = String::new();
    table += &format!("verdict: {word}\n");
    table += &format!("method:  {}\n", verdict.method.tag());
    table += &format!("work:    {}\n", verdict.work);
    if let Some(c) = cert {
        let reds: Vec<String> = c.red_edges().iter().map(|e| format!("{}-{}", e.u, e.v)).collect();
        table += &format!("bad coloring, red edges: {}\n", reds.join(" "));
    }
    let j = json!({
        "schema": "matchwise/1",
        "command": "arrows",
        "inputs": {
            "host": host_text,
            "host_g6": host.to_graph6(),
            "t": t,
            "target": target_text,
            "target_g6": target.to_graph6(),
            "method": format!("{method:?}").to_lowercase(),
        },
        "outputs": {
            "verdict": word,
            "method": verdict.method.tag(),
            "work": verdict.work,
            "certificate": certificate_json(cert),
        },
    });
    print_report(format, table, j);
    Ok(if word == "undecided" { 4 } else { 0 })
}

fn level_rows(levels: &[LevelScan]) -> (String, Value) {
    let mut table = String::from("  m  hosts  undecided  settled\n");
    let mut arr = Vec::new();
    for l in levels {
        table += &format!(
            "{:>3}  {:>5}  {:>9}  {}\n",
            l.m,
            l.hosts_tested,
            l.undecided,
            if l.complete { "yes" } else { "no" }
        );
        arr.push(json!({
            "m": l.m,
            "hosts": l.hosts_tested,
            "undecided": l.undecided,
            "complete": l.complete,
        }));
    }
    (table, Value::Array(arr))
}

fn run_solve(
    format: Format,
    t: u64,
    target_text: &str,
    max_edges: usize,
    max_vertices: Option<usize>,
    node_budget: Option<u64>,
    wall_clock_secs: Option<u64>,
) -> Result<i32, CliError> {
    let target = graph_from_text(target_text)?;
    let caps = SolverCaps {
        max_edges,
        max_vertices: max_vertices.unwrap_or((2 * max_edges).min(matchwise_core::MAX_VERTICES)),
        node_budget: node_budget.unwrap_or(SolverCaps::default().node_budget),
        wall_clock: wall_clock_secs.map(Duration::from_secs),
    };
    let result = exact_matching_size_ramsey(t, &target, &caps)?;

    let (value_line, value_json, code) = match result.value {
        SolveValue::Exact(v) => (format!("value: {v}\n"), json!({ "exact": v }), 0),
        SolveValue::Interval { lower, upper } => (
            match upper {
                Some(u) => format!("value: in [{lower}, {u}] (caps hit)\n"),
                None => format!("value: >= {lower} (caps hit)\n"),
            },
            json!({ "lower": lower, "upper": upper }),
            4,
        ),
    };
    let (ltab, ljson) = level_rows(&result.exhaustion);
    let mut table = value_line;
    if let Some(w) = &result.witness {
        table += &format!("witness: {}\n", w.to_graph6());
    }
    if result.isolates_removed > 0 {
        table += &format!("target isolates dropped: {}\n", result.isolates_removed);
    }
    table += &ltab;
    let j = json!({
        "schema": "matchwise/1",
        "command": "solve",
        "inputs": {
            "t": t,
            "target": target_text,
            "target_g6": target.to_graph6(),
            "max_edges": caps.max_edges,
            "max_vertices": caps.max_vertices,
        },
        "outputs": {
            "value": value_json,
            "witness_g6": result.witness.as_ref().map(|w| w.to_graph6()),
            "isolates_removed": result.isolates_removed,
            "exhaustion": ljson,
            "engine": "exact-solver",
        },
    });
    print_report(format, table, j);
    Ok(code)
}

fn bound_rows(reports: &[BoundReport], seq: &RatioSequence) -> (String, Value) {
    let mut table = String::from("  t  lower  upper  lower-src         upper-src         ratio-bracket\n");
    let mut arr = Vec::new();
    for (rep, term) in reports.iter().zip(&seq.terms) {
        table += &format!(
            "{:>3}  {:>5}  {:>5}  {:<16}  {:<16}  [{}, {}]\n",
            rep.t,
            rep.lower,
            rep.upper,
            rep.lower_src.tag(),
            rep.upper_src.tag(),
            rat_str(term.lower_ratio),
            rat_str(term.upper_ratio),
        );
        arr.push(json!({
            "t": rep.t,
            "lower": rep.lower,
            "upper": rep.upper,
            "lower_src": rep.lower_src.tag(),
            "upper_src": rep.upper_src.tag(),
            "lower_ratio": rat_str(term.lower_ratio),
            "lower_ratio_decimal": rat_f64(term.lower_ratio),
            "upper_ratio": rat_str(term.upper_ratio),
            "upper_ratio_decimal": rat_f64(term.upper_ratio),
        }));
    }
    (table, Value::Array(arr))
}

fn bracket_json(seq: &RatioSequence) -> Value {
    json!({
        "lower": rat_str(seq.max_lower),
        "lower_decimal": rat_f64(seq.max_lower),
        "upper": rat_str(seq.inf_upper),
        "upper_decimal": rat_f64(seq.inf_upper),
    })
}

fn run_bounds(format: Format, target_text: &str, t_max: u64) -> Result<i32, CliError> {
    let parsed = parse_graph_expr(target_text).map_err(CliError::Parse)?;
    // bundles get the closed forms, which work far beyond buildable sizes
    let (reports, seq, g6): (Vec<BoundReport>, RatioSequence, Option<String>) = match &parsed {
        GraphExpr::Bundle(ells) => {
            let p = BundleParams::new(ells.clone())?;
            let g6 = build_bundle(&p).ok().map(|g| g.to_graph6());
            (bundle_reports(&p, t_max)?, ratio_envelope_bundle(&p, t_max)?, g6)
        }
        _ => {
            let g = parsed.build()?;
            (
                generic_reports(&g, t_max)?,
                ratio_envelope_graph(&g, t_max, &[])?,
                Some(g.to_graph6()),
            )
        }
    };
    let (rows_tab, rows_json) = bound_rows(&reports, &seq);
    let mut table = rows_tab;
    table += &format!(
        "limit bracket: [{}, {}]  ({:.6} .. {:.6})\n",
        rat_str(seq.max_lower),
        rat_str(seq.inf_upper),
        rat_f64(seq.max_lower),
        rat_f64(seq.inf_upper),
    );
    let j = json!({
        "schema": "matchwise/1",
        "command": "bounds",
        "inputs": {
            "target": target_text,
            "target_g6": g6,
            "t_max": t_max,
        },
        "outputs": {
            "edge_count": seq.edge_count,
            "max_degree": seq.max_degree,
            "per_t": rows_json,
            "limit_bracket": bracket_json(&seq),
        },
    });
    print_report(format, table, j);
    Ok(0)
}

fn run_family(
    format: Format,
    alpha_text: &str,
    n: u64,
    t_max: Option<u64>,
) -> Result<i32, CliError> {
    let alpha: Rational64 = alpha_text.parse().map_err(|_| {
        CliError::Core(matchwise_core::Error::InvalidParams(format!(
            "alpha must be a rational like 1, 1/2 or 0, got {alpha_text:?}"
        )))
    })?;
    let spec = family_for_alpha(alpha, n)?;
    let t_max = t_max.unwrap_or_else(|| 8u64.max(2 * n.isqrt()));
    let seq = ratio_envelope_bundle(&spec.params, t_max)?;
    let st = spec.params.stats();

    let case_line = match spec.case {
        FamilyCase::PositiveAlpha { k } => format!("case: positive limit, k = {k}"),
        FamilyCase::ZeroAlpha { q, a, r } => {
            format!("case: vanishing limit, q = {q}, split {a} x {q} + {r}")
        }
    };
    let mut table = String::new();
    table += &format!("alpha: {}  N: {n}\n", rat_str(spec.alpha));
    table += &format!("{case_line}\n");
    table += &format!("pendant mass s: {}\n", spec.s);
    table += &format!("ell: {:?}\n", spec.params.ell());
    table += &format!(
        "stats: n = {}, m = {}, max degree = {}\n",
        st.vertex_count, st.edge_count, st.max_degree
    );
    table += &format!(
        "limit bracket (t <= {t_max}): [{}, {}]  ({:.6} .. {:.6})\n",
        rat_str(seq.max_lower),
        rat_str(seq.inf_upper),
        rat_f64(seq.max_lower),
        rat_f64(seq.inf_upper),
    );
    let case_json = match spec.case {
        FamilyCase::PositiveAlpha { k } => json!({ "kind": "positive-alpha", "k": k }),
        FamilyCase::ZeroAlpha { q, a, r } => {
            json!({ "kind": "zero-alpha", "q": q, "a": a, "r": r })
        }
    };
    let j = json!({
        "schema": "matchwise/1",
        "command": "family",
        "inputs": { "alpha": alpha_text, "n": n, "t_max": t_max },
        "outputs": {
            "alpha": rat_str(spec.alpha),
            "case": case_json,
            "s": spec.s,
            "ell": spec.params.ell(),
            "stats": {
                "vertex_count": st.vertex_count,
                "edge_count": st.edge_count,
                "max_degree": st.max_degree,
            },
            "limit_bracket": bracket_json(&seq),
        },
    });
    print_report(format, table, j);
    Ok(0)
}

fn run_construct(expr_text: &str, out: OutFmt) -> Result<i32, CliError> {
    let g = graph_from_text(expr_text)?;
    match out {
        OutFmt::G6 => println!("{}", g.to_graph6()),
        OutFmt::Dot => {
            println!("graph g {{");
            for v in 0..g.vertex_count() {
                println!("  {v};");
            }
            for e in g.edges() {
                println!("  {} -- {};", e.u, e.v);
            }
            println!("}}");
        }
    }
    Ok(0)
}

fn run_verify(
    format: Format,
    seed: Option<u64>,
    instances: Option<usize>,
    max_n: Option<usize>,
    max_m: Option<usize>,
    max_t: Option<u64>,
) -> Result<i32, CliError> {
    let defaults = SuiteConfig::default();
    let cfg = SuiteConfig {
        seed: seed.unwrap_or(defaults.seed),
        instances: instances.unwrap_or(defaults.instances),
        max_n: max_n.unwrap_or(defaults.max_n),
        max_m: max_m.unwrap_or(defaults.max_m),
        max_t: max_t.unwrap_or(defaults.max_t),
    };
    let report = run_suite(&cfg);
    let props: Vec<Value> = report
        .properties
        .iter()
        .map(|p| {
            json!({
                "name": p.name,
                "instances": p.instances,
                "failures": p.failures.iter().map(|f| json!({
                    "inputs": f.inputs,
                    "detail": f.detail,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let j = json!({
        "schema": "matchwise/1",
        "command": "verify",
        "inputs": {
            "seed": cfg.seed,
            "instances": cfg.instances,
            "max_n": cfg.max_n,
            "max_m": cfg.max_m,
            "max_t": cfg.max_t,
        },
        "outputs": {
            "passed": report.passed(),
            "properties": props,
        },
    });
    print_report(format, report.render_text(), j);
    Ok(if report.passed() { 0 } else { 1 })
}

fn run_envelope(c: u64, m_max: u64, kc: f64, cdelta: Option<f64>) -> Result<i32, CliError> {
    if m_max < 2 {
        return Err(CliError::Core(matchwise_core::Error::InvalidParams(
            "m-max must be at least 2".into(),
        )));
    }
    let mut grid: Vec<u64> = Vec::new();
    let mut v = 2u64;
    while v < m_max {
        grid.push(v);
        v = v.saturating_mul(2);
    }
    grid.push(m_max);

    match cdelta {
        Some(_) => println!("m,core_growth,bounded_degree"),
        None => println!("m,core_growth"),
    }
    for m in grid {
        let a = AsymptoticParams::new(c as f64, m, kc)?;
        let env = core_growth_envelope(&a)?;
        match cdelta {
            Some(cd) => {
                let bd = bounded_degree_upper(c, m, cd)?;
                println!("{m},{env},{bd}");
            }
            None => println!("{m},{env}"),
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    if let Some(j) = cli.jobs {
        // a second build_global in-process is harmless; first setting wins
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    match cli.cmd {
        Cmd::Arrows { host, t, target, method, node_budget } => {
            run_arrows(cli.format, &host, t, &target, method, node_budget)
        }
        Cmd::Solve { t, target, max_edges, max_vertices, node_budget, wall_clock_secs } => {
            run_solve(cli.format, t, &target, max_edges, max_vertices, node_budget, wall_clock_secs)
        }
        Cmd::Bounds { target, t_max } => run_bounds(cli.format, &target, t_max),
        Cmd::Family { alpha, n, t_max } => run_family(cli.format, &alpha, n, t_max),
        Cmd::Construct { expr, out } => run_construct(&expr, out),
        Cmd::Verify { seed, instances, max_n, max_m, max_t } => {
            run_verify(cli.format, seed, instances, max_n, max_m, max_t)
        }
        Cmd::Envelope { c, m_max, kc, cdelta } => run_envelope(c, m_max, kc, cdelta),
    }
}

fn main() {
    // die quietly when a downstream pipe closes (`... | head`), like cat/grep
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
