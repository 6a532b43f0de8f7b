//! Command-line surface over the coloring library.
//!
//! Every command prints one JSON object to stdout (except `gen`, which
//! prints a bare graph6 line). Exit codes are a contract: 0 success,
//! 1 negative result (improper coloring, fuzz violations), 2 usage or parse
//! error, 3 class violation, 4 hypothesis violation, 5 oracle budget
//! exhausted.

mod fuzz;
mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hexachrome_core::atlas::{self, NAMED_GRAPHS};
use hexachrome_core::engine::{
    color_p2p3, color_p2p3_trusted, color_p6, color_p6_trusted, color_thm4_components,
    color_thm5_components, ClassTrace, ColoringOutcome, ComponentTrace, EngineError, TheoremId,
};
use hexachrome_core::io::write_graph6;
use hexachrome_core::oracle::{chromatic_number, verify_coloring, Budget, Coloring, VerifyError};
use hexachrome_core::recognition::classify;
use hexachrome_core::Graph;

use input::Format;
use report::{print_json, ChiJson, ColorJson, ErrorJson, VerifyJson, SCHEMA};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CLASS_VIOLATION: u8 = 3;
const EXIT_HYPOTHESIS_VIOLATION: u8 = 4;
const EXIT_ORACLE_BUDGET: u8 = 5;

/// Constructive colorings for (P6, diamond, K4)-free graphs: at most six
/// colors always, four without a bull, each answer verified and traced.
#[derive(Parser)]
#[command(name = "hexachrome", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report pattern freeness, witnesses, and connectivity.
    Classify(InputArgs),
    /// Color a graph constructively and print the decision trace.
    Color(ColorArgs),
    /// Exact chromatic number with a certifying coloring.
    Chi(InputArgs),
    /// Print a named graph as graph6.
    Gen(GenArgs),
    /// Check a coloring against a graph.
    Verify(VerifyArgs),
    /// Stress the engine on the deterministic corpus stream.
    Fuzz(FuzzArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file; "-" or nothing reads stdin.
    input: Option<PathBuf>,
    /// Input format.
    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Per component: four classes when bull-free, six otherwise.
    Auto,
    /// The (P2+P3, diamond, K4)-free pipeline.
    Thm3,
    /// The bull-free four-coloring, per component.
    Thm4,
    /// The six-coloring around an induced bull, per component.
    Thm5,
    /// Exact search; bound equals the chromatic number.
    Oracle,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Thm3 => "thm3",
            Method::Thm4 => "thm4",
            Method::Thm5 => "thm5",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Args)]
struct ColorArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Coloring routine.
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
    /// Also run the exact oracle and report its chromatic number.
    #[arg(long)]
    verify: bool,
    /// Skip the induced-pattern class check.
    #[arg(long)]
    trust: bool,
}

#[derive(Args)]
struct GenArgs {
    /// Graph name, e.g. bull, cycle(5), grotzsch, schlafli_complement.
    name: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph file; "-" reads stdin.
    graph: PathBuf,
    /// Coloring JSON: a bare array of 1-based colors, or an object with a
    /// "coloring" field; "-" reads stdin.
    coloring: PathBuf,
    /// Graph input format.
    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
}

#[derive(Args)]
struct FuzzArgs {
    /// Stream seed; the same seed replays the same graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest graph order in the stream.
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    /// Number of corpus graphs to run.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Worker threads across independent trials.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Classify(args) => cmd_classify(&args),
        Command::Color(args) => cmd_color(&args),
        Command::Chi(args) => cmd_chi(&args),
        Command::Gen(args) => cmd_gen(&args.name),
        Command::Verify(args) => cmd_verify(&args),
        Command::Fuzz(args) => cmd_fuzz(&args),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn load_graph(args: &InputArgs) -> Result<Graph, ExitCode> {
    let text = input::read_source(args.input.as_deref()).map_err(|e| usage_error(&e))?;
    input::parse_graph(&text, args.format).map_err(|e| usage_error(&e))
}

fn engine_failure(command: &'static str, err: EngineError) -> ExitCode {
    let message = err.to_string();
    match err {
        EngineError::ClassViolation(w) => {
            let mut json = ErrorJson::new(command, "class-violation", message);
            json.error.pattern = Some(w.pattern);
            json.error.vertices = Some(w.vertices);
            print_json(&json);
            ExitCode::from(EXIT_CLASS_VIOLATION)
        }
        EngineError::HypothesisViolation { rule, vertices } => {
            let mut json = ErrorJson::new(command, "hypothesis-violation", message);
            json.error.rule = Some(rule);
            json.error.vertices = Some(vertices);
            print_json(&json);
            ExitCode::from(EXIT_HYPOTHESIS_VIOLATION)
        }
        EngineError::Precondition(_) => usage_error(&message),
        EngineError::Oracle(_) => {
            print_json(&ErrorJson::new(command, "oracle-budget", message));
            ExitCode::from(EXIT_ORACLE_BUDGET)
        }
    }
}

fn improper_vertices(e: &VerifyError) -> Vec<usize> {
    match *e {
        VerifyError::ImproperEdge { u, v, .. } => vec![u, v],
        VerifyError::ColorOutOfRange { v, .. } => vec![v],
        VerifyError::LengthMismatch { .. } => Vec::new(),
    }
}

fn cmd_classify(args: &InputArgs) -> ExitCode {
    let g = match load_graph(args) {
        Ok(g) => g,
        Err(code) => return code,
    };
    print_json(&report::classify_json(&classify(&g)));
    ExitCode::SUCCESS
}

/// Exact search dressed up as an engine outcome; the bound is whatever the
/// oracle proved optimal.
fn oracle_outcome(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    let coloring = chromatic_number(g, budget)?;
    let bound = coloring.colors_used() as usize;
    let classes = (1..=coloring.k)
        .map(|color| ClassTrace {
            color,
            cells: "oracle".to_string(),
            vertices: (0..g.n())
                .filter(|&v| coloring.assignment[v] == color)
                .collect(),
        })
        .collect();
    let components = if g.n() == 0 {
        Vec::new()
    } else {
        vec![ComponentTrace {
            theorem: TheoremId::Oracle,
            case: "exact-search".to_string(),
            vertices: (0..g.n()).collect(),
            anchor: None,
            classes,
        }]
    };
    Ok(ColoringOutcome {
        coloring,
        bound,
        components,
    })
}

fn cmd_color(args: &ColorArgs) -> ExitCode {
    let g = match load_graph(&args.input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let budget = Budget::from_env();
    let result = match args.method {
        Method::Auto => {
            if args.trust {
                color_p6_trusted(&g, &budget)
            } else {
                color_p6(&g, &budget)
            }
        }
        Method::Thm3 => {
            if args.trust {
                color_p2p3_trusted(&g, &budget)
            } else {
                color_p2p3(&g, &budget)
            }
        }
        Method::Thm4 => {
            if !args.trust {
                let report = classify(&g);
                let violation = report.p6_class_violation().cloned().or(report.bull);
                if let Some(w) = violation {
                    return engine_failure("color", EngineError::ClassViolation(w));
                }
            }
            color_thm4_components(&g, &budget)
        }
        Method::Thm5 => {
            if !args.trust {
                if let Some(w) = classify(&g).p6_class_violation() {
                    return engine_failure("color", EngineError::ClassViolation(w.clone()));
                }
            }
            color_thm5_components(&g)
        }
        Method::Oracle => oracle_outcome(&g, &budget),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => return engine_failure("color", e),
    };
    if let Err(e) = verify_coloring(&g, &outcome.coloring) {
        return engine_failure(
            "color",
            EngineError::HypothesisViolation {
                rule: format!("the emitted coloring must be proper: {e}"),
                vertices: improper_vertices(&e),
            },
        );
    }
    let oracle_chi = if args.verify {
        match chromatic_number(&g, &budget) {
            Ok(c) => Some(c.colors_used()),
            Err(e) => return engine_failure("color", e.into()),
        }
    } else {
        None
    };
    print_json(&ColorJson {
        schema: SCHEMA,
        command: "color",
        n: g.n(),
        m: g.edge_count(),
        method: args.method.as_str(),
        coloring: outcome.coloring.assignment.clone(),
        colors_used: outcome.coloring.colors_used(),
        bound: outcome.bound,
        verified: true,
        oracle_chi,
        trace: outcome.components,
    });
    ExitCode::SUCCESS
}

fn cmd_chi(args: &InputArgs) -> ExitCode {
    let g = match load_graph(args) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let coloring = match chromatic_number(&g, &Budget::from_env()) {
        Ok(c) => c,
        Err(e) => return engine_failure("chi", e.into()),
    };
    if let Err(e) = verify_coloring(&g, &coloring) {
        return engine_failure(
            "chi",
            EngineError::HypothesisViolation {
                rule: format!("the oracle's coloring must be proper: {e}"),
                vertices: improper_vertices(&e),
            },
        );
    }
    print_json(&ChiJson {
        schema: SCHEMA,
        command: "chi",
        n: g.n(),
        m: g.edge_count(),
        chi: coloring.colors_used(),
        coloring: coloring.assignment,
        verified: true,
    });
    ExitCode::SUCCESS
}

fn cmd_gen(name: &str) -> ExitCode {
    match atlas::named_graph(name) {
        Ok(g) => {
            report::print_line(&write_graph6(&g));
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&format!("{e}; known names: {}", NAMED_GRAPHS.join(", "))),
    }
}

fn parse_coloring(text: &str) -> Result<Vec<u32>, String> {
    let value: serde_json::Value =
        serde_json::from_str(text.trim()).map_err(|e| format!("coloring: {e}"))?;
    let array = match &value {
        serde_json::Value::Array(a) => a,
        serde_json::Value::Object(o) => o
            .get("coloring")
            .and_then(|v| v.as_array())
            .ok_or_else(|| "coloring: expected an object with a \"coloring\" array".to_string())?,
        _ => return Err("coloring: expected a JSON array of colors".to_string()),
    };
    array
        .iter()
        .enumerate()
        .map(|(i, v)| match v.as_u64() {
            Some(c) if c >= 1 && c <= u64::from(u32::MAX) => Ok(c as u32),
            _ => Err(format!("coloring: entry {i} must be a positive integer")),
        })
        .collect()
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    if args.graph == Path::new("-") && args.coloring == Path::new("-") {
        return usage_error("graph and coloring cannot both come from stdin");
    }
    let graph_text = match input::read_source(Some(&args.graph)) {
        Ok(t) => t,
        Err(e) => return usage_error(&e),
    };
    let g = match input::parse_graph(&graph_text, args.format) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let coloring_text = match input::read_source(Some(&args.coloring)) {
        Ok(t) => t,
        Err(e) => return usage_error(&e),
    };
    let assignment = match parse_coloring(&coloring_text) {
        Ok(a) => a,
        Err(e) => return usage_error(&e),
    };
    let k = assignment.iter().copied().max().unwrap_or(0);
    let coloring = Coloring { k, assignment };
    let base = VerifyJson {
        schema: SCHEMA,
        command: "verify",
        n: g.n(),
        m: g.edge_count(),
        k,
        colors_used: coloring.colors_used(),
        proper: true,
        edge: None,
        message: None,
    };
    match verify_coloring(&g, &coloring) {
        Ok(()) => {
            print_json(&base);
            ExitCode::SUCCESS
        }
        Err(e @ VerifyError::ImproperEdge { u, v, .. }) => {
            print_json(&VerifyJson {
                proper: false,
                edge: Some([u, v]),
                message: Some(e.to_string()),
                ..base
            });
            ExitCode::from(EXIT_NEGATIVE)
        }
        Err(other) => usage_error(&other.to_string()),
    }
}

fn cmd_fuzz(args: &FuzzArgs) -> ExitCode {
    if args.n_max == 0 {
        return usage_error("--n-max must be at least 1");
    }
    let json = fuzz::run(args.seed, args.n_max, args.trials, args.jobs);
    let clean = json.violations == 0;
    print_json(&json);
    if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}
