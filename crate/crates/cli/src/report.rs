//! JSON report shapes. Every invocation prints exactly one object with a
//! fixed schema tag; identical inputs and flags produce identical bytes.

use std::collections::BTreeMap;

use serde::Serialize;

use hexachrome_core::engine::ComponentTrace;
use hexachrome_core::recognition::ClassifyReport;
use hexachrome_core::PatternName;

pub const SCHEMA: &str = "hexachrome/1";

pub fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    print_line(&text);
}

/// Prints one line; a pipe closed downstream ends the process quietly
/// instead of panicking.
pub fn print_line(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").and_then(|()| out.flush()).is_err() {
        std::process::exit(0);
    }
}

#[derive(Serialize)]
pub struct FreeFlags {
    pub p6: bool,
    pub p2up3: bool,
    pub diamond: bool,
    pub k4: bool,
    pub bull: bool,
    pub c5: bool,
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub free: FreeFlags,
    /// Witness tuple per violated pattern; free patterns are absent.
    pub witnesses: BTreeMap<&'static str, Vec<usize>>,
}

pub fn classify_json(report: &ClassifyReport) -> ClassifyJson {
    let mut witnesses = BTreeMap::new();
    let pairs: [(&'static str, &Option<_>); 6] = [
        ("p6", &report.p6),
        ("p2up3", &report.p2up3),
        ("diamond", &report.diamond),
        ("k4", &report.k4),
        ("bull", &report.bull),
        ("c5", &report.c5),
    ];
    for (name, witness) in pairs {
        if let Some(w) = witness {
            witnesses.insert(name, w.vertices.clone());
        }
    }
    ClassifyJson {
        schema: SCHEMA,
        command: "classify",
        n: report.n,
        m: report.m,
        connected: report.connected,
        free: FreeFlags {
            p6: report.p6_free(),
            p2up3: report.p2up3_free(),
            diamond: report.diamond_free(),
            k4: report.k4_free(),
            bull: report.bull_free(),
            c5: report.c5_free(),
        },
        witnesses,
    }
}

#[derive(Serialize)]
pub struct ColorJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub n: usize,
    pub m: usize,
    pub method: &'static str,
    /// Color of vertex v at position v, colors 1-based.
    pub coloring: Vec<u32>,
    pub colors_used: u32,
    pub bound: usize,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_chi: Option<u32>,
    pub trace: Vec<ComponentTrace>,
}

#[derive(Serialize)]
pub struct ChiJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub n: usize,
    pub m: usize,
    pub chi: u32,
    pub coloring: Vec<u32>,
    pub verified: bool,
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub n: usize,
    pub m: usize,
    pub k: u32,
    pub colors_used: u32,
    pub proper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<PatternName>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct ErrorJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub error: ErrorBody,
}

impl ErrorJson {
    pub fn new(command: &'static str, kind: &'static str, message: String) -> Self {
        ErrorJson {
            schema: SCHEMA,
            command,
            error: ErrorBody {
                kind,
                message,
                pattern: None,
                rule: None,
                vertices: None,
            },
        }
    }
}

#[derive(Serialize)]
pub struct FuzzJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub n_max: usize,
    pub trials: usize,
    pub jobs: usize,
    /// Graphs in the six-color class among the trials.
    pub members: usize,
    pub bull_free_members: usize,
    pub four_color_members: usize,
    pub max_colors: u32,
    pub max_colors_bull_free: u32,
    /// Members small enough for the exact cross-check.
    pub oracle_checked: usize,
    /// Largest colors_used minus chromatic number over checked members.
    pub max_gap: u32,
    pub violations: usize,
    /// First few violation descriptions; empty on a clean run.
    pub failures: Vec<String>,
}
