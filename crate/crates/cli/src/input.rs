//! Input plumbing: read a graph from a file or stdin in either text format.

use std::io::Read;
use std::path::Path;

use hexachrome_core::io::{parse_edge_list, parse_graph6};
use hexachrome_core::Graph;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Leading digit means edge list, anything else means graph6.
    Auto,
    /// graph6, one line.
    G6,
    /// Vertex count line followed by "u v" edge lines.
    Edges,
}

pub fn read_source(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(text)
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty input: expected a graph in graph6 or edge-list form".to_string());
    }
    let format = match format {
        Format::Auto => {
            if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
                Format::Edges
            } else {
                Format::G6
            }
        }
        fixed => fixed,
    };
    match format {
        Format::G6 => {
            let line = trimmed.lines().next().unwrap_or_default().trim();
            parse_graph6(line).map_err(|e| format!("graph6: {e}"))
        }
        Format::Edges => parse_edge_list(trimmed).map_err(|e| format!("edge list: {e}")),
        Format::Auto => unreachable!("auto resolved above"),
    }
}
