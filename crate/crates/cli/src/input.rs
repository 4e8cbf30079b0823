use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use sep_core::harness::{
    parse_edge_list, parse_graph6, parse_graph6_lines, DEFAULT_GENERATOR_LIMIT, GRAPH6_HEADER,
};
use sep_core::Graph;

/// Largest order the built-in generator accepts; `SEP_MAX_N` raises it.
pub fn generator_limit() -> Result<usize> {
    match std::env::var("SEP_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("SEP_MAX_N={v:?} is not a size")),
        Err(_) => Ok(DEFAULT_GENERATOR_LIMIT),
    }
}

/// A graph argument: inline edge list if it contains a space or `;`,
/// graph6 otherwise.
pub fn graph_arg(text: &str) -> Result<Graph> {
    if text.contains([' ', ';']) {
        parse_edge_list(text).with_context(|| format!("bad edge list {text:?}"))
    } else {
        parse_graph6(text).with_context(|| format!("bad graph6 {text:?}"))
    }
}

fn looks_like_graph6(text: &str) -> bool {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) => l.starts_with(GRAPH6_HEADER) || !l.contains(char::is_whitespace),
        None => false,
    }
}

/// Graphs stored in a file, either one edge list or graph6 lines.
pub fn graphs_from_file(path: &Path) -> Result<Vec<Graph>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    if !looks_like_graph6(&text) {
        let g = parse_edge_list(&text).with_context(|| format!("in {}", path.display()))?;
        return Ok(vec![g]);
    }
    let mut graphs = Vec::new();
    for (line, parsed) in parse_graph6_lines(&text) {
        graphs.push(parsed.with_context(|| format!("{}:{line}", path.display()))?);
    }
    if graphs.is_empty() {
        bail!("{} contains no graphs", path.display());
    }
    Ok(graphs)
}
