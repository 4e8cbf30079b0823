//! Batch verification: conjectured bounds over every connected graph of a
//! given order, and the identity suites over all small graphs.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::generate_all_with_limit;
use super::graph6::emit_graph6;
use super::DEFAULT_GENERATOR_LIMIT;
use crate::error::{Error, Result};
use crate::facets::{
    count_facets, count_suspension_via_domination, enumerate_facet_subgraphs,
    enumerate_facets_oracle, subgraph_component_value,
};
use crate::formulas::pow2;
use crate::formulas::{
    classify_extremal, conjecture_bounds, double_suspension_check, formula_count,
    is_balanced_complete_bipartite, join_bound_check, n_complete_bipartite,
    n_complete_multipartite, suspension_recursion_check, Branch, ExtremalClass, Parity,
};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    /// Name of the bound or identity that failed.
    pub bound: String,
    pub value: u128,
}

/// A graph whose count equals one of the conjectured bounds. `notable` is
/// set when it lies outside the family expected to attain that bound.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtremalHit {
    pub graph6: String,
    pub class: ExtremalClass,
    pub bound: String,
    pub notable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InputError {
    pub graph6: String,
    pub reason: String,
}

/// One CSV row per swept graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub facet_count: u128,
    pub lower: u128,
    pub upper: u128,
    pub class: ExtremalClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub graphs_checked: usize,
    pub violations: Vec<Violation>,
    pub extremal_hits: Vec<ExtremalHit>,
    pub runtime_ms: u128,
    pub input_errors: Vec<InputError>,
    #[serde(skip)]
    pub records: Vec<GraphRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub enum GraphSource {
    /// The built-in generator, capped at the given order.
    Internal {
        limit: usize,
    },
    Graphs(Vec<Graph>),
}

impl Default for GraphSource {
    fn default() -> Self {
        GraphSource::Internal {
            limit: DEFAULT_GENERATOR_LIMIT,
        }
    }
}

fn expected_upper_class(n: usize) -> ExtremalClass {
    match Parity::of(n) {
        Parity::Odd => ExtremalClass::OneSumOfTriangles,
        Parity::Even => ExtremalClass::K4PlusTriangles,
    }
}

/// Counts every input graph and compares it with the conjectured bounds for
/// order `n`. Graphs of another order or disconnected graphs become input
/// errors. The output is independent of the number of worker threads.
pub fn verify_conjecture(n: usize, source: GraphSource) -> Result<VerificationReport> {
    let start = Instant::now();
    let bounds = conjecture_bounds(n)?;
    let graphs = match source {
        GraphSource::Internal { limit } => generate_all_with_limit(n, limit)?
            .into_iter()
            .filter(Graph::is_connected)
            .collect(),
        GraphSource::Graphs(gs) => gs,
    };
    let outcomes: Vec<std::result::Result<GraphRecord, InputError>> = graphs
        .par_iter()
        .map(|g| {
            let graph6 = emit_graph6(g);
            let reason = if g.n() != n {
                Some(format!("expected {n} vertices, found {}", g.n()))
            } else if !g.is_connected() {
                Some("graph is disconnected".to_string())
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(InputError { graph6, reason });
            }
            let facet_count = count_facets(g).map_err(|e| InputError {
                graph6: graph6.clone(),
                reason: e.to_string(),
            })?;
            Ok(GraphRecord {
                graph6,
                n,
                facet_count,
                lower: bounds.lower,
                upper: bounds.upper,
                class: classify_extremal(g),
            })
        })
        .collect();

    let mut report = VerificationReport {
        n,
        graphs_checked: 0,
        violations: Vec::new(),
        extremal_hits: Vec::new(),
        runtime_ms: 0,
        input_errors: Vec::new(),
        records: Vec::new(),
    };
    for outcome in outcomes {
        let rec = match outcome {
            Ok(rec) => rec,
            Err(e) => {
                report.input_errors.push(e);
                continue;
            }
        };
        report.graphs_checked += 1;
        if rec.facet_count < bounds.lower {
            report.violations.push(Violation {
                graph6: rec.graph6.clone(),
                bound: "lower".into(),
                value: rec.facet_count,
            });
        }
        if rec.facet_count > bounds.upper {
            report.violations.push(Violation {
                graph6: rec.graph6.clone(),
                bound: "upper".into(),
                value: rec.facet_count,
            });
        }
        if rec.facet_count == bounds.lower {
            report.extremal_hits.push(ExtremalHit {
                graph6: rec.graph6.clone(),
                class: rec.class,
                bound: "lower".into(),
                notable: rec.class != ExtremalClass::BalancedCompleteBipartite,
            });
        }
        if rec.facet_count == bounds.upper {
            report.extremal_hits.push(ExtremalHit {
                graph6: rec.graph6.clone(),
                class: rec.class,
                bound: "upper".into(),
                notable: rec.class != expected_upper_class(n),
            });
        }
        report.records.push(rec);
    }
    report.violations.sort();
    report.extremal_hits.sort();
    report.input_errors.sort();
    report.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Runs `check` on every item in parallel; returns the number of items and
/// the concatenated violations in input order.
fn sweep<T, F>(items: &[T], check: F) -> Result<(usize, Vec<Violation>)>
where
    T: Sync,
    F: Fn(&T) -> Result<Vec<Violation>> + Sync + Send,
{
    let found: Vec<Vec<Violation>> = items.par_iter().map(check).collect::<Result<_>>()?;
    Ok((items.len(), found.into_iter().flatten().collect()))
}

fn violation(g: &Graph, name: &str, value: u128) -> Violation {
    Violation {
        graph6: emit_graph6(g),
        bound: name.to_string(),
        value,
    }
}

/// Route agreement and decomposition sanity on one connected graph.
fn check_routes(g: &Graph) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let oracle = enumerate_facets_oracle(g)?;
    let count = count_facets(g)?;
    if oracle.len() as u128 != count {
        out.push(violation(g, "route_equivalence", count));
    }
    if count % 2 != 0 {
        out.push(violation(g, "central_symmetry", count));
    }
    if oracle
        .iter()
        .any(|f| !oracle.contains(&f.negated().normalized()))
    {
        out.push(violation(g, "central_symmetry", count));
    }
    for h in enumerate_facet_subgraphs(g)? {
        let q = h.quotient(g)?;
        if h.mu % 2 != 0 || !q.is_connected() || !q.is_bipartite() {
            out.push(violation(g, "decomposition_sanity", h.mu));
        }
    }
    if let Ok(formula) = formula_count(g) {
        if formula != count {
            out.push(violation(g, "block_formula", formula));
        }
    }
    Ok(out)
}

/// Bipartite facts on one connected bipartite graph.
fn check_bipartite(g: &Graph) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let n = g.n();
    let count = count_facets(g)?;
    let cap = pow2(n - 1)?;
    if count > cap || (g.is_tree() && count != cap) {
        out.push(violation(g, "bipartite_upper", count));
    }
    for (i, j) in g.edges() {
        let smaller = g.delete_edge(i, j)?;
        if smaller.is_connected() && count > count_facets(&smaller)? {
            out.push(violation(g, "edge_deletion_monotonicity", count));
        }
    }
    if n >= 3 {
        let lower = conjecture_bounds(n)?.lower;
        if count < lower || (count == lower) != is_balanced_complete_bipartite(g) {
            out.push(violation(g, "bipartite_minimum", count));
        }
    }
    Ok(out)
}

/// Suspension facts for one base graph.
fn check_suspension(g: &Graph) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let s = g.suspension()?;
    let count = count_facets(&s)?;
    if count_suspension_via_domination(g) != count {
        out.push(violation(g, "suspension_domination", count));
    }
    if count > subgraph_component_value(g) {
        out.push(violation(g, "component_polynomial_bound", count));
    }
    let floor = pow2(s.n() - 1)?;
    if count < floor || (count == floor) != (g.edge_count() == 0) {
        out.push(violation(g, "suspension_lower", count));
    }
    if s.n() >= 3 {
        let upper = conjecture_bounds(s.n())?.upper;
        if count > upper
            || (count == upper) != (classify_extremal(&s) == expected_upper_class(s.n()))
        {
            out.push(violation(g, "suspension_upper", count));
        }
    }
    if g.n() >= 2 {
        for v in 0..g.n() {
            let c = suspension_recursion_check(g, v, count_facets)?;
            let covers = g.closed_neighborhood(v) == g.vertices();
            if !c.holds || (c.branch == Branch::Equality) != covers {
                out.push(violation(g, "vertex_recursion", c.whole));
            }
        }
    }
    Ok(out)
}

fn partitions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=max_part.min(n))
        .flat_map(|first| {
            partitions(n - first, first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Runs every identity suite over all graphs with at most `n_max` vertices
/// (suspensions, joins and 1-sums built from smaller graphs stay within
/// `n_max` vertices). `n_max` is capped at the generator limit of 7.
pub fn verify_identities(n_max: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    if n_max > DEFAULT_GENERATOR_LIMIT {
        return Err(Error::GeneratorLimit {
            n: n_max,
            limit: DEFAULT_GENERATOR_LIMIT,
        });
    }
    if n_max < 2 {
        return Err(Error::TooSmall);
    }
    // by_order[k] = all graphs on k vertices
    let mut by_order = vec![Vec::new()];
    for k in 1..=n_max {
        by_order.push(generate_all_with_limit(k, n_max)?);
    }
    let connected: Vec<Vec<Graph>> = by_order
        .iter()
        .map(|gs| gs.iter().filter(|g| g.is_connected()).cloned().collect())
        .collect();
    let flat = |v: &[Vec<Graph>], lo: usize, hi: usize| -> Vec<Graph> {
        (lo..=hi.min(n_max))
            .flat_map(|k| v[k].iter().cloned())
            .collect()
    };

    let mut checked = 0;
    let mut violations = Vec::new();
    let mut absorb = |r: (usize, Vec<Violation>)| {
        checked += r.0;
        violations.extend(r.1);
    };

    let conn = flat(&connected, 2, n_max);
    absorb(sweep(&conn, check_routes)?);
    let bip: Vec<Graph> = conn.iter().filter(|g| g.is_bipartite()).cloned().collect();
    absorb(sweep(&bip, check_bipartite)?);
    if n_max >= 2 {
        absorb(sweep(&flat(&by_order, 1, n_max - 1), check_suspension)?);
    }
    if n_max >= 4 {
        absorb(sweep(&flat(&by_order, 2, n_max - 2), |g| {
            let c = double_suspension_check(g, count_facets)?;
            Ok(if c.holds {
                vec![]
            } else {
                vec![violation(g, "double_suspension", c.double)]
            })
        })?);
    }

    let mut bipartite_shapes = Vec::new();
    for total in 2..=n_max {
        for l in 1..=total / 2 {
            bipartite_shapes.push(vec![l, total - l]);
        }
    }
    let multipartite_shapes: Vec<Vec<usize>> = (3..=n_max)
        .flat_map(|n| partitions(n, n))
        .filter(|p| p.len() >= 3)
        .collect();
    let shapes: Vec<Vec<usize>> = bipartite_shapes
        .into_iter()
        .chain(multipartite_shapes)
        .collect();
    absorb(sweep(&shapes, |parts| {
        let g = Graph::complete_multipartite(parts);
        let expected = if parts.len() == 2 {
            n_complete_bipartite(parts[0], parts[1])?
        } else {
            n_complete_multipartite(parts)?
        };
        let count = count_facets(&g)?;
        Ok(if count == expected {
            vec![]
        } else {
            vec![violation(&g, "closed_form", count)]
        })
    })?);

    let mut sum_pairs = Vec::new();
    for n1 in 2..n_max {
        for n2 in 2..=n_max + 1 - n1 {
            for a in &connected[n1] {
                for b in &connected[n2] {
                    sum_pairs.push((a, b));
                }
            }
        }
    }
    absorb(sweep(&sum_pairs, |&(a, b)| {
        let product = count_facets(a)?
            .checked_mul(count_facets(b)?)
            .ok_or(Error::Overflow)?;
        let mut out = Vec::new();
        for v1 in 0..a.n() {
            for v2 in 0..b.n() {
                let g = a.one_sum(v1, b, v2)?;
                let count = count_facets(&g)?;
                if count != product {
                    out.push(violation(&g, "one_sum_product", count));
                }
            }
        }
        Ok(out)
    })?);

    let mut join_pairs = Vec::new();
    for n1 in 1..n_max {
        for n2 in 1..=n_max - n1 {
            for a in &by_order[n1] {
                for b in &by_order[n2] {
                    join_pairs.push((a, b));
                }
            }
        }
    }
    absorb(sweep(&join_pairs, |&(a, b)| {
        let c = join_bound_check(a, b, count_facets)?;
        Ok(if c.holds {
            vec![]
        } else {
            vec![violation(&a.join(b)?, "join_bounds", c.count)]
        })
    })?);

    violations.sort();
    Ok(VerificationReport {
        n: n_max,
        graphs_checked: checked,
        violations,
        extremal_hits: Vec::new(),
        runtime_ms: start.elapsed().as_millis(),
        input_errors: Vec::new(),
        records: Vec::new(),
    })
}
