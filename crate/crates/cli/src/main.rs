mod input;

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use sep_core::formulas::{conjecture_bounds, formula_count};
use sep_core::harness::{
    emit_graph6, emit_inline_edges, generate_connected_with_limit, parse_edge_list, parse_graph6,
    verify_conjecture, verify_identities, GraphSource, VerificationReport,
};
use sep_core::{
    count_facets, count_suspension_via_domination, enumerate_facet_subgraphs,
    enumerate_facets_oracle, Graph,
};

use input::{generator_limit, graph_arg, graphs_from_file};

/// Facet counts of symmetric edge polytopes.
#[derive(Parser)]
#[command(name = "sep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count facets of one graph, or of every graph in a file.
    Count {
        #[command(flatten)]
        input: CountInput,
        #[arg(long, value_enum, default_value_t = Method::Decomposition)]
        method: Method,
    },
    /// List facet labelings, optionally with the facet subgraph table.
    Facets {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        subgraphs: bool,
    },
    /// Build a graph and print it in graph6.
    Build(BuildArgs),
    /// Print the conjectured bounds for connected graphs on N vertices.
    Bounds {
        #[arg(long)]
        n: usize,
    },
    /// Check the conjectured bounds over a family of graphs.
    Verify(VerifyArgs),
    /// List connected graphs on N vertices up to isomorphism.
    Generate {
        #[arg(long)]
        n: usize,
        /// Emit graph6 instead of inline edge lists.
        #[arg(long)]
        graph6: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    #[arg(long)]
    graph6: Option<String>,
    /// Inline edge list "n m;i j;i j;...".
    #[arg(long)]
    edges: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CountInput {
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long)]
    edges: Option<String>,
    /// Edge-list file or graph6 file with one graph per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    Decomposition,
    Domination,
    Formula,
}

/// Graph arguments are graph6 strings or inline edge lists.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct BuildArgs {
    /// Add an apex vertex adjacent to every vertex.
    #[arg(long, value_name = "G")]
    suspension: Option<String>,
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    join: Option<Vec<String>>,
    /// Glue vertex v of A to vertex w of B.
    #[arg(long = "one-sum", num_args = 4, value_names = ["A", "v", "B", "w"])]
    one_sum: Option<Vec<String>>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(
        long,
        required_unless_present = "graph6_file",
        conflicts_with = "graph6_file"
    )]
    n: Option<usize>,
    #[arg(long)]
    graph6_file: Option<PathBuf>,
    /// Also run the identity suites on all graphs up to the same order.
    #[arg(long)]
    identities: bool,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

enum Failure {
    Input(anyhow::Error),
    Violations,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn parse_as(text: &str, edge_list: bool) -> Result<Graph> {
    if edge_list {
        parse_edge_list(text).with_context(|| format!("bad edge list {text:?}"))
    } else {
        parse_graph6(text).with_context(|| format!("bad graph6 {text:?}"))
    }
}

fn single_graph(input: &GraphInput) -> Result<Graph> {
    match (&input.graph6, &input.edges) {
        (Some(s), _) => parse_as(s, false),
        (_, Some(e)) => parse_as(e, true),
        _ => unreachable!("clap requires one input"),
    }
}

fn count_with(g: &Graph, method: Method) -> Result<u128> {
    Ok(match method {
        Method::Decomposition => count_facets(g)?,
        Method::Oracle => enumerate_facets_oracle(g)?.len() as u128,
        Method::Formula => formula_count(g)?,
        Method::Domination => {
            if g.n() < 2 {
                bail!(sep_core::Error::TooSmall);
            }
            if !g.is_connected() {
                bail!(sep_core::Error::Disconnected);
            }
            // the suspension apex is appended last, so prefer the highest one
            let apex = g.apexes().iter().last().ok_or(sep_core::Error::NoApex)?;
            count_suspension_via_domination(&g.delete_vertex(apex)?)
        }
    })
}

fn count(input: &CountInput, method: Method, out: &mut impl Write) -> Result<()> {
    let graphs = match (&input.graph6, &input.edges, &input.file) {
        (Some(s), _, _) => vec![parse_as(s, false)?],
        (_, Some(e), _) => vec![parse_as(e, true)?],
        (_, _, Some(path)) => graphs_from_file(path)?,
        _ => unreachable!("clap requires one input"),
    };
    let mut counts = Vec::with_capacity(graphs.len());
    for g in &graphs {
        counts.push(count_with(g, method).with_context(|| emit_graph6(g))?);
    }
    for c in counts {
        writeln!(out, "{c}")?;
    }
    Ok(())
}

fn set_list(s: sep_core::VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn quotient_name(q: &Graph) -> String {
    match q.bipartition() {
        Some((a, b)) if a.len() * b.len() == q.edge_count() => {
            format!("K_{{{},{}}}", a.len().min(b.len()), a.len().max(b.len()))
        }
        _ => emit_graph6(q),
    }
}

fn facets(input: &GraphInput, subgraphs: bool, out: &mut impl Write) -> Result<()> {
    let g = single_graph(input)?;
    let fs = enumerate_facets_oracle(&g)?;
    let table = if subgraphs {
        Some(enumerate_facet_subgraphs(&g)?)
    } else {
        None
    };
    for f in &fs {
        let vals: Vec<String> = f.values.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", vals.join(" "))?;
    }
    writeln!(out, "facets {}", fs.len())?;
    if let Some(table) = table {
        writeln!(out, "V1\tV2\tremoved\tquotient\tmu")?;
        let mut total = 0u128;
        for h in &table {
            let removed: Vec<String> = h
                .removed_edges(&g)
                .iter()
                .map(|(i, j)| format!("{i}-{j}"))
                .collect();
            let removed = if removed.is_empty() {
                "-".to_string()
            } else {
                removed.join(",")
            };
            let q = h.quotient(&g)?;
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                set_list(h.part1),
                set_list(h.part2),
                removed,
                quotient_name(&q),
                h.mu
            )?;
            total += h.mu;
        }
        writeln!(out, "subgraphs {} total {}", table.len(), total)?;
    }
    Ok(())
}

fn build(args: &BuildArgs, out: &mut impl Write) -> Result<()> {
    let vertex =
        |s: &str| -> Result<usize> { s.parse().with_context(|| format!("bad vertex {s:?}")) };
    let g = if let Some(g) = &args.suspension {
        graph_arg(g)?.suspension()?
    } else if let Some(ab) = &args.join {
        graph_arg(&ab[0])?.join(&graph_arg(&ab[1])?)?
    } else if let Some(a) = &args.one_sum {
        graph_arg(&a[0])?.one_sum(vertex(&a[1])?, &graph_arg(&a[2])?, vertex(&a[3])?)?
    } else {
        unreachable!("clap requires one construction")
    };
    writeln!(out, "{}", emit_graph6(&g))?;
    Ok(())
}

fn print_report(r: &VerificationReport, out: &mut impl Write) -> Result<()> {
    writeln!(
        out,
        "n={} graphs_checked={} violations={} extremal_hits={} input_errors={}",
        r.n,
        r.graphs_checked,
        r.violations.len(),
        r.extremal_hits.len(),
        r.input_errors.len()
    )?;
    for h in &r.extremal_hits {
        let mark = if h.notable { " notable" } else { "" };
        writeln!(out, "hit {} {} {}{mark}", h.bound, h.class, h.graph6)?;
    }
    for v in &r.violations {
        writeln!(out, "violation {} {} {}", v.bound, v.value, v.graph6)?;
    }
    for e in &r.input_errors {
        writeln!(out, "input_error {} {}", e.graph6, e.reason)?;
    }
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> Result<bool> {
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }
    let limit = generator_limit()?;
    let (n, source) = match (&args.n, &args.graph6_file) {
        (Some(n), _) => (*n, GraphSource::Internal { limit }),
        (_, Some(path)) => {
            let graphs = graphs_from_file(path)?;
            (graphs[0].n(), GraphSource::Graphs(graphs))
        }
        _ => unreachable!("clap requires one source"),
    };
    let report = verify_conjecture(n, source)?;
    eprintln!(
        "swept {} graphs in {} ms",
        report.graphs_checked, report.runtime_ms
    );
    print_report(&report, out)?;
    let mut ok = report.passed();
    if args.identities {
        let ids = verify_identities(n)?;
        eprintln!("identity suites ran in {} ms", ids.runtime_ms);
        writeln!(
            out,
            "identities n_max={} checks={} violations={}",
            ids.n,
            ids.graphs_checked,
            ids.violations.len()
        )?;
        for v in &ids.violations {
            writeln!(out, "violation {} {} {}", v.bound, v.value, v.graph6)?;
        }
        ok &= ids.passed();
    }
    if let Some(path) = &args.json {
        let file =
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
        serde_json::to_writer_pretty(file, &report)?;
    }
    if let Some(path) = &args.csv {
        let mut w = csv::Writer::from_path(path)
            .with_context(|| format!("cannot create {}", path.display()))?;
        for rec in &report.records {
            w.serialize(rec)?;
        }
        w.flush()?;
    }
    if !report.input_errors.is_empty() && ok {
        bail!("{} input graphs were rejected", report.input_errors.len());
    }
    Ok(ok)
}

fn generate(n: usize, graph6: bool, out: &mut impl Write) -> Result<()> {
    for g in generate_connected_with_limit(n, generator_limit()?)? {
        let line = if graph6 {
            emit_graph6(&g)
        } else {
            emit_inline_edges(&g)
        };
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Count { input, method } => count(input, *method, &mut out)?,
        Command::Facets { input, subgraphs } => facets(input, *subgraphs, &mut out)?,
        Command::Build(args) => build(args, &mut out)?,
        Command::Bounds { n } => {
            let b = conjecture_bounds(*n).map_err(anyhow::Error::from)?;
            let parity = if *n % 2 == 1 { "odd" } else { "even" };
            writeln!(
                out,
                "n={} parity={parity} lower={} upper={}",
                b.n, b.lower, b.upper
            )
            .map_err(anyhow::Error::from)?;
        }
        Command::Verify(args) => {
            if !verify(args, &mut out)? {
                return Err(Failure::Violations);
            }
        }
        Command::Generate { n, graph6 } => generate(*n, *graph6, &mut out)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Violations) => {
            eprintln!("verification failed");
            ExitCode::from(2)
        }
    }
}
