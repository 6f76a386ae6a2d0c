use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mptrees::analytics::{electrical_current, routing_experiment, summarize_run, PathMarkers, TSV_HEADER};
use mptrees::enumerate::{verify_structures, SinkError};
use mptrees::oracle::{brute_force_enumerate, kirchhoff_count};
use mptrees::{
    enumerate_with, generate_erdos_renyi, generate_family, generate_grid, known_counts, parse_edge_list,
    EnumerateError, EnumerateOptions, FamilyKind, Graph, GraphFamily, NodeId, StepContext, TreeEvent, WriteSink,
};

#[derive(Parser)]
#[command(name = "mptrees", version, about = "Enumerate all spanning trees by minimal partitioning")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the event stream of every spanning tree, then a summary line.
    Enumerate {
        #[command(flatten)]
        input: Input,
        /// Print only the summary line.
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Cross-check the enumeration against independent oracles.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Compare tree sets with exhaustive subset search.
        #[arg(long)]
        brute: bool,
        /// Compare the incremental structures with rebuilds from scratch.
        #[arg(long)]
        scratch: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// One TSV row per graph; `--n A..B` runs a family range.
    Report {
        #[command(flatten)]
        input: Input,
        /// Report per-edge source–sink currents instead.
        #[arg(long)]
        current: bool,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        source: Option<Vec<u32>>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Per-edge unit current from source to sink, averaged over all trees.
    Current {
        #[command(flatten)]
        input: Input,
        #[arg(long, num_args = 2, value_names = ["U", "V"], required = true)]
        source: Vec<u32>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Paths between random robots and targets broken per exchange.
    Routing {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        robots: usize,
        #[arg(long)]
        targets: usize,
        #[arg(long, default_value_t = 0)]
        marker_seed: u64,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct Input {
    /// Edge-list file: "V E" header, then one "u v" pair per line.
    #[arg(long, group = "source_graph")]
    file: Option<PathBuf>,
    /// Named family (path, cycle, star, complete, wheel, prism, ladder, helm,
    /// sunlet, web, gear, book, antiprism).
    #[arg(long, group = "source_graph", requires = "n")]
    family: Option<FamilyKind>,
    /// Family size, or an inclusive range `A..B`.
    #[arg(long)]
    n: Option<String>,
    /// Random connected graph with V nodes and E edges.
    #[arg(long, group = "source_graph", num_args = 2, value_names = ["V", "E"])]
    er: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// 4-connected grid, e.g. `5x5`.
    #[arg(long, group = "source_graph")]
    grid: Option<String>,
    /// Grid cells (`row * cols + col`) to leave out.
    #[arg(long, value_delimiter = ',', requires = "grid")]
    blocked: Vec<usize>,
}

#[derive(Args)]
struct RunArgs {
    /// Stop after this many trees (default 10^8, or MP_MAX_TREES).
    #[arg(long)]
    max_trees: Option<u64>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn options(&self) -> EnumerateOptions {
        match self.max_trees {
            Some(n) => EnumerateOptions::with_max_trees(n),
            None => EnumerateOptions::from_env(),
        }
    }

    fn writer(&self) -> Result<Box<dyn Write>, Failure> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

/// Error with its process exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Self { code: 4, message: message.into() }
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        let code = if matches!(e, EnumerateError::GuardExceeded { .. }) { 3 } else { 1 };
        Self { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { code: 1, message: e.to_string() }
    }
}

/// A named input graph.
struct Named {
    name: String,
    graph: Result<Graph, String>,
}

impl Input {
    fn graphs(&self) -> Result<Vec<Named>, Failure> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let name = path.file_stem().map_or("input".into(), |s| s.to_string_lossy().into_owned());
            return Ok(vec![Named { name, graph: parse_edge_list(&text).map_err(|e| e.to_string()) }]);
        }
        if let Some(kind) = self.family {
            let sizes = parse_sizes(self.n.as_deref().unwrap_or_default())?;
            return Ok(sizes
                .map(|n| {
                    let family = GraphFamily::new(kind, n);
                    Named { name: family.to_string(), graph: generate_family(family).map_err(|e| e.to_string()) }
                })
                .collect());
        }
        if let Some(ve) = &self.er {
            let (v, e) = (ve[0], ve[1]);
            let graph = generate_erdos_renyi(v, e, self.seed).map_err(|e| e.to_string());
            return Ok(vec![Named { name: format!("er-{v}-{e}-s{}", self.seed), graph }]);
        }
        if let Some(spec) = &self.grid {
            let (r, c) = spec
                .split_once(['x', 'X'])
                .and_then(|(r, c)| Some((r.parse::<usize>().ok()?, c.parse::<usize>().ok()?)))
                .ok_or_else(|| Failure::input(format!("bad grid {spec:?}, expected RxC")))?;
            let graph = generate_grid(r, c, &self.blocked).map_err(|e| e.to_string());
            return Ok(vec![Named { name: format!("grid-{r}x{c}"), graph }]);
        }
        Err(Failure::input("no input: give --file, --family with --n, --er or --grid"))
    }

    /// The single graph of a non-batch command.
    fn graph(&self) -> Result<(String, Graph), Failure> {
        let mut all = self.graphs()?;
        if all.len() != 1 {
            return Err(Failure::input("this command takes a single graph; use a single --n"));
        }
        let Named { name, graph } = all.remove(0);
        Ok((name, graph.map_err(Failure::input)?))
    }
}

fn parse_sizes(spec: &str) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let bad = || Failure::input(format!("bad size {spec:?}, expected N or A..B"));
    match spec.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(a.trim().parse().map_err(|_| bad())?..=b.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let n = spec.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

/// Canonical id of the node with input label `label`.
fn node_of(g: &Graph, label: u32) -> Result<NodeId, Failure> {
    g.original_labels()
        .iter()
        .position(|&l| l == label)
        .map(|i| i as NodeId)
        .ok_or_else(|| Failure::input(format!("no node labelled {label}")))
}

fn cmd_enumerate(input: &Input, count_only: bool, run: &RunArgs) -> Result<(), Failure> {
    let (_, g) = input.graph()?;
    let mut out = run.writer()?;
    let summary = if count_only {
        enumerate_with(&g, run.options(), &mut mptrees::NullSink)?
    } else {
        enumerate_with(&g, run.options(), &mut WriteSink(&mut out))?
    };
    writeln!(out, "{summary}")?;
    out.flush()?;
    Ok(())
}

fn cmd_verify(input: &Input, brute: bool, scratch: bool, run: &RunArgs) -> Result<(), Failure> {
    let (name, g) = input.graph()?;
    let mut out = run.writer()?;
    let mut failed = Vec::new();
    let mut check = |out: &mut dyn Write, label: &str, ok: bool, detail: String| -> io::Result<()> {
        if !ok {
            failed.push(label.to_string());
        }
        writeln!(out, "{} {label}: {detail}", if ok { "PASS" } else { "FAIL" })
    };

    let mut trees: Vec<Vec<u32>> = Vec::new();
    let mut collect = |_: &TreeEvent, ctx: &StepContext<'_, '_>| -> Result<(), SinkError> {
        if brute {
            trees.push(ctx.state.edge_set());
        }
        Ok(())
    };
    let summary = enumerate_with(&g, run.options(), &mut collect)?;
    writeln!(out, "{name}: V={} E={} {summary}", g.node_count(), g.edge_count())?;

    let det = kirchhoff_count(&g).map_err(|e| Failure::input(e.to_string()))?;
    check(&mut out, "kirchhoff", u128::from(summary.total) == det, format!("{} vs determinant {det}", summary.total))?;

    if let Some(family) = input.family {
        if let Some(k) = input.n.as_deref().and_then(|n| n.trim().parse().ok()).and_then(|n| known_counts(GraphFamily::new(family, n))) {
            check(&mut out, "published total", summary.total == k.total, format!("{} vs {}", summary.total, k.total))?;
            let note = if summary.type1 == k.type1 { "matches" } else { "differs (depends on labelling)" };
            writeln!(out, "NOTE published split {}/{}: ours {}/{} {note}", k.type1, k.type2(), summary.type1, summary.type2)?;
        }
    }

    if brute {
        let sets = brute_force_enumerate(&g).map_err(|e| Failure::input(e.to_string()))?;
        let unique: std::collections::BTreeSet<Vec<u32>> = trees.iter().cloned().collect();
        let ok = unique.len() == trees.len() && unique == sets;
        let detail = format!("{} enumerated, {} distinct, {} by subset search", trees.len(), unique.len(), sets.len());
        check(&mut out, "brute force", ok, detail)?;
    }

    if scratch {
        match verify_structures(&g) {
            Ok(n) => check(&mut out, "scratch rebuild", true, format!("{n} trees"))?,
            Err(e) => check(&mut out, "scratch rebuild", false, e)?,
        }
    }
    out.flush()?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::mismatch(format!("failed: {}", failed.join(", "))))
    }
}

fn write_currents(out: &mut dyn Write, g: &Graph, endpoints: &[u32], run: &RunArgs) -> Result<(), Failure> {
    let (s, t) = (node_of(g, endpoints[0])?, node_of(g, endpoints[1])?);
    if s == t {
        return Err(Failure::input("source and sink must differ"));
    }
    let c = electrical_current(g, s, t, run.options())?;
    writeln!(out, "edge\tu\tv\tcurrent")?;
    for (order, &(a, b)) in (1..).zip(g.edges()) {
        writeln!(out, "{order}\t{}\t{}\t{:.6}", g.original_label(a), g.original_label(b), c.edge(order))?;
    }
    Ok(())
}

fn cmd_report(input: &Input, current: bool, source: Option<&[u32]>, run: &RunArgs) -> Result<(), Failure> {
    let mut out = run.writer()?;
    if current {
        let (_, g) = input.graph()?;
        let endpoints = source.ok_or_else(|| Failure::input("--current needs --source U V"))?;
        write_currents(&mut out, &g, endpoints, run)?;
        out.flush()?;
        return Ok(());
    }
    writeln!(out, "{TSV_HEADER}")?;
    for Named { name, graph } in input.graphs()? {
        let row = graph.and_then(|g| {
            let s = enumerate_with(&g, run.options(), &mut mptrees::NullSink).map_err(|e| e.to_string())?;
            Ok(summarize_run(&name, &g, s).tsv_row())
        });
        match row {
            Ok(row) => writeln!(out, "{row}")?,
            Err(e) => writeln!(out, "{name}\tERROR\t{e}")?,
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_current(input: &Input, source: &[u32], run: &RunArgs) -> Result<(), Failure> {
    let (_, g) = input.graph()?;
    let mut out = run.writer()?;
    write_currents(&mut out, &g, source, run)?;
    out.flush()?;
    Ok(())
}

fn cmd_routing(input: &Input, robots: usize, targets: usize, marker_seed: u64, run: &RunArgs) -> Result<(), Failure> {
    let (name, g) = input.graph()?;
    let markers = PathMarkers::random(g.node_count(), robots, targets, marker_seed);
    let r = routing_experiment(&g, &markers, run.options())?;
    let mut out = run.writer()?;
    writeln!(out, "name\tV\ttrees\trobots\ttargets\tmean\texpected_mp\texpected_random")?;
    writeln!(
        out,
        "{name}\t{}\t{}\t{}\t{}\t{:.4}\t{:.2}\t{:.2}",
        g.node_count(),
        r.total_trees,
        markers.robots.len(),
        markers.targets.len(),
        r.mean,
        r.expected_mp,
        r.expected_random
    )?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate { input, count_only, run } => cmd_enumerate(input, *count_only, run),
        Command::Verify { input, brute, scratch, run } => cmd_verify(input, *brute, *scratch, run),
        Command::Report { input, current, source, run } => cmd_report(input, *current, source.as_deref(), run),
        Command::Current { input, source, run } => cmd_current(input, source, run),
        Command::Routing { input, robots, targets, marker_seed, run } => {
            cmd_routing(input, *robots, *targets, *marker_seed, run)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("mptrees: {message}");
            ExitCode::from(code)
        }
    }
}
