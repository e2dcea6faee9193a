use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use romdom::bounds::{
    check_pncn_premise, default_partners, run_suite, BoundRecord, Corpus, CorpusEntry, PathOrCycle, Report,
    SuiteSpec, TheoremId,
};
use romdom::constructions::{
    cross_construction, replicate_construction, strong_case_construction, swap_construction, ConstructionOutcome,
};
use romdom::{make_family, parse_graph6, product, write_graph6, FamilySpec, Graph, ProductKind, Solver, SolverConfig};

#[derive(Parser)]
#[command(name = "romdom", version, about = "Roman domination on graph products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant of a graph (one JSON line per input graph)
    Solve(SolveArgs),
    /// Print the graph6 code of a product
    Product(ProductArgs),
    /// Build an explicit Roman dominating function on a product
    Construct(ConstructArgs),
    /// Run the bound checks over a corpus
    Verify(VerifyArgs),
    /// Print graph6 codes for a family over a parameter range
    Families(FamiliesArgs),
    /// Check the |B2| premise for paths and cycles
    PremiseCheck(PremiseArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// graph6 string
    #[arg(long)]
    g6: Option<String>,
    /// File of graph6 lines
    #[arg(long)]
    file: Option<PathBuf>,
    /// Family spec, e.g. path:4, spider:3:1, random:8:1/2:7
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Gamma,
    GammaR,
    P2,
    Codes,
    Roman,
    EnumerateRdfs,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum)]
    invariant: Invariant,
    /// Node budget per search
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct ProductArgs {
    /// First factor: family spec or graph6
    #[arg(long)]
    a: String,
    /// Second factor: family spec or graph6
    #[arg(long)]
    b: String,
    #[arg(long, value_parser = parse_kind)]
    kind: ProductKind,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// Copy a γ_R-function of one factor across the other
    Superior,
    /// Swap labels along a γ_R-function of the first factor
    Eldek,
    /// Cross two dominating sets
    Flojito,
    /// Strong-product labeling from two γ_R-functions
    Strong,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long, value_enum)]
    theorem: Construction,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusKind {
    Families,
    Exhaustive,
    Random,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "families")]
    corpus: CorpusKind,
    /// Largest order for the exhaustive corpus
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Comma-separated family specs or graph6 codes replacing the default families
    #[arg(long)]
    graphs: Option<String>,
    /// Random corpus: number of graphs
    #[arg(long, default_value_t = 50)]
    count: usize,
    /// Random corpus: smallest order
    #[arg(long, default_value_t = 3)]
    min_n: usize,
    /// Random corpus: seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated theorem ids, or `all`
    #[arg(long, default_value = "all")]
    theorems: String,
    /// Comma-separated product kinds
    #[arg(long, default_value = "cartesian,strong")]
    products: String,
    /// Node budget per solver call
    #[arg(long, default_value_t = romdom::bounds::DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = romdom::bounds::DEFAULT_MAX_STRONG_ORDER)]
    max_strong_order: usize,
    #[arg(long)]
    max_cartesian_order: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Suite name recorded in the report
    #[arg(long, default_value = "verify")]
    name: String,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    report: Option<PathBuf>,
    /// Also write a CSV projection
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Append one JSON line per record
    #[arg(long)]
    log: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Star,
    Hypercube,
}

#[derive(Args)]
struct FamiliesArgs {
    #[arg(long, value_enum)]
    kind: FamilyKind,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
}

#[derive(Args)]
struct PremiseArgs {
    /// Order of the path or cycle
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_path_or_cycle)]
    kind: PathOrCycle,
    /// Comma-separated partner graphs (family specs or graph6); default K2,P3,K1,3,C4
    #[arg(long)]
    partners: Option<String>,
}

fn parse_kind(s: &str) -> Result<ProductKind, String> {
    s.parse().map_err(|e: romdom::Error| e.to_string())
}

fn parse_path_or_cycle(s: &str) -> Result<PathOrCycle, String> {
    s.parse().map_err(|e: romdom::Error| e.to_string())
}

/// Failure that maps to exit status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

/// Family spec if it contains ':' (never a graph6 byte), else graph6.
fn graph_arg(s: &str) -> CliResult<Graph> {
    if s.contains(':') {
        Ok(make_family(&s.parse::<FamilySpec>()?)?)
    } else {
        Ok(parse_graph6(s)?)
    }
}

fn graphs_from(source: &Source) -> CliResult<Vec<Graph>> {
    if let Some(code) = &source.g6 {
        return Ok(vec![parse_graph6(code)?]);
    }
    if let Some(spec) = &source.family {
        return Ok(vec![make_family(&spec.parse::<FamilySpec>()?)?]);
    }
    let path = source.file.as_ref().expect("clap requires one source");
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Ok(romdom::graph6::parse_graph6_lines(&text)?)
}

/// Writes one payload line to stdout.
fn emit(line: &dyn std::fmt::Display) -> CliResult<()> {
    writeln!(std::io::stdout().lock(), "{line}").map_err(|e| Failure(format!("stdout: {e}")))
}

fn solver(budget: Option<u64>) -> Solver {
    Solver::new(SolverConfig {
        node_budget: budget,
        ..SolverConfig::default()
    })
}

fn solve(args: &SolveArgs) -> CliResult<()> {
    let solver = solver(args.budget);
    for g in graphs_from(&args.source)? {
        let (name, value, witness, nodes) = match args.invariant {
            Invariant::Gamma => {
                let r = solver.domination_number(&g)?;
                ("gamma", json!(r.value), json!(r.witness), json!(r.node_count))
            }
            Invariant::GammaR => {
                let r = solver.roman_domination_number(&g)?;
                ("gamma-r", json!(r.value), json!(r.witness), json!(r.node_count))
            }
            Invariant::P2 => {
                let r = solver.two_packing_number(&g)?;
                ("p2", json!(r.value), json!(r.witness), json!(r.node_count))
            }
            Invariant::Codes => {
                let codes = solver.efficient_dominating_sets(&g)?;
                ("codes", json!(codes.len()), json!(codes), Value::Null)
            }
            Invariant::Roman => {
                let r = solver.roman_domination_number(&g)?;
                let roman = solver.is_roman(&g)?;
                ("roman", json!(roman), json!(r.witness), json!(r.node_count))
            }
            Invariant::EnumerateRdfs => {
                let all = solver.enumerate_optimal_rdfs(&g)?;
                ("enumerate-rdfs", json!(all.len()), json!(all), Value::Null)
            }
        };
        let out = json!({
            "graph": write_graph6(&g),
            "invariant": name,
            "value": value,
            "witness": witness,
            "node_count": nodes,
        });
        emit(&out)?;
    }
    Ok(())
}

fn construct(args: &ConstructArgs) -> CliResult<()> {
    let (g, h) = (graph_arg(&args.a)?, graph_arg(&args.b)?);
    let solver = solver(args.budget);
    let out: ConstructionOutcome = match args.theorem {
        Construction::Superior => replicate_construction(&solver, &g, &h)?,
        Construction::Eldek => swap_construction(&solver, &g, &h)?,
        Construction::Flojito => cross_construction(&solver, &g, &h)?,
        Construction::Strong => strong_case_construction(&solver, &g, &h)?,
    };
    let valid = out.rdf.is_valid_on(&out.product);
    emit(&json!({
            "labels": out.rdf,
            "weight": out.weight,
            "claimed_bound": out.claimed_bound,
            "selection_mode": out.selection_mode,
            "parameters": out.parameters,
            "product": write_graph6(&out.product),
            "valid": valid,
    }))?;
    Ok(())
}

fn families(args: &FamiliesArgs) -> CliResult<()> {
    if args.from > args.to {
        return Err(Failure(format!("empty range {}..={}", args.from, args.to)));
    }
    for k in args.from..=args.to {
        let spec = match args.kind {
            FamilyKind::Path => FamilySpec::Path(k),
            FamilyKind::Cycle => FamilySpec::Cycle(k),
            FamilyKind::Complete => FamilySpec::Complete(k),
            FamilyKind::Star => FamilySpec::Star(k),
            FamilyKind::Hypercube => FamilySpec::Hypercube(k),
        };
        emit(&write_graph6(&make_family(&spec)?))?;
    }
    Ok(())
}

fn corpus_entries(list: &str) -> CliResult<Vec<CorpusEntry>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            if s.contains(':') {
                Ok(CorpusEntry::Family(s.parse()?))
            } else {
                parse_graph6(s)?;
                Ok(CorpusEntry::Graph6 {
                    name: s.to_string(),
                    code: s.to_string(),
                })
            }
        })
        .collect()
}

#[derive(Serialize)]
struct RunLogLine<'a> {
    timestamp: String,
    suite: &'a str,
    run_elapsed_ms: u128,
    #[serde(flatten)]
    record: &'a BoundRecord,
}

fn append_log(path: &Path, report: &Report, elapsed_ms: u128) -> CliResult<()> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let mut buf = String::new();
    for record in &report.records {
        let line = RunLogLine {
            timestamp: chrono::Utc::now().to_rfc3339(),
            suite: &report.suite,
            run_elapsed_ms: elapsed_ms,
            record,
        };
        buf.push_str(&serde_json::to_string(&line)?);
        buf.push('\n');
    }
    file.write_all(buf.as_bytes())
        .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn verify(args: &VerifyArgs) -> CliResult<bool> {
    let corpus = match args.corpus {
        CorpusKind::Families => match &args.graphs {
            Some(list) => Corpus::Families(corpus_entries(list)?),
            None => Corpus::default_families(),
        },
        CorpusKind::Exhaustive => Corpus::ExhaustiveLabeled { max_n: args.max_n },
        CorpusKind::Random => Corpus::Random {
            count: args.count,
            min_n: args.min_n,
            max_n: args.max_n,
            seed: args.seed,
        },
    };
    let products = args
        .products
        .split(',')
        .map(|s| s.trim().parse::<ProductKind>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut spec = SuiteSpec::new(args.name.clone(), corpus, TheoremId::parse_list(&args.theorems)?);
    spec.products = products;
    spec.solver.node_budget = Some(args.budget);
    spec.max_strong_order = args.max_strong_order;
    if let Some(m) = args.max_cartesian_order {
        spec.max_cartesian_order = m;
    }
    spec.jobs = args.jobs;

    let started = Instant::now();
    let report = run_suite(&spec)?;
    let elapsed_ms = started.elapsed().as_millis();
    match &args.report {
        Some(path) => {
            write_file(path, &report.to_json())?;
            emit(&serde_json::to_string(&report.summary)?)?;
        }
        None => emit(&report.to_json())?,
    }
    if let Some(path) = &args.csv {
        write_file(path, &report.to_csv())?;
    }
    if let Some(path) = &args.log {
        append_log(path, &report, elapsed_ms)?;
    }
    for v in report.violations() {
        eprintln!(
            "violation: {} on {} / {}: lhs {:?} rhs {:?}",
            v.theorem,
            v.instance.g,
            v.instance.h.as_deref().unwrap_or("-"),
            v.lhs,
            v.rhs
        );
    }
    let s = &report.summary;
    eprintln!(
        "{} records: {} held, {} violated, {} tight, {} hypotheses not met, {} skipped, {} pairs excluded",
        s.records, s.held, s.violated, s.tight, s.hypothesis_skipped, s.budget_skipped, s.excluded_pairs
    );
    Ok(!report.has_violations())
}

fn premise(args: &PremiseArgs) -> CliResult<bool> {
    let partners = match &args.partners {
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(graph_arg)
            .collect::<CliResult<Vec<_>>>()?,
        None => default_partners(),
    };
    let report = check_pncn_premise(args.n, args.kind, &partners, &Solver::default())?;
    emit(&serde_json::to_string_pretty(&report)?)?;
    if !report.premise_holds {
        eprintln!(
            "premise fails for {}: |B2| values {:?}, expected {}",
            report.graph, report.b2_sizes, report.expected_b2
        );
    }
    let inequality_ok = report.inequality.iter().all(|r| r.holds != Some(false))
        && report.forced.iter().all(|c| c.holds);
    Ok(inequality_ok)
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Solve(a) => solve(&a).map(|_| true),
        Command::Product(a) => {
            let p = product(&graph_arg(&a.a)?, &graph_arg(&a.b)?, a.kind)?;
            emit(&write_graph6(&p))?;
            Ok(true)
        }
        Command::Construct(a) => construct(&a).map(|_| true),
        Command::Verify(a) => verify(&a),
        Command::Families(a) => families(&a).map(|_| true),
        Command::PremiseCheck(a) => premise(&a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("romdom: {msg}");
            ExitCode::from(2)
        }
    }
}
