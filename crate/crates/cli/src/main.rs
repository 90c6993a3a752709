use clap::{Args, Parser, Subcommand, ValueEnum};
use graphinv::closed_forms::{multipartite_snf, star_snf, tree_delta_n, tree_snf, TreeData};
use graphinv::enumeration::{
    check_cells, expected_tables, graph6_payload, CensusRow, CensusSpec, Domain, Source,
};
use graphinv::graph::{parse_graph6, CANON_MAX_N};
use graphinv::invariants::{cokernel_group, compute_fingerprint, is_codeterminantal_qx};
use graphinv::linalg::{charpoly, cof_polynomial, smith_normal_form};
use graphinv::{build_matrix, related, Error, Flavor, Graph, MatrixKind};
use serde_json::{json, Value};
use std::collections::HashMap;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "graphinv", version, about = "Spectral and Smith-normal-form invariants of graph matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the integer matrix of a graph.
    Matrix(GraphArgs),
    /// Characteristic polynomial det(xI - M).
    Charpoly(GraphArgs),
    /// Invariant factors of M over the integers.
    Snf(SnfArgs),
    /// The polynomial det(xI - M + J) - det(xI - M).
    Cof(GraphArgs),
    /// Fingerprint of one flavor.
    Fingerprint(FingerprintArgs),
    /// Whether two graphs share a fingerprint.
    Relate(RelateArgs),
    /// Whether two graphs have the same determinantal divisors of xI - M over Q[x].
    Codet(PairArgs),
    /// Closed-form invariant factors.
    #[command(subcommand)]
    ClosedForm(ClosedForm),
    /// Count graphs with a fingerprint mate.
    Census(CensusArgs),
    /// Recompute published census cells and report PASS/FAIL per cell.
    DiffPaper(DiffArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct Input {
    /// Graph in graph6 format.
    #[arg(required_unless_present = "input", conflicts_with = "input")]
    graph: Option<String>,
    /// Read graph6 lines from a file (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: MatrixKind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    input: Input,
}

#[derive(Args)]
struct SnfArgs {
    #[command(flatten)]
    common: GraphArgs,
    /// Print the cokernel group instead of the factor list.
    #[arg(long)]
    cokernel: bool,
}

#[derive(Args)]
struct FingerprintArgs {
    #[command(flatten)]
    common: GraphArgs,
    #[arg(long, value_parser = parse_flavor)]
    flavor: Flavor,
    /// Print the canonical key bytes in hex.
    #[arg(long)]
    key: bool,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: MatrixKind,
    first: String,
    second: String,
}

#[derive(Args)]
struct RelateArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, value_parser = parse_flavor)]
    flavor: Flavor,
}

#[derive(Subcommand)]
enum ClosedForm {
    /// Invariant factors of A^trs for the star with the given number of leaves.
    Star {
        #[arg(long)]
        leaves: usize,
    },
    /// Invariant factors of A^trs (or A^trs_+) for m parts of size s.
    Multipartite {
        #[arg(long)]
        parts: usize,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        signless: bool,
    },
    /// Invariant factors of A^trs for a tree, from its 2-matchings.
    Tree {
        graph: String,
        /// Also print det A^trs.
        #[arg(long)]
        det: bool,
    },
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_domain, default_value = "connected")]
    domain: Domain,
    /// Matrix kinds, comma separated or repeated.
    #[arg(long, value_parser = parse_kind, value_delimiter = ',', required = true)]
    kind: Vec<MatrixKind>,
    #[arg(long, value_parser = parse_flavor)]
    flavor: Flavor,
    /// graph6 file (`-` for stdin); defaults to the built-in generator.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: CensusFormat,
    #[command(flatten)]
    run: RunArgs,
    /// Bucket through temporary files under this directory.
    #[arg(long)]
    spill_dir: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads.
    #[arg(long, env = "GRAPHINV_JOBS")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct DiffArgs {
    /// Tables to check, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
    tables: Vec<u8>,
    /// Largest vertex count to check.
    #[arg(long, default_value_t = CANON_MAX_N)]
    max_n: usize,
    /// graph6 file with every graph on N vertices, as N=PATH.
    #[arg(long, value_parser = parse_graphs_arg)]
    graphs: Vec<(usize, PathBuf)>,
    #[command(flatten)]
    run: RunArgs,
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_domain(s: &str) -> Result<Domain, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_graphs_arg(s: &str) -> Result<(usize, PathBuf), String> {
    let (n, path) = s.split_once('=').ok_or("expected N=PATH")?;
    let n = n.parse().map_err(|_| format!("bad vertex count '{n}'"))?;
    Ok((n, PathBuf::from(path)))
}

enum Failure {
    Domain(Error),
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(msg) => Failure::Usage(msg),
            e => Failure::Domain(e),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type Outcome = Result<(), Failure>;

/// Applies `f` to the positional graph or to every line of `--input`.
fn for_each_graph(input: &Input, mut f: impl FnMut(&Graph) -> Result<String, Error>) -> Outcome {
    let mut out = io::stdout().lock();
    if let Some(g6) = &input.graph {
        let g = parse_graph6(g6.trim())?;
        writeln!(out, "{}", f(&g)?)?;
        return Ok(());
    }
    let path = input.input.as_ref().expect("clap enforces graph or --input");
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        let file = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Box::new(io::BufReader::new(file))
    };
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let Some(g6) = graph6_payload(&line) else { continue };
        let result = parse_graph6(g6).and_then(|g| f(&g)).map_err(|e| e.at_line(i + 1))?;
        writeln!(out, "{result}")?;
    }
    Ok(())
}

fn render(format: Format, g: &Graph, args: &GraphArgs, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => json!({"graph": g.to_string(), "kind": args.kind.token(), "value": value}).to_string(),
    }
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    Value::from(xs.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn matrix_cmd(args: &GraphArgs) -> Outcome {
    for_each_graph(&args.input, |g| {
        let m = build_matrix(g, args.kind)?;
        let text = m.to_string().trim_end().to_owned();
        let rows: Vec<Value> = m.rows().map(strings).collect();
        Ok(render(args.format, g, args, text, Value::from(rows)))
    })
}

fn poly_cmd(args: &GraphArgs, cof: bool) -> Outcome {
    for_each_graph(&args.input, |g| {
        let m = build_matrix(g, args.kind)?;
        let p = if cof { cof_polynomial(&m) } else { charpoly(&m) };
        Ok(render(args.format, g, args, p.to_string(), strings(p.coeffs())))
    })
}

fn snf_cmd(args: &SnfArgs) -> Outcome {
    let common = &args.common;
    for_each_graph(&common.input, |g| {
        if args.cokernel {
            let group = cokernel_group(g, common.kind)?;
            let value = json!({"torsion": strings(&group.torsion), "free_rank": group.free_rank});
            return Ok(render(common.format, g, common, group.to_string(), value));
        }
        let d = smith_normal_form(&build_matrix(g, common.kind)?);
        Ok(render(common.format, g, common, d.to_string(), strings(d.as_slice())))
    })
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn fingerprint_cmd(args: &FingerprintArgs) -> Outcome {
    let common = &args.common;
    for_each_graph(&common.input, |g| {
        let fp = compute_fingerprint(g, common.kind, args.flavor)?;
        let key = hex(&fp.key(common.kind));
        let text = if args.key { key.clone() } else { fp.to_string() };
        let value = json!({"flavor": args.flavor.token(), "fingerprint": fp.to_string(), "key": key});
        Ok(render(common.format, g, common, text, value))
    })
}

fn parse_pair(args: &PairArgs) -> Result<(Graph, Graph), Error> {
    let g = parse_graph6(args.first.trim()).map_err(|e| e.at_line(1))?;
    let h = parse_graph6(args.second.trim()).map_err(|e| e.at_line(2))?;
    Ok((g, h))
}

fn closed_form_cmd(cf: &ClosedForm) -> Outcome {
    match cf {
        ClosedForm::Star { leaves } => println!("{}", star_snf(*leaves)?),
        ClosedForm::Multipartite { parts, size, signless } => {
            println!("{}", multipartite_snf(*parts, *size, *signless)?)
        }
        ClosedForm::Tree { graph, det } => {
            let t = TreeData::new(parse_graph6(graph.trim())?).map_err(Failure::Domain)?;
            println!("{}", tree_snf(&t)?);
            if *det {
                println!("{}", tree_delta_n(&t)?);
            }
        }
    }
    Ok(())
}

fn row_json(r: &CensusRow) -> Value {
    json!({
        "kind": r.kind.token(),
        "flavor": r.flavor.token(),
        "n": r.n,
        "domain": r.domain.token(),
        "domain_size": r.domain_size,
        "with_mate": r.with_mate,
        "uncertainty": r.uncertainty.to_string(),
    })
}

fn census_cmd(args: &CensusArgs) -> Outcome {
    let source = match &args.input {
        Some(p) => Source::Graph6File(p.clone()),
        None => Source::Generator,
    };
    let mut spec = CensusSpec::new(args.n, args.domain, args.kind.clone(), args.flavor).with_source(source);
    spec.jobs = args.run.jobs;
    spec.spill_dir = args.spill_dir.clone();
    let rows = graphinv::enumeration::run_census(&spec)?;
    let mut out = io::stdout().lock();
    match args.format {
        CensusFormat::Csv => {
            writeln!(out, "{}", CensusRow::CSV_HEADER)?;
            for r in &rows {
                writeln!(out, "{}", r.to_csv())?;
            }
        }
        CensusFormat::Json => {
            writeln!(out, "{}", Value::from(rows.iter().map(row_json).collect::<Vec<_>>()))?;
        }
        CensusFormat::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "{} {} n={} {}: {} of {} have a mate ({})",
                    r.kind, r.flavor, r.n, r.domain, r.with_mate, r.domain_size, r.uncertainty
                )?;
            }
        }
    }
    Ok(())
}

fn diff_cmd(args: &DiffArgs) -> Outcome {
    let files: HashMap<usize, PathBuf> = args.graphs.iter().cloned().collect();
    let (runnable, skipped): (Vec<_>, Vec<_>) = expected_tables()
        .into_iter()
        .filter(|c| args.tables.contains(&c.table) && c.n <= args.max_n)
        .partition(|c| c.n <= CANON_MAX_N || files.contains_key(&c.n));
    let source = |n: usize| match files.get(&n) {
        Some(p) => Source::Graph6File(p.clone()),
        None => Source::Generator,
    };
    let checks = check_cells(&runnable, source, args.run.jobs)?;
    let mut out = io::stdout().lock();
    for c in &checks {
        writeln!(out, "{c}")?;
    }
    for c in &skipped {
        writeln!(out, "SKIP {c}: no graph6 file for n = {}", c.n)?;
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    writeln!(
        out,
        "{} passed, {failed} failed, {} skipped",
        checks.len() - failed,
        skipped.len()
    )?;
    if failed > 0 {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Matrix(a) => matrix_cmd(a),
        Command::Charpoly(a) => poly_cmd(a, false),
        Command::Cof(a) => poly_cmd(a, true),
        Command::Snf(a) => snf_cmd(a),
        Command::Fingerprint(a) => fingerprint_cmd(a),
        Command::Relate(a) => {
            let (g, h) = parse_pair(&a.pair)?;
            println!("{}", related(&g, &h, a.pair.kind, a.flavor)?);
            Ok(())
        }
        Command::Codet(a) => {
            let (g, h) = parse_pair(a)?;
            println!("{}", is_codeterminantal_qx(&g, &h, a.kind)?);
            Ok(())
        }
        Command::ClosedForm(cf) => closed_form_cmd(cf),
        Command::Census(a) => census_cmd(a),
        Command::DiffPaper(a) => diff_cmd(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch) => ExitCode::from(1),
    }
}
