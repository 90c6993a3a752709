//! Streaming census: bucket a graph stream by fingerprint and count the graphs
//! that share their bucket with at least one other graph.

use crate::error::{Error, Result};
use crate::graph::{generate_connected, parse_graph6, Graph, MAX_VERTICES};
use crate::invariants::{fingerprint_keys, Flavor};
use crate::matrices::MatrixKind;
use num_rational::Ratio;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs::File;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

mod expected;

pub use expected::{expected_tables, ExpectedCell};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    /// Connected graphs.
    Connected,
    /// Connected graphs whose complement is connected.
    ConnectedComplement,
    /// Graphs where both the graph and its complement have diameter 2.
    Diam2Pair,
}

impl Domain {
    pub const ALL: [Domain; 3] = [Domain::Connected, Domain::ConnectedComplement, Domain::Diam2Pair];

    pub fn token(self) -> &'static str {
        match self {
            Domain::Connected => "connected",
            Domain::ConnectedComplement => "connected-complement",
            Domain::Diam2Pair => "diam2-pair",
        }
    }

    /// Symbol used for the domain's size in the census tables.
    pub fn symbol(self) -> &'static str {
        match self {
            Domain::Connected => "G",
            Domain::ConnectedComplement => "CG",
            Domain::Diam2Pair => "GC_d2",
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            Domain::Connected => g.is_connected(),
            Domain::ConnectedComplement => g.is_connected() && g.complement().is_connected(),
            Domain::Diam2Pair => {
                g.distance_data().diameter == Some(2) && g.complement().distance_data().diameter == Some(2)
            }
        }
    }

    /// Whether every graph of the domain admits `(kind, flavor)`.
    pub fn admits(self, kind: MatrixKind, flavor: Flavor) -> bool {
        !(self == Domain::Connected && flavor.is_generalized() && kind.requires_connected())
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Domain {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "connected" => Ok(Domain::Connected),
            "connected-complement" | "connected-with-connected-complement" | "cg" => {
                Ok(Domain::ConnectedComplement)
            }
            "diam2-pair" | "diam2" => Ok(Domain::Diam2Pair),
            _ => Err(Error::InvalidArgument(format!("unknown domain '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// The bundled generator of connected graphs (n <= 8).
    Generator,
    /// One graph6 string per line; `-` reads standard input.
    Graph6File(PathBuf),
    /// An in-memory list, numbered from line 1.
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug)]
pub struct CensusSpec {
    pub n: usize,
    pub domain: Domain,
    pub kinds: Vec<MatrixKind>,
    pub flavor: Flavor,
    pub source: Source,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Spill buckets to hash-partitioned files under this directory.
    pub spill_dir: Option<PathBuf>,
    pub batch_size: usize,
}

impl CensusSpec {
    pub fn new(n: usize, domain: Domain, kinds: Vec<MatrixKind>, flavor: Flavor) -> CensusSpec {
        CensusSpec {
            n,
            domain,
            kinds,
            flavor,
            source: Source::Generator,
            jobs: None,
            spill_dir: None,
            batch_size: 4096,
        }
    }

    pub fn with_source(mut self, source: Source) -> Self {
        self.source = source;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_VERTICES {
            return Err(Error::InvalidArgument(format!("n must be in 1..={MAX_VERTICES}, got {}", self.n)));
        }
        if self.kinds.is_empty() {
            return Err(Error::InvalidArgument("no matrix kinds requested".into()));
        }
        if let Some(kind) = self.kinds.iter().find(|&&k| !self.domain.admits(k, self.flavor)) {
            return Err(Error::InvalidArgument(format!(
                "{} for kind '{kind}' needs a connected complement; use domain {} or {}",
                self.flavor,
                Domain::ConnectedComplement,
                Domain::Diam2Pair
            )));
        }
        if self.batch_size == 0 {
            return Err(Error::InvalidArgument("batch size must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub kind: MatrixKind,
    pub flavor: Flavor,
    pub n: usize,
    pub domain: Domain,
    pub domain_size: u64,
    pub with_mate: u64,
    /// `with_mate / domain_size`, zero for an empty domain.
    pub uncertainty: Ratio<u64>,
}

impl CensusRow {
    pub const CSV_HEADER: &'static str = "kind,flavor,n,domain_size,with_mate,uncertainty";

    fn new(kind: MatrixKind, spec: &CensusSpec, domain_size: u64, with_mate: u64) -> CensusRow {
        let uncertainty = if domain_size == 0 {
            Ratio::from_integer(0)
        } else {
            Ratio::new(with_mate, domain_size)
        };
        CensusRow {
            kind,
            flavor: spec.flavor,
            n: spec.n,
            domain: spec.domain,
            domain_size,
            with_mate,
            uncertainty,
        }
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.kind, self.flavor, self.n, self.domain_size, self.with_mate, self.uncertainty
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Bucket {
    count: u64,
    first_line: usize,
}

impl Bucket {
    fn add(&mut self, line: usize) {
        self.first_line = if self.count == 0 { line } else { self.first_line.min(line) };
        self.count += 1;
    }
}

fn with_mate<'a>(buckets: impl IntoIterator<Item = &'a Bucket>) -> u64 {
    buckets.into_iter().filter(|b| b.count >= 2).map(|b| b.count).sum()
}

enum Pending {
    Text(String),
    Parsed(Graph),
}

/// Pulls numbered graphs from a source in batches.
struct Feed {
    inner: FeedInner,
    line: usize,
}

enum FeedInner {
    Lines(Box<dyn BufRead + Send>),
    Graphs(std::vec::IntoIter<Graph>),
}

impl Feed {
    fn open(source: &Source, n: usize) -> Result<Feed> {
        let inner = match source {
            Source::Generator => FeedInner::Graphs(generate_connected(n)?.into_iter()),
            Source::Graphs(gs) => FeedInner::Graphs(gs.clone().into_iter()),
            Source::Graph6File(path) => FeedInner::Lines(open_lines(path)?),
        };
        Ok(Feed { inner, line: 0 })
    }

    fn next_batch(&mut self, size: usize) -> Result<Vec<(usize, Pending)>> {
        let mut batch = Vec::with_capacity(size);
        match &mut self.inner {
            FeedInner::Graphs(it) => {
                for g in it.take(size) {
                    self.line += 1;
                    batch.push((self.line, Pending::Parsed(g)));
                }
            }
            FeedInner::Lines(r) => {
                let mut buf = String::new();
                while batch.len() < size {
                    buf.clear();
                    if r.read_line(&mut buf).map_err(|e| Error::from(e).at_line(self.line + 1))? == 0 {
                        break;
                    }
                    self.line += 1;
                    if let Some(text) = graph6_payload(&buf) {
                        batch.push((self.line, Pending::Text(text.to_owned())));
                    }
                }
            }
        }
        Ok(batch)
    }
}

fn open_lines(path: &Path) -> Result<Box<dyn BufRead + Send>> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(Box::new(BufReader::with_capacity(1 << 16, f)))
}

/// The graph6 string on a line, if any: strips the optional `>>graph6<<`
/// header and line terminators, skips blank and other `>` lines.
pub fn graph6_payload(line: &str) -> Option<&str> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    if line.trim().is_empty() || line.starts_with('>') {
        return None;
    }
    Some(line)
}

/// Reads every graph of a graph6 file, reporting failures with line numbers.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let mut r = open_lines(path)?;
    let mut text = String::new();
    r.read_to_string(&mut text)?;
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| graph6_payload(l).map(|p| (i + 1, p)))
        .map(|(line, p)| parse_graph6(p).map_err(|e| e.at_line(line)))
        .collect()
}

/// Per-kind fingerprint keys, or `None` for a graph outside the domain.
type Keys = Option<Vec<Vec<u8>>>;

fn process(spec: &CensusSpec, line: usize, item: Pending) -> Result<Keys> {
    let g = match item {
        Pending::Parsed(g) => g,
        Pending::Text(t) => parse_graph6(&t).map_err(|e| e.at_line(line))?,
    };
    if g.order() != spec.n {
        return Err(Error::InvalidArgument(format!(
            "graph has {} vertices, census is for n = {}",
            g.order(),
            spec.n
        ))
        .at_line(line));
    }
    if !spec.domain.contains(&g) {
        return Ok(None);
    }
    fingerprint_keys(&g, &spec.kinds, spec.flavor)
        .map(Some)
        .map_err(|e| e.at_line(line))
}

trait Sink {
    fn add(&mut self, kind_index: usize, key: Vec<u8>, line: usize) -> Result<()>;
    fn finish(self: Box<Self>) -> Result<Vec<u64>>;
}

struct MemorySink {
    maps: Vec<HashMap<Vec<u8>, Bucket>>,
}

impl Sink for MemorySink {
    fn add(&mut self, k: usize, key: Vec<u8>, line: usize) -> Result<()> {
        self.maps[k].entry(key).or_default().add(line);
        Ok(())
    }

    fn finish(self: Box<Self>) -> Result<Vec<u64>> {
        Ok(self.maps.iter().map(|m| with_mate(m.values())).collect())
    }
}

const SPILL_PARTITIONS: usize = 64;

/// Hash-partitions keys into files, then buckets each partition exactly.
struct SpillSink {
    dir: tempfile::TempDir,
    writers: Vec<Vec<BufWriter<File>>>,
}

impl SpillSink {
    fn new(root: &Path, kinds: usize) -> Result<SpillSink> {
        let dir = tempfile::Builder::new()
            .prefix("census-")
            .tempdir_in(root)
            .map_err(|e| Error::Io(format!("{}: {e}", root.display())))?;
        let mut writers = Vec::with_capacity(kinds);
        for k in 0..kinds {
            let mut row = Vec::with_capacity(SPILL_PARTITIONS);
            for p in 0..SPILL_PARTITIONS {
                row.push(BufWriter::new(File::create(dir.path().join(format!("{k}-{p}")))?));
            }
            writers.push(row);
        }
        Ok(SpillSink { dir, writers })
    }
}

impl Sink for SpillSink {
    fn add(&mut self, k: usize, key: Vec<u8>, line: usize) -> Result<()> {
        let mut h = DefaultHasher::new();
        key.hash(&mut h);
        let w = &mut self.writers[k][h.finish() as usize % SPILL_PARTITIONS];
        w.write_all(&(key.len() as u32).to_le_bytes())?;
        w.write_all(&key)?;
        w.write_all(&(line as u64).to_le_bytes())?;
        Ok(())
    }

    fn finish(self: Box<Self>) -> Result<Vec<u64>> {
        let SpillSink { dir, writers } = *self;
        let mut totals = Vec::with_capacity(writers.len());
        for (k, row) in writers.into_iter().enumerate() {
            for mut w in row {
                w.flush()?;
            }
            let mut total = 0;
            for p in 0..SPILL_PARTITIONS {
                let mut r = BufReader::new(File::open(dir.path().join(format!("{k}-{p}")))?);
                let mut map: HashMap<Vec<u8>, Bucket> = HashMap::new();
                let mut len = [0u8; 4];
                loop {
                    match r.read_exact(&mut len) {
                        Ok(()) => {}
                        Err(e) if e.kind() == io::ErrorKind::UnexpectedEof => break,
                        Err(e) => return Err(e.into()),
                    }
                    let mut key = vec![0u8; u32::from_le_bytes(len) as usize];
                    r.read_exact(&mut key)?;
                    let mut line = [0u8; 8];
                    r.read_exact(&mut line)?;
                    map.entry(key).or_default().add(u64::from_le_bytes(line) as usize);
                }
                total += with_mate(map.values());
            }
            totals.push(total);
        }
        dir.close()?;
        Ok(totals)
    }
}

/// One row per requested kind. Rows do not depend on input order or on the
/// number of workers.
pub fn run_census(spec: &CensusSpec) -> Result<Vec<CensusRow>> {
    spec.validate()?;
    match spec.jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("cannot start {j} workers: {e}")))?;
            pool.install(|| census_inner(spec))
        }
        None => census_inner(spec),
    }
}

fn census_inner(spec: &CensusSpec) -> Result<Vec<CensusRow>> {
    let mut sink: Box<dyn Sink> = match &spec.spill_dir {
        Some(root) => Box::new(SpillSink::new(root, spec.kinds.len())?),
        None => Box::new(MemorySink {
            maps: vec![HashMap::new(); spec.kinds.len()],
        }),
    };
    let mut feed = Feed::open(&spec.source, spec.n)?;
    let mut domain_size = 0u64;
    loop {
        let batch = feed.next_batch(spec.batch_size)?;
        if batch.is_empty() {
            break;
        }
        let results: Vec<(usize, Result<Keys>)> = batch
            .into_par_iter()
            .map(|(line, item)| (line, process(spec, line, item)))
            .collect();
        for (line, r) in results {
            let Some(keys) = r? else { continue };
            domain_size += 1;
            for (k, key) in keys.into_iter().enumerate() {
                sink.add(k, key, line)?;
            }
        }
    }
    let counts = sink.finish()?;
    Ok(spec
        .kinds
        .iter()
        .zip(counts)
        .map(|(&kind, w)| CensusRow::new(kind, spec, domain_size, w))
        .collect())
}

/// For each graph, whether another graph in the list shares its fingerprint.
pub fn has_mate(graphs: &[Graph], kind: MatrixKind, flavor: Flavor) -> Result<Vec<bool>> {
    let keys: Vec<Vec<u8>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            fingerprint_keys(g, &[kind], flavor)
                .map(|mut v| v.pop().unwrap())
                .map_err(|e| e.at_line(i + 1))
        })
        .collect::<Result<_>>()?;
    let mut counts: HashMap<&[u8], u64> = HashMap::new();
    for k in &keys {
        *counts.entry(k).or_default() += 1;
    }
    Ok(keys.iter().map(|k| counts[k.as_slice()] >= 2).collect())
}

/// Outcome of comparing one expected cell with a computed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCheck {
    pub cell: ExpectedCell,
    pub actual: u64,
}

impl CellCheck {
    pub fn passed(&self) -> bool {
        self.actual == self.cell.value
    }
}

impl fmt::Display for CellCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: expected {}, got {}", self.cell, self.cell.value, self.actual)
    }
}

/// Runs the censuses needed for `cells`, one per `(n, domain, flavor)`, and
/// compares. `source_for(n)` supplies the graph stream for each order.
pub fn check_cells(
    cells: &[ExpectedCell],
    mut source_for: impl FnMut(usize) -> Source,
    jobs: Option<usize>,
) -> Result<Vec<CellCheck>> {
    let mut groups: BTreeMap<(usize, Domain, Flavor), Vec<MatrixKind>> = BTreeMap::new();
    for c in cells {
        let kinds = groups.entry((c.n, c.domain, c.flavor)).or_default();
        if let Some(k) = c.kind {
            if !kinds.contains(&k) {
                kinds.push(k);
            }
        }
    }
    let mut results: HashMap<_, (u64, HashMap<MatrixKind, u64>)> = HashMap::new();
    for ((n, domain, flavor), mut kinds) in groups {
        // a domain-size cell alone still needs one cheap pass
        let flavor_run = if kinds.is_empty() { Flavor::Spectral } else { flavor };
        if kinds.is_empty() {
            kinds.push(MatrixKind::A);
        }
        let mut spec = CensusSpec::new(n, domain, kinds, flavor_run).with_source(source_for(n));
        spec.jobs = jobs;
        let rows = run_census(&spec)?;
        let size = rows[0].domain_size;
        let by_kind = rows.into_iter().map(|r| (r.kind, r.with_mate)).collect();
        results.insert((n, domain, flavor), (size, by_kind));
    }
    Ok(cells
        .iter()
        .map(|c| {
            let (size, by_kind) = &results[&(c.n, c.domain, c.flavor)];
            let actual = match c.kind {
                None => *size,
                Some(k) => by_kind[&k],
            };
            CellCheck { cell: c.clone(), actual }
        })
        .collect())
}
