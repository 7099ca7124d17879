//! Data ingestion, synthetic data, result files and the benchmark harness
//! behind the `maxdisp` binary.
//!
//! Synthetic points come from ChaCha20 (`rand_chacha::ChaCha20Rng`, seeded
//! with `seed_from_u64`) and `rand_distr::StandardNormal` (ziggurat), filled
//! row-major. The same `(n, m, seed)` gives the same bits on every platform.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::dispersion::solve;
use crate::error::Error;
use crate::memory::MemoryProbe;
use crate::types::{
    dispersion_of, Assignment, CardinalityConstraint, Dispersion, DispersionResult, PointSet,
    Variant,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("parse error at row {row}, column {col}: {message}")]
    Parse {
        row: usize,
        col: usize,
        message: String,
    },
    #[error("non-finite value at row {row}, column {col}")]
    NonFiniteFeature { row: usize, col: usize },
    #[error("row {row} has {found} columns, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("input contains no data rows")]
    EmptyFile,
    #[error("--balanced needs an even number of points, got {0}")]
    OddBalanced(usize),
    #[error("variants disagree at n={n}, repetition {repetition}: full={full}, heap={heap}")]
    VariantMismatch {
        n: usize,
        repetition: usize,
        full: Dispersion,
        heap: Dispersion,
    },
    #[error(transparent)]
    Data(#[from] Error),
}

impl CliError {
    /// 1 for usage errors, 2 for everything about the data or files.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            _ => 2,
        }
    }

    fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

fn csv_error(path: &Path, err: csv::Error) -> CliError {
    let row = err.position().map_or(0, |p| p.line() as usize);
    match err.into_kind() {
        csv::ErrorKind::Io(source) => CliError::io(path, source),
        other => CliError::Parse {
            row,
            col: 0,
            message: format!("{other:?}"),
        },
    }
}

/// Reads points from a comma-separated file, one item per row.
///
/// A first row made only of non-numeric fields is taken as a header. Row and
/// column numbers in errors are 1-based positions in the file.
pub fn ingest_csv(path: &Path) -> Result<PointSet, CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    read_points(file, path)
}

/// [`ingest_csv`] over any reader; `origin` only labels I/O errors.
pub fn read_points<R: io::Read>(reader: R, origin: &Path) -> Result<PointSet, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut dims: Option<usize> = None;
    let mut data = Vec::new();
    let mut first = true;
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(origin, e))?;
        let row = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        if first {
            first = false;
            if record.iter().all(|f| f.parse::<f64>().is_err()) {
                continue;
            }
        }
        let expected = *dims.get_or_insert(record.len());
        if record.len() != expected {
            return Err(CliError::RaggedRow {
                row,
                expected,
                found: record.len(),
            });
        }
        for (idx, field) in record.iter().enumerate() {
            let col = idx + 1;
            let value: f64 = field.parse().map_err(|_| CliError::Parse {
                row,
                col,
                message: format!("`{field}` is not a number"),
            })?;
            if !value.is_finite() {
                return Err(CliError::NonFiniteFeature { row, col });
            }
            data.push(value);
        }
    }
    let m = dims.ok_or(CliError::EmptyFile)?;
    Ok(PointSet::from_flat(m, data)?)
}

/// `n` x `m` standard-normal features from a seeded ChaCha20 stream.
pub fn generate_normal(n: usize, m: usize, seed: u64) -> Result<PointSet, Error> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let data = (0..n * m).map(|_| rng.sample(StandardNormal)).collect();
    PointSet::from_flat(m, data)
}

/// Writes `item_index,group` rows with groups `1` and `2`.
pub fn write_assignment_csv<W: Write>(out: W, assignment: &Assignment) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["item_index", "group"])?;
    for (i, g) in assignment.groups().iter().enumerate() {
        writer.write_record([i.to_string(), g.to_string()])?;
    }
    writer.flush()
}

/// Reads a file produced by [`write_assignment_csv`].
pub fn read_assignment_csv<R: io::Read>(input: R) -> Result<Assignment, CliError> {
    let mut reader = csv::Reader::from_reader(input);
    let mut labels = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(Path::new("<assignment>"), e))?;
        let row = record.position().map_or(0, |p| p.line() as usize);
        let field = |col: usize| -> Result<usize, CliError> {
            record
                .get(col - 1)
                .and_then(|f| f.trim().parse().ok())
                .ok_or_else(|| CliError::Parse {
                    row,
                    col,
                    message: "expected a non-negative integer".into(),
                })
        };
        let index = field(1)?;
        if index != labels.len() {
            return Err(CliError::Parse {
                row,
                col: 1,
                message: format!("expected item index {}", labels.len()),
            });
        }
        let group = u8::try_from(field(2)?).unwrap_or(0);
        labels.push(group);
    }
    Ok(Assignment::from_labels(&labels)?)
}

#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    Csv(PathBuf),
    Generate { n: usize, m: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSizes {
    Explicit {
        c1: usize,
        c2: usize,
    },
    /// `c1 = c2 = n / 2`; `n` must be even.
    Balanced,
}

impl GroupSizes {
    pub fn resolve(&self, n: usize) -> Result<CardinalityConstraint, CliError> {
        match *self {
            GroupSizes::Explicit { c1, c2 } => Ok(CardinalityConstraint::new(c1, c2)),
            GroupSizes::Balanced => {
                CardinalityConstraint::balanced(n).ok_or(CliError::OddBalanced(n))
            }
        }
    }
}

/// One solve, as described on the command line.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: InputSource,
    pub sizes: GroupSizes,
    pub variant: Variant,
    /// Assignment CSV destination.
    pub out: Option<PathBuf>,
    /// Summary destination; stdout when absent.
    pub summary: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub n: usize,
    pub constraint: CardinalityConstraint,
    pub result: DispersionResult,
    pub wall_ms: f64,
    pub peak_mem_bytes: Option<u64>,
}

impl RunReport {
    /// `key=value` lines.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let r = &self.result;
        let _ = writeln!(s, "dispersion={}", r.dispersion.to_decimal());
        let _ = writeln!(s, "n={}", self.n);
        let _ = writeln!(s, "c1={}", self.constraint.c1);
        let _ = writeln!(s, "c2={}", self.constraint.c2);
        let _ = writeln!(s, "iterations_used={}", r.iterations_used);
        let _ = writeln!(s, "fallback_triggered={}", r.fallback_triggered);
        let _ = writeln!(s, "variant={}", r.variant);
        let _ = writeln!(s, "wall_clock_ms={:.3}", self.wall_ms);
        let _ = writeln!(s, "peak_mem_bytes={}", fmt_mem(self.peak_mem_bytes));
        s
    }
}

fn fmt_mem(bytes: Option<u64>) -> String {
    bytes.map_or_else(|| "NA".to_string(), |b| b.to_string())
}

fn load(input: &InputSource) -> Result<PointSet, CliError> {
    match *input {
        InputSource::Csv(ref path) => ingest_csv(path),
        InputSource::Generate { n, m, seed } => Ok(generate_normal(n, m, seed)?),
    }
}

fn create(path: &Path) -> Result<File, CliError> {
    File::create(path).map_err(|e| CliError::io(path, e))
}

/// Solves one instance and writes the requested files.
pub fn run(config: &RunConfig, probe: &dyn MemoryProbe) -> Result<RunReport, CliError> {
    let points = load(&config.input)?;
    let constraint = config.sizes.resolve(points.len())?;

    probe.reset_peak();
    let start = Instant::now();
    let result = solve(&points, constraint, config.variant)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let peak_mem_bytes = probe.peak_bytes();

    let report = RunReport {
        n: points.len(),
        constraint,
        result,
        wall_ms,
        peak_mem_bytes,
    };
    if let Some(path) = &config.out {
        write_assignment_csv(create(path)?, &report.result.assignment)
            .map_err(|e| CliError::io(path, e))?;
    }
    let summary = report.summary();
    match &config.summary {
        Some(path) => create(path)?
            .write_all(summary.as_bytes())
            .map_err(|e| CliError::io(path, e))?,
        None => print!("{summary}"),
    }
    Ok(report)
}

/// Parses `start:stop:step` (inclusive stop).
pub fn parse_range(spec: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("expected start:stop:step, got `{spec}`"));
    let parts: Vec<usize> = spec
        .split(':')
        .map(|p| p.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if step == 0 || start == 0 || start > stop {
        return Err(bad());
    }
    Ok((start..=stop).step_by(step).collect())
}

/// Parses `N,M`.
pub fn parse_generate(spec: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("expected N,M with N, M >= 1, got `{spec}`"));
    let (n, m) = spec.split_once(',').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    if n == 0 || m == 0 {
        return Err(bad());
    }
    Ok((n, m))
}

/// Timing sweep over instance sizes on synthetic standard-normal data.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub repetitions: usize,
    pub dims: usize,
    /// Repetition `r` uses seed `base_seed + r` for every size and variant.
    pub base_seed: u64,
    /// Each entry must be `Full` or `Heap`.
    pub variants: Vec<Variant>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub variant: Variant,
    pub repetition: usize,
    pub ms: f64,
    pub peak_mem_bytes: Option<u64>,
    pub fallback_triggered: bool,
    pub dispersion: Dispersion,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// Heap runs and how many of them needed the full fallback.
    pub fn heap_fallbacks(&self) -> (usize, usize) {
        let heap: Vec<_> = self
            .rows
            .iter()
            .filter(|r| r.variant == Variant::Heap)
            .collect();
        (
            heap.len(),
            heap.iter().filter(|r| r.fallback_triggered).count(),
        )
    }

    pub fn fallback_fraction(&self) -> Option<f64> {
        let (runs, fallbacks) = self.heap_fallbacks();
        (runs > 0).then(|| fallbacks as f64 / runs as f64)
    }

    /// Header `n,variant,repetition,ms,peak_mem_bytes`, `NA` for unknown memory.
    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(["n", "variant", "repetition", "ms", "peak_mem_bytes"])?;
        for row in &self.rows {
            writer.write_record([
                row.n.to_string(),
                variant_name(row.variant).to_string(),
                row.repetition.to_string(),
                format!("{:.3}", row.ms),
                fmt_mem(row.peak_mem_bytes),
            ])?;
        }
        writer.flush()
    }
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Full => "full",
        Variant::Heap => "heap",
        Variant::Auto => "auto",
    }
}

/// Runs every (size, repetition, variant) cell sequentially. Sizes use
/// `c1 = floor(n/2)`, `c2 = n - c1`. When both variants run on the same data
/// their dispersions must match bit for bit.
pub fn run_benchmark(
    config: &BenchConfig,
    probe: &dyn MemoryProbe,
    mut progress: impl FnMut(&BenchRow),
) -> Result<BenchReport, CliError> {
    let mut report = BenchReport::default();
    for &n in &config.sizes {
        let constraint = CardinalityConstraint::new(n / 2, n - n / 2);
        for repetition in 0..config.repetitions {
            let seed = config.base_seed.wrapping_add(repetition as u64);
            let points = generate_normal(n, config.dims, seed)?;
            let mut seen: Option<Dispersion> = None;
            for &variant in &config.variants {
                probe.reset_peak();
                let start = Instant::now();
                let result = solve(&points, constraint, variant)?;
                let ms = start.elapsed().as_secs_f64() * 1e3;
                let peak_mem_bytes = probe.peak_bytes();
                debug_assert_eq!(
                    dispersion_of(&points, &result.assignment).ok(),
                    Some(result.dispersion)
                );
                if let Some(prev) = seen {
                    if !prev.bit_eq(&result.dispersion) {
                        return Err(CliError::VariantMismatch {
                            n,
                            repetition,
                            full: prev,
                            heap: result.dispersion,
                        });
                    }
                }
                seen = Some(result.dispersion);
                let row = BenchRow {
                    n,
                    variant,
                    repetition,
                    ms,
                    peak_mem_bytes,
                    fallback_triggered: result.fallback_triggered,
                    dispersion: result.dispersion,
                };
                progress(&row);
                report.rows.push(row);
            }
        }
    }
    Ok(report)
}
