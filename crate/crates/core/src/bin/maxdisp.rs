use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use maxdisp::cli::{
    parse_generate, parse_range, run, run_benchmark, BenchConfig, CliError, GroupSizes,
    InputSource, RunConfig,
};
use maxdisp::memory::PeakAllocator;
use maxdisp::Variant;

#[global_allocator]
static ALLOC: PeakAllocator = PeakAllocator::new();

/// Exact two-group maximum dispersion partitioning.
#[derive(Debug, Parser)]
#[command(name = "maxdisp", version)]
#[command(group(ArgGroup::new("source").args(["input", "generate"])))]
#[command(group(ArgGroup::new("sizes").args(["c1", "balanced"])))]
struct Args {
    /// CSV file with one point per row.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Generate N standard-normal points with M features.
    #[arg(long, value_name = "N,M")]
    generate: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, requires = "c2")]
    c1: Option<usize>,
    #[arg(long, requires = "c1")]
    c2: Option<usize>,
    /// c1 = c2 = n/2.
    #[arg(long)]
    balanced: bool,
    /// full, heap or auto.
    #[arg(long, default_value = "auto")]
    variant: String,
    /// Assignment CSV output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Summary output (stdout if omitted).
    #[arg(long, value_name = "PATH")]
    summary: Option<PathBuf>,
    /// Benchmark sizes as start:stop:step.
    #[arg(long, value_name = "RANGE")]
    bench: Option<String>,
    #[arg(long, default_value_t = 10)]
    reps: usize,
    /// Features per generated point in benchmark mode.
    #[arg(long, default_value_t = 2)]
    bench_dims: usize,
    /// Timing CSV output (stdout if omitted).
    #[arg(long, value_name = "PATH")]
    bench_out: Option<PathBuf>,
}

fn variant(args: &Args) -> Result<Variant, CliError> {
    args.variant
        .parse()
        .map_err(|e: maxdisp::Error| CliError::Usage(e.to_string()))
}

fn bench(args: &Args, range: &str) -> Result<(), CliError> {
    let variants = match variant(args)? {
        Variant::Auto => vec![Variant::Full, Variant::Heap],
        v => vec![v],
    };
    let config = BenchConfig {
        sizes: parse_range(range)?,
        repetitions: args.reps,
        dims: args.bench_dims,
        base_seed: args.seed,
        variants,
    };
    let report = run_benchmark(&config, &ALLOC, |row| {
        eprintln!(
            "n={} variant={:?} rep={} ms={:.3}",
            row.n, row.variant, row.repetition, row.ms
        )
    })?;
    match &args.bench_out {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            report.write_csv(file)
        }
        None => report.write_csv(std::io::stdout().lock()),
    }
    .map_err(|source| CliError::Io {
        path: args.bench_out.clone().unwrap_or_else(|| "<stdout>".into()),
        source,
    })?;
    if let Some(fraction) = report.fallback_fraction() {
        let (runs, fallbacks) = report.heap_fallbacks();
        eprintln!("heap fallback fraction: {fraction:.4} ({fallbacks}/{runs})");
    }
    Ok(())
}

fn solve_once(args: &Args) -> Result<(), CliError> {
    let input = match (&args.input, &args.generate) {
        (Some(path), None) => InputSource::Csv(path.clone()),
        (None, Some(spec)) => {
            let (n, m) = parse_generate(spec)?;
            InputSource::Generate {
                n,
                m,
                seed: args.seed,
            }
        }
        _ => {
            return Err(CliError::Usage(
                "one of --input or --generate is required".into(),
            ))
        }
    };
    let sizes = match (args.c1, args.c2, args.balanced) {
        (Some(c1), Some(c2), false) => GroupSizes::Explicit { c1, c2 },
        (None, None, true) => GroupSizes::Balanced,
        _ => return Err(CliError::Usage("give --c1 K --c2 K or --balanced".into())),
    };
    let config = RunConfig {
        input,
        sizes,
        variant: variant(args)?,
        out: args.out.clone(),
        summary: args.summary.clone(),
    };
    run(&config, &ALLOC).map(|_| ())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match &args.bench {
        Some(range) => bench(&args, range),
        None => solve_once(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
