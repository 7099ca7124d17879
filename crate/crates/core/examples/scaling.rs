//! Small version of the timing sweep, with peak heap tracking.
//!
//!     cargo run --release --example scaling

use maxdisp::cli::{run_benchmark, BenchConfig};
use maxdisp::memory::PeakAllocator;
use maxdisp::Variant;

#[global_allocator]
static ALLOC: PeakAllocator = PeakAllocator::new();

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = BenchConfig {
        sizes: vec![500, 1_000, 2_000, 4_000],
        repetitions: 3,
        dims: 2,
        base_seed: 1,
        variants: vec![Variant::Full, Variant::Heap],
    };
    let report = run_benchmark(&config, &ALLOC, |row| {
        println!(
            "n={:>5} {:?} rep {} {:>9.2} ms {:>12} bytes fallback={}",
            row.n,
            row.variant,
            row.repetition,
            row.ms,
            row.peak_mem_bytes.unwrap_or(0),
            row.fallback_triggered
        );
    })?;
    report.write_csv(std::io::stdout().lock())?;
    Ok(())
}
