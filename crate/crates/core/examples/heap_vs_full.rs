//! The bounded-heap sweep against the full sort, and an input where the heap
//! has to fall back.
//!
//!     cargo run --release --example heap_vs_full

use std::time::Instant;

use maxdisp::cli::generate_normal;
use maxdisp::{solve_full, solve_heap, CardinalityConstraint, PointSet};

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

fn main() -> maxdisp::Result<()> {
    let points = generate_normal(3_000, 2, 9)?;
    let constraint = CardinalityConstraint::balanced(3_000).unwrap();
    let (full, full_ms) = timed(|| solve_full(&points, constraint));
    let (heap, heap_ms) = timed(|| solve_heap(&points, constraint));
    let (full, heap) = (full?, heap?);
    println!(
        "full: {} in {full_ms:.1} ms, {} distances held",
        full.dispersion, full.distance_entries_held
    );
    println!(
        "heap: {} in {heap_ms:.1} ms, {} distances held",
        heap.dispersion, heap.distance_entries_held
    );
    assert!(full.dispersion.bit_eq(&heap.dispersion));

    // On a unit grid the unit-distance graph is bipartite and has about 2n
    // edges, so the n smallest distances never produce a conflict.
    let mut rows = Vec::new();
    for x in 0..8 {
        for y in 0..8 {
            rows.push(vec![f64::from(x), f64::from(y)]);
        }
    }
    let grid = PointSet::new(rows)?;
    let result = solve_heap(&grid, CardinalityConstraint::new(32, 32))?;
    println!(
        "8x8 grid: dispersion {}, fallback {}, variant {}",
        result.dispersion, result.fallback_triggered, result.variant
    );
    Ok(())
}
