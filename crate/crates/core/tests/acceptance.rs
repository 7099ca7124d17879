//! Acceptance suite. Runs every criterion sequentially (peak-memory readings
//! need an otherwise idle allocator) and prints one PASS/FAIL line each.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{grid, is_proper, median, normal_points, random_graph, rng, structured_graphs};
use maxdisp::cli::{run_benchmark, BenchConfig};
use maxdisp::memory::{MemoryProbe, PeakAllocator};
use maxdisp::oracle::{brute_force_2colcc, brute_force_mdcc, brute_force_subset_sum};
use maxdisp::{
    dispersion_of, solve, solve_2colcc, solve_full, solve_heap, CardinalityConstraint,
    SubsetSumTable, ThresholdGraph, Variant, VariantUsed,
};
use rand::Rng;

#[global_allocator]
static ALLOC: PeakAllocator = PeakAllocator::new();

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(budget: Duration, start: Instant) -> Result<Duration, String> {
    let spent = start.elapsed();
    ensure!(spent <= budget, "took {spent:?}, budget {budget:?}");
    Ok(spent)
}

/// Criterion 1: both variants match exhaustive search on small instances.
fn oracle_optimality() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    let mut instances = 0;
    let mut seed = 0u64;
    while instances < 2_000 {
        let n = r.random_range(2..=12);
        let m = r.random_range(1..=3);
        let points = normal_points(n, m, seed);
        seed += 1;
        for c1 in 0..=n {
            let c = CardinalityConstraint::new(c1, n - c1);
            let (best, _) = brute_force_mdcc(&points, c).map_err(|e| e.to_string())?;
            for variant in [Variant::Full, Variant::Heap] {
                let got = solve(&points, c, variant).map_err(|e| e.to_string())?;
                ensure!(
                    got.dispersion.bit_eq(&best),
                    "seed {} n={n} m={m} c={c:?} {variant:?}: {} vs brute force {}",
                    seed - 1,
                    got.dispersion,
                    best
                );
                ensure!(got.assignment.respects(c), "assignment breaks {c:?}");
                let achieved =
                    dispersion_of(&points, &got.assignment).map_err(|e| e.to_string())?;
                ensure!(
                    achieved.bit_eq(&best),
                    "assignment achieves {achieved}, expected {best}"
                );
            }
            instances += 1;
        }
    }
    let spent = within(Duration::from_secs(120), start)?;
    Ok(format!(
        "{instances} instances, {} point sets, {spent:.2?}",
        seed
    ))
}

/// Criterion 2: 2-COLCC agrees with enumeration over random and structured graphs.
fn colcc_equivalence() -> Outcome {
    let start = Instant::now();
    let mut r = rng(2);
    let probabilities = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5];
    let mut graphs: Vec<ThresholdGraph> = (0..2_000)
        .map(|i| {
            let n = r.random_range(1..=14);
            random_graph(n, probabilities[i % probabilities.len()], &mut r)
        })
        .collect();
    let random_count = graphs.len();
    graphs.extend(structured_graphs());
    let mut feasible = 0;
    let mut checks = 0;
    for (idx, g) in graphs.iter().enumerate() {
        let n = g.vertex_count();
        for c1 in 0..=n {
            let c = CardinalityConstraint::new(c1, n - c1);
            let fast = solve_2colcc(g, c);
            let slow = brute_force_2colcc(g, c).map_err(|e| e.to_string())?;
            checks += 1;
            ensure!(
                fast.is_ok() == slow.is_some(),
                "graph #{idx} (n={n}, edges {:?}) c={c:?}: solver {:?}, enumeration {}",
                g.edges().collect::<Vec<_>>(),
                fast.as_ref().err(),
                slow.is_some()
            );
            if let Ok(a) = fast {
                feasible += 1;
                ensure!(is_proper(g, &a), "graph #{idx} c={c:?}: monochromatic edge");
                ensure!(a.respects(c), "graph #{idx} c={c:?}: wrong class sizes");
            }
        }
    }
    let spent = within(Duration::from_secs(60), start)?;
    Ok(format!(
        "{random_count} random + {} structured graphs, {checks} constraints ({feasible} feasible), {spent:.2?}",
        graphs.len() - random_count
    ))
}

fn check_table(values: &[usize]) -> Result<usize, String> {
    let table = SubsetSumTable::new(values);
    let total: usize = values.iter().sum();
    for target in 0..=total {
        let expected = brute_force_subset_sum(values, target).map_err(|e| e.to_string())?;
        ensure!(
            table.is_reachable(target) == expected,
            "S={values:?} target {target}: table {}, enumeration {expected}",
            table.is_reachable(target)
        );
        if let Some(path) = table.backtrack(target) {
            ensure!(
                path.windows(2).all(|w| w[0].item > w[1].item),
                "S={values:?} target {target}: indices not strictly decreasing {path:?}"
            );
            ensure!(
                path.iter().map(|l| l.value).sum::<usize>() == target,
                "S={values:?} target {target}: path sums wrong"
            );
            ensure!(
                path.iter().all(|l| values[l.item - 1] == l.value),
                "S={values:?} target {target}: link value mismatch"
            );
        }
    }
    Ok(total + 1)
}

/// Criterion 3: subset-sum reachability and backtracking paths.
fn subset_sum_table() -> Outcome {
    let start = Instant::now();
    let mut r = rng(3);
    // regression: two equal values must backtrack through both items
    check_table(&[2, 2])?;
    let path = SubsetSumTable::new(&[2, 2])
        .backtrack(4)
        .ok_or("[2,2] target 4 unreachable")?;
    let items: Vec<usize> = path.iter().map(|l| l.item).collect();
    ensure!(
        items == [2, 1],
        "[2,2] target 4 backtracks through {items:?}"
    );

    let mut targets = 0;
    for _ in 0..500 {
        let len = r.random_range(0..=15);
        let values: Vec<usize> = (0..len).map(|_| r.random_range(1..=10)).collect();
        targets += check_table(&values)?;
    }
    let spent = within(Duration::from_secs(30), start)?;
    Ok(format!(
        "500 multisets + [2,2] regression, {targets} targets, {spent:.2?}"
    ))
}

/// Criterion 4: full and heap sweeps agree, including a forced fallback.
fn variant_agreement() -> Outcome {
    let start = Instant::now();
    let mut r = rng(4);
    let mut fallbacks = 0;
    for i in 0..500u64 {
        let n = r.random_range(2..=300);
        let m = r.random_range(1..=3);
        let c1 = r.random_range(0..=n);
        let c = CardinalityConstraint::new(c1, n - c1);
        let points = normal_points(n, m, 10_000 + i);
        let full = solve(&points, c, Variant::Full).map_err(|e| e.to_string())?;
        let heap = solve(&points, c, Variant::Heap).map_err(|e| e.to_string())?;
        ensure!(
            full.dispersion.bit_eq(&heap.dispersion),
            "instance {i} n={n} c={c:?}: full {} heap {}",
            full.dispersion,
            heap.dispersion
        );
        for result in [&full, &heap] {
            ensure!(
                result.assignment.respects(c),
                "instance {i}: cardinality broken"
            );
            let achieved = dispersion_of(&points, &result.assignment).map_err(|e| e.to_string())?;
            ensure!(
                achieved.bit_eq(&full.dispersion),
                "instance {i}: assignment not optimal"
            );
        }
        fallbacks += usize::from(heap.fallback_triggered);
    }

    // grid: unit edges stay bipartite and balanced well past n edges
    let points = grid(6, 6);
    let c = CardinalityConstraint::new(18, 18);
    let heap = solve_heap(&points, c).map_err(|e| e.to_string())?;
    let full = solve_full(&points, c).map_err(|e| e.to_string())?;
    ensure!(heap.fallback_triggered, "grid did not trigger the fallback");
    ensure!(
        heap.variant == VariantUsed::HeapThenFallback,
        "grid variant {:?}",
        heap.variant
    );
    ensure!(
        heap.dispersion.bit_eq(&full.dispersion),
        "grid: heap {} full {}",
        heap.dispersion,
        full.dispersion
    );
    ensure!(
        dispersion_of(&points, &heap.assignment)
            .map_err(|e| e.to_string())?
            .bit_eq(&full.dispersion),
        "grid: fallback assignment not optimal"
    );
    let spent = within(Duration::from_secs(120), start)?;
    Ok(format!(
        "500 random instances ({fallbacks} fell back), grid fallback dispersion {}, {spent:.2?}",
        heap.dispersion
    ))
}

/// Criterion 5: heap variant on 10,000 standard-normal points.
fn large_instance() -> Outcome {
    let n = 10_000;
    let points = normal_points(n, 2, 2026);
    let c = CardinalityConstraint::balanced(n).unwrap();
    ALLOC.reset_peak();
    let start = Instant::now();
    let result = solve(&points, c, Variant::Heap).map_err(|e| e.to_string())?;
    let spent = start.elapsed();
    let peak = ALLOC.peak_bytes().unwrap();
    ensure!(spent < Duration::from_secs(10), "took {spent:?}");
    ensure!(!result.fallback_triggered, "fallback triggered");
    ensure!(
        result.variant == VariantUsed::HeapOnly,
        "variant {:?}",
        result.variant
    );
    ensure!(
        result.distance_entries_held <= n,
        "held {} distance entries for n={n}",
        result.distance_entries_held
    );
    // a full pair list would need n(n-1)/2 * 16 bytes = 800 MB
    ensure!(peak < 64 << 20, "peak heap {peak} bytes");
    ensure!(result.assignment.respects(c), "cardinality broken");
    Ok(format!(
        "dispersion {}, {} iterations, {spent:.2?}, {} distance entries, peak heap {:.1} MiB",
        result.dispersion,
        result.iterations_used,
        result.distance_entries_held,
        peak as f64 / (1 << 20) as f64
    ))
}

fn bench_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

/// Criterion 6: memory and runtime scaling of the two variants.
fn scaling_trend() -> Outcome {
    let sizes: Vec<usize> = (1..=10).map(|k| k * 1_000).collect();
    let config = BenchConfig {
        sizes: sizes.clone(),
        repetitions: 10,
        dims: 2,
        base_seed: 100,
        variants: vec![Variant::Full, Variant::Heap],
    };
    let report = run_benchmark(&config, &ALLOC, |_| {}).map_err(|e| e.to_string())?;
    let out = bench_path("scaling.csv");
    report
        .write_csv(File::create(&out).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;

    let column = |variant: Variant, n: usize, f: &dyn Fn(&maxdisp::cli::BenchRow) -> f64| {
        let mut v: Vec<f64> = report
            .rows
            .iter()
            .filter(|r| r.variant == variant && r.n == n)
            .map(f)
            .collect();
        median(&mut v)
    };
    let mem = |r: &maxdisp::cli::BenchRow| r.peak_mem_bytes.unwrap() as f64;
    let ms = |r: &maxdisp::cli::BenchRow| r.ms;
    let xs: Vec<f64> = sizes.iter().map(|&n| n as f64).collect();
    let heap_mem: Vec<f64> = sizes
        .iter()
        .map(|&n| column(Variant::Heap, n, &mem))
        .collect();
    let full_mem: Vec<f64> = sizes
        .iter()
        .map(|&n| column(Variant::Full, n, &mem))
        .collect();
    let heap_exp = common::log_log_slope(&xs, &heap_mem);
    let full_exp = common::log_log_slope(&xs, &full_mem);
    ensure!(heap_exp < 1.5, "heap memory exponent {heap_exp:.3}");
    ensure!(full_exp > 1.5, "full memory exponent {full_exp:.3}");
    for &n in sizes.iter().filter(|&&n| n >= 2_000) {
        let (h, f) = (column(Variant::Heap, n, &ms), column(Variant::Full, n, &ms));
        ensure!(
            h <= f,
            "n={n}: heap median {h:.1} ms > full median {f:.1} ms"
        );
    }
    let last = *sizes.last().unwrap();
    Ok(format!(
        "memory exponent heap {heap_exp:.3}, full {full_exp:.3}; median ms at n={last}: heap {:.1}, full {:.1}; csv {}",
        column(Variant::Heap, last, &ms),
        column(Variant::Full, last, &ms),
        out.display()
    ))
}

/// Criterion 7: how often the n smallest distances miss the break threshold.
fn fallback_fraction() -> Outcome {
    let config = BenchConfig {
        sizes: vec![1_000],
        repetitions: 100,
        dims: 2,
        base_seed: 7_000,
        variants: vec![Variant::Heap],
    };
    let report =
        run_benchmark(&config, &maxdisp::memory::NoProbe, |_| {}).map_err(|e| e.to_string())?;
    let (runs, fallbacks) = report.heap_fallbacks();
    let fraction = report.fallback_fraction().ok_or("no heap runs")?;
    ensure!(runs == 100, "{runs} runs");
    ensure!(fraction < 0.5, "fallback fraction {fraction}");
    Ok(format!(
        "fallback fraction {fraction:.3} ({fallbacks}/{runs})"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 oracle optimality", oracle_optimality),
        ("2 2-COLCC equivalence", colcc_equivalence),
        ("3 subset-sum table", subset_sum_table),
        ("4 variant agreement + fallback", variant_agreement),
        ("5 n=10,000 heap solve", large_instance),
        ("6 scaling trend", scaling_trend),
        ("7 fallback frequency", fallback_fraction),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS [{name}] {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{name}] {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
