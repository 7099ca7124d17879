#![allow(dead_code)]

use maxdisp::cli::generate_normal;
use maxdisp::{PointSet, ThresholdGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn normal_points(n: usize, m: usize, seed: u64) -> PointSet {
    generate_normal(n, m, seed).unwrap()
}

/// Erdos-Renyi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> ThresholdGraph {
    let mut g = ThresholdGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Shifts the edges of `g` by `offset` into `into`.
fn embed(into: &mut ThresholdGraph, g: &ThresholdGraph, offset: usize) {
    for (u, v) in g.edges() {
        into.add_edge(u + offset, v + offset).unwrap();
    }
}

pub fn disjoint_union(parts: &[ThresholdGraph]) -> ThresholdGraph {
    let n = parts.iter().map(ThresholdGraph::vertex_count).sum();
    let mut g = ThresholdGraph::new(n);
    let mut offset = 0;
    for part in parts {
        embed(&mut g, part, offset);
        offset += part.vertex_count();
    }
    g
}

pub fn path(n: usize) -> ThresholdGraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    ThresholdGraph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> ThresholdGraph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(0, n - 1).unwrap();
    }
    g
}

pub fn star(leaves: usize) -> ThresholdGraph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    ThresholdGraph::from_edges(leaves + 1, &edges).unwrap()
}

/// Paths, cycles, stars and disjoint unions of them, all on at most 14 vertices.
pub fn structured_graphs() -> Vec<ThresholdGraph> {
    let mut graphs = Vec::new();
    for n in 1..=14 {
        graphs.push(path(n));
        graphs.push(ThresholdGraph::new(n));
    }
    for n in 3..=14 {
        graphs.push(cycle(n));
    }
    for leaves in 1..=13 {
        graphs.push(star(leaves));
    }
    graphs.push(disjoint_union(&[star(3), star(3)]));
    graphs.push(disjoint_union(&[star(4), path(3), ThresholdGraph::new(2)]));
    graphs.push(disjoint_union(&[cycle(4), cycle(6), path(2)]));
    graphs.push(disjoint_union(&[cycle(4), cycle(5)]));
    graphs.push(disjoint_union(&[cycle(3), cycle(3), cycle(3)]));
    graphs.push(disjoint_union(&[star(5), star(2), star(1), path(4)]));
    graphs.push(disjoint_union(&[path(5), path(5), path(4)]));
    graphs
}

/// Unit grid of `rows x cols` points in the plane.
pub fn grid(rows: usize, cols: usize) -> PointSet {
    let mut pts = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            pts.push(vec![r as f64, c as f64]);
        }
    }
    PointSet::new(pts).unwrap()
}

pub fn is_proper(g: &ThresholdGraph, a: &maxdisp::Assignment) -> bool {
    g.edges().all(|(u, v)| a[u] != a[v])
}

/// Ordinary least squares slope of `ln y` against `ln x`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let k = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let cov: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}
