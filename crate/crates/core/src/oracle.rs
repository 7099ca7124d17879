//! Exhaustive reference solvers used to check the production path.
//!
//! Nothing here reuses the BFS, subset-sum table, or sweep code; the only
//! shared pieces are the plain data types.

use crate::error::{Error, Result};
use crate::graph::ThresholdGraph;
use crate::types::{Assignment, CardinalityConstraint, Dispersion, Group, PointSet};

/// Partition count limit for [`brute_force_mdcc`].
pub const MAX_PARTITIONS: u128 = 1_000_000;
/// Vertex limit for [`brute_force_2colcc`].
pub const MAX_COLORING_VERTICES: usize = 20;
/// Multiset size limit for [`brute_force_subset_sum`].
pub const MAX_SUBSET_ITEMS: usize = 20;

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .fold(0.0, |acc, (x, y)| acc + (x - y) * (x - y))
}

/// Enumerates every partition with exactly `c1` items in group 1 and returns
/// the best dispersion with the first partition attaining it.
pub fn brute_force_mdcc(
    points: &PointSet,
    constraint: CardinalityConstraint,
) -> Result<(Dispersion, Assignment)> {
    let n = points.len();
    constraint.check(n)?;
    let size = binomial(n, constraint.c1);
    if size > MAX_PARTITIONS {
        return Err(Error::InstanceTooLarge {
            size,
            limit: MAX_PARTITIONS,
        });
    }

    let mut d2 = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            d2[i * n + j] = squared_distance(points.point(i), points.point(j));
        }
    }

    // `None` stands for an infinite dispersion.
    let mut best: Option<(Option<f64>, Vec<bool>)> = None;
    let mut chosen: Vec<usize> = (0..constraint.c1).collect();
    let mut in_one = vec![false; n];
    loop {
        in_one.iter_mut().for_each(|x| *x = false);
        for &i in &chosen {
            in_one[i] = true;
        }
        let mut worst: Option<f64> = None;
        for i in 0..n {
            for j in i + 1..n {
                if in_one[i] == in_one[j] {
                    let d = d2[i * n + j];
                    worst = Some(worst.map_or(d, |w: f64| w.min(d)));
                }
            }
        }
        let improves = match &best {
            None => true,
            Some((current, _)) => match (worst, current) {
                (None, Some(_)) => true,
                (Some(w), Some(c)) => w > *c,
                _ => false,
            },
        };
        if improves {
            best = Some((worst, in_one.clone()));
        }
        if !next_combination(&mut chosen, n) {
            break;
        }
    }

    let (value, in_one) = best.expect("at least one partition");
    let assignment = Assignment::new(
        in_one
            .into_iter()
            .map(|one| if one { Group::One } else { Group::Two })
            .collect(),
    );
    let dispersion = value
        .map(|d| Dispersion::Finite(d.sqrt()))
        .unwrap_or(Dispersion::Infinite);
    Ok((dispersion, assignment))
}

/// Advances a sorted `k`-subset of `0..n` to its lexicographic successor.
fn next_combination(chosen: &mut [usize], n: usize) -> bool {
    let k = chosen.len();
    let Some(i) = (0..k).rev().find(|&i| chosen[i] < n - k + i) else {
        return false;
    };
    chosen[i] += 1;
    for j in i + 1..k {
        chosen[j] = chosen[j - 1] + 1;
    }
    true
}

/// Tries all `2^n` colorings. `Ok(None)` means no proper, cardinality-exact
/// coloring exists.
pub fn brute_force_2colcc(
    graph: &ThresholdGraph,
    constraint: CardinalityConstraint,
) -> Result<Option<Assignment>> {
    let n = graph.vertex_count();
    if n > MAX_COLORING_VERTICES {
        return Err(Error::InstanceTooLarge {
            size: 1u128 << n,
            limit: 1u128 << MAX_COLORING_VERTICES,
        });
    }
    if constraint.total() != n {
        return Ok(None);
    }
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != constraint.c1 {
            continue;
        }
        let color_one = |v: usize| mask >> v & 1 == 1;
        if edges.iter().all(|&(u, v)| color_one(u) != color_one(v)) {
            let groups = (0..n)
                .map(|v| if color_one(v) { Group::One } else { Group::Two })
                .collect();
            return Ok(Some(Assignment::new(groups)));
        }
    }
    Ok(None)
}

/// Whether some sub-multiset of `values` sums to `target`, by enumeration.
pub fn brute_force_subset_sum(values: &[usize], target: usize) -> Result<bool> {
    if values.len() > MAX_SUBSET_ITEMS {
        return Err(Error::InstanceTooLarge {
            size: 1u128 << values.len(),
            limit: 1u128 << MAX_SUBSET_ITEMS,
        });
    }
    Ok((0u32..(1u32 << values.len())).any(|mask| {
        values
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &s)| s)
            .sum::<usize>()
            == target
    }))
}

/// Union-find where each node stores the parity of its path to the parent.
struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<u8>,
    rank: Vec<u8>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: vec![0; n],
            rank: vec![0; n],
        }
    }

    /// Root of `x` and the parity between `x` and that root.
    fn find(&mut self, x: usize) -> (usize, u8) {
        let p = self.parent[x];
        if p == x {
            return (x, 0);
        }
        let (root, up) = self.find(p);
        self.parity[x] ^= up;
        self.parent[x] = root;
        (root, self.parity[x])
    }

    /// Records that `a` and `b` have different colors. Returns false on
    /// contradiction.
    fn join_opposite(&mut self, a: usize, b: usize) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa != pb;
        }
        let (hi, lo) = if self.rank[ra] >= self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[lo] = hi;
        self.parity[lo] = pa ^ pb ^ 1;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        true
    }
}

/// Odd-cycle check via union-find with parity.
pub fn parity_dsu_is_bipartite(graph: &ThresholdGraph) -> bool {
    let mut dsu = ParityDsu::new(graph.vertex_count());
    graph.edges().all(|(u, v)| dsu.join_opposite(u, v))
}
