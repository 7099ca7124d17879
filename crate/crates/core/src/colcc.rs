//! Cardinality-constrained 2-coloring.
//!
//! Each connected component of a bipartite graph can be colored in two
//! orientations. Only the imbalance `abs(|P| - |Q|)` of a component matters
//! for the color-class sizes, so the decision reduces to picking the subset of
//! components whose larger side takes color 1. That subset must sum to the
//! adjusted target `c1' = c1 - sum(min(|P|, |Q|))`, which a subset-sum table
//! over the imbalances answers. The imbalances sum to at most `n`, keeping the
//! table polynomial.

use std::fmt;

use crate::graph::{BipartitionComponent, ThresholdGraph};
use crate::types::{Assignment, CardinalityConstraint, Group};

/// Backtracking link stored in a reachable cell: the item (1-based) whose
/// value `value` first reached this sum. Cell 0 holds `(0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TableLink {
    pub item: usize,
    pub value: usize,
}

/// Reachability table over sums `0..=limit` of a multiset of positive values.
///
/// A cell is written only while still unreachable (first write wins). Items
/// are processed in ascending order, so every backtracking path visits
/// strictly decreasing item indices and never reuses an item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSumTable {
    cells: Vec<Option<TableLink>>,
    total: usize,
}

impl SubsetSumTable {
    /// Table over every sum `0..=sum(values)`.
    pub fn new(values: &[usize]) -> Self {
        let total = values.iter().sum();
        Self::with_limit(values, total)
    }

    /// Table restricted to sums `0..=min(limit, sum(values))`. Cells inside
    /// the range are identical to those of the full table, since a write to
    /// cell `j` only ever depends on cells below `j`.
    pub fn with_limit(values: &[usize], limit: usize) -> Self {
        assert!(
            values.iter().all(|&s| s > 0),
            "subset-sum values must be positive"
        );
        let total: usize = values.iter().sum();
        let limit = limit.min(total);
        let mut cells = vec![None; limit + 1];
        cells[0] = Some(TableLink { item: 0, value: 0 });

        let words = limit / 64 + 1;
        let mut reach = vec![0u64; words];
        reach[0] = 1;
        let mut fresh = vec![0u64; words];
        // highest sum reachable so far
        let mut frontier = 0usize;

        for (idx, &s) in values.iter().enumerate() {
            let item = idx + 1;
            if s > limit {
                frontier = (frontier + s).min(limit);
                continue;
            }
            let top = (frontier + s).min(limit);
            let top_word = top / 64;
            shift_left_into(&reach, s, top_word, &mut fresh);
            for w in 0..=top_word {
                let mut bits = fresh[w] & !reach[w];
                if w == top_word {
                    bits &= mask_through(top % 64);
                }
                reach[w] |= bits;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    cells[w * 64 + b] = Some(TableLink { item, value: s });
                    bits &= bits - 1;
                }
            }
            frontier = top;
        }
        Self { cells, total }
    }

    /// Sum of all values, regardless of the limit.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Largest sum covered by the table.
    pub fn limit(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cell(&self, sum: usize) -> Option<TableLink> {
        self.cells.get(sum).copied().flatten()
    }

    pub fn is_reachable(&self, sum: usize) -> bool {
        self.cell(sum).is_some()
    }

    pub fn reachable_sums(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.map(|_| j))
    }

    /// Links followed from `target` down to 0, or `None` if unreachable.
    pub fn backtrack(&self, target: usize) -> Option<Vec<TableLink>> {
        self.cell(target)?;
        let mut path = Vec::new();
        let mut j = target;
        while j != 0 {
            let link = self.cells[j].expect("backtracking reached an unreachable cell");
            debug_assert!(path
                .last()
                .is_none_or(|prev: &TableLink| link.item < prev.item));
            path.push(link);
            j -= link.value;
        }
        Some(path)
    }
}

/// Writes `src << shift` (as one long bit string) into `dst[..=top_word]`.
fn shift_left_into(src: &[u64], shift: usize, top_word: usize, dst: &mut [u64]) {
    let word_shift = shift / 64;
    let bit_shift = shift % 64;
    for (w, slot) in dst.iter_mut().enumerate().take(top_word + 1) {
        *slot = if w < word_shift {
            0
        } else {
            let lo = w - word_shift;
            let mut v = src[lo] << bit_shift;
            if bit_shift > 0 && lo > 0 {
                v |= src[lo - 1] >> (64 - bit_shift);
            }
            v
        };
    }
}

fn mask_through(bit: usize) -> u64 {
    if bit == 63 {
        u64::MAX
    } else {
        (1u64 << (bit + 1)) - 1
    }
}

/// Targets left for the subset-sum step once every component has placed its
/// smaller side in each color class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjustedTargets {
    pub c1_prime: i64,
    pub c2_prime: i64,
}

impl AdjustedTargets {
    pub fn from_components(
        components: &[BipartitionComponent],
        constraint: CardinalityConstraint,
    ) -> Self {
        let shared: i64 = components.iter().map(|c| c.smaller_side_len() as i64).sum();
        Self {
            c1_prime: constraint.c1 as i64 - shared,
            c2_prime: constraint.c2 as i64 - shared,
        }
    }
}

/// Why no cardinality-exact proper 2-coloring exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Infeasible {
    NotBipartite,
    /// `c1 + c2` differs from the vertex count.
    CardinalityMismatch,
    /// `c1'` lies outside `0..=sum(imbalances)`.
    TargetOutOfRange {
        c1_prime: i64,
        total_imbalance: usize,
    },
    /// No subset of imbalances sums to `c1'`.
    Unreachable {
        c1_prime: usize,
    },
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasible::NotBipartite => f.write_str("graph has an odd cycle"),
            Infeasible::CardinalityMismatch => f.write_str("c1 + c2 differs from the vertex count"),
            Infeasible::TargetOutOfRange {
                c1_prime,
                total_imbalance,
            } => write!(
                f,
                "adjusted target {c1_prime} outside 0..={total_imbalance}"
            ),
            Infeasible::Unreachable { c1_prime } => {
                write!(f, "no subset of imbalances sums to {c1_prime}")
            }
        }
    }
}

/// Finds a proper 2-coloring of `graph` with exactly `c1` vertices of
/// color 1 and `c2` of color 2.
///
/// Components selected by the subset-sum backtrack get their larger side
/// colored 1, the remaining unbalanced components get their larger side
/// colored 2, and balanced components are colored `P -> 1`, `Q -> 2`.
pub fn solve_2colcc(
    graph: &ThresholdGraph,
    constraint: CardinalityConstraint,
) -> Result<Assignment, Infeasible> {
    let n = graph.vertex_count();
    if constraint.total() != n {
        return Err(Infeasible::CardinalityMismatch);
    }
    let components = graph
        .bipartition_components()
        .ok_or(Infeasible::NotBipartite)?;
    color_components(&components, constraint, n)
}

/// The coloring step on an already computed bipartition.
pub fn color_components(
    components: &[BipartitionComponent],
    constraint: CardinalityConstraint,
    n: usize,
) -> Result<Assignment, Infeasible> {
    let targets = AdjustedTargets::from_components(components, constraint);
    let total_imbalance: usize = components.iter().map(|c| c.imbalance).sum();
    if targets.c1_prime < 0 || targets.c1_prime as usize > total_imbalance {
        return Err(Infeasible::TargetOutOfRange {
            c1_prime: targets.c1_prime,
            total_imbalance,
        });
    }
    let target = targets.c1_prime as usize;

    // subset-sum item k (1-based) is component unbalanced[k - 1]
    let unbalanced: Vec<usize> = components
        .iter()
        .enumerate()
        .filter(|(_, c)| c.imbalance > 0)
        .map(|(i, _)| i)
        .collect();
    let values: Vec<usize> = unbalanced
        .iter()
        .map(|&i| components[i].imbalance)
        .collect();
    let table = SubsetSumTable::with_limit(&values, target);
    let path = table
        .backtrack(target)
        .ok_or(Infeasible::Unreachable { c1_prime: target })?;

    let mut chosen = vec![false; components.len()];
    for link in &path {
        chosen[unbalanced[link.item - 1]] = true;
    }

    let mut groups = vec![Group::One; n];
    for (component, &larger_to_one) in components.iter().zip(&chosen) {
        let p_group = if component.imbalance == 0 {
            Group::One
        } else {
            let p_is_larger = component.p.len() >= component.q.len();
            match (p_is_larger, larger_to_one) {
                (true, true) | (false, false) => Group::One,
                _ => Group::Two,
            }
        };
        for &v in &component.p {
            groups[v] = p_group;
        }
        for &v in &component.q {
            groups[v] = p_group.other();
        }
    }
    let assignment = Assignment::new(groups);
    debug_assert!(assignment.respects(constraint));
    Ok(assignment)
}
