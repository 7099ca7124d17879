//! Pairwise squared Euclidean distances: the fully sorted list and the
//! bounded selection of the `n` smallest.
//!
//! Squared distances are accumulated over features `0..m` in order and pairs
//! are enumerated row-major (`u` ascending, then `v > u` ascending), so
//! identical inputs produce bit-identical values and equal-value ties group
//! the same way on every run.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::types::{DistanceEntry, PointSet};

/// Squared Euclidean distance, summed over features in index order.
#[inline]
pub fn squared_euclidean(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        acc += d * d;
    }
    acc
}

/// Streams every unordered pair `(u, v)`, `u < v`, with its squared distance.
/// Nothing is materialized.
#[derive(Debug, Clone)]
pub struct PairDistances<'a> {
    points: &'a PointSet,
    u: usize,
    v: usize,
}

impl<'a> PairDistances<'a> {
    pub fn new(points: &'a PointSet) -> Self {
        Self { points, u: 0, v: 1 }
    }
}

impl Iterator for PairDistances<'_> {
    type Item = DistanceEntry;

    fn next(&mut self) -> Option<DistanceEntry> {
        let n = self.points.len();
        if self.v >= n {
            self.u += 1;
            self.v = self.u + 1;
            if self.v >= n {
                return None;
            }
        }
        let (u, v) = (self.u, self.v);
        self.v += 1;
        let d2 = squared_euclidean(self.points.point(u), self.points.point(v));
        Some(DistanceEntry::new(d2, u, v))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.points.len();
        if self.u + 1 >= n {
            return (0, Some(0));
        }
        let rest_of_row = n.saturating_sub(self.v);
        let later_rows = n - self.u - 1;
        let remaining = rest_of_row + later_rows * (later_rows - 1) / 2;
        (remaining, Some(remaining))
    }
}

impl ExactSizeIterator for PairDistances<'_> {}

/// Number of unordered pairs among `n` items.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Distance entries in ascending `(d2, u, v)` order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SortedDistanceList {
    entries: Vec<DistanceEntry>,
}

impl SortedDistanceList {
    fn from_sorted(entries: Vec<DistanceEntry>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].d2 <= w[1].d2));
        Self { entries }
    }

    pub fn entries(&self) -> &[DistanceEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_d2(&self) -> Option<f64> {
        self.entries.last().map(|e| e.d2)
    }

    /// Consecutive runs of entries sharing one exact `d2` value.
    pub fn batches(&self) -> impl Iterator<Item = &[DistanceEntry]> {
        self.entries
            .chunk_by(|a, b| a.d2.to_bits() == b.d2.to_bits())
    }
}

/// All `n(n-1)/2` pairwise distances, sorted ascending.
pub fn all_distances_sorted(points: &PointSet) -> SortedDistanceList {
    let mut entries: Vec<DistanceEntry> = PairDistances::new(points).collect();
    entries.sort_unstable_by(DistanceEntry::cmp_key);
    SortedDistanceList::from_sorted(entries)
}

#[derive(Debug, Clone, Copy)]
struct ByKey(DistanceEntry);

impl PartialEq for ByKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ByKey {}

impl PartialOrd for ByKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ByKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_key(&other.0)
    }
}

/// Max-heap holding at most `capacity` of the smallest distances offered.
#[derive(Debug, Clone)]
pub struct BoundedMaxHeap {
    capacity: usize,
    heap: BinaryHeap<ByKey>,
}

impl BoundedMaxHeap {
    pub fn new(capacity: usize) -> Self {
        Self {
            capacity,
            heap: BinaryHeap::with_capacity(capacity),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn max(&self) -> Option<DistanceEntry> {
        self.heap.peek().map(|e| e.0)
    }

    /// Evicts the maximum only for a strictly smaller value, so entries tied
    /// with the current maximum are dropped once the heap is full.
    pub fn offer(&mut self, entry: DistanceEntry) {
        if self.heap.len() == self.capacity {
            match self.heap.peek() {
                Some(top) if entry.d2 < top.0.d2 => {
                    self.heap.pop();
                }
                _ => return,
            }
        }
        self.heap.push(ByKey(entry));
    }

    /// Heap-sorts the retained entries ascending.
    pub fn into_sorted(self) -> SortedDistanceList {
        SortedDistanceList::from_sorted(
            self.heap
                .into_sorted_vec()
                .into_iter()
                .map(|e| e.0)
                .collect(),
        )
    }
}

/// The `min(n, n(n-1)/2)` smallest distances, using `O(n)` memory.
pub fn smallest_n_distances(points: &PointSet) -> SortedDistanceList {
    let mut heap = BoundedMaxHeap::new(points.len());
    for entry in PairDistances::new(points) {
        heap.offer(entry);
    }
    heap.into_sorted()
}
