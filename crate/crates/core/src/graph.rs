//! The threshold graph grown during a sweep and its BFS bipartition.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::types::DistanceEntry;

/// Undirected simple graph on `0..n`; edges are only ever added.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdGraph {
    // kept sorted ascending per vertex
    adjacency: Vec<Vec<u32>>,
    edge_count: usize,
}

impl ThresholdGraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list; handy for tests and examples.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut graph = Self::new(vertex_count);
        for &(u, v) in edges {
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&w| w as usize)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, adj)| {
            adj.iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for vertex in [u, v] {
            if vertex >= n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let pos_u = match self.adjacency[u].binary_search(&(v as u32)) {
            Ok(_) => {
                return Err(Error::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                })
            }
            Err(pos) => pos,
        };
        let pos_v = self.adjacency[v]
            .binary_search(&(u as u32))
            .expect_err("adjacency lists out of sync");
        self.adjacency[u].insert(pos_u, v as u32);
        self.adjacency[v].insert(pos_v, u as u32);
        self.edge_count += 1;
        Ok(())
    }

    /// Inserts one threshold's worth of edges.
    pub fn add_edges(&mut self, batch: &[DistanceEntry]) -> Result<()> {
        debug_assert!(batch.windows(2).all(|w| w[0].d2 == w[1].d2));
        for entry in batch {
            self.add_edge(entry.u as usize, entry.v as usize)?;
        }
        Ok(())
    }

    /// Splits every connected component into even (`p`) and odd (`q`) BFS
    /// levels. Returns `None` when some edge joins two vertices of equal
    /// level parity, i.e. the graph has an odd cycle.
    ///
    /// Roots are taken in ascending vertex order and neighbors are visited
    /// in ascending order, so the output is deterministic. Isolated vertices
    /// come out as components with `p = [v]`, `q = []`.
    pub fn bipartition_components(&self) -> Option<Vec<BipartitionComponent>> {
        const UNSEEN: u8 = u8::MAX;
        let n = self.vertex_count();
        let mut side = vec![UNSEEN; n];
        let mut queue = VecDeque::new();
        let mut components = Vec::new();

        for root in 0..n {
            if side[root] != UNSEEN {
                continue;
            }
            let mut p = Vec::new();
            let mut q = Vec::new();
            side[root] = 0;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                if side[x] == 0 {
                    p.push(x);
                } else {
                    q.push(x);
                }
                for w in self.neighbors(x) {
                    if side[w] == UNSEEN {
                        side[w] = side[x] ^ 1;
                        queue.push_back(w);
                    } else if side[w] == side[x] {
                        return None;
                    }
                }
            }
            components.push(BipartitionComponent::new(components.len(), p, q));
        }
        Some(components)
    }
}

/// One connected component split into its two BFS sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitionComponent {
    pub component_id: usize,
    /// Vertices at even BFS levels, root included.
    pub p: Vec<usize>,
    /// Vertices at odd BFS levels.
    pub q: Vec<usize>,
    /// `abs(|p| - |q|)`.
    pub imbalance: usize,
}

impl BipartitionComponent {
    pub fn new(component_id: usize, p: Vec<usize>, q: Vec<usize>) -> Self {
        let imbalance = p.len().abs_diff(q.len());
        Self {
            component_id,
            p,
            q,
            imbalance,
        }
    }

    pub fn len(&self) -> usize {
        self.p.len() + self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn smaller_side_len(&self) -> usize {
        self.p.len().min(self.q.len())
    }
}
