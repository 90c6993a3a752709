//! Simple undirected graphs on at most 64 vertices, stored as adjacency bit rows.

mod canon;
mod graph6;
mod trees;

pub use canon::{canonical_key, generate_connected, generate_graphs, CANON_MAX_N};
pub use graph6::{parse_graph6, write_graph6};
pub use trees::{generate_trees, is_tree, tree_key, TREE_MAX_N};

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph. Row `u` holds the neighbourhood of `u` as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "vertex count {n} outside 1..={MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) invalid for {n} vertices"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Ok(Graph::empty(n)?.complement())
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// Complete multipartite graph with `parts` parts of size `size` each.
    pub fn complete_multipartite(parts: usize, size: usize) -> Result<Graph> {
        let n = parts * size;
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                if u / size != v / size {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn row(&self, u: usize) -> u64 {
        self.rows[u]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.rows[u];
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Adjacency negated off the diagonal.
    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(u, r)| !r & full & !(1u64 << u))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Relabels so that old vertex `perm[i]` becomes new vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            rows: vec![0; self.n],
        };
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph obtained by appending a vertex adjacent to the vertices in `mask`.
    pub fn with_new_vertex(&self, mask: u64) -> Result<Graph> {
        if self.n >= MAX_VERTICES {
            return Err(Error::UnsupportedSize {
                what: "vertex extension",
                size: self.n + 1,
                max: MAX_VERTICES,
            });
        }
        let mut g = self.clone();
        let v = g.n;
        g.n += 1;
        g.rows.push(0);
        let mut bits = mask & self.full_mask();
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.rows[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.full_mask()
    }

    pub fn distance_data(&self) -> DistanceData {
        DistanceData::new(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

/// BFS metric data. Distance-derived fields are `None` when the graph is disconnected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<Option<u32>>,
    pub deg: Vec<u64>,
    pub trs: Option<Vec<u64>>,
    pub diameter: Option<u32>,
    pub connected: bool,
}

impl DistanceData {
    fn new(g: &Graph) -> DistanceData {
        let n = g.order();
        let mut dist = vec![None; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = Some(0);
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u].unwrap();
                for v in g.neighbors(u) {
                    if row[v].is_none() {
                        row[v] = Some(du + 1);
                        queue.push_back(v);
                    }
                }
            }
        }
        let connected = dist.iter().all(Option::is_some);
        let (trs, diameter) = if connected {
            let trs = (0..n)
                .map(|v| (0..n).map(|u| dist[u * n + v].unwrap() as u64).sum())
                .collect();
            let diam = dist.iter().map(|d| d.unwrap()).max().unwrap_or(0);
            (Some(trs), Some(diam))
        } else {
            (None, None)
        };
        DistanceData {
            n,
            dist,
            deg: g.degrees().into_iter().map(|d| d as u64).collect(),
            trs,
            diameter,
            connected,
        }
    }

    /// Hop count, or `None` if `v` is unreachable from `u`.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u * self.n + v]
    }

    pub fn order(&self) -> usize {
        self.n
    }
}
