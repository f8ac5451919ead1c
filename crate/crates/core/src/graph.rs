//! Simple undirected graphs on dense vertex ids.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use thiserror::Error;

use crate::{Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange { endpoint: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("permutation is not a bijection on 0..{0}")]
    BadPermutation(usize),
}

/// An immutable simple undirected graph with vertices `0..n`.
///
/// Neighbor lists are sorted ascending and the edge list holds each edge once
/// as `(u, v)` with `u < v`, sorted lexicographically. Graphs with at most 64
/// vertices also carry one neighbor bitmask per vertex for the subset-search
/// kernels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    masks: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs
    /// collapse to a single edge.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for endpoint in [u, v] {
                if endpoint >= n {
                    return Err(GraphError::EndpointOutOfRange { endpoint, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adj = alloc::vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = (n <= 64).then(|| {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect()
        });
        Ok(Graph {
            n,
            adj,
            edges,
            masks,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edge_list(n, []).expect("edgeless graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match &self.masks {
            Some(m) => u < self.n && v < self.n && m[u] & (1 << v) != 0,
            None => self.adj.get(u).is_some_and(|l| l.binary_search(&v).is_ok()),
        }
    }

    /// Neighbor bitmask of `v`, available when `n <= 64`.
    pub fn neighbor_mask(&self, v: Vertex) -> Option<u64> {
        self.masks.as_ref().map(|m| m[v])
    }

    pub(crate) fn masks(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// True iff a single search tree spans every vertex; vacuous for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = alloc::vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == self.n
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|l| l.len() == 3)
    }

    /// True iff no vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        self.vertices().all(|v| {
            let nb = &self.adj[v];
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if self.has_edge(nb[i], nb[j]) {
                        continue;
                    }
                    for &c in &nb[j + 1..] {
                        if !self.has_edge(nb[i], c) && !self.has_edge(nb[j], c) {
                            return false;
                        }
                    }
                }
            }
            true
        })
    }

    pub fn is_k4(&self) -> bool {
        self.n == 4 && self.m() == 6
    }

    /// Number of triangles through each vertex.
    pub fn triangle_counts(&self) -> Vec<usize> {
        self.vertices()
            .map(|v| {
                let nb = &self.adj[v];
                let mut t = 0;
                for i in 0..nb.len() {
                    for &b in &nb[i + 1..] {
                        if self.has_edge(nb[i], b) {
                            t += 1;
                        }
                    }
                }
                t
            })
            .collect()
    }

    /// True iff every vertex of `s` has a neighbor in `s`.
    pub fn induces_no_isolated_vertex(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].iter().any(|&u| s.contains(u)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|v| self.adj[v].iter().all(|&u| !s.contains(u)))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        let mut seen = alloc::vec![false; self.n];
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation(self.n));
        }
        for &p in perm {
            if p >= self.n || core::mem::replace(&mut seen[p], true) {
                return Err(GraphError::BadPermutation(self.n));
            }
        }
        Graph::from_edge_list(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_edge_list(self.n + other.n, edges).expect("shifted edges are valid")
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}
