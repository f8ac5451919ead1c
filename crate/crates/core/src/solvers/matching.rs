use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::{Graph, Vertex};

const NONE: usize = usize::MAX;

/// Maximum matching by Edmonds' augmenting paths with blossom contraction.
/// The witness lists each matched edge once as `(u, v)` with `u < v`, sorted.
pub fn matching_number(g: &Graph) -> (usize, Vec<(Vertex, Vertex)>) {
    let mut b = Blossom::new(g);
    for root in g.vertices() {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_path(root) {
                b.augment(end);
            }
        }
    }
    let edges: Vec<_> = g
        .vertices()
        .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
        .map(|v| (v, b.mate[v]))
        .collect();
    (edges.len(), edges)
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: alloc::vec![NONE; n],
            parent: alloc::vec![NONE; n],
            base: (0..n).collect(),
            used: alloc::vec![false; n],
            in_blossom: alloc::vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = alloc::vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_and_odd_cycle() {
        let e = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        assert_eq!(matching_number(&e), (1, alloc::vec![(0, 1)]));
        let c5 = Graph::from_edge_list(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(matching_number(&c5).0, 2);
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with pendant paths 2-3 and 0-4-5: perfect matching
        // exists only by augmenting through the odd cycle
        let g = Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        let (k, m) = matching_number(&g);
        assert_eq!(k, 3);
        let mut seen = alloc::vec![false; 6];
        for (u, v) in m {
            assert!(g.has_edge(u, v));
            assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edge_list(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(matching_number(&g).0, 5);
    }
}
