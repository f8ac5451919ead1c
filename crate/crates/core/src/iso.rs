//! Isomorphism testing for small graphs (tens of vertices).
//!
//! Vertices are first colored by degree and triangle count, the coloring is
//! refined jointly on both graphs until stable, and a backtracking search then
//! extends a partial bijection along a breadth-first order of `g`, so that
//! each new vertex with an already-mapped parent only tries the neighbors of
//! the parent's image.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::{Graph, Vertex};

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// A bijection `f` with `uv ∈ E(g) ⇔ f(u)f(v) ∈ E(h)`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<Vertex>> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    let n = g.n();
    let (cg, ch) = refine(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }

    let (order, parent) = bfs_order(g);
    let mut state = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        parent: &parent,
        map: alloc::vec![usize::MAX; n],
        used: alloc::vec![false; n],
    };
    state.extend(0).then_some(state.map)
}

fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let initial = |x: &Graph| -> Vec<(usize, usize)> {
        let t = x.triangle_counts();
        x.vertices().map(|v| (x.degree(v), t[v])).collect()
    };
    let mut ids = BTreeMap::new();
    let relabel = |keys: Vec<(usize, usize)>, ids: &mut BTreeMap<(usize, usize), usize>| {
        keys.into_iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect::<Vec<_>>()
    };
    let mut cg = relabel(initial(g), &mut ids);
    let mut ch = relabel(initial(h), &mut ids);
    let mut classes = ids.len();

    loop {
        let mut sigs = BTreeMap::new();
        let step = |x: &Graph, c: &[usize], sigs: &mut BTreeMap<(usize, Vec<usize>), usize>| {
            x.vertices()
                .map(|v| {
                    let mut nb: Vec<usize> = x.neighbors(v).iter().map(|&u| c[u]).collect();
                    nb.sort_unstable();
                    let next = sigs.len();
                    *sigs.entry((c[v], nb)).or_insert(next)
                })
                .collect::<Vec<_>>()
        };
        let ng = step(g, &cg, &mut sigs);
        let nh = step(h, &ch, &mut sigs);
        cg = ng;
        ch = nh;
        if sigs.len() == classes {
            return (cg, ch);
        }
        classes = sigs.len();
    }
}

fn bfs_order(g: &Graph) -> (Vec<Vertex>, Vec<Option<Vertex>>) {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut parent = alloc::vec![None; n];
    let mut seen = alloc::vec![false; n];
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(v);
                    queue.push_back(u);
                }
            }
        }
    }
    (order, parent)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [Vertex],
    parent: &'a [Option<Vertex>],
    map: Vec<Vertex>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let candidates: Vec<Vertex> = match self.parent[v] {
            Some(p) => self.h.neighbors(self.map[p]).to_vec(),
            None => self.h.vertices().collect(),
        };
        for c in candidates {
            if self.used[c] || self.ch[c] != self.cg[v] || !self.consistent(v, c) {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, v: Vertex, c: Vertex) -> bool {
        // Mapped neighbors of v must land on neighbors of c; degrees already
        // agree through the coloring, so counting mapped neighbors suffices.
        let mut mapped = 0;
        for &u in self.g.neighbors(v) {
            let fu = self.map[u];
            if fu != usize::MAX {
                if !self.h.has_edge(c, fu) {
                    return false;
                }
                mapped += 1;
            }
        }
        let image_mapped = self
            .h
            .neighbors(c)
            .iter()
            .filter(|&&x| self.used[x])
            .count();
        mapped == image_mapped
    }
}
