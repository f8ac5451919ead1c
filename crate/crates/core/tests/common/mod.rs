//! Brute-force oracles shared by the integration tests. Each one is written
//! independently of the library code it checks.

#![allow(dead_code)]

use rand::seq::IndexedRandom;
use rand::Rng;
use zforce_core::{are_isomorphic, Graph, VertexSet};

pub fn adjacency(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Largest independent set by scanning every subset.
pub fn brute_alpha(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0u64..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s & (1 << v) == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Largest matching: the lowest free vertex is left unmatched or paired with
/// each free neighbor in turn.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(g: &Graph, used: &mut Vec<bool>, from: usize) -> usize {
        let Some(v) = (from..g.n()).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(g, used, v + 1);
        for &u in g.neighbors(v) {
            if !used[u] {
                used[u] = true;
                best = best.max(1 + go(g, used, v + 1));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    go(g, &mut vec![false; g.n()], 0)
}

/// No vertex has three pairwise non-adjacent neighbors.
pub fn brute_claw_free(g: &Graph) -> bool {
    let n = g.n();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    let star = [a, b, d].iter().all(|&x| x != c && g.has_edge(c, x));
                    let indep = !g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d);
                    if star && indep {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Forcing closure that plays a uniformly random eligible force each step.
pub fn random_order_closure<R: Rng>(g: &Graph, s: &VertexSet, rng: &mut R) -> VertexSet {
    let mut colored = vec![false; g.n()];
    for v in s.iter() {
        colored[v] = true;
    }
    loop {
        let eligible: Vec<(usize, usize)> = (0..g.n())
            .filter(|&v| colored[v])
            .filter_map(|v| {
                let open: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| !colored[u])
                    .collect();
                (open.len() == 1).then(|| (v, open[0]))
            })
            .collect();
        match eligible.choose(rng) {
            Some(&(_, u)) => colored[u] = true,
            None => break,
        }
    }
    (0..g.n()).filter(|&v| colored[v]).collect()
}

/// Erdos-Renyi style graph with edge probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edge_list(n, edges).unwrap()
}

/// Every labeled cubic graph on `n` vertices with `N(0) = {1, 2, 3}`, up to
/// the choice of labels (every cubic graph has such a labeling). The lowest
/// vertex with missing degree picks all of its remaining neighbors at once.
pub fn labeled_cubic_graphs(n: usize) -> Vec<Graph> {
    fn go(n: usize, adj: &mut Vec<Vec<usize>>, out: &mut Vec<Graph>) {
        let Some(v) = (0..n).find(|&v| adj[v].len() < 3) else {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| adj[u].iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
                .collect();
            out.push(Graph::from_edge_list(n, edges).unwrap());
            return;
        };
        let need = 3 - adj[v].len();
        let candidates: Vec<usize> = (v + 1..n)
            .filter(|&w| adj[w].len() < 3 && !adj[v].contains(&w))
            .collect();
        let mut pick = Vec::new();
        choose(n, adj, out, v, need, &candidates, 0, &mut pick);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        n: usize,
        adj: &mut Vec<Vec<usize>>,
        out: &mut Vec<Graph>,
        v: usize,
        need: usize,
        candidates: &[usize],
        from: usize,
        pick: &mut Vec<usize>,
    ) {
        if pick.len() == need {
            for &w in pick.iter() {
                adj[v].push(w);
                adj[w].push(v);
            }
            go(n, adj, out);
            for &w in pick.iter() {
                adj[v].pop();
                adj[w].pop();
            }
            return;
        }
        for i in from..candidates.len() {
            pick.push(candidates[i]);
            choose(n, adj, out, v, need, candidates, i + 1, pick);
            pick.pop();
        }
    }

    let mut adj = vec![Vec::new(); n];
    for w in 1..4 {
        adj[0].push(w);
        adj[w].push(0);
    }
    let mut out = Vec::new();
    go(n, &mut adj, &mut out);
    out
}

/// Connected claw-free cubic graphs of order `n` other than K4, one per
/// isomorphism class.
pub fn brute_claw_free_cubic(n: usize) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in labeled_cubic_graphs(n) {
        if n == 4 || !g.is_connected() || !brute_claw_free(&g) {
            continue;
        }
        if !reps.iter().any(|h| are_isomorphic(h, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Same multiset of isomorphism classes on both sides.
pub fn same_classes(a: &[Graph], b: &[Graph]) -> bool {
    a.len() == b.len()
        && a.iter()
            .all(|g| b.iter().filter(|h| are_isomorphic(g, h)).count() == 1)
        && b.iter()
            .all(|g| a.iter().filter(|h| are_isomorphic(g, h)).count() == 1)
}
