//! The color-change rule and exact forcing-number solvers.
//!
//! A colored vertex with exactly one uncolored neighbor forces that neighbor.
//! The set reached from an initial set `S` when no more forces apply does not
//! depend on the order of plays; the recorded [`Chronicle`] follows a fixed
//! order (lowest-id eligible forcer first) so runs are reproducible.

use alloc::vec::Vec;

use thiserror::Error;

use crate::{Graph, Vertex, VertexSet};

/// Default vertex-count cap for the exponential subset searches.
pub const DEFAULT_FORCING_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Play {
    pub forcer: Vertex,
    pub forced: Vertex,
}

/// An initial colored set and the ordered plays applied to it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Chronicle {
    pub initial: VertexSet,
    pub plays: Vec<Play>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("play {index}: vertex {vertex} is out of range")]
    OutOfRange { index: usize, vertex: Vertex },
    #[error("play {index}: forcer {forcer} is not colored")]
    UncoloredForcer { index: usize, forcer: Vertex },
    #[error("play {index}: {forcer} and {forced} are not adjacent")]
    NotAdjacent {
        index: usize,
        forcer: Vertex,
        forced: Vertex,
    },
    #[error("play {index}: target {forced} is already colored")]
    AlreadyColored { index: usize, forced: Vertex },
    #[error("play {index}: forcer {forcer} has {uncolored} uncolored neighbors")]
    Ambiguous {
        index: usize,
        forcer: Vertex,
        uncolored: usize,
    },
}

impl Chronicle {
    /// Replays the plays from `initial`, checking each against the color-change
    /// rule, and returns the final colored set.
    pub fn replay(&self, g: &Graph) -> Result<VertexSet, ReplayError> {
        let mut colored = self.initial.clone();
        if let Some(v) = colored.iter().find(|&v| v >= g.n()) {
            return Err(ReplayError::OutOfRange {
                index: 0,
                vertex: v,
            });
        }
        for (index, &Play { forcer, forced }) in self.plays.iter().enumerate() {
            for vertex in [forcer, forced] {
                if vertex >= g.n() {
                    return Err(ReplayError::OutOfRange { index, vertex });
                }
            }
            if !colored.contains(forcer) {
                return Err(ReplayError::UncoloredForcer { index, forcer });
            }
            if !g.has_edge(forcer, forced) {
                return Err(ReplayError::NotAdjacent {
                    index,
                    forcer,
                    forced,
                });
            }
            if colored.contains(forced) {
                return Err(ReplayError::AlreadyColored { index, forced });
            }
            let uncolored = g
                .neighbors(forcer)
                .iter()
                .filter(|&&u| !colored.contains(u))
                .count();
            if uncolored != 1 {
                return Err(ReplayError::Ambiguous {
                    index,
                    forcer,
                    uncolored,
                });
            }
            colored.insert(forced);
        }
        Ok(colored)
    }

    /// First target of each forcer, in order of first play.
    pub fn first_plays(&self) -> Vec<Play> {
        let mut seen = VertexSet::new();
        self.plays
            .iter()
            .filter(|p| seen.insert(p.forcer))
            .copied()
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub colored: VertexSet,
    pub chronicle: Chronicle,
}

/// Incremental forcing state: colored flags plus per-vertex uncolored-degree
/// counts, appending every play to a log.
pub(crate) struct ForcingState<'g> {
    g: &'g Graph,
    colored: Vec<bool>,
    uncolored_deg: Vec<usize>,
    remaining: usize,
    plays: Vec<Play>,
}

impl<'g> ForcingState<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        ForcingState {
            g,
            colored: alloc::vec![false; g.n()],
            uncolored_deg: g.vertices().map(|v| g.degree(v)).collect(),
            remaining: g.n(),
            plays: Vec::new(),
        }
    }

    pub(crate) fn graph(&self) -> &'g Graph {
        self.g
    }

    pub(crate) fn is_colored(&self, v: Vertex) -> bool {
        self.colored[v]
    }

    pub(crate) fn all_colored(&self) -> bool {
        self.remaining == 0
    }

    pub(crate) fn uncolored_degree(&self, v: Vertex) -> usize {
        self.uncolored_deg[v]
    }

    pub(crate) fn uncolored_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| !self.colored[u])
    }

    pub(crate) fn plays(&self) -> &[Play] {
        &self.plays
    }

    pub(crate) fn into_plays(self) -> Vec<Play> {
        self.plays
    }

    /// Colors `v` without a play (initial or greedily chosen vertices).
    pub(crate) fn color(&mut self, v: Vertex) {
        if core::mem::replace(&mut self.colored[v], true) {
            return;
        }
        self.remaining -= 1;
        for &u in self.g.neighbors(v) {
            self.uncolored_deg[u] -= 1;
        }
    }

    /// Whether `forcer` may force `forced` right now.
    pub(crate) fn can_play(&self, forcer: Vertex, forced: Vertex) -> bool {
        self.colored[forcer]
            && !self.colored[forced]
            && self.uncolored_deg[forcer] == 1
            && self.g.has_edge(forcer, forced)
    }

    /// Applies a play; returns `false` (and changes nothing) if it is illegal.
    pub(crate) fn play(&mut self, forcer: Vertex, forced: Vertex) -> bool {
        if !self.can_play(forcer, forced) {
            return false;
        }
        self.color(forced);
        self.plays.push(Play { forcer, forced });
        true
    }

    /// Lowest-id colored vertex with exactly one uncolored neighbor.
    fn next_forcer(&self) -> Option<Vertex> {
        self.g
            .vertices()
            .find(|&v| self.colored[v] && self.uncolored_deg[v] == 1)
    }

    /// Applies plays in the deterministic order until none is available.
    pub(crate) fn propagate(&mut self) {
        while let Some(v) = self.next_forcer() {
            let target = self
                .uncolored_neighbors(v)
                .next()
                .expect("uncolored degree is one");
            self.play(v, target);
        }
    }

    pub(crate) fn colored_set(&self) -> VertexSet {
        self.g.vertices().filter(|&v| self.colored[v]).collect()
    }
}

/// The fixpoint of the color-change rule from `s`, with its chronicle.
pub fn closure(g: &Graph, s: &VertexSet) -> Closure {
    let mut state = ForcingState::new(g);
    for v in s.iter().filter(|&v| v < g.n()) {
        state.color(v);
    }
    state.propagate();
    let colored = state.colored_set();
    Closure {
        colored,
        chronicle: Chronicle {
            initial: s.clone(),
            plays: state.into_plays(),
        },
    }
}

/// Closure on neighbor bitmasks (membership only, no chronicle).
fn closure_mask(masks: &[u64], mut colored: u64, full: u64) -> u64 {
    loop {
        let mut changed = false;
        let mut frontier = colored;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let open = masks[v] & !colored;
            if open != 0 && open & (open - 1) == 0 {
                colored |= open;
                changed = true;
            }
        }
        if !changed || colored == full {
            return colored;
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn is_forcing_set(g: &Graph, s: &VertexSet) -> bool {
    match (g.masks(), s.as_mask()) {
        (Some(masks), Some(mask)) => {
            let full = full_mask(g.n());
            closure_mask(masks, mask & full, full) == full
        }
        _ => closure(g, s).colored.len() == g.n(),
    }
}

pub fn is_total_forcing_set(g: &Graph, s: &VertexSet) -> bool {
    g.induces_no_isolated_vertex(s) && is_forcing_set(g, s)
}

/// Runtime limits for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest vertex count accepted by the forcing-number searches.
    pub cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            cap: DEFAULT_FORCING_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForcingError {
    #[error("instance has {n} vertices, above the solver cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
    #[error("vertex {0} is isolated, so no total forcing set exists")]
    IsolatedVertex(Vertex),
}

/// Minimum zero forcing set: smallest `k` first, lexicographically first
/// `k`-subset within a size.
pub fn zero_forcing_number(
    g: &Graph,
    config: &SolverConfig,
) -> Result<(usize, VertexSet), ForcingError> {
    check_cap(g, config)?;
    let start = search_start(g);
    Ok(min_subset(g, start, false))
}

/// Minimum total forcing set, same search order as [`zero_forcing_number`].
pub fn total_forcing_number(
    g: &Graph,
    config: &SolverConfig,
) -> Result<(usize, VertexSet), ForcingError> {
    check_cap(g, config)?;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(ForcingError::IsolatedVertex(v));
    }
    let start = search_start(g).max(2.min(g.n()));
    Ok(min_subset(g, start, true))
}

fn check_cap(g: &Graph, config: &SolverConfig) -> Result<(), ForcingError> {
    if g.n() > config.cap {
        return Err(ForcingError::InstanceTooLarge {
            n: g.n(),
            cap: config.cap,
        });
    }
    Ok(())
}

fn search_start(g: &Graph) -> usize {
    if g.n() == 0 {
        0
    } else if g.is_regular() && g.is_connected() {
        g.min_degree().max(1)
    } else {
        1
    }
}

fn min_subset(g: &Graph, start: usize, total: bool) -> (usize, VertexSet) {
    let n = g.n();
    for k in start..=n {
        let hit = match g.masks() {
            Some(masks) => {
                let full = full_mask(n);
                first_combination(n, k, |combo| {
                    let mask = combo.iter().fold(0u64, |m, &v| m | (1 << v));
                    if total && combo.iter().any(|&v| masks[v] & mask == 0) {
                        return false;
                    }
                    closure_mask(masks, mask, full) == full
                })
            }
            None => first_combination(n, k, |combo| {
                let s: VertexSet = combo.iter().collect();
                if total {
                    is_total_forcing_set(g, &s)
                } else {
                    is_forcing_set(g, &s)
                }
            }),
        };
        if let Some(combo) = hit {
            return (k, combo.into_iter().collect());
        }
    }
    (n, VertexSet::full(n))
}

/// First `k`-subset of `0..n` in lexicographic order accepted by `accept`.
fn first_combination(
    n: usize,
    k: usize,
    mut accept: impl FnMut(&[Vertex]) -> bool,
) -> Option<Vec<Vertex>> {
    if k > n {
        return None;
    }
    let mut combo: Vec<Vertex> = (0..k).collect();
    loop {
        if accept(&combo) {
            return Some(combo);
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if combo[i] < n - k + i {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn prism() -> Graph {
        Graph::from_edge_list(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn prism_triangle_closure() {
        let c = closure(&prism(), &set(&[0, 1, 2]));
        assert_eq!(c.colored.len(), 6);
        assert_eq!(c.chronicle.plays.len(), 3);
        assert_eq!(c.chronicle.replay(&prism()).unwrap(), c.colored);
    }

    #[test]
    fn full_set_needs_no_plays() {
        let c = closure(&prism(), &VertexSet::full(6));
        assert_eq!(c.colored.len(), 6);
        assert!(c.chronicle.plays.is_empty());
    }

    #[test]
    fn single_vertex_is_stuck() {
        let c = closure(&prism(), &set(&[0]));
        assert_eq!(c.colored, set(&[0]));
        assert!(c.chronicle.plays.is_empty());
    }

    #[test]
    fn chronicle_order_is_lowest_forcer_first() {
        let c = closure(&prism(), &set(&[0, 1, 2]));
        let forcers: Vec<_> = c.chronicle.plays.iter().map(|p| p.forcer).collect();
        assert_eq!(forcers, vec![0, 1, 2]);
    }

    #[test]
    fn prism_pairs_do_not_force() {
        let g = prism();
        for a in 0..6 {
            for b in a + 1..6 {
                assert!(!is_forcing_set(&g, &set(&[a, b])), "{a},{b}");
            }
        }
    }

    #[test]
    fn k4_triples_force() {
        let g = k4();
        for skip in 0..4 {
            let s: VertexSet = (0..4).filter(|&v| v != skip).collect();
            assert!(is_forcing_set(&g, &s));
        }
    }

    #[test]
    fn total_forcing_membership() {
        let g = prism();
        assert!(is_total_forcing_set(&g, &set(&[0, 1, 2])));
        assert!(!is_total_forcing_set(&g, &VertexSet::new()));
    }

    #[test]
    fn independent_forcing_set_is_not_total() {
        // path 0-1-2: {0} forces everything but is isolated in G[S]
        let p = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert!(is_forcing_set(&p, &set(&[0])));
        assert!(!is_total_forcing_set(&p, &set(&[0])));
    }

    #[test]
    fn small_zero_forcing_numbers() {
        let cfg = SolverConfig::default();
        assert_eq!(zero_forcing_number(&prism(), &cfg).unwrap().0, 3);
        let (z, w) = zero_forcing_number(&k4(), &cfg).unwrap();
        assert_eq!((z, w), (3, set(&[0, 1, 2])));
        assert_eq!(total_forcing_number(&prism(), &cfg).unwrap().0, 3);
        let p = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(zero_forcing_number(&p, &cfg).unwrap(), (1, set(&[0])));
        assert_eq!(total_forcing_number(&p, &cfg).unwrap(), (2, set(&[0, 1])));
    }

    #[test]
    fn k4_exhaustive_oracle() {
        // every subset of K4, smallest forcing size
        let g = k4();
        let best = (0u32..16)
            .filter(|m| is_forcing_set(&g, &(0..4).filter(|v| m & (1 << v) != 0).collect()))
            .map(|m| m.count_ones())
            .min()
            .unwrap();
        assert_eq!(best, 3);
    }

    #[test]
    fn solver_cap_and_isolated_vertices() {
        let g = Graph::empty(30);
        assert_eq!(
            zero_forcing_number(&g, &SolverConfig::default()),
            Err(ForcingError::InstanceTooLarge { n: 30, cap: 24 })
        );
        assert_eq!(
            total_forcing_number(&Graph::empty(2), &SolverConfig::default()),
            Err(ForcingError::IsolatedVertex(0))
        );
        assert_eq!(
            zero_forcing_number(&Graph::empty(0), &SolverConfig::default())
                .unwrap()
                .0,
            0
        );
    }

    #[test]
    fn replay_rejects_ambiguous_forcer() {
        let g = prism();
        let bad = Chronicle {
            initial: set(&[0]),
            plays: vec![Play {
                forcer: 0,
                forced: 1,
            }],
        };
        assert!(matches!(
            bad.replay(&g),
            Err(ReplayError::Ambiguous { uncolored: 3, .. })
        ));
    }

    #[test]
    fn large_graph_fallback_matches_mask_kernel() {
        // cycle on 70 vertices: any two adjacent vertices force
        let n = 70;
        let g = Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        assert!(is_forcing_set(&g, &set(&[10, 11])));
        assert!(!is_forcing_set(&g, &set(&[10, 12])));
        let cfg = SolverConfig { cap: 100 };
        assert_eq!(zero_forcing_number(&g, &cfg).unwrap(), (2, set(&[0, 1])));
    }
}
