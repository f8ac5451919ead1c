//! Triangle/diamond partition, unit multigraph and shortest cycles.
//!
//! In a connected claw-free cubic graph other than `K4`, every vertex lies in
//! exactly one induced diamond (`K4` minus an edge) or, failing that, in
//! exactly one triangle. These blocks ("units") partition the vertex set in a
//! unique way.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use thiserror::Error;

use crate::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is K4")]
    IsK4,
    #[error("graph is not claw-free cubic")]
    NotClawFreeCubic,
    #[error("partition failed: {0}")]
    PartitionFailure(&'static str),
    #[error("unit multigraph is not simple and cubic")]
    NotSimpleCubic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnitKind {
    Triangle,
    Diamond,
}

impl UnitKind {
    /// Number of edges leaving a unit of this kind in a cubic graph.
    pub fn external_degree(self) -> u32 {
        match self {
            UnitKind::Triangle => 3,
            UnitKind::Diamond => 2,
        }
    }

    pub fn size(self) -> usize {
        match self {
            UnitKind::Triangle => 3,
            UnitKind::Diamond => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Unit {
    pub kind: UnitKind,
    /// Sorted member vertices.
    pub members: Vec<Vertex>,
    /// The non-adjacent pair of a diamond, `(low, high)`.
    pub ends: Option<(Vertex, Vertex)>,
}

impl Unit {
    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// The two members adjacent to every other member of a diamond.
    pub fn interior(&self) -> Option<(Vertex, Vertex)> {
        let (a, b) = self.ends?;
        let mut rest = self.members.iter().copied().filter(|&v| v != a && v != b);
        Some((rest.next()?, rest.next()?))
    }

    pub fn min_member(&self) -> Vertex {
        self.members[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitPartition {
    /// Units sorted by their minimum member.
    pub units: Vec<Unit>,
    /// Index into `units` for every vertex.
    pub unit_of: Vec<usize>,
}

impl UnitPartition {
    pub fn unit(&self, v: Vertex) -> &Unit {
        &self.units[self.unit_of[v]]
    }

    pub fn triangle_count(&self) -> usize {
        self.units
            .iter()
            .filter(|u| u.kind == UnitKind::Triangle)
            .count()
    }

    pub fn diamond_count(&self) -> usize {
        self.units
            .iter()
            .filter(|u| u.kind == UnitKind::Diamond)
            .count()
    }
}

/// Computes the triangle/diamond partition.
///
/// Diamonds are found first as the edges lying in two triangles; every
/// remaining vertex must then lie in exactly one triangle of remaining
/// vertices. Any inconsistency is an error rather than a partial answer.
pub fn triangle_diamond_partition(g: &Graph) -> Result<UnitPartition, StructureError> {
    if g.is_k4() {
        return Err(StructureError::IsK4);
    }
    if !g.is_cubic() || !g.is_claw_free() {
        return Err(StructureError::NotClawFreeCubic);
    }
    let n = g.n();
    let mut units: Vec<Unit> = Vec::new();
    let mut owner = alloc::vec![usize::MAX; n];

    for &(u, v) in g.edges() {
        let common: Vec<Vertex> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != v && g.has_edge(v, w))
            .collect();
        if common.len() < 2 {
            continue;
        }
        let (a, b) = (common[0], common[1]);
        if g.has_edge(a, b) {
            return Err(StructureError::PartitionFailure("K4 component"));
        }
        let mut members = alloc::vec![u, v, a, b];
        members.sort_unstable();
        match owner[u] {
            usize::MAX => {}
            idx if units[idx].members == members => continue,
            _ => return Err(StructureError::PartitionFailure("overlapping diamonds")),
        }
        let idx = units.len();
        for &x in &members {
            if owner[x] != usize::MAX {
                return Err(StructureError::PartitionFailure("overlapping diamonds"));
            }
            owner[x] = idx;
        }
        units.push(Unit {
            kind: UnitKind::Diamond,
            members,
            ends: Some((a.min(b), a.max(b))),
        });
    }

    for v in g.vertices() {
        if owner[v] != usize::MAX {
            continue;
        }
        let free: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| owner[u] == usize::MAX)
            .collect();
        let mut triangles = Vec::new();
        for i in 0..free.len() {
            for &b in &free[i + 1..] {
                if g.has_edge(free[i], b) {
                    triangles.push((free[i], b));
                }
            }
        }
        let [(a, b)] = triangles[..] else {
            return Err(StructureError::PartitionFailure(
                "vertex outside diamonds is not in exactly one triangle",
            ));
        };
        let mut members = alloc::vec![v, a, b];
        members.sort_unstable();
        let idx = units.len();
        for &x in &members {
            owner[x] = idx;
        }
        units.push(Unit {
            kind: UnitKind::Triangle,
            members,
            ends: None,
        });
    }

    units.sort_by_key(Unit::min_member);
    let mut unit_of = alloc::vec![0; n];
    for (i, unit) in units.iter().enumerate() {
        for &v in &unit.members {
            unit_of[v] = i;
        }
    }
    Ok(UnitPartition { units, unit_of })
}

/// Units as vertices, joined by the number of graph edges between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitMultigraph {
    pub kinds: Vec<UnitKind>,
    /// Symmetric matrix of cross-edge counts; zero diagonal.
    pub multiplicity: Vec<Vec<u32>>,
}

impl UnitMultigraph {
    pub fn k(&self) -> usize {
        self.kinds.len()
    }

    pub fn weighted_degree(&self, a: usize) -> u32 {
        self.multiplicity[a].iter().sum()
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.multiplicity[a]
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(b, _)| b)
    }

    pub fn edge_count(&self) -> u32 {
        (0..self.k())
            .map(|a| self.multiplicity[a][a + 1..].iter().sum::<u32>())
            .sum()
    }

    /// No multiplicity above one, no loops, three neighbors per unit.
    pub fn is_simple_cubic(&self) -> bool {
        (0..self.k()).all(|a| {
            self.multiplicity[a][a] == 0
                && self.multiplicity[a].iter().all(|&m| m <= 1)
                && self.weighted_degree(a) == 3
        })
    }
}

pub fn contraction_multigraph(p: &UnitPartition, g: &Graph) -> UnitMultigraph {
    let k = p.units.len();
    let mut multiplicity = alloc::vec![alloc::vec![0u32; k]; k];
    for &(u, v) in g.edges() {
        let (a, b) = (p.unit_of[u], p.unit_of[v]);
        if a != b {
            multiplicity[a][b] += 1;
            multiplicity[b][a] += 1;
        }
    }
    UnitMultigraph {
        kinds: p.units.iter().map(|u| u.kind).collect(),
        multiplicity,
    }
}

/// A minimum-length cycle `b0 b1 .. bk` of a simple cubic unit multigraph.
///
/// `b0` is the smallest unit lying on any shortest cycle and the remaining
/// sequence is the lexicographically smallest among shortest cycles through
/// `b0`.
pub fn shortest_cycle(m: &UnitMultigraph) -> Result<Vec<usize>, StructureError> {
    if !m.is_simple_cubic() {
        return Err(StructureError::NotSimpleCubic);
    }
    let k = m.k();
    let adj: Vec<Vec<usize>> = (0..k).map(|a| m.neighbors(a).collect()).collect();
    let girth = (0..k)
        .filter_map(|s| shortest_cycle_through(&adj, s))
        .min()
        .ok_or(StructureError::NotSimpleCubic)?;

    for start in 0..k {
        let dist = bfs_distances(&adj, start);
        let mut path = alloc::vec![start];
        let mut on_path = alloc::vec![false; k];
        on_path[start] = true;
        if extend_cycle(&adj, &dist, girth, &mut path, &mut on_path) {
            return Ok(path);
        }
    }
    Err(StructureError::NotSimpleCubic)
}

fn bfs_distances(adj: &[Vec<usize>], s: usize) -> Vec<usize> {
    let mut dist = alloc::vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(a) = queue.pop_front() {
        for &b in &adj[a] {
            if dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    dist
}

/// Shortest cycle found by a BFS rooted at `s`. Never below the true girth,
/// and equal to it when `s` lies on a shortest cycle.
fn shortest_cycle_through(adj: &[Vec<usize>], s: usize) -> Option<usize> {
    let k = adj.len();
    let mut dist = alloc::vec![usize::MAX; k];
    let mut parent = alloc::vec![usize::MAX; k];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    let mut best: Option<usize> = None;
    while let Some(a) = queue.pop_front() {
        for &b in &adj[a] {
            if dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                parent[b] = a;
                queue.push_back(b);
            } else if b != parent[a] {
                let len = dist[a] + dist[b] + 1;
                best = Some(best.map_or(len, |x| x.min(len)));
            }
        }
    }
    best
}

fn extend_cycle(
    adj: &[Vec<usize>],
    dist: &[usize],
    girth: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let last = *path.last().expect("path starts at b0");
    let start = path[0];
    if path.len() == girth {
        return adj[last].contains(&start);
    }
    let steps_left = girth - path.len();
    for &next in &adj[last] {
        if on_path[next] || dist[next] > steps_left {
            continue;
        }
        path.push(next);
        on_path[next] = true;
        if extend_cycle(adj, dist, girth, path, on_path) {
            return true;
        }
        on_path[next] = false;
        path.pop();
    }
    false
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

    fn n2() -> Graph {
        // diamonds {0,1,2,3} and {4,5,6,7}, ends 0,3 and 4,7
        Graph::from_edge_list(
            8,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (4, 6),
                (5, 6),
                (5, 7),
                (6, 7),
                (3, 4),
                (7, 0),
            ],
        )
        .unwrap()
    }

    fn simple(k: usize, edges: &[(usize, usize)]) -> UnitMultigraph {
        let mut multiplicity = vec![vec![0; k]; k];
        for &(a, b) in edges {
            multiplicity[a][b] += 1;
            multiplicity[b][a] += 1;
        }
        UnitMultigraph {
            kinds: vec![UnitKind::Triangle; k],
            multiplicity,
        }
    }

    #[test]
    fn prism_has_two_triangle_units() {
        let p = triangle_diamond_partition(&prism()).unwrap();
        assert_eq!(p.triangle_count(), 2);
        assert_eq!(p.units[0].members, vec![0, 1, 2]);
        let m = contraction_multigraph(&p, &prism());
        assert_eq!(m.multiplicity[0][1], 3);
    }

    #[test]
    fn n2_has_two_diamonds() {
        let g = n2();
        let p = triangle_diamond_partition(&g).unwrap();
        assert_eq!(p.diamond_count(), 2);
        assert_eq!(p.units[0].ends, Some((0, 3)));
        assert_eq!(p.units[0].interior(), Some((1, 2)));
        let m = contraction_multigraph(&p, &g);
        assert_eq!(m.multiplicity, vec![vec![0, 2], vec![2, 0]]);
        assert_eq!(m.weighted_degree(0), 2);
    }

    #[test]
    fn rejects_invalid_inputs() {
        let k4 =
            Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(triangle_diamond_partition(&k4), Err(StructureError::IsK4));
        let cube = Graph::from_edge_list(
            8,
            (0..8usize).flat_map(|v| [1, 2, 4].into_iter().map(move |b| (v, v ^ b))),
        )
        .unwrap();
        assert_eq!(
            triangle_diamond_partition(&cube),
            Err(StructureError::NotClawFreeCubic)
        );
        let two_k4 = k4.disjoint_union(&k4);
        assert!(matches!(
            triangle_diamond_partition(&two_k4),
            Err(StructureError::PartitionFailure(_))
        ));
    }

    #[test]
    fn girth_of_k4_multigraph() {
        let m = simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(shortest_cycle(&m).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn girth_of_k33_multigraph() {
        // brute force: K33 is bipartite so no 3-cycle; 0-3-1-4 is a 4-cycle
        let m = simple(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        );
        let c = shortest_cycle(&m).unwrap();
        assert_eq!(c, vec![0, 3, 1, 4]);
    }

    #[test]
    fn double_edge_is_rejected() {
        let m = simple(2, &[(0, 1), (0, 1), (0, 1)]);
        assert_eq!(shortest_cycle(&m), Err(StructureError::NotSimpleCubic));
    }
}
