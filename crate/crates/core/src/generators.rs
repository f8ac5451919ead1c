//! Named graphs, unit-multigraph inflation, random instances and exhaustive
//! enumeration of small connected claw-free cubic graphs.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::iso::are_isomorphic;
use crate::structure::UnitKind;
use crate::{Graph, Vertex};

/// Largest order accepted by [`enumerate_connected_claw_free_cubic`].
pub const ENUMERATION_CAP: usize = 20;

const MAX_SAMPLING_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("bad parameter: {0}")]
    BadParameter(&'static str),
    #[error("invalid unit spec: {0}")]
    InvalidSpec(&'static str),
    #[error("no valid instance found after {0} attempts")]
    Unsatisfiable(usize),
    #[error("order {n} exceeds the enumeration cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
}

/// The triangular prism: triangles `{0,1,2}` and `{3,4,5}`, rungs `i -- i+3`.
pub fn prism() -> Graph {
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
    .expect("static edge list")
}

pub fn k4() -> Graph {
    Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("static edge list")
}

/// A cycle of `k` diamonds. Diamond `j` has ends `4j`, `4j+3` and interior
/// `4j+1`, `4j+2`; end `4j+3` is joined to end `4(j+1) mod 4k`.
pub fn necklace(k: usize) -> Result<Graph, GeneratorError> {
    if k < 2 {
        return Err(GeneratorError::BadParameter(
            "necklace needs at least 2 diamonds",
        ));
    }
    let edges = (0..k).flat_map(|j| {
        let b = 4 * j;
        [
            (b, b + 1),
            (b, b + 2),
            (b + 1, b + 2),
            (b + 1, b + 3),
            (b + 2, b + 3),
            (b + 3, 4 * ((j + 1) % k)),
        ]
    });
    Ok(Graph::from_edge_list(4 * k, edges).expect("necklace edges are valid"))
}

/// A connected loopless multigraph on unit slots. Triangle slots have
/// weighted degree 3, diamond slots weighted degree 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSpec {
    kinds: Vec<UnitKind>,
    multiplicity: Vec<Vec<u32>>,
}

impl UnitSpec {
    pub fn new(kinds: Vec<UnitKind>, multiplicity: Vec<Vec<u32>>) -> Result<Self, GeneratorError> {
        let spec = UnitSpec {
            kinds,
            multiplicity,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_edges(
        kinds: Vec<UnitKind>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GeneratorError> {
        let k = kinds.len();
        let mut multiplicity = alloc::vec![alloc::vec![0u32; k]; k];
        for &(a, b) in edges {
            if a >= k || b >= k {
                return Err(GeneratorError::InvalidSpec("slot out of range"));
            }
            multiplicity[a][b] += 1;
            if a != b {
                multiplicity[b][a] += 1;
            }
        }
        Self::new(kinds, multiplicity)
    }

    pub fn kinds(&self) -> &[UnitKind] {
        &self.kinds
    }

    pub fn multiplicity(&self) -> &[Vec<u32>] {
        &self.multiplicity
    }

    /// Order of the inflated graph.
    pub fn order(&self) -> usize {
        self.kinds.iter().map(|k| k.size()).sum()
    }

    fn validate(&self) -> Result<(), GeneratorError> {
        let k = self.kinds.len();
        let m = &self.multiplicity;
        if k == 0 {
            return Err(GeneratorError::InvalidSpec("no slots"));
        }
        if m.len() != k || m.iter().any(|row| row.len() != k) {
            return Err(GeneratorError::InvalidSpec(
                "multiplicity matrix has wrong shape",
            ));
        }
        for (a, row) in m.iter().enumerate() {
            if row[a] != 0 {
                return Err(GeneratorError::InvalidSpec("loop on a slot"));
            }
            if row.iter().zip(m).any(|(&x, other)| x != other[a]) {
                return Err(GeneratorError::InvalidSpec(
                    "multiplicities are not symmetric",
                ));
            }
            if row.iter().sum::<u32>() != self.kinds[a].external_degree() {
                return Err(GeneratorError::InvalidSpec(
                    "slot degree does not match its kind",
                ));
            }
        }
        let mut seen = alloc::vec![false; k];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for b in 0..k {
                if m[a][b] > 0 && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(GeneratorError::InvalidSpec("slots are not connected"));
        }
        Ok(())
    }
}

/// Replaces each slot by a triangle or diamond and joins external stubs.
///
/// Slot `a` occupies consecutive vertex ids. A triangle's stubs are its three
/// vertices; a diamond `b..b+4` has ends `b`, `b+3` carrying the stubs and
/// interior `b+1`, `b+2`. Slot pairs are joined in lexicographic order, each
/// taking its lowest free stub.
pub fn inflate(spec: &UnitSpec) -> Result<Graph, GeneratorError> {
    spec.validate()?;
    let k = spec.kinds.len();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut stubs: Vec<Vec<Vertex>> = Vec::with_capacity(k);
    let mut base = 0;
    for &kind in &spec.kinds {
        let b = base;
        match kind {
            UnitKind::Triangle => {
                edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
                stubs.push(alloc::vec![b + 2, b + 1, b]);
            }
            UnitKind::Diamond => {
                edges.extend([
                    (b, b + 1),
                    (b, b + 2),
                    (b + 1, b + 2),
                    (b + 1, b + 3),
                    (b + 2, b + 3),
                ]);
                stubs.push(alloc::vec![b + 3, b]);
            }
        }
        base += kind.size();
    }
    // stubs are popped from the back, lowest id first
    for a in 0..k {
        for b in a + 1..k {
            for _ in 0..spec.multiplicity[a][b] {
                let u = stubs[a].pop().expect("degree checked");
                let v = stubs[b].pop().expect("degree checked");
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edge_list(base, edges).expect("inflated edges are valid");
    if g.m() * 2 != 3 * base {
        return Err(GeneratorError::InvalidSpec(
            "inflation produced parallel edges",
        ));
    }
    Ok(g)
}

/// Seeded sampler: draws slot kinds, pairs stubs uniformly at random and
/// rejects loops and disconnected results.
pub fn random_claw_free_cubic(
    units: usize,
    diamond_fraction: f64,
    seed: u64,
) -> Result<Graph, GeneratorError> {
    if units < 2 {
        return Err(GeneratorError::BadParameter("need at least 2 units"));
    }
    if !(0.0..=1.0).contains(&diamond_fraction) {
        return Err(GeneratorError::BadParameter(
            "diamond fraction must lie in [0, 1]",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_SAMPLING_ATTEMPTS {
        let kinds: Vec<UnitKind> = (0..units)
            .map(|_| match rng.random_bool(diamond_fraction) {
                true => UnitKind::Diamond,
                false => UnitKind::Triangle,
            })
            .collect();
        let mut stubs: Vec<usize> = kinds
            .iter()
            .enumerate()
            .flat_map(|(a, kind)| core::iter::repeat_n(a, kind.external_degree() as usize))
            .collect();
        if stubs.len() % 2 == 1 {
            continue;
        }
        stubs.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().any(|&(a, b)| a == b) {
            continue;
        }
        if let Ok(spec) = UnitSpec::from_edges(kinds, &pairs) {
            return inflate(&spec);
        }
    }
    Err(GeneratorError::Unsatisfiable(MAX_SAMPLING_ATTEMPTS))
}

/// All symmetric loopless multiplicity matrices with the given row sums.
pub fn multigraphs_with_degrees(degrees: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn fill(
        a: usize,
        b: usize,
        remaining: &mut [u32],
        m: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        let k = remaining.len();
        if a == k {
            out.push(m.clone());
            return;
        }
        if b == k {
            if remaining[a] == 0 {
                fill(a + 1, a + 2, remaining, m, out);
            }
            return;
        }
        let most = remaining[a].min(remaining[b]);
        for x in 0..=most {
            remaining[a] -= x;
            remaining[b] -= x;
            m[a][b] = x;
            m[b][a] = x;
            fill(a, b + 1, remaining, m, out);
            remaining[a] += x;
            remaining[b] += x;
        }
        m[a][b] = 0;
        m[b][a] = 0;
    }
    let k = degrees.len();
    let mut out = Vec::new();
    let mut m = alloc::vec![alloc::vec![0; k]; k];
    let mut remaining = degrees.to_vec();
    fill(0, 1, &mut remaining, &mut m, &mut out);
    out
}

/// One representative per isomorphism class of connected claw-free cubic
/// graphs with `6 <= n <= max_n`, ordered by `n`, then diamond count.
pub fn enumerate_connected_claw_free_cubic(max_n: usize) -> Result<Vec<Graph>, GeneratorError> {
    if max_n > ENUMERATION_CAP {
        return Err(GeneratorError::InstanceTooLarge {
            n: max_n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut corpus = Vec::new();
    for n in (6..=max_n).step_by(2) {
        for diamonds in 0..=n / 4 {
            let rest = n - 4 * diamonds;
            if rest % 3 != 0 || (rest / 3) % 2 != 0 {
                continue;
            }
            let triangles = rest / 3;
            let kinds: Vec<UnitKind> = core::iter::repeat_n(UnitKind::Triangle, triangles)
                .chain(core::iter::repeat_n(UnitKind::Diamond, diamonds))
                .collect();
            let degrees: Vec<u32> = kinds.iter().map(|k| k.external_degree()).collect();
            let mut reps: Vec<Graph> = Vec::new();
            for matrix in multigraphs_with_degrees(&degrees) {
                let Ok(spec) = UnitSpec::new(kinds.clone(), matrix) else {
                    continue;
                };
                let g = inflate(&spec)?;
                if !reps.iter().any(|h| are_isomorphic(h, &g)) {
                    reps.push(g);
                }
            }
            corpus.extend(reps);
        }
    }
    Ok(corpus)
}
