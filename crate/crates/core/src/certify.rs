//! Constructive forcing-set certificates for connected claw-free cubic graphs.
//!
//! The builder starts from three vertices of one unit, lets the forcing
//! process run, and whenever it halts colors one more vertex `w` taken from
//! the unit of a stuck vertex. Every greedily colored vertex is independent of
//! the others and forces along its own edge, so the result is a forcing set
//! `S`, an independent set `I` with `|S| = |I| + 1`, and a matching `M` of
//! forcing edges with `|M| = |S|`. [`verify_certificate`] re-checks all of
//! this without touching the builder.

use alloc::vec::Vec;

use thiserror::Error;

use crate::forcing::{Chronicle, ForcingState, Play};
use crate::structure::{
    contraction_multigraph, shortest_cycle, triangle_diamond_partition, StructureError, Unit,
    UnitKind, UnitPartition,
};
use crate::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("graph is K4")]
    IsK4,
    #[error("graph is not claw-free cubic")]
    NotClawFreeCubic,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("forcing halted with {uncolored} uncolored vertices and no eligible vertex")]
    StuckNoEligibleVertex { uncolored: usize },
    #[error("rule precondition violated at vertex {vertex}: {reason}")]
    PreconditionBreach {
        vertex: Vertex,
        reason: &'static str,
    },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// How the initial unit was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateMode {
    /// Three vertices of a diamond unit.
    DiamondStart,
    /// All units are triangles and some pair is joined by two edges.
    DoubleEdgeStart,
    /// All units are triangles joined by single edges; the start follows a
    /// shortest cycle of the unit multigraph.
    CycleChain,
    /// The two graphs of order 6 and 8, with fixed witnesses.
    SmallCase,
}

impl CertificateMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateMode::DiamondStart => "diamond-start",
            CertificateMode::DoubleEdgeStart => "claim2",
            CertificateMode::CycleChain => "cycle-chain",
            CertificateMode::SmallCase => "small-case",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            CertificateMode::DiamondStart,
            CertificateMode::DoubleEdgeStart,
            CertificateMode::CycleChain,
            CertificateMode::SmallCase,
        ]
        .into_iter()
        .find(|m| m.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// The forcing set.
    pub s: VertexSet,
    /// The independent witness.
    pub i: VertexSet,
    /// First forcing edge `(forcer, forced)` of every vertex of `s`, by forcer.
    pub m: Vec<(Vertex, Vertex)>,
    pub chronicle: Chronicle,
    /// Index of the initially forcing unit in the partition.
    pub initial_unit: usize,
    pub mode: CertificateMode,
}

/// What a single Triangle- or Diamond-Rule application did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    pub greedy: Vertex,
    pub plays: Vec<Play>,
}

/// Forcing state plus the growing `S` and `I` of a certificate.
pub struct GreedyState<'g> {
    forcing: ForcingState<'g>,
    partition: &'g UnitPartition,
    s: VertexSet,
    i: VertexSet,
}

impl<'g> GreedyState<'g> {
    pub fn new(g: &'g Graph, partition: &'g UnitPartition) -> Self {
        GreedyState {
            forcing: ForcingState::new(g),
            partition,
            s: VertexSet::new(),
            i: VertexSet::new(),
        }
    }

    pub fn is_colored(&self, v: Vertex) -> bool {
        self.forcing.is_colored(v)
    }

    pub fn all_colored(&self) -> bool {
        self.forcing.all_colored()
    }

    pub fn plays(&self) -> &[Play] {
        self.forcing.plays()
    }

    pub fn forcing_set(&self) -> &VertexSet {
        &self.s
    }

    pub fn independent_set(&self) -> &VertexSet {
        &self.i
    }

    /// Colors `v` and adds it to `S` (and to `I` when `independent`).
    pub fn color(&mut self, v: Vertex, independent: bool) {
        self.forcing.color(v);
        self.s.insert(v);
        if independent {
            self.i.insert(v);
        }
    }

    /// Records `v` in `I` without coloring it.
    pub fn mark_independent(&mut self, v: Vertex) {
        self.i.insert(v);
    }

    /// Applies a scripted play, failing if the color-change rule forbids it.
    pub fn force(&mut self, forcer: Vertex, forced: Vertex) -> Result<(), CertifyError> {
        match self.forcing.play(forcer, forced) {
            true => Ok(()),
            false => Err(CertifyError::PreconditionBreach {
                vertex: forcer,
                reason: "scripted play is not a legal force",
            }),
        }
    }

    /// Runs the forcing process until it halts.
    pub fn propagate(&mut self) {
        self.forcing.propagate();
    }

    /// Colors the lower-id uncolored unit-mate `w` of `v` in a triangle unit
    /// `{v, w, y}`. If the outside neighbor `w'` of `w` is colored, `w`
    /// forces `y`; otherwise `v` forces `y` and then `w` forces `w'`.
    pub fn triangle_rule(&mut self, v: Vertex) -> Result<RuleOutcome, CertifyError> {
        let unit = self.partition.unit(v);
        let breach = |reason| CertifyError::PreconditionBreach { vertex: v, reason };
        if unit.kind != UnitKind::Triangle {
            return Err(breach("vertex is not in a triangle unit"));
        }
        if !self.is_colored(v) {
            return Err(breach("vertex is uncolored"));
        }
        let mates: Vec<Vertex> = unit.members.iter().copied().filter(|&u| u != v).collect();
        if mates.iter().any(|&u| self.is_colored(u)) {
            return Err(breach("a unit-mate is already colored"));
        }
        let (w, y) = (mates[0], mates[1]);
        let w_out = outside_neighbor(self.forcing.graph(), unit, w);
        let before = self.plays().len();

        self.color(w, true);
        if self.is_colored(w_out) {
            self.force(w, y)?;
        } else {
            self.force(v, y)?;
            self.force(w, w_out)?;
        }
        Ok(RuleOutcome {
            greedy: w,
            plays: self.plays()[before..].to_vec(),
        })
    }

    /// Diamond unit `{v, w, y, z}` with `vz` the missing edge: colors the
    /// lower-id interior vertex `w`. If `z` is colored, `w` forces `y`;
    /// otherwise `v` forces `y` and then `w` forces `z`.
    pub fn diamond_rule(&mut self, v: Vertex) -> Result<RuleOutcome, CertifyError> {
        let unit = self.partition.unit(v);
        let breach = |reason| CertifyError::PreconditionBreach { vertex: v, reason };
        let (Some((e1, e2)), Some((w, y))) = (unit.ends, unit.interior()) else {
            return Err(breach("vertex is not in a diamond unit"));
        };
        let z = match v {
            _ if v == e1 => e2,
            _ if v == e2 => e1,
            _ => return Err(breach("vertex is interior to its diamond")),
        };
        if !self.is_colored(v) {
            return Err(breach("vertex is uncolored"));
        }
        if self.is_colored(w) || self.is_colored(y) {
            return Err(breach("an interior vertex is already colored"));
        }
        let before = self.plays().len();

        self.color(w, true);
        if self.is_colored(z) {
            self.force(w, y)?;
        } else {
            self.force(v, y)?;
            self.force(w, z)?;
        }
        Ok(RuleOutcome {
            greedy: w,
            plays: self.plays()[before..].to_vec(),
        })
    }

    /// Lowest-id colored vertex whose two uncolored neighbors both lie in its
    /// own unit.
    fn halting_vertex(&self) -> Option<Vertex> {
        let g = self.forcing.graph();
        g.vertices().find(|&v| {
            self.is_colored(v)
                && self.forcing.uncolored_degree(v) == 2
                && self
                    .forcing
                    .uncolored_neighbors(v)
                    .all(|u| self.partition.unit_of[u] == self.partition.unit_of[v])
        })
    }

    /// Alternates forcing and rule applications until every vertex is colored.
    pub fn run_to_completion(&mut self) -> Result<(), CertifyError> {
        loop {
            self.propagate();
            if self.all_colored() {
                return Ok(());
            }
            let Some(v) = self.halting_vertex() else {
                let uncolored = self.forcing.graph().n() - self.forcing.colored_set().len();
                return Err(CertifyError::StuckNoEligibleVertex { uncolored });
            };
            match self.partition.unit(v).kind {
                UnitKind::Triangle => self.triangle_rule(v)?,
                UnitKind::Diamond => self.diamond_rule(v)?,
            };
        }
    }

    fn finish(self, initial_unit: usize, mode: CertificateMode) -> Certificate {
        let chronicle = Chronicle {
            initial: self.s.clone(),
            plays: self.forcing.into_plays(),
        };
        let mut m: Vec<(Vertex, Vertex)> = chronicle
            .first_plays()
            .into_iter()
            .filter(|p| self.s.contains(p.forcer))
            .map(|p| (p.forcer, p.forced))
            .collect();
        m.sort_unstable();
        Certificate {
            s: self.s,
            i: self.i,
            m,
            chronicle,
            initial_unit,
            mode,
        }
    }
}

/// The unique neighbor of `v` outside `unit` (triangle vertices and diamond
/// ends have exactly one).
fn outside_neighbor(g: &Graph, unit: &Unit, v: Vertex) -> Vertex {
    g.neighbors(v)
        .iter()
        .copied()
        .find(|&u| !unit.contains(u))
        .expect("unit vertex has an outside neighbor")
}

/// Builds a certificate for a connected claw-free cubic graph other than K4.
pub fn build_certificate(g: &Graph) -> Result<Certificate, CertifyError> {
    if g.is_k4() {
        return Err(CertifyError::IsK4);
    }
    if !g.is_cubic() || !g.is_claw_free() {
        return Err(CertifyError::NotClawFreeCubic);
    }
    if !g.is_connected() {
        return Err(CertifyError::Disconnected);
    }
    let partition = triangle_diamond_partition(g)?;
    let (n3, n4) = (partition.triangle_count(), partition.diamond_count());

    match (g.n(), n3, n4) {
        (6, 2, 0) => return Ok(prism_certificate(g, &partition)),
        (8, 0, 2) => return Ok(necklace_pair_certificate(g, &partition)),
        _ => {}
    }
    if let Some(d) = partition
        .units
        .iter()
        .position(|u| u.kind == UnitKind::Diamond)
    {
        return diamond_start(g, &partition, d);
    }
    let multigraph = contraction_multigraph(&partition, g);
    let doubled = (0..multigraph.k()).find_map(|a| {
        (0..multigraph.k())
            .find(|&b| multigraph.multiplicity[a][b] == 2)
            .map(|b| (a, b))
    });
    if let Some((a, b)) = doubled {
        return double_edge_start(g, &partition, a, b);
    }
    let cycle = shortest_cycle(&multigraph)?;
    cycle_chain(g, &partition, &cycle)
}

fn prism_certificate(g: &Graph, partition: &UnitPartition) -> Certificate {
    let unit = &partition.units[0];
    let (x1, x2) = (unit.members[0], unit.members[1]);
    let mut state = GreedyState::new(g, partition);
    for &x in &unit.members {
        state.color(x, false);
    }
    state.mark_independent(x1);
    state.mark_independent(outside_neighbor(g, unit, x2));
    for &x in &unit.members {
        let target = outside_neighbor(g, unit, x);
        state
            .force(x, target)
            .expect("rung is the only uncolored neighbor");
    }
    state.finish(0, CertificateMode::SmallCase)
}

/// Two diamonds joined end to end: an end `a` and interior vertex `c` of the
/// first, the end `l` next to `a` and an interior vertex `p` of the second.
fn necklace_pair_certificate(g: &Graph, partition: &UnitPartition) -> Certificate {
    let first = &partition.units[0];
    let (a, b) = first.ends.expect("diamond");
    let (c, d) = first.interior().expect("diamond");
    let l = outside_neighbor(g, first, a);
    let second = partition.unit(l);
    let (p, q) = second.interior().expect("diamond");
    let (e1, e2) = second.ends.expect("diamond");
    let far_end = if e1 == l { e2 } else { e1 };

    let mut state = GreedyState::new(g, partition);
    for x in [c, a, l, p] {
        state.color(x, false);
    }
    for x in [a, b, p] {
        state.mark_independent(x);
    }
    for (forcer, forced) in [(a, d), (c, b), (l, q), (p, far_end)] {
        state
            .force(forcer, forced)
            .expect("fixed two-diamond witness");
    }
    state.finish(0, CertificateMode::SmallCase)
}

fn diamond_start(
    g: &Graph,
    partition: &UnitPartition,
    index: usize,
) -> Result<Certificate, CertifyError> {
    let unit = &partition.units[index];
    let (x1, x4) = unit.ends.expect("diamond");
    let (x2, x3) = unit.interior().expect("diamond");
    let w1 = outside_neighbor(g, unit, x1);
    let y1 = outside_neighbor(g, unit, x4);

    let mut state = GreedyState::new(g, partition);
    state.color(x1, true);
    state.color(x2, false);
    state.color(x4, true);
    state.force(x2, x3)?;
    state.force(x1, w1)?;
    state.force(x4, y1)?;
    state.run_to_completion()?;
    Ok(state.finish(index, CertificateMode::DiamondStart))
}

/// Starts from triangle unit `a`, which shares two edges with unit `b`.
fn double_edge_start(
    g: &Graph,
    partition: &UnitPartition,
    a: usize,
    b: usize,
) -> Result<Certificate, CertifyError> {
    let unit = &partition.units[a];
    let into_b = |x: &Vertex| partition.unit_of[outside_neighbor(g, unit, *x)] == b;
    let x1 = *unit
        .members
        .iter()
        .find(|x| !into_b(x))
        .expect("one edge leaves elsewhere");
    let mut pair = unit.members.iter().copied().filter(|x| into_b(x));
    let (x2, x3) = (
        pair.next().expect("double edge"),
        pair.next().expect("double edge"),
    );
    let (w1, y1, z1) = (
        outside_neighbor(g, unit, x1),
        outside_neighbor(g, unit, x2),
        outside_neighbor(g, unit, x3),
    );
    let r = *partition.units[b]
        .members
        .iter()
        .find(|&&v| v != y1 && v != z1)
        .expect("triangle has a third vertex");

    let mut state = GreedyState::new(g, partition);
    state.color(x1, true);
    state.color(x2, false);
    state.color(x3, false);
    state.force(x1, w1)?;
    state.force(x2, y1)?;
    state.force(x3, z1)?;
    state.mark_independent(y1);
    // y1 plays before the rule on w1's unit so that r is never claimed by the
    // greedy vertex of that unit first
    state.force(y1, r)?;
    state.triangle_rule(w1)?;
    state.run_to_completion()?;
    Ok(state.finish(a, CertificateMode::DoubleEdgeStart))
}

/// Starts from `T0 = cycle[0]` and walks the triangle chain `T1 .. Tk` of a
/// shortest cycle of the unit multigraph.
fn cycle_chain(
    g: &Graph,
    partition: &UnitPartition,
    cycle: &[usize],
) -> Result<Certificate, CertifyError> {
    let unit_of = |v: Vertex| partition.unit_of[v];
    let k = cycle.len() - 1;
    let start = &partition.units[cycle[0]];
    // the member of `unit` whose outside neighbor lies in unit `target`
    let exit_to = |unit: &Unit, target: usize| -> Vertex {
        *unit
            .members
            .iter()
            .find(|&&x| unit_of(outside_neighbor(g, unit, x)) == target)
            .expect("consecutive cycle units are adjacent")
    };
    let x1 = exit_to(start, cycle[1]);
    let x2 = exit_to(start, cycle[k]);
    let x3 = *start
        .members
        .iter()
        .find(|&&x| x != x1 && x != x2)
        .expect("triangle");
    let (w1, y1, z1) = (
        outside_neighbor(g, start, x1),
        outside_neighbor(g, start, x2),
        outside_neighbor(g, start, x3),
    );

    let mut state = GreedyState::new(g, partition);
    state.color(x1, true);
    state.color(x2, false);
    state.color(x3, false);
    state.force(x1, w1)?;
    state.force(x2, y1)?;
    state.force(x3, z1)?;
    state.mark_independent(y1);

    // entry w_i, exit v_i and third vertex u_i of each chain unit T_1 .. T_{k-1}
    let mut links = Vec::with_capacity(k);
    let mut entry = w1;
    for step in 1..k {
        let unit = &partition.units[cycle[step]];
        let exit = exit_to(unit, cycle[step + 1]);
        let third = *unit
            .members
            .iter()
            .find(|&&x| x != entry && x != exit)
            .expect("triangle");
        links.push((entry, exit, third));
        entry = outside_neighbor(g, unit, exit);
    }
    let last = &partition.units[cycle[k]];
    let last_third = *last
        .members
        .iter()
        .find(|&&x| x != entry && x != y1)
        .expect("triangle");

    for &(_, exit, _) in &links {
        state.color(exit, true);
    }
    for &(entry, exit, third) in &links {
        state.force(entry, third)?;
        let next = outside_neighbor(g, partition.unit(exit), exit);
        state.force(exit, next)?;
    }
    state.force(y1, last_third)?;
    state.run_to_completion()?;
    Ok(state.finish(cycle[0], CertificateMode::CycleChain))
}

/// One checked property of a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// The chronicle starts from `S` and every play obeys the color-change rule.
    LegalReplay,
    /// The replay colors every vertex.
    ColorsAll,
    /// `I` is independent.
    Independence,
    /// `|S| = |I| + 1`.
    SizeRelation,
    /// Every vertex of `S` forces at least once.
    EveryForcerPlays,
    /// `M` is exactly the first forcing edge of each vertex of `S`, `|M| = |S|`.
    MatchingMatchesPlays,
    /// The edges of `M` are graph edges and pairwise vertex-disjoint.
    MatchingDisjoint,
}

impl Clause {
    pub const ALL: [Clause; 7] = [
        Clause::LegalReplay,
        Clause::ColorsAll,
        Clause::Independence,
        Clause::SizeRelation,
        Clause::EveryForcerPlays,
        Clause::MatchingMatchesPlays,
        Clause::MatchingDisjoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Clause::LegalReplay => "legal replay",
            Clause::ColorsAll => "colors all",
            Clause::Independence => "independence",
            Clause::SizeRelation => "size relation",
            Clause::EveryForcerPlays => "every forcer plays",
            Clause::MatchingMatchesPlays => "matching matches plays",
            Clause::MatchingDisjoint => "matching disjoint",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub clauses: Vec<(Clause, bool)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|&(_, ok)| ok)
    }

    pub fn clause(&self, c: Clause) -> bool {
        self.clauses.iter().any(|&(x, ok)| x == c && ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = Clause> + '_ {
        self.clauses.iter().filter(|(_, ok)| !ok).map(|&(c, _)| c)
    }
}

/// Re-checks every certificate property from scratch.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> VerificationReport {
    let n = g.n();
    let in_range = |set: &VertexSet| set.iter().all(|v| v < n);

    // replay with plain per-play neighbor scans
    let mut colored = alloc::vec![false; n];
    let mut legal = c.chronicle.initial == c.s && in_range(&c.s);
    if legal {
        for v in c.s.iter() {
            colored[v] = true;
        }
        for p in &c.chronicle.plays {
            let ok = p.forcer < n
                && p.forced < n
                && colored[p.forcer]
                && !colored[p.forced]
                && g.neighbors(p.forcer).contains(&p.forced)
                && g.neighbors(p.forcer)
                    .iter()
                    .filter(|&&u| !colored[u])
                    .count()
                    == 1;
            if !ok {
                legal = false;
                break;
            }
            colored[p.forced] = true;
        }
    }
    let colors_all = legal && colored.iter().all(|&x| x);

    let independent = in_range(&c.i)
        && c.i
            .iter()
            .all(|v| g.neighbors(v).iter().all(|&u| !c.i.contains(u)));
    let sizes = c.s.len() == c.i.len() + 1;

    let mut first: Vec<(Vertex, Vertex)> = Vec::new();
    for p in &c.chronicle.plays {
        if c.s.contains(p.forcer) && !first.iter().any(|&(f, _)| f == p.forcer) {
            first.push((p.forcer, p.forced));
        }
    }
    let every_forcer = c.s.iter().all(|v| first.iter().any(|&(f, _)| f == v));
    first.sort_unstable();
    let mut m = c.m.clone();
    m.sort_unstable();
    let matching_plays = m == first && m.len() == c.s.len();

    let mut touched = VertexSet::new();
    let disjoint = c.m.iter().all(|&(u, v)| {
        u < n && v < n && g.has_edge(u, v) && touched.insert(u) && touched.insert(v)
    });

    VerificationReport {
        clauses: alloc::vec![
            (Clause::LegalReplay, legal),
            (Clause::ColorsAll, colors_all),
            (Clause::Independence, independent),
            (Clause::SizeRelation, sizes),
            (Clause::EveryForcerPlays, every_forcer),
            (Clause::MatchingMatchesPlays, matching_plays),
            (Clause::MatchingDisjoint, disjoint),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{inflate, necklace, prism, UnitSpec};
    use alloc::vec;

    fn certified(g: &Graph) -> Certificate {
        let c = build_certificate(g).unwrap();
        let report = verify_certificate(g, &c);
        assert!(
            report.passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
        c
    }

    #[test]
    fn prism_small_case() {
        let c = certified(&prism());
        assert_eq!(c.mode, CertificateMode::SmallCase);
        assert_eq!((c.s.len(), c.i.len(), c.m.len()), (3, 2, 3));
    }

    #[test]
    fn n2_small_case() {
        let c = certified(&necklace(2).unwrap());
        assert_eq!(c.mode, CertificateMode::SmallCase);
        assert_eq!((c.s.len(), c.i.len(), c.m.len()), (4, 3, 4));
    }

    #[test]
    fn n3_diamond_start() {
        let c = certified(&necklace(3).unwrap());
        assert_eq!(c.mode, CertificateMode::DiamondStart);
        assert_eq!(c.s.len(), 5);
    }

    #[test]
    fn k4_shaped_spec_uses_cycle_chain() {
        let spec = UnitSpec::from_edges(
            vec![UnitKind::Triangle; 4],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let c = certified(&inflate(&spec).unwrap());
        assert_eq!(c.mode, CertificateMode::CycleChain);
    }

    #[test]
    fn double_edge_spec_uses_double_edge_start() {
        // 4 triangle units: 0=1 double, 2=3 double, 0-2 and 1-3 single
        let spec = UnitSpec::from_edges(
            vec![UnitKind::Triangle; 4],
            &[(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)],
        )
        .unwrap();
        let c = certified(&inflate(&spec).unwrap());
        assert_eq!(c.mode, CertificateMode::DoubleEdgeStart);
    }

    #[test]
    fn rejects_invalid_graphs() {
        assert_eq!(
            build_certificate(&crate::generators::k4()),
            Err(CertifyError::IsK4)
        );
        let p = prism();
        assert_eq!(
            build_certificate(&p.disjoint_union(&p)),
            Err(CertifyError::Disconnected)
        );
        let c6 = Graph::from_edge_list(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(build_certificate(&c6), Err(CertifyError::NotClawFreeCubic));
    }

    #[test]
    fn verifier_catches_dependent_i() {
        let g = prism();
        let mut c = build_certificate(&g).unwrap();
        c.i = c.s.clone();
        let report = verify_certificate(&g, &c);
        assert!(!report.clause(Clause::Independence));
        assert!(!report.passed());
    }

    #[test]
    fn verifier_catches_illegal_play() {
        let g = prism();
        let mut c = build_certificate(&g).unwrap();
        // vertex 0 alone: three uncolored neighbors at play time
        c.s = [0usize].iter().collect();
        c.chronicle = Chronicle {
            initial: c.s.clone(),
            plays: vec![Play {
                forcer: 0,
                forced: 1,
            }],
        };
        assert!(!verify_certificate(&g, &c).clause(Clause::LegalReplay));
    }

    #[test]
    fn triangle_rule_cases() {
        // prism: color 0 and its rung partner 3; rule at 0 colors 1 whose
        // outside neighbor 4 is uncolored, so 0 forces 2 then 1 forces 4
        let g = prism();
        let p = triangle_diamond_partition(&g).unwrap();
        let mut st = GreedyState::new(&g, &p);
        st.color(0, false);
        st.color(3, false);
        let out = st.triangle_rule(0).unwrap();
        assert_eq!(out.greedy, 1);
        assert_eq!(
            out.plays,
            vec![
                Play {
                    forcer: 0,
                    forced: 2
                },
                Play {
                    forcer: 1,
                    forced: 4
                }
            ]
        );

        // with 4 already colored, 1 forces 2 directly
        let mut st = GreedyState::new(&g, &p);
        for v in [0, 3, 4] {
            st.color(v, false);
        }
        let out = st.triangle_rule(0).unwrap();
        assert_eq!(
            out.plays,
            vec![Play {
                forcer: 1,
                forced: 2
            }]
        );

        // a colored unit-mate breaks the precondition
        let mut st = GreedyState::new(&g, &p);
        st.color(0, false);
        st.color(1, false);
        assert!(matches!(
            st.triangle_rule(0),
            Err(CertifyError::PreconditionBreach { vertex: 0, .. })
        ));
    }

    #[test]
    fn diamond_rule_cases() {
        // necklace(2): diamond {0,1,2,3} with ends 0,3; 0-7 and 3-4 leave it
        let g = necklace(2).unwrap();
        let p = triangle_diamond_partition(&g).unwrap();
        assert_eq!(p.units[0].ends, Some((0, 3)));

        let mut st = GreedyState::new(&g, &p);
        st.color(0, false);
        st.color(7, false);
        let out = st.diamond_rule(0).unwrap();
        assert_eq!(out.greedy, 1);
        assert_eq!(
            out.plays,
            vec![
                Play {
                    forcer: 0,
                    forced: 2
                },
                Play {
                    forcer: 1,
                    forced: 3
                }
            ]
        );

        let mut st = GreedyState::new(&g, &p);
        for v in [0, 7, 3] {
            st.color(v, false);
        }
        let out = st.diamond_rule(0).unwrap();
        assert_eq!(
            out.plays,
            vec![Play {
                forcer: 1,
                forced: 2
            }]
        );

        let mut st = GreedyState::new(&g, &p);
        st.color(1, false);
        assert!(matches!(
            st.diamond_rule(1),
            Err(CertifyError::PreconditionBreach { vertex: 1, .. })
        ));
    }

    #[test]
    fn deterministic() {
        let g = necklace(4).unwrap();
        assert_eq!(
            build_certificate(&g).unwrap(),
            build_certificate(&g).unwrap()
        );
    }
}
