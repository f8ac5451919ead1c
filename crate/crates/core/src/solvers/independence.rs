use super::SolverError;
use crate::{Graph, VertexSet};

pub const DEFAULT_INDEPENDENCE_CAP: usize = 40;

/// Maximum independent set by branch and bound on bitmasks.
///
/// Vertices with at most one remaining neighbor are taken greedily (always
/// safe). Otherwise the search branches on a remaining vertex of maximum
/// degree (lowest id on ties), first including then excluding it, and prunes
/// when the remaining vertex count cannot beat the incumbent.
pub fn independence_number(g: &Graph, cap: usize) -> Result<(usize, VertexSet), SolverError> {
    let n = g.n();
    let limit = cap.min(64);
    let Some(masks) = g.masks().filter(|_| n <= limit) else {
        return Err(SolverError::InstanceTooLarge { n, cap: limit });
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = Best { size: 0, set: 0 };
    branch(masks, all, 0, &mut best);
    Ok((best.size as usize, VertexSet::from_mask(best.set)))
}

struct Best {
    size: u32,
    set: u64,
}

fn branch(adj: &[u64], mut cand: u64, mut chosen: u64, best: &mut Best) {
    // greedy reductions: isolated and pendant vertices
    loop {
        let mut reduced = false;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & cand).count_ones() <= 1 {
                chosen |= 1 << v;
                cand &= !(adj[v] | (1 << v));
                rest &= cand;
                reduced = true;
            }
        }
        if !reduced {
            break;
        }
    }

    let size = chosen.count_ones();
    if cand == 0 {
        if size > best.size {
            best.size = size;
            best.set = chosen;
        }
        return;
    }
    if size + cand.count_ones() <= best.size {
        return;
    }

    let mut pivot = usize::MAX;
    let mut pivot_deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d > pivot_deg {
            pivot = v;
            pivot_deg = d;
        }
    }

    branch(
        adj,
        cand & !(adj[pivot] | (1 << pivot)),
        chosen | (1 << pivot),
        best,
    );
    branch(adj, cand & !(1 << pivot), chosen, best);
}
