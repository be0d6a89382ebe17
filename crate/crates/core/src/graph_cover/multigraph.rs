use super::{endpoints, max_cut_local, orient_outdeg_half, spread_colour_bipartite};
use crate::error::{infeasible, input, Error, Result};
use crate::hypergraph::{EdgeInstance, MultiHypergraph};
use crate::levelling::{level, pull_back};
use crate::partition::CoverPartition;

/// Smallest minimum degree that guarantees `k` covering classes in every
/// multigraph: `⌊(4k + 1) / 3⌋`.
pub fn multigraph_threshold(k: usize) -> usize {
    (4 * k + 1) / 3
}

/// Splits a multigraph of minimum degree at least `⌊(4k+1)/3⌋` into `k` covering classes.
///
/// Pipeline: level to `d`-regular with `d = ⌊(4k+1)/3⌋`; take a locally maximal
/// cut; colour the crossing edges with `k` colours so every vertex sees
/// `min(k, crossing degree)` of them; orient each side's induced edges with
/// outdegree at least half the side degree; each vertex still missing colours
/// gives them to its own out-edges. The partition is pulled back to `g`.
pub fn cover_multigraph_k(g: &MultiHypergraph, k: usize) -> Result<CoverPartition> {
    if k == 0 {
        return input("k must be positive");
    }
    endpoints(g)?;
    let d = multigraph_threshold(k);
    check_threshold_arithmetic(k, d)?;
    let delta = g.min_degree().unwrap_or(0);
    if delta < d {
        return infeasible(format!("minimum degree {delta} is below ⌊(4k+1)/3⌋ = {d}"));
    }

    let lev = level(g, 2, d)?;
    let h = lev.target();
    let n = h.n_vertices();
    let ends = endpoints(h)?;
    let instances = h.instances();
    let side = max_cut_local(h)?;

    let (cross, inside): (Vec<usize>, Vec<usize>) =
        (0..ends.len()).partition(|&f| side[ends[f].0] != side[ends[f].1]);

    let mut classes = vec![0usize; ends.len()];
    let mut seen = vec![vec![false; k]; n];

    let cross_insts: Vec<EdgeInstance> = cross.iter().map(|&f| instances[f]).collect();
    let (b, b_prov) = h.restrict_to_instances(&cross_insts);
    let spread = spread_colour_bipartite(&b, k)?;
    for (flat, src) in b_prov.into_iter().enumerate() {
        let f = h.flat_index(src);
        let c = spread.colours[flat];
        classes[f] = c;
        seen[ends[f].0][c] = true;
        seen[ends[f].1][c] = true;
    }

    let inside_insts: Vec<EdgeInstance> = inside.iter().map(|&f| instances[f]).collect();
    let (sides, s_prov) = h.restrict_to_instances(&inside_insts);
    let orientation = orient_outdeg_half(&sides)?;
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (flat, src) in s_prov.into_iter().enumerate() {
        out_edges[orientation.directions[flat].0].push(h.flat_index(src));
    }

    let mut cross_degree = vec![0usize; n];
    for &f in &cross {
        cross_degree[ends[f].0] += 1;
        cross_degree[ends[f].1] += 1;
    }
    for v in 0..n {
        let j = d - cross_degree[v];
        if j > d / 2 {
            return Err(Error::Internal(format!(
                "vertex {v} has {j} same-side edges out of {d}"
            )));
        }
        let missing: Vec<usize> = (0..k).filter(|&c| !seen[v][c]).collect();
        // d - j crossing edges give min(k, d - j) colours; out-degree ≥ ⌊j/2⌋
        if missing.len() > j / 2 || d - j.div_ceil(2) < k {
            return Err(Error::Internal(format!(
                "vertex {v}: {} missing colours, {j} same-side edges, d = {d}, k = {k}",
                missing.len()
            )));
        }
        if missing.len() > out_edges[v].len() {
            return Err(Error::Internal(format!(
                "vertex {v} has too few out-edges for its missing colours"
            )));
        }
        for (&c, &f) in missing.iter().zip(&out_edges[v]) {
            classes[f] = c;
        }
    }

    let p = CoverPartition::from_flat(h, k, classes)?;
    pull_back(&lev, &p)
}

/// `d` equals `4t`, `4t + 1` or `4t + 3` for `k = 3t`, `3t + 1`, `3t + 2`.
fn check_threshold_arithmetic(k: usize, d: usize) -> Result<()> {
    let (t, i) = (k / 3, k % 3);
    let expected = match i {
        0 => 4 * t,
        1 => 4 * t + 1,
        _ => 4 * t + 3,
    };
    if d != expected {
        return Err(Error::Internal(format!(
            "threshold {d} for k = {k} disagrees with the case split ({expected})"
        )));
    }
    Ok(())
}
