use super::{endpoints, vizing_edge_colour};
use crate::error::{infeasible, input, Error, Result};
use crate::hypergraph::{EdgeInstance, MultiHypergraph};
use crate::levelling::{level, pull_back};
use crate::partition::CoverPartition;

/// Splits a simple graph of minimum degree at least `k + 1` into `k` covering classes.
///
/// The graph is levelled to a `(k+1)`-regular graph `H`, which is properly
/// coloured with `k + 2` colours. Every vertex of `H` then misses exactly one
/// colour. The edges of the two extra colours form paths and cycles; these are
/// oriented consistently, and each vertex missing a colour below `k` recolours
/// its unique in-edge with that colour. The result is pulled back to `g`.
pub fn cover_graph_k(g: &MultiHypergraph, k: usize) -> Result<CoverPartition> {
    if k < 2 {
        return input("cover_graph_k needs k ≥ 2");
    }
    endpoints(g)?;
    if !g.is_simple() {
        return input("cover_graph_k needs a simple graph");
    }
    let delta = g.min_degree().unwrap_or(0);
    if delta < k + 1 {
        return infeasible(format!("minimum degree {delta} is below k + 1 = {}", k + 1));
    }
    let lev = level(g, 2, k + 1)?;
    let h = lev.target();
    let palette = k + 2;
    let mut colours = colour_levelled(h, palette)?;

    let n = h.n_vertices();
    let ends = endpoints(h)?;
    let mut missing = vec![None; n];
    {
        let mut seen = vec![vec![false; palette]; n];
        for (f, &(u, v)) in ends.iter().enumerate() {
            seen[u][colours[f]] = true;
            seen[v][colours[f]] = true;
        }
        for v in 0..n {
            let free: Vec<usize> = (0..palette).filter(|&c| !seen[v][c]).collect();
            if free.len() != 1 {
                return Err(Error::Internal(format!(
                    "vertex {v} misses {} colours in a proper colouring",
                    free.len()
                )));
            }
            missing[v] = Some(free[0]);
        }
    }

    // E' = the two extra colour classes; max degree 2, so paths and cycles
    let extra: Vec<usize> = (0..ends.len()).filter(|&f| colours[f] >= k).collect();
    let in_edge = orient_paths_and_cycles(n, &ends, &extra);
    let mut recoloured = vec![false; ends.len()];
    for v in 0..n {
        let c = missing[v].unwrap();
        if c >= k {
            continue;
        }
        let f = in_edge[v].ok_or_else(|| {
            Error::Internal(format!("vertex {v} misses colour {c} but has no in-edge"))
        })?;
        if recoloured[f] {
            return Err(Error::Internal(format!("edge {f} recoloured twice")));
        }
        recoloured[f] = true;
        colours[f] = c;
    }

    let classes: Vec<usize> = colours.iter().map(|&c| if c < k { c } else { 0 }).collect();
    let p = CoverPartition::from_flat(h, k, classes)?;
    pull_back(&lev, &p)
}

/// Proper `palette`-colouring of a levelled graph. Parallel classes in a
/// levelling of a simple graph only arise as isolated two-vertex components
/// (padding of edges trimmed to nothing); those are coloured directly and the
/// rest goes through the Vizing colouring.
fn colour_levelled(h: &MultiHypergraph, palette: usize) -> Result<Vec<usize>> {
    let degrees = h.degrees();
    let mut keep = Vec::new();
    let mut colours = vec![usize::MAX; h.instance_count()];
    for (i, e) in h.edges().iter().enumerate() {
        if e.multiplicity() == 1 {
            keep.push(EdgeInstance::new(i, 0));
            continue;
        }
        let isolated = e.vertices().iter().all(|&v| degrees[v] == e.multiplicity());
        if !isolated || e.multiplicity() > palette {
            return Err(Error::Internal(format!(
                "unexpected parallel edges {:?} in the levelled graph",
                e.vertices()
            )));
        }
        for c in 0..e.multiplicity() {
            colours[h.flat_index(EdgeInstance::new(i, c))] = c;
        }
    }
    let (simple, provenance) = h.restrict_to_instances(&keep);
    let vizing = vizing_edge_colour(&simple)?;
    if vizing.palette_size > palette {
        return Err(Error::Internal("Vizing palette exceeds Δ + 1".into()));
    }
    for (flat, src) in provenance.into_iter().enumerate() {
        colours[h.flat_index(src)] = vizing.colours[flat];
    }
    Ok(colours)
}

/// Orients a subgraph of maximum degree 2 so that every path and cycle is
/// directed; returns each vertex's in-edge, if any.
fn orient_paths_and_cycles(
    n: usize,
    ends: &[(usize, usize)],
    edges: &[usize],
) -> Vec<Option<usize>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &f in edges {
        adj[ends[f].0].push(f);
        adj[ends[f].1].push(f);
    }
    let mut used = vec![false; ends.len()];
    let mut in_edge = vec![None; n];
    let walk = |start: usize, used: &mut Vec<bool>, in_edge: &mut Vec<Option<usize>>| {
        let mut cur = start;
        while let Some(&f) = adj[cur].iter().find(|&&f| !used[f]) {
            used[f] = true;
            let (a, b) = ends[f];
            let next = if a == cur { b } else { a };
            in_edge[next] = Some(f);
            cur = next;
        }
    };
    // paths first, from an endpoint, then whatever is left is cycles
    for v in 0..n {
        if adj[v].len() == 1 && !used[adj[v][0]] {
            walk(v, &mut used, &mut in_edge);
        }
    }
    for v in 0..n {
        if adj[v].iter().any(|&f| !used[f]) {
            walk(v, &mut used, &mut in_edge);
        }
    }
    in_edge
}
