use std::collections::HashSet;

use crate::error::{input, Result};
use crate::hypergraph::{Edge, MultiHypergraph};

/// Adds one new vertex (numbered `n`) to every edge.
///
/// An `r`-uniform input becomes `(r+1)`-uniform; the new vertex has degree
/// equal to the total edge weight and all old degrees are unchanged.
pub fn extend_by_vertex(h: &MultiHypergraph) -> Result<MultiHypergraph> {
    let apex = h.n_vertices();
    let edges = h
        .edges()
        .iter()
        .map(|e| {
            let mut vs = e.vertices().to_vec();
            vs.push(apex);
            Edge::new(vs, e.multiplicity())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiHypergraph::new(apex + 1, edges)?.canonicalized().0)
}

/// Scales every multiplicity by `s`.
pub fn multiply_edges(h: &MultiHypergraph, s: usize) -> Result<MultiHypergraph> {
    if s == 0 {
        return input("multiplication factor must be at least 1");
    }
    let edges = h
        .edges()
        .iter()
        .map(|e| Edge::new(e.vertices().to_vec(), e.multiplicity() * s))
        .collect::<Result<Vec<_>>>()?;
    MultiHypergraph::new(h.n_vertices(), edges)
}

/// Result of [`expand`].
#[derive(Debug, Clone)]
pub struct Expansion {
    pub hypergraph: MultiHypergraph,
    /// The old vertices of copy 0.
    pub embedded: Vec<usize>,
    pub copies: usize,
}

/// Number of cyclic steps needed so that every new vertex reaches degree `s·d`.
fn steps(r: usize, s: usize, d: usize) -> usize {
    (s * d).saturating_sub(1).div_ceil(r + 1)
}

/// Builds the `(s, d)`-expansion of an `r`-uniform hypergraph with minimum degree at least `d`.
///
/// Every edge instance `e` is replaced by `s` edges `e ∪ {x}`, each with its own
/// new vertex `x`. Of the resulting hypergraph `copies` disjoint copies are
/// taken; copy `c` uses vertices `c·(n + N) ..`, old vertices first, where
/// `N = s·|E|`. New vertex `j` of every copy then joins the cyclic windows
/// `{(c + m·g) mod copies : m = 0..=r}` of slot `j` for `g = 1..=G`, with `G`
/// the smallest step count giving every new vertex degree at least `s·d`.
///
/// `copies = None` picks the smallest count for which these windows are
/// pairwise distinct sets of distinct vertices; an explicit smaller count is an
/// input error.
pub fn expand(h: &MultiHypergraph, s: usize, d: usize, copies: Option<usize>) -> Result<Expansion> {
    if s == 0 || d == 0 {
        return input("expansion needs s ≥ 1 and d ≥ 1");
    }
    let r = h.max_edge_size();
    if r == 0 || !h.is_uniform(r) {
        return input("expansion needs a uniform hypergraph with nonempty edges");
    }
    let delta = h.min_degree().unwrap_or(0);
    if delta < d {
        return input(format!("minimum degree {delta} is below d = {d}"));
    }
    let g = steps(r, s, d);
    let minimum = minimal_copies(r, g);
    let copies = match copies {
        None => minimum,
        Some(c) if c >= minimum => c,
        Some(c) => {
            return input(format!(
                "{c} copies are too few for the cyclic joining; at least {minimum} needed"
            ))
        }
    };

    let n = h.n_vertices();
    let new_per_copy = s * h.instance_count();
    let block = n + new_per_copy;
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for c in 0..copies {
        let base = c * block;
        let mut slot = 0;
        for inst in h.instances() {
            for _ in 0..s {
                let mut vs: Vec<usize> = h
                    .instance_vertices(inst)
                    .iter()
                    .map(|&v| base + v)
                    .collect();
                vs.push(base + n + slot);
                sets.push(vs);
                slot += 1;
            }
        }
    }
    for slot in 0..new_per_copy {
        for c in 0..copies {
            for step in 1..=g {
                sets.push(
                    (0..=r)
                        .map(|m| ((c + m * step) % copies) * block + n + slot)
                        .collect(),
                );
            }
        }
    }
    let hypergraph = MultiHypergraph::from_sets(copies * block, sets)?
        .canonicalized()
        .0;
    Ok(Expansion {
        hypergraph,
        embedded: (0..n).collect(),
        copies,
    })
}

/// Smallest cycle length for which the windows of all steps `1..=g` consist of
/// distinct positions and are pairwise distinct.
fn minimal_copies(r: usize, g: usize) -> usize {
    if g == 0 {
        return 1;
    }
    (r * g + 1..)
        .find(|&c| windows_distinct(r, g, c))
        .expect("large cycles always work")
}

fn windows_distinct(r: usize, g: usize, c: usize) -> bool {
    let mut seen = HashSet::new();
    for start in 0..c {
        for step in 1..=g {
            let mut w: Vec<usize> = (0..=r).map(|m| (start + m * step) % c).collect();
            w.sort_unstable();
            if w.windows(2).any(|p| p[0] == p[1]) || !seen.insert(w) {
                return false;
            }
        }
    }
    true
}
