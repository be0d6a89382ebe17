//! Constructive splitters for graphs and multigraphs, the Hall-matching
//! splitter for hypergraphs of large minimum degree, and the repeated-edge
//! reduction for two classes.

mod bipartite;
mod hall;
mod maxcut;
mod multigraph;
mod orient;
mod simple;
mod split2;
mod vizing;

pub use bipartite::spread_colour_bipartite;
pub use hall::hall_cover;
pub use maxcut::max_cut_local;
pub use multigraph::{cover_multigraph_k, multigraph_threshold};
pub use orient::orient_outdeg_half;
pub use simple::cover_graph_k;
pub use split2::{split2_multi, Split2Outcome};
pub use vizing::vizing_edge_colour;

use crate::error::{input, Result};
use crate::hypergraph::MultiHypergraph;

/// Colour of every edge instance, in the host's flat instance order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    pub palette_size: usize,
    pub colours: Vec<usize>,
}

impl EdgeColouring {
    /// No two instances sharing a vertex have the same colour.
    pub fn is_proper(&self, g: &MultiHypergraph) -> bool {
        let mut seen = vec![Vec::<usize>::new(); g.n_vertices()];
        for (flat, inst) in g.instances().into_iter().enumerate() {
            let c = self.colours[flat];
            for &v in g.instance_vertices(inst) {
                if seen[v].contains(&c) {
                    return false;
                }
                seen[v].push(c);
            }
        }
        self.colours.iter().all(|&c| c < self.palette_size)
    }

    /// Number of distinct colours at each vertex.
    pub fn distinct_at(&self, g: &MultiHypergraph) -> Vec<usize> {
        let mut seen = vec![Vec::<usize>::new(); g.n_vertices()];
        for (flat, inst) in g.instances().into_iter().enumerate() {
            let c = self.colours[flat];
            for &v in g.instance_vertices(inst) {
                if !seen[v].contains(&c) {
                    seen[v].push(c);
                }
            }
        }
        seen.into_iter().map(|s| s.len()).collect()
    }

    /// Every vertex sees at least `min(k, degree)` colours.
    pub fn is_spreading(&self, g: &MultiHypergraph, k: usize) -> bool {
        let deg = g.degrees();
        self.distinct_at(g)
            .into_iter()
            .zip(deg)
            .all(|(seen, d)| seen >= k.min(d))
    }
}

/// Direction `(tail, head)` of every edge instance, in flat order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub directions: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn out_degrees(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &(t, _) in &self.directions {
            out[t] += 1;
        }
        out
    }

    /// Each direction joins the two endpoints of its instance.
    pub fn is_consistent(&self, g: &MultiHypergraph) -> bool {
        self.directions.len() == g.instance_count()
            && g.instances()
                .into_iter()
                .zip(&self.directions)
                .all(|(inst, &(t, h))| {
                    let vs = g.instance_vertices(inst);
                    t != h && vs.len() == 2 && vs.contains(&t) && vs.contains(&h)
                })
    }
}

/// Lower bound `⌊(3δ + 1) / 4⌋` on the covering number of any multigraph
/// with minimum degree `δ ≥ 1`.
pub fn multigraph_cover_lower_bound(min_degree: usize) -> usize {
    (3 * min_degree + 1) / 4
}

/// Endpoint pairs of a 2-uniform hypergraph, in flat instance order.
pub(crate) fn endpoints(g: &MultiHypergraph) -> Result<Vec<(usize, usize)>> {
    if let Some(e) = g.edges().iter().find(|e| e.len() != 2) {
        return input(format!(
            "expected a graph, found an edge with {} vertices",
            e.len()
        ));
    }
    Ok(g.instances()
        .into_iter()
        .map(|i| {
            let vs = g.instance_vertices(i);
            (vs[0], vs[1])
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_bound_values() {
        assert_eq!(multigraph_cover_lower_bound(1), 1);
        assert_eq!(multigraph_cover_lower_bound(4), 3);
        assert_eq!(multigraph_cover_lower_bound(13), 10);
        // inverse of the threshold formula
        assert_eq!((4 * 10 + 1) / 3, 13);
        for k in 1..40 {
            let d = (4 * k + 1) / 3;
            assert!(multigraph_cover_lower_bound(d) >= k);
            assert!(multigraph_cover_lower_bound(d - 1) < k || d == 1);
        }
    }
}
