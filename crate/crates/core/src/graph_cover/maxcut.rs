use super::endpoints;
use crate::error::Result;
use crate::hypergraph::MultiHypergraph;

/// Bipartition `(side[v] == false, side[v] == true)` in which every vertex has
/// at least half of its edges crossing.
///
/// Local search from all-on-one-side: the lowest-index vertex with fewer
/// crossing than non-crossing edges is flipped until none remains. Each flip
/// strictly increases the cut, so the search terminates.
pub fn max_cut_local(g: &MultiHypergraph) -> Result<Vec<bool>> {
    let ends = endpoints(g)?;
    let n = g.n_vertices();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &ends {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut side = vec![false; n];
    // cross[v] = number of incident edges leaving v's side
    let mut cross = vec![0usize; n];
    loop {
        let flip = (0..n).find(|&v| 2 * cross[v] < adj[v].len());
        let Some(v) = flip else { break };
        side[v] = !side[v];
        cross[v] = adj[v].len() - cross[v];
        for &w in &adj[v] {
            if side[w] != side[v] {
                cross[w] += 1;
            } else {
                cross[w] -= 1;
            }
        }
    }
    Ok(side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Edge;

    fn cross_counts(g: &MultiHypergraph, side: &[bool]) -> Vec<usize> {
        let mut c = vec![0; g.n_vertices()];
        for (u, v) in endpoints(g).unwrap() {
            if side[u] != side[v] {
                c[u] += 1;
                c[v] += 1;
            }
        }
        c
    }

    #[test]
    fn c4_splits_into_colour_classes() {
        let g = MultiHypergraph::from_sets(4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let side = max_cut_local(&g).unwrap();
        assert_eq!(cross_counts(&g, &side), vec![2; 4]);
    }

    #[test]
    fn triangle_cut() {
        let g = MultiHypergraph::from_sets(3, [[0, 1], [1, 2], [0, 2]]).unwrap();
        let side = max_cut_local(&g).unwrap();
        let mut c = cross_counts(&g, &side);
        c.sort();
        assert_eq!(c, vec![1, 1, 2]);
    }

    #[test]
    fn multigraph_corpus_meets_half_degree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(2..12);
            let mut edges = Vec::new();
            for _ in 0..rng.gen_range(1..30) {
                let u = rng.gen_range(0..n);
                let mut v = rng.gen_range(0..n);
                while v == u {
                    v = rng.gen_range(0..n);
                }
                edges.push(Edge::new(vec![u, v], rng.gen_range(1..4)).unwrap());
            }
            let g = MultiHypergraph::new(n, edges).unwrap();
            let side = max_cut_local(&g).unwrap();
            let deg = g.degrees();
            for (v, c) in cross_counts(&g, &side).into_iter().enumerate() {
                assert!(c >= deg[v].div_ceil(2));
            }
        }
    }
}
