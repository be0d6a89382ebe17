use std::collections::VecDeque;

use super::{endpoints, EdgeColouring};
use crate::error::{input, Result};
use crate::hypergraph::MultiHypergraph;

/// Colours a bipartite multigraph with `k` colours so that every vertex sees
/// at least `min(k, degree)` distinct colours.
///
/// Each vertex is split into pieces of degree at most `k` (consecutive groups
/// of `k` incident instances), the resulting bipartite multigraph of maximum
/// degree `k` is properly `k`-edge-coloured by alternating-path recolouring,
/// and the pieces are merged back.
pub fn spread_colour_bipartite(b: &MultiHypergraph, k: usize) -> Result<EdgeColouring> {
    if k == 0 {
        return input("need at least one colour");
    }
    let ends = endpoints(b)?;
    let n = b.n_vertices();
    check_bipartite(n, &ends)?;

    // piece of each endpoint of each instance
    let mut piece_count = 0;
    let mut seen = vec![0usize; n];
    let mut first_piece = vec![usize::MAX; n];
    let mut piece_ends = Vec::with_capacity(ends.len());
    let mut piece_of = |v: usize, seen: &mut Vec<usize>| {
        if seen[v].is_multiple_of(k) {
            first_piece[v] = piece_count;
            piece_count += 1;
        }
        seen[v] += 1;
        first_piece[v]
    };
    for &(u, v) in &ends {
        let pu = piece_of(u, &mut seen);
        let pv = piece_of(v, &mut seen);
        piece_ends.push((pu, pv));
    }

    let mut at = vec![None; piece_count * k];
    let mut colour = vec![usize::MAX; ends.len()];
    for e in 0..piece_ends.len() {
        let (a, bb) = piece_ends[e];
        let alpha = (0..k)
            .find(|&c| at[a * k + c].is_none())
            .expect("piece degree ≤ k");
        let beta = (0..k)
            .find(|&c| at[bb * k + c].is_none())
            .expect("piece degree ≤ k");
        if at[bb * k + alpha].is_some() {
            // swap alpha/beta along the path from bb that starts with alpha;
            // bipartiteness keeps it away from a
            let mut path = Vec::new();
            let (mut cur, mut want) = (bb, alpha);
            while let Some(f) = at[cur * k + want] {
                path.push(f);
                let (x, y) = piece_ends[f];
                cur = if x == cur { y } else { x };
                want = if want == alpha { beta } else { alpha };
            }
            for &f in &path {
                let (x, y) = piece_ends[f];
                at[x * k + colour[f]] = None;
                at[y * k + colour[f]] = None;
            }
            for &f in &path {
                let (x, y) = piece_ends[f];
                colour[f] = if colour[f] == alpha { beta } else { alpha };
                at[x * k + colour[f]] = Some(f);
                at[y * k + colour[f]] = Some(f);
            }
        }
        colour[e] = alpha;
        at[a * k + alpha] = Some(e);
        at[bb * k + alpha] = Some(e);
    }
    Ok(EdgeColouring {
        palette_size: k,
        colours: colour,
    })
}

fn check_bipartite(n: usize, ends: &[(usize, usize)]) -> Result<()> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in ends {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for &w in &adj[v] {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => {
                        return input(format!("graph is not bipartite (edge {v}-{w})"))
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Edge;

    #[test]
    fn c4_with_two_colours() {
        let g = MultiHypergraph::from_sets(4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let c = spread_colour_bipartite(&g, 2).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.distinct_at(&g), vec![2; 4]);
    }

    #[test]
    fn star_with_two_colours() {
        let g = MultiHypergraph::from_sets(4, [[0, 1], [0, 2], [0, 3]]).unwrap();
        let c = spread_colour_bipartite(&g, 2).unwrap();
        assert_eq!(c.distinct_at(&g), vec![2, 1, 1, 1]);
    }

    #[test]
    fn k33_with_three_colours() {
        let sets: Vec<Vec<usize>> = (0..3)
            .flat_map(|a| (3..6).map(move |b| vec![a, b]))
            .collect();
        let g = MultiHypergraph::from_sets(6, sets).unwrap();
        let c = spread_colour_bipartite(&g, 3).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.distinct_at(&g), vec![3; 6]);
    }

    #[test]
    fn odd_cycle_is_rejected() {
        let g = MultiHypergraph::from_sets(3, [[0, 1], [1, 2], [0, 2]]).unwrap();
        assert!(spread_colour_bipartite(&g, 2).is_err());
    }

    #[test]
    fn random_bipartite_multigraphs_spread() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let (a, b) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let mut edges = Vec::new();
            for _ in 0..rng.gen_range(1..30) {
                let u = rng.gen_range(0..a);
                let v = a + rng.gen_range(0..b);
                edges.push(Edge::new(vec![u, v], rng.gen_range(1..4)).unwrap());
            }
            let g = MultiHypergraph::new(a + b, edges).unwrap();
            for k in 1..7 {
                let c = spread_colour_bipartite(&g, k).unwrap();
                assert!(c.is_spreading(&g, k));
            }
        }
    }
}
