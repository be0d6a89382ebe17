use crate::error::{input, Result};
use crate::hypergraph::{Edge, MultiHypergraph};

/// Subsets of `{1, ..., d}` with at least `d/2` elements, by size then
/// lexicographically; the position in this list is the vertex number.
pub fn cube_vertices(d: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u64..1 << d)
        .map(|mask| {
            (1..=d)
                .filter(|i| mask >> (i - 1) & 1 == 1)
                .collect::<Vec<_>>()
        })
        .filter(|a| 2 * a.len() >= d)
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Large subsets of `[d]` against the `d` edges `F_i = {A : i ∈ A}`.
///
/// Minimum degree is `⌈d/2⌉`, but any `⌊d/2⌋` edges `F_i, i ∈ B` miss the
/// vertex `[d] \ B`, so no two disjoint edge sets both cover.
pub fn gen_cube(d: usize) -> Result<MultiHypergraph> {
    if d == 0 {
        return input("cube dimension must be at least 1");
    }
    if d > 20 {
        return input("cube dimension above 20 is out of range");
    }
    let vertices = cube_vertices(d);
    let edges: Vec<Vec<usize>> = (1..=d)
        .map(|i| {
            vertices
                .iter()
                .enumerate()
                .filter(|(_, a)| a.contains(&i))
                .map(|(v, _)| v)
                .collect()
        })
        .collect();
    Ok(MultiHypergraph::from_sets(vertices.len(), edges)?
        .canonicalized()
        .0)
}

/// Edge multiplicities of the triangle for `k = 3t + i`: `(2t, 2t, 2t - 1)`,
/// `(2t, 2t, 2t)` or `(2t + 1, 2t + 1, 2t + 1)` on edges `01, 02, 12`.
pub fn triangle_multiplicities(k: usize) -> Result<[usize; 3]> {
    if k < 2 {
        return input("triangle construction needs k ≥ 2");
    }
    let (t, i) = (k / 3, k % 3);
    Ok(match i {
        0 => [2 * t, 2 * t, 2 * t - 1],
        1 => [2 * t, 2 * t, 2 * t],
        _ => [2 * t + 1, 2 * t + 1, 2 * t + 1],
    })
}

/// A triangle whose total weight is below `2k`; every covering class needs two
/// of its edges, so its covering number is below `k`.
pub fn gen_triangle_multi(k: usize) -> Result<MultiHypergraph> {
    let m = triangle_multiplicities(k)?;
    MultiHypergraph::new(
        3,
        vec![
            Edge::new(vec![0, 1], m[0])?,
            Edge::new(vec![0, 2], m[1])?,
            Edge::new(vec![1, 2], m[2])?,
        ],
    )
}

pub fn gen_complete(n: usize) -> Result<MultiHypergraph> {
    if n < 2 {
        return input("complete graph needs at least 2 vertices");
    }
    MultiHypergraph::from_sets(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| [u, v])))
}

/// A graph on `k + 2` vertices with vertex 0 of degree `k + 1` and all others
/// of degree `k`, for odd `k ≥ 3`.
///
/// It is `K_{k+2}` minus the matching `{j, j + (k+1)/2}`, `j = 1..=(k+1)/2`;
/// for `k = 3` this is the 5-cycle `0-1-2-3-4` plus chords `02, 03, 14`.
pub fn gen_odd_near_regular(k: usize) -> Result<MultiHypergraph> {
    if k < 3 || k.is_multiple_of(2) {
        return input(format!("odd near-regular graph needs odd k ≥ 3, got {k}"));
    }
    let n = k + 2;
    let half = k.div_ceil(2);
    let removed = |u: usize, v: usize| u >= 1 && v == u + half && u <= half;
    MultiHypergraph::from_sets(
        n,
        (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| !removed(u, v))
                .map(move |v| [u, v])
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_d2_by_hand() {
        assert_eq!(cube_vertices(2), vec![vec![1], vec![2], vec![1, 2]]);
        let h = gen_cube(2).unwrap();
        let sets: Vec<&[usize]> = h.edges().iter().map(|e| e.vertices()).collect();
        // F_1 = {{1},{1,2}} = {0, 2}; F_2 = {{2},{1,2}} = {1, 2}
        assert_eq!(sets, vec![&[0, 2][..], &[1, 2][..]]);
    }

    #[test]
    fn cube_d4_counts() {
        let h = gen_cube(4).unwrap();
        assert_eq!(h.n_vertices(), 11);
        assert_eq!(h.edge_count(), 4);
        assert!(h.is_uniform(7));
        assert_eq!(h.min_degree(), Some(2));
    }

    #[test]
    fn cube_min_degree_is_half() {
        for d in 1..=9 {
            assert_eq!(gen_cube(d).unwrap().min_degree(), Some(d.div_ceil(2)));
        }
    }

    #[test]
    fn triangle_weights() {
        assert_eq!(triangle_multiplicities(2).unwrap(), [1, 1, 1]);
        assert_eq!(triangle_multiplicities(3).unwrap(), [2, 2, 1]);
        assert_eq!(triangle_multiplicities(4).unwrap(), [2, 2, 2]);
        assert_eq!(triangle_multiplicities(5).unwrap(), [3, 3, 3]);
        assert_eq!(triangle_multiplicities(6).unwrap(), [4, 4, 3]);
        for k in 2..60 {
            let w: usize = triangle_multiplicities(k).unwrap().iter().sum();
            let t = k / 3;
            let expected = match k % 3 {
                0 => 6 * t - 1,
                1 => 6 * t,
                _ => 6 * t + 3,
            };
            assert_eq!(w, expected);
            assert!(w < 2 * k);
        }
        assert!(gen_triangle_multi(1).is_err());
        assert_eq!(gen_triangle_multi(3).unwrap().min_degree(), Some(3));
        assert_eq!(gen_triangle_multi(4).unwrap().min_degree(), Some(4));
    }

    #[test]
    fn odd_near_regular_degrees() {
        let h = gen_odd_near_regular(3).unwrap();
        assert_eq!(h.n_vertices(), 5);
        assert_eq!(h.instance_count(), 8);
        assert_eq!(h.degrees(), vec![4, 3, 3, 3, 3]);
        let expected = MultiHypergraph::from_sets(
            5,
            [
                [0, 1],
                [0, 2],
                [0, 3],
                [0, 4],
                [1, 2],
                [1, 4],
                [2, 3],
                [3, 4],
            ],
        )
        .unwrap();
        assert_eq!(h, expected);
        for k in (3..20).step_by(2) {
            let h = gen_odd_near_regular(k).unwrap();
            let mut deg = h.degrees();
            assert_eq!(deg.remove(0), k + 1);
            assert!(deg.iter().all(|&d| d == k));
        }
        assert!(gen_odd_near_regular(4).is_err());
        assert!(gen_odd_near_regular(1).is_err());
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(gen_complete(3).unwrap().instance_count(), 3);
        assert!(gen_complete(5).unwrap().is_regular(4));
        assert!(gen_complete(1).is_err());
    }
}
