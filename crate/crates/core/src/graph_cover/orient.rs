use super::{endpoints, Orientation};
use crate::error::Result;
use crate::hypergraph::MultiHypergraph;

/// Orientation in which every vertex has outdegree at least `⌊deg / 2⌋`.
///
/// Odd-degree vertices are paired in increasing index order by auxiliary
/// edges, making every degree even; each component is then traversed by
/// Hierholzer's walk, orienting edges in the direction they are walked, and
/// the auxiliary edges are dropped again.
pub fn orient_outdeg_half(g: &MultiHypergraph) -> Result<Orientation> {
    let mut ends = endpoints(g)?;
    let real = ends.len();
    let n = g.n_vertices();
    let odd: Vec<usize> = g
        .degrees()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d % 2 == 1)
        .map(|(v, _)| v)
        .collect();
    for pair in odd.chunks(2) {
        ends.push((pair[0], pair[1]));
    }

    let mut adj = vec![Vec::new(); n];
    for (e, &(u, v)) in ends.iter().enumerate() {
        adj[u].push(e);
        adj[v].push(e);
    }
    let mut used = vec![false; ends.len()];
    let mut next = vec![0usize; n];
    let mut directions = vec![(0, 0); ends.len()];
    for start in 0..n {
        let mut stack = vec![start];
        while let Some(&v) = stack.last() {
            while next[v] < adj[v].len() && used[adj[v][next[v]]] {
                next[v] += 1;
            }
            if next[v] == adj[v].len() {
                stack.pop();
                continue;
            }
            let e = adj[v][next[v]];
            used[e] = true;
            let (a, b) = ends[e];
            let w = if a == v { b } else { a };
            directions[e] = (v, w);
            stack.push(w);
        }
    }
    directions.truncate(real);
    Ok(Orientation { directions })
}
