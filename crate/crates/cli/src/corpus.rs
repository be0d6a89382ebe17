//! Seeded instance corpora used by the tables and the test suites.
//!
//! Instance `i` of a corpus depends only on `(seed, corpus name, parameters, i)`.

use covering::generators::{
    gen_random_regular_uniform, gen_random_simple_regular_uniform, random_graph_min_degree,
    random_multigraph_min_degree, random_uniform_min_degree,
};
use covering::graph_cover::multigraph_threshold;
use covering::lll::threshold_case1;
use covering::rng::{derive_seed, stream, tag};
use covering::{Edge, MultiHypergraph, Result};
use rand::seq::SliceRandom;
use rand::Rng;

/// Multigraph on at most 10 vertices with minimum degree exactly `⌊(4k+1)/3⌋`.
pub fn fm2k_multigraph(seed: u64, k: usize, i: usize) -> Result<MultiHypergraph> {
    let path = [tag("fm2k"), k as u64, i as u64];
    let mut rng = stream(seed, &path);
    let d = multigraph_threshold(k);
    let mut n = rng.gen_range(3..=10);
    if n * d % 2 == 1 {
        n = if n == 10 { 9 } else { n + 1 };
    }
    let extra = rng.gen_range(0..=n);
    random_multigraph_min_degree(n, d, extra, derive_seed(seed, &path))
}

/// Simple graph on at most 20 vertices with minimum degree exactly `k + 1`.
pub fn k_plus_one_graph(seed: u64, k: usize, i: usize) -> Result<MultiHypergraph> {
    let path = [tag("k-plus-one"), k as u64, i as u64];
    let mut rng = stream(seed, &path);
    let d = k + 1;
    let mut n = rng.gen_range(d + 2..=20);
    if n * d % 2 == 1 {
        n = if n == 20 { 19 } else { n + 1 };
    }
    let extra = rng.gen_range(0..=2 * n);
    random_graph_min_degree(n, d, extra, derive_seed(seed, &path))
}

/// Simple 3-uniform hypergraph with minimum degree exactly 4 and at most 12 edges.
pub fn three_uniform_deg4(seed: u64, i: usize) -> Result<MultiHypergraph> {
    for attempt in 0u64.. {
        let path = [tag("three-uniform-deg4"), i as u64, attempt];
        let n = stream(seed, &path).gen_range(6..=8);
        let h = random_uniform_min_degree(n, 3, 4, derive_seed(seed, &path))?;
        if h.instance_count() <= 12 {
            return Ok(h);
        }
    }
    unreachable!()
}

/// Simple 4-regular 4-uniform hypergraph on 6 to 12 vertices.
pub fn four_regular_four_uniform(seed: u64, i: usize) -> Result<MultiHypergraph> {
    let path = [tag("four-regular"), i as u64];
    let n = stream(seed, &path).gen_range(6..=12);
    gen_random_simple_regular_uniform(n, 4, 4, derive_seed(seed, &path))
}

/// `d`-regular `r`-uniform hypergraph with `d ≥ max(threshold_case1(r, k), r k)`.
pub fn lll_instance(seed: u64, r: usize, k: usize, i: usize) -> Result<MultiHypergraph> {
    let path = [tag("lll"), r as u64, k as u64, i as u64];
    let mut rng = stream(seed, &path);
    let d = threshold_case1(r, k).max(r * k) + rng.gen_range(0..=2);
    let mut n = rng.gen_range(2 * r..=30);
    while !(n * d).is_multiple_of(r) {
        n += 1;
    }
    gen_random_regular_uniform(n, r, d, derive_seed(seed, &path))
}

/// 3-uniform multihypergraph with minimum degree at least 4: a simple base of
/// minimum degree 4 in which about a third of the edges get a second or third copy.
pub fn split2_instance(seed: u64, i: usize) -> Result<MultiHypergraph> {
    let path = [tag("split2"), i as u64];
    let mut rng = stream(seed, &path);
    let n = rng.gen_range(6..=9);
    let base = random_uniform_min_degree(n, 3, 4, derive_seed(seed, &path))?;
    let edges = base
        .edges()
        .iter()
        .map(|e| {
            let m = if rng.gen_bool(0.3) {
                rng.gen_range(2..=3)
            } else {
                1
            };
            Edge::new(e.vertices().to_vec(), m)
        })
        .collect::<Result<Vec<_>>>()?;
    MultiHypergraph::new(n, edges)
}

/// Arbitrary small multihypergraph without isolated vertices: 3 to 8
/// vertices, edges of size 1 to 4, multiplicities 1 or 2.
pub fn small_hypergraph(seed: u64, i: usize) -> Result<MultiHypergraph> {
    let mut rng = stream(seed, &[tag("small"), i as u64]);
    let n = rng.gen_range(3..=8);
    let m = rng.gen_range(2..=8);
    let all: Vec<usize> = (0..n).collect();
    let mut edges = Vec::new();
    for _ in 0..m {
        let size = rng.gen_range(1..=4.min(n));
        let set = all.choose_multiple(&mut rng, size).copied().collect();
        edges.push(Edge::new(set, rng.gen_range(1..=2))?);
    }
    // every vertex joins at least one edge
    for v in 0..n {
        if edges.iter().all(|e| !e.contains(v)) {
            let other = **all
                .iter()
                .filter(|&&u| u != v)
                .collect::<Vec<_>>()
                .choose(&mut rng)
                .unwrap();
            edges.push(Edge::simple(vec![v, other])?);
        }
    }
    Ok(MultiHypergraph::new(n, edges)?.merged())
}

/// Small simple hypergraph without isolated vertices and at most 12 edges.
pub fn small_simple_hypergraph(seed: u64, i: usize) -> Result<MultiHypergraph> {
    let mut rng = stream(seed, &[tag("small-simple"), i as u64]);
    let n = rng.gen_range(3..=7);
    let m = rng.gen_range(2..=12);
    let all: Vec<usize> = (0..n).collect();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for _ in 0..m {
        let size = rng.gen_range(1..=3.min(n));
        let mut set: Vec<usize> = all.choose_multiple(&mut rng, size).copied().collect();
        set.sort_unstable();
        if !sets.contains(&set) {
            sets.push(set);
        }
    }
    for v in 0..n {
        if sets.iter().all(|s| !s.contains(&v)) && sets.len() < 12 {
            sets.push(vec![v]);
        } else if sets.iter().all(|s| !s.contains(&v)) {
            sets[0].push(v);
            sets[0].sort_unstable();
            sets[0].dedup();
        }
    }
    Ok(MultiHypergraph::from_sets(n, sets)?.merged())
}
