use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{input, Error, Result};
use crate::hypergraph::{Edge, MultiHypergraph};
use crate::rng;

const REPAIR_LIMIT: usize = 100_000;

/// Configuration-model `d`-regular `r`-uniform multihypergraph.
///
/// The `n·d` vertex stubs are shuffled and cut into groups of `r`. A group
/// holding some vertex twice is repaired by swapping the repeated stub with a
/// random stub of another group whenever that leaves both groups repeat-free.
/// Identical groups become one edge with multiplicity.
pub fn gen_random_regular_uniform(
    n: usize,
    r: usize,
    d: usize,
    seed: u64,
) -> Result<MultiHypergraph> {
    let mut rng = rng::stream(seed, &[rng::tag("regular-uniform")]);
    regular_uniform_with(n, r, d, &mut rng)
}

fn regular_uniform_with(
    n: usize,
    r: usize,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<MultiHypergraph> {
    let groups = configuration(n, r, d, false, rng)?;
    let edges = groups
        .into_iter()
        .map(Edge::simple)
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiHypergraph::new(n, edges)?.merged())
}

/// Groups of `r` stubs, each free of repeated vertices and, when `simple`,
/// pairwise distinct as sets. Offending groups are repaired by random swaps
/// with stubs of other groups.
fn configuration(
    n: usize,
    r: usize,
    d: usize,
    simple: bool,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Vec<usize>>> {
    if r == 0 {
        return input("edge size must be positive");
    }
    if !(n * d).is_multiple_of(r) {
        return input(format!("n·d = {} is not divisible by r = {r}", n * d));
    }
    if d > 0 && r > n {
        return input(format!("cannot place {r} distinct vertices among {n}"));
    }
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    stubs.shuffle(rng);
    let groups = stubs.len() / r;

    let repeat_at = |stubs: &[usize], g: usize| {
        let w = &stubs[g * r..(g + 1) * r];
        (0..r).find(|&i| w[i + 1..].contains(&w[i]))
    };
    let duplicate = |stubs: &[usize]| {
        let mut seen = HashSet::new();
        (0..groups).find(|&g| {
            let mut w = stubs[g * r..(g + 1) * r].to_vec();
            w.sort_unstable();
            !seen.insert(w)
        })
    };
    let mut attempts = 0;
    loop {
        let (g, p) = match (0..groups).find_map(|g| repeat_at(&stubs, g).map(|p| (g, p))) {
            Some(found) => found,
            None => match duplicate(&stubs).filter(|_| simple) {
                Some(g) => (g, rng.gen_range(0..r)),
                None => break,
            },
        };
        let a = g * r + p;
        loop {
            attempts += 1;
            if attempts > REPAIR_LIMIT {
                return Err(Error::Exhausted {
                    context: format!("configuration model repair for n={n} r={r} d={d}"),
                    bad_vertices: vec![],
                });
            }
            let b = rng.gen_range(0..stubs.len());
            let h = b / r;
            if h == g {
                continue;
            }
            let (x, y) = (stubs[a], stubs[b]);
            let g_ok = (g * r..(g + 1) * r).all(|i| i == a || stubs[i] != y);
            let h_ok = (h * r..(h + 1) * r).all(|i| i == b || stubs[i] != x);
            if g_ok && h_ok {
                stubs.swap(a, b);
                break;
            }
        }
    }
    Ok(stubs.chunks(r).map(|c| c.to_vec()).collect())
}

/// Like [`gen_random_regular_uniform`] but with no repeated edge; repeated
/// groups are repaired by the same random swaps.
pub fn gen_random_simple_regular_uniform(
    n: usize,
    r: usize,
    d: usize,
    seed: u64,
) -> Result<MultiHypergraph> {
    let mut rng = rng::stream(seed, &[rng::tag("simple-regular-uniform")]);
    let groups = configuration(n, r, d, true, &mut rng)?;
    Ok(MultiHypergraph::from_sets(n, groups)?.canonicalized().0)
}

/// Multigraph with minimum degree exactly `d`: a random `d`-regular
/// multigraph plus `extra` random edges avoiding vertex 0.
pub fn random_multigraph_min_degree(
    n: usize,
    d: usize,
    extra: usize,
    seed: u64,
) -> Result<MultiHypergraph> {
    if n < 3 {
        return input("need at least 3 vertices");
    }
    let mut rng = rng::stream(seed, &[rng::tag("multigraph-min-degree")]);
    let base = regular_uniform_with(n, 2, d, &mut rng)?;
    let mut edges = base.edges().to_vec();
    for _ in 0..extra {
        let u = rng.gen_range(1..n);
        let mut v = rng.gen_range(1..n);
        while v == u {
            v = rng.gen_range(1..n);
        }
        edges.push(Edge::simple(vec![u, v])?);
    }
    Ok(MultiHypergraph::new(n, edges)?.merged())
}

/// Simple graph with minimum degree exactly `d`: a random simple `d`-regular
/// graph plus up to `extra` new random edges avoiding vertex 0.
pub fn random_graph_min_degree(
    n: usize,
    d: usize,
    extra: usize,
    seed: u64,
) -> Result<MultiHypergraph> {
    let base = gen_random_simple_regular_uniform(n, 2, d, seed)?;
    let mut rng = rng::stream(seed, &[rng::tag("graph-extra")]);
    let mut present: HashSet<Vec<usize>> =
        base.edges().iter().map(|e| e.vertices().to_vec()).collect();
    let mut sets: Vec<Vec<usize>> = base.edges().iter().map(|e| e.vertices().to_vec()).collect();
    for _ in 0..extra {
        if n < 3 {
            break;
        }
        let u = rng.gen_range(1..n);
        let v = rng.gen_range(1..n);
        let e = vec![u.min(v), u.max(v)];
        if u != v && present.insert(e.clone()) {
            sets.push(e);
        }
    }
    Ok(MultiHypergraph::from_sets(n, sets)?.canonicalized().0)
}

/// `r`-uniform multihypergraph with random multiplicities in `1..=max_mult`,
/// grown by random edges until every vertex has degree at least `d`.
pub fn random_multi_uniform(
    n: usize,
    r: usize,
    d: usize,
    max_mult: usize,
    seed: u64,
) -> Result<MultiHypergraph> {
    if r == 0 || r > n || max_mult == 0 {
        return input("need 1 ≤ r ≤ n and max_mult ≥ 1");
    }
    let mut rng = rng::stream(seed, &[rng::tag("multi-uniform")]);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    let all: Vec<usize> = (0..n).collect();
    while let Some(v) = (0..n).find(|&v| deg[v] < d) {
        // every new edge contains a vertex still short of degree d
        let mut others: Vec<usize> = all.iter().copied().filter(|&u| u != v).collect();
        others.shuffle(&mut rng);
        let mut set: Vec<usize> = others[..r - 1].to_vec();
        set.push(v);
        let m = rng.gen_range(1..=max_mult);
        for &u in &set {
            deg[u] += m;
        }
        edges.push(Edge::new(set, m)?);
    }
    Ok(MultiHypergraph::new(n, edges)?.merged())
}

/// Simple `r`-uniform hypergraph with minimum degree exactly `d`.
///
/// Repeatedly adds a new random edge through the lowest-numbered vertex of
/// smallest degree, preferring the other low-degree vertices, until every
/// vertex has degree `d`.
pub fn random_uniform_min_degree(
    n: usize,
    r: usize,
    d: usize,
    seed: u64,
) -> Result<MultiHypergraph> {
    if r == 0 || r > n {
        return input("need 1 ≤ r ≤ n");
    }
    let mut rng = rng::stream(seed, &[rng::tag("uniform-min-degree")]);
    let mut deg = vec![0usize; n];
    let mut present: HashSet<Vec<usize>> = HashSet::new();
    let mut sets = Vec::new();
    let mut stalls = 0;
    while let Some(v) = (0..n).filter(|&v| deg[v] < d).min_by_key(|&v| deg[v]) {
        let mut others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        others.shuffle(&mut rng);
        // stable sort keeps the shuffle among equal degrees
        others.sort_by_key(|&u| deg[u]);
        let mut set: Vec<usize> = others[..r - 1].to_vec();
        if stalls > 0 {
            others.shuffle(&mut rng);
            set = others[..r - 1].to_vec();
        }
        set.push(v);
        set.sort_unstable();
        if !present.insert(set.clone()) {
            stalls += 1;
            if stalls > 10_000 {
                return Err(Error::Exhausted {
                    context: format!("no new {r}-set through vertex {v}"),
                    bad_vertices: vec![v],
                });
            }
            continue;
        }
        stalls = 0;
        set.iter().for_each(|&u| deg[u] += 1);
        sets.push(set);
    }
    Ok(MultiHypergraph::from_sets(n, sets)?.canonicalized().0)
}
