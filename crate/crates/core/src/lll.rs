//! Randomized splitting of uniform hypergraphs: a resampled random
//! `k`-colouring, and recursive balanced halving for larger `k`.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{input, Error, Result};
use crate::hypergraph::{EdgeInstance, MultiHypergraph};
use crate::levelling::{level, pull_back};
use crate::partition::{verify_cover_partition, CoverPartition, Verification};
use crate::rng;

/// Default multiplier in the large-`k` degree threshold.
pub const DEFAULT_LAMBDA: f64 = 4.0;

/// `5 ln ln r / ln r`
pub fn alpha(r: usize) -> f64 {
    let l = (r as f64).ln();
    5.0 * l.ln() / l
}

/// `ln² r / ln ln r`
pub fn big_m(r: usize) -> f64 {
    let l = (r as f64).ln();
    l * l / l.ln()
}

/// Balance slack `Λ = 4 √(d ln(r d))`.
pub fn deviation(r: usize, d: usize) -> f64 {
    let d = d as f64;
    4.0 * (d * (r as f64 * d).ln()).sqrt()
}

/// `⌈(1 + α) k ln r⌉`
pub fn threshold_case1(r: usize, k: usize) -> usize {
    ((1.0 + alpha(r)) * k as f64 * (r as f64).ln()).ceil() as usize
}

/// `⌈(1 + λα) k ln r⌉`
pub fn threshold_case2(r: usize, k: usize, lambda: f64) -> usize {
    ((1.0 + lambda * alpha(r)) * k as f64 * (r as f64).ln()).ceil() as usize
}

/// Degrees `d_0, d_1, ...` with `d_{i+1} = d_i - Λ(d_i)`, while positive.
pub fn degree_schedule(r: usize, d0: usize, levels: usize) -> Vec<f64> {
    let mut out = vec![d0 as f64];
    for _ in 0..levels {
        let d = *out.last().unwrap();
        let next = d - 4.0 * (d * (r as f64 * d).ln()).sqrt();
        if next.is_nan() || next <= 0.0 {
            break;
        }
        out.push(next);
    }
    out
}

/// Minimal `I` with `k / 2^I < 2M/3`.
pub fn recursion_depth(r: usize, k: usize) -> usize {
    let target = 2.0 * big_m(r) / 3.0;
    (0..)
        .find(|&i| (k as f64) / 2f64.powi(i as i32) < target)
        .unwrap()
}

/// Local-lemma bookkeeping for a random `k`-colouring of a `d`-regular
/// `r`-uniform hypergraph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Case1Diagnostic {
    /// `k (1 - 1/k)^d`, bounding the chance a vertex misses a colour.
    pub p: f64,
    /// `k e^{-d/k}`
    pub p_exp: f64,
    /// `d (r - 1)`, bounding the number of dependent vertex events.
    pub dependency: usize,
    /// `e p (Δ + 1)`; the local lemma applies when this is below 1.
    pub product: f64,
}

impl Case1Diagnostic {
    pub fn new(r: usize, d: usize, k: usize) -> Self {
        let (kf, df) = (k as f64, d as f64);
        let p = kf * (1.0 - 1.0 / kf).powf(df);
        let dependency = d * r.saturating_sub(1);
        Self {
            p,
            p_exp: kf * (-df / kf).exp(),
            dependency,
            product: std::f64::consts::E * p * (dependency as f64 + 1.0),
        }
    }

    /// `p ≤ k e^{-d/k}`, from `1 - x ≤ e^{-x}`.
    pub fn chain_holds(&self) -> bool {
        self.p <= self.p_exp * (1.0 + 1e-12)
    }

    pub fn lll_applies(&self) -> bool {
        self.product < 1.0
    }
}

/// Per-vertex balance demanded by [`split_balanced`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BalanceRule {
    /// At least `⌊d/2⌋ - ⌈√d⌉` edges of each colour.
    #[default]
    Practical,
    /// At least `⌈d/2 - Λ⌉` edges of each colour; vacuous at small `d`.
    Strict,
}

impl BalanceRule {
    pub fn threshold(self, r: usize, d: usize) -> usize {
        let t = match self {
            BalanceRule::Practical => (d / 2) as f64 - (d as f64).sqrt().ceil(),
            BalanceRule::Strict => (d as f64 / 2.0 - deviation(r, d)).ceil(),
        };
        t.max(0.0) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverCase {
    /// One random colouring, no halving.
    Direct,
    /// Halve at least once.
    Recursive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LllParams {
    pub lambda: f64,
    /// Resampling rounds; `None` means `10 · |E| · k` per call.
    pub round_budget: Option<u64>,
    pub seed: u64,
    pub balance: BalanceRule,
    pub force_case: Option<CoverCase>,
}

impl Default for LllParams {
    fn default() -> Self {
        Self {
            lambda: DEFAULT_LAMBDA,
            round_budget: None,
            seed: 0,
            balance: BalanceRule::Practical,
            force_case: None,
        }
    }
}

impl LllParams {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn budget(&self, h: &MultiHypergraph, k: usize) -> u64 {
        self.round_budget
            .unwrap_or(10 * (h.instance_count() * k) as u64)
    }
}

fn resample_with(
    h: &MultiHypergraph,
    k: usize,
    budget: u64,
    rng: &mut ChaCha8Rng,
) -> Result<(CoverPartition, u64)> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let n = h.n_vertices();
    let incident = instance_incidence(h);
    let vertex_sets: Vec<&[usize]> = h
        .instances()
        .iter()
        .map(|&i| h.instance_vertices(i))
        .collect();
    let mut colour: Vec<usize> = (0..vertex_sets.len())
        .map(|_| rng.gen_range(0..k))
        .collect();
    let mut count = vec![vec![0u32; k]; n];
    for (i, vs) in vertex_sets.iter().enumerate() {
        for &v in *vs {
            count[v][colour[i]] += 1;
        }
    }
    let is_bad = |count: &[Vec<u32>], v: usize| count[v].contains(&0);
    let mut bad: BTreeSet<usize> = (0..n).filter(|&v| is_bad(&count, v)).collect();
    let mut rounds = 0;
    while let Some(&v) = bad.first() {
        if rounds == budget {
            return Err(Error::Exhausted {
                context: format!("random {k}-colouring still bad after {budget} resampling rounds"),
                bad_vertices: bad.into_iter().collect(),
            });
        }
        rounds += 1;
        if incident[v].is_empty() {
            return Err(Error::Exhausted {
                context: format!("vertex {v} is isolated"),
                bad_vertices: bad.into_iter().collect(),
            });
        }
        for &i in &incident[v] {
            let c = rng.gen_range(0..k);
            for &u in vertex_sets[i] {
                count[u][colour[i]] -= 1;
                count[u][c] += 1;
            }
            colour[i] = c;
        }
        for &i in &incident[v] {
            for &u in vertex_sets[i] {
                if is_bad(&count, u) {
                    bad.insert(u);
                } else {
                    bad.remove(&u);
                }
            }
        }
    }
    Ok((CoverPartition::from_flat(h, k, colour)?, rounds))
}

fn instance_incidence(h: &MultiHypergraph) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); h.n_vertices()];
    for (i, inst) in h.instances().into_iter().enumerate() {
        for &v in h.instance_vertices(inst) {
            out[v].push(i);
        }
    }
    out
}

/// Random `k`-colouring of the edge instances, repaired by resampling.
///
/// Colours are drawn independently and uniformly. While some vertex misses a
/// colour, the lowest-numbered such vertex has all its incident instances
/// recoloured. Intended for regular uniform inputs (level first otherwise).
/// Runs out of budget with the still-bad vertices when no cover is found,
/// which is the expected outcome for infeasible inputs.
pub fn random_cover_resample(
    h: &MultiHypergraph,
    k: usize,
    params: &LllParams,
) -> Result<CoverPartition> {
    let mut rng = rng::stream(params.seed, &[rng::tag("resample")]);
    resample_with(h, k, params.budget(h, k), &mut rng).map(|(p, _)| p)
}

/// A red/blue split: `red[i]` for each instance in flat order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedSplit {
    pub red: Vec<bool>,
    pub threshold: usize,
    pub rounds: u64,
}

impl BalancedSplit {
    pub fn red_instances(&self, h: &MultiHypergraph) -> Vec<EdgeInstance> {
        self.pick(h, true)
    }

    pub fn blue_instances(&self, h: &MultiHypergraph) -> Vec<EdgeInstance> {
        self.pick(h, false)
    }

    fn pick(&self, h: &MultiHypergraph, red: bool) -> Vec<EdgeInstance> {
        h.instances()
            .into_iter()
            .zip(&self.red)
            .filter(|(_, &r)| r == red)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Random red/blue colouring of a `d`-regular hypergraph in which every vertex
/// sees at least `rule.threshold(r, d)` instances of each colour, repaired by
/// resampling the instances at the lowest-numbered unbalanced vertex.
pub fn split_balanced(
    h: &MultiHypergraph,
    rule: BalanceRule,
    budget: u64,
    seed: u64,
) -> Result<BalancedSplit> {
    let d = h.min_degree().unwrap_or(0);
    if !h.is_regular(d) {
        return input("balanced split needs a regular hypergraph");
    }
    let threshold = rule.threshold(h.max_edge_size(), d);
    let mut rng = rng::stream(seed, &[rng::tag("split")]);
    let n = h.n_vertices();
    let incident = instance_incidence(h);
    let vertex_sets: Vec<&[usize]> = h
        .instances()
        .iter()
        .map(|&i| h.instance_vertices(i))
        .collect();
    let mut red: Vec<bool> = (0..vertex_sets.len()).map(|_| rng.gen()).collect();
    let mut reds = vec![0usize; n];
    for (i, vs) in vertex_sets.iter().enumerate() {
        if red[i] {
            vs.iter().for_each(|&v| reds[v] += 1);
        }
    }
    let unbalanced = |reds: &[usize], v: usize| reds[v] < threshold || d - reds[v] < threshold;
    let mut bad: BTreeSet<usize> = (0..n).filter(|&v| unbalanced(&reds, v)).collect();
    let mut rounds = 0;
    while let Some(&v) = bad.first() {
        if rounds == budget {
            return Err(Error::Exhausted {
                context: format!("no split with {threshold} edges of each colour per vertex"),
                bad_vertices: bad.into_iter().collect(),
            });
        }
        rounds += 1;
        for &i in &incident[v] {
            let now: bool = rng.gen();
            if now != red[i] {
                for &u in vertex_sets[i] {
                    if now {
                        reds[u] += 1;
                    } else {
                        reds[u] -= 1;
                    }
                }
                red[i] = now;
            }
        }
        for &i in &incident[v] {
            for &u in vertex_sets[i] {
                if unbalanced(&reds, u) {
                    bad.insert(u);
                } else {
                    bad.remove(&u);
                }
            }
        }
    }
    Ok(BalancedSplit {
        red,
        threshold,
        rounds,
    })
}

/// Result of [`cover_recursive`].
#[derive(Debug, Clone)]
pub struct RecursiveCover {
    pub partition: CoverPartition,
    /// Number of halving levels used.
    pub depth: usize,
    pub leaves: usize,
    /// Whether `δ` was below [`threshold_case2`]; the run proceeds regardless.
    pub below_threshold: bool,
}

struct Node {
    depth: usize,
    index: u64,
    colours: std::ops::Range<usize>,
}

/// Splits into `k` covering classes by repeated balanced halving.
///
/// The halving depth is the minimal `I` with `k/2^I < 2M/3` (at least 1 when
/// [`CoverCase::Recursive`] is forced, 0 for [`CoverCase::Direct`]). Each node
/// is levelled to `(r, δ_node)` and split red/blue; red gets the first
/// `⌊k/2⌋` colours and blue the remaining `⌈k/2⌉`. Nodes with a single colour
/// or at the final depth are solved by [`random_cover_resample`] on their
/// levelling. Every node draws from its own stream derived from
/// `(seed, depth, index)`.
pub fn cover_recursive(
    h: &MultiHypergraph,
    k: usize,
    params: &LllParams,
) -> Result<RecursiveCover> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let r = h.max_edge_size();
    if r < 3 {
        return input(format!("edge size {r} is below 3"));
    }
    if let Some(v) = h.isolated_vertex() {
        return Err(Error::Infeasible(format!("vertex {v} is isolated")));
    }
    let natural = if (k as f64) <= big_m(r) {
        0
    } else {
        recursion_depth(r, k)
    };
    let depth = match params.force_case {
        None => natural,
        Some(CoverCase::Direct) => 0,
        Some(CoverCase::Recursive) => recursion_depth(r, k).max(1),
    };
    let delta = h.min_degree().unwrap_or(0);
    let mut leaves = 0;
    let root = Node {
        depth: 0,
        index: 0,
        colours: 0..k,
    };
    let partition = solve_node(h, r, &root, depth, params, &mut leaves)?;
    match verify_cover_partition(h, &partition)? {
        Verification::Valid => Ok(RecursiveCover {
            partition,
            depth,
            leaves,
            below_threshold: delta < threshold_case2(r, k, params.lambda),
        }),
        Verification::Uncovered { class, vertex } => Err(Error::Internal(format!(
            "recursive cover leaves vertex {vertex} without class {class}"
        ))),
    }
}

fn solve_node(
    h: &MultiHypergraph,
    r: usize,
    node: &Node,
    max_depth: usize,
    params: &LllParams,
    leaves: &mut usize,
) -> Result<CoverPartition> {
    let k = node.colours.len();
    let d = match h.isolated_vertex() {
        Some(v) => {
            return Err(Error::Exhausted {
                context: format!(
                    "subproblem at depth {} index {} (colours {:?}) has isolated vertex {v}",
                    node.depth, node.index, node.colours
                ),
                bad_vertices: vec![v],
            })
        }
        None => h.min_degree().unwrap_or(0),
    };
    let lev = level(h, r, d)?;
    let target = lev.target();
    let path = [node.depth as u64, node.index];

    let solved = if node.depth == max_depth || k <= 1 {
        *leaves += 1;
        let mut rng = rng::stream(params.seed, &[rng::tag("leaf"), path[0], path[1]]);
        resample_with(target, k, params.budget(target, k), &mut rng)
            .map_err(|e| annotate(e, node))?
            .0
    } else {
        let split_seed = rng::derive_seed(params.seed, &path);
        let split = split_balanced(target, params.balance, params.budget(target, 2), split_seed)
            .map_err(|e| annotate(e, node))?;
        let half = k / 2;
        let mid = node.colours.start + half;
        let mut flat = vec![0; target.instance_count()];
        for (red, colours) in [
            (true, node.colours.start..mid),
            (false, mid..node.colours.end),
        ] {
            let picked = split.pick(target, red);
            let (sub, provenance) = target.restrict_to_instances(&picked);
            let child = Node {
                depth: node.depth + 1,
                index: 2 * node.index + u64::from(!red),
                colours: colours.clone(),
            };
            let offset = colours.start - node.colours.start;
            let part = solve_node(&sub, r, &child, max_depth, params, leaves)?;
            for (i, &c) in part.assignment().iter().enumerate() {
                flat[target.flat_index(provenance[i])] = offset + c;
            }
        }
        CoverPartition::from_flat(target, k, flat)?
    };
    pull_back(&lev, &solved)
}

fn annotate(e: Error, node: &Node) -> Error {
    match e {
        Error::Exhausted {
            context,
            bad_vertices,
        } => Error::Exhausted {
            context: format!(
                "subproblem at depth {} index {} (colours {:?}): {context}",
                node.depth, node.index, node.colours
            ),
            bad_vertices,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_fano, gen_random_regular_uniform};

    #[test]
    fn thresholds() {
        assert_eq!(threshold_case1(3, 1), 2);
        assert_eq!(threshold_case1(64, 2), 23);
        for r in 3..40 {
            for k in 1..10 {
                assert!(threshold_case1(r, k + 1) > threshold_case1(r, k));
            }
        }
    }

    #[test]
    fn deviation_value() {
        assert!((deviation(4, 100) - 97.9).abs() < 0.05);
        assert_eq!(BalanceRule::Strict.threshold(4, 100), 0);
        assert_eq!(BalanceRule::Practical.threshold(4, 100), 40);
    }

    #[test]
    fn fano_cannot_be_two_coloured() {
        let err = random_cover_resample(&gen_fano(), 2, &LllParams::default()).unwrap_err();
        let Error::Exhausted { bad_vertices, .. } = err else {
            panic!("expected exhaustion");
        };
        assert!(!bad_vertices.is_empty());
    }

    #[test]
    fn resampling_covers_random_instance() {
        let h = gen_random_regular_uniform(30, 3, 12, 5).unwrap();
        let p = random_cover_resample(&h, 2, &LllParams::with_seed(1)).unwrap();
        assert!(verify_cover_partition(&h, &p).unwrap().is_valid());
    }

    #[test]
    fn split_is_seeded() {
        let c6 =
            MultiHypergraph::from_sets(6, (0..6).map(|i| [i.min((i + 1) % 6), i.max((i + 1) % 6)]))
                .unwrap();
        let a = split_balanced(&c6, BalanceRule::Strict, 100, 3).unwrap();
        let b = split_balanced(&c6, BalanceRule::Strict, 100, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.threshold, 0);
        assert_eq!(a.rounds, 0);
    }

    #[test]
    fn forced_halving_assembles_four_classes() {
        let h = gen_random_regular_uniform(24, 3, 40, 7).unwrap();
        let params = LllParams {
            force_case: Some(CoverCase::Recursive),
            ..LllParams::with_seed(2)
        };
        let out = cover_recursive(&h, 4, &params).unwrap();
        assert_eq!(out.depth, 1);
        assert_eq!(out.leaves, 2);
        assert_eq!(out.partition.k(), 4);
        assert_eq!(
            out.partition.class_sizes().iter().sum::<usize>(),
            h.instance_count()
        );
    }

    #[test]
    fn small_k_is_a_single_leaf() {
        let h = gen_random_regular_uniform(24, 3, 12, 7).unwrap();
        let out = cover_recursive(&h, 2, &LllParams::default()).unwrap();
        assert_eq!((out.depth, out.leaves), (0, 1));
    }

    #[test]
    fn diagnostic_chain() {
        let dg = Case1Diagnostic::new(3, 40, 2);
        assert!(dg.chain_holds());
        assert_eq!(dg.dependency, 80);
        assert!(dg.lll_applies());
    }
}
