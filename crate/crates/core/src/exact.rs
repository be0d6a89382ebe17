//! Exact covering-number and minimum-cover solvers for small instances.

use std::time::{Duration, Instant};

use crate::error::{infeasible, input, Result};
use crate::hypergraph::MultiHypergraph;
use crate::partition::{verify_cover_partition, CoverPartition};

/// Search limits; exceeding one yields [`Feasibility::Unknown`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    pub max_k: Option<usize>,
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
}

impl Default for SolverLimits {
    fn default() -> Self {
        Self {
            max_k: None,
            node_budget: 20_000_000,
            time_budget: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(CoverPartition),
    Infeasible,
    Unknown,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Outcome of [`covering_number_exact`].
///
/// `value` is set when `lower == upper`; otherwise the budget ran out
/// somewhere in between and `witness` certifies `lower`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactOutcome {
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub witness: Option<CoverPartition>,
    /// `k` values refuted by search, in the order tried.
    pub refuted: Vec<usize>,
    pub nodes: u64,
}

struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for v in 0..n {
            b.set(v);
        }
        b
    }

    fn set(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn get(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn minus(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Fewest edge instances whose union is the whole vertex set.
pub fn min_cover_size(h: &MultiHypergraph) -> Result<usize> {
    if let Some(v) = h.isolated_vertex() {
        return infeasible(format!("vertex {v} is isolated, nothing covers it"));
    }
    let n = h.n_vertices();
    let sets: Vec<Bits> = h
        .edges()
        .iter()
        .map(|e| {
            let mut b = Bits::empty(n);
            e.vertices().iter().for_each(|&v| b.set(v));
            b
        })
        .collect();
    let incident = h.incidence();
    let all = Bits::full(n);
    let mut best = greedy_cover(&sets, &all);
    cover_search(&sets, &incident, &all, 0, &mut best);
    Ok(best)
}

fn greedy_cover(sets: &[Bits], all: &Bits) -> usize {
    let mut left = Bits(all.0.clone());
    let mut used = 0;
    while left.count() > 0 {
        let pick = sets
            .iter()
            .max_by_key(|s| s.and_count(&left))
            .expect("no isolated vertices");
        left = left.minus(pick);
        used += 1;
    }
    used
}

fn cover_search(
    sets: &[Bits],
    incident: &[Vec<usize>],
    uncovered: &Bits,
    depth: usize,
    best: &mut usize,
) {
    let left = uncovered.count();
    if left == 0 {
        *best = (*best).min(depth);
        return;
    }
    let reach = sets
        .iter()
        .map(|s| s.and_count(uncovered))
        .max()
        .unwrap_or(0);
    if depth + left.div_ceil(reach) >= *best {
        return;
    }
    // branch on the uncovered vertex with the fewest incident edges
    let mut v = uncovered.first().expect("nonempty");
    for u in 0..incident.len() {
        if uncovered.get(u) && incident[u].len() < incident[v].len() {
            v = u;
        }
    }
    let mut options = incident[v].clone();
    options.sort_by_key(|&e| std::cmp::Reverse(sets[e].and_count(uncovered)));
    for e in options {
        cover_search(sets, incident, &uncovered.minus(&sets[e]), depth + 1, best);
    }
}

struct Search<'a> {
    k: usize,
    /// Edge index of each slot, slots ordered by size descending then index.
    slot_edge: Vec<usize>,
    vertices: Vec<&'a [usize]>,
    have: Vec<Vec<u32>>,
    missing: Vec<usize>,
    remaining: Vec<usize>,
    total_missing: usize,
    class: Vec<usize>,
    nodes: u64,
    limits: SolverLimits,
    start: Instant,
    out_of_budget: bool,
}

impl Search<'_> {
    fn assign(&mut self, slot: usize, c: usize) -> bool {
        self.class[slot] = c;
        let mut ok = true;
        for &v in self.vertices[slot] {
            self.remaining[v] -= 1;
            if self.have[v][c] == 0 {
                self.missing[v] -= 1;
                self.total_missing -= 1;
            }
            self.have[v][c] += 1;
            ok &= self.missing[v] <= self.remaining[v];
        }
        ok
    }

    fn unassign(&mut self, slot: usize, c: usize) {
        for &v in self.vertices[slot] {
            self.remaining[v] += 1;
            self.have[v][c] -= 1;
            if self.have[v][c] == 0 {
                self.missing[v] += 1;
                self.total_missing += 1;
            }
        }
    }

    fn budget_left(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limits.node_budget {
            self.out_of_budget = true;
        } else if self.nodes.is_multiple_of(4096) {
            if let Some(t) = self.limits.time_budget {
                if self.start.elapsed() > t {
                    self.out_of_budget = true;
                }
            }
        }
        !self.out_of_budget
    }

    fn run(&mut self, slot: usize, used: usize) -> bool {
        if self.total_missing == 0 {
            // everything is covered; the rest may go anywhere
            for s in slot..self.class.len() {
                self.class[s] = 0;
            }
            return true;
        }
        if slot == self.class.len() || !self.budget_left() {
            return false;
        }
        let edge = self.slot_edge[slot];
        let floor = if slot > 0 && self.slot_edge[slot - 1] == edge {
            self.class[slot - 1]
        } else {
            0
        };
        let top = self.k.min(used + 1);
        let mut order: Vec<usize> = (floor..top).collect();
        let gain = |c: usize| {
            self.vertices[slot]
                .iter()
                .filter(|&&v| self.have[v][c] == 0)
                .count()
        };
        order.sort_by_key(|&c| std::cmp::Reverse(gain(c)));
        for c in order {
            if self.assign(slot, c) && self.run(slot + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(slot, c);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// Decides whether the edge instances split into `k` covering classes.
///
/// Backtracking over edges ordered by size (descending) then index, with all
/// copies of an edge consecutive. A branch dies as soon as some vertex lacks
/// more classes than it has unassigned incident instances. Class labels are
/// opened in increasing order and copies of one edge take non-decreasing
/// classes, so each partition is reached once up to relabelling.
pub fn feasible_k(h: &MultiHypergraph, k: usize, limits: SolverLimits) -> Result<Feasibility> {
    feasible_k_counted(h, k, limits).map(|(f, _)| f)
}

/// [`feasible_k`] together with the number of search nodes visited.
pub fn feasible_k_counted(
    h: &MultiHypergraph,
    k: usize,
    limits: SolverLimits,
) -> Result<(Feasibility, u64)> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let n = h.n_vertices();
    let deg = h.degrees();
    if deg.iter().any(|&d| d < k) {
        return Ok((Feasibility::Infeasible, 0));
    }
    let mut order: Vec<usize> = (0..h.edge_count()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(h.edge(e).len()), e));
    let mut slot_edge = Vec::with_capacity(h.instance_count());
    for &e in &order {
        slot_edge.extend(std::iter::repeat_n(e, h.edge(e).multiplicity()));
    }
    let vertices: Vec<&[usize]> = slot_edge.iter().map(|&e| h.edge(e).vertices()).collect();
    let mut s = Search {
        k,
        vertices,
        have: vec![vec![0; k]; n],
        missing: vec![k; n],
        remaining: deg,
        total_missing: n * k,
        class: vec![0; slot_edge.len()],
        slot_edge,
        nodes: 0,
        limits,
        start: Instant::now(),
        out_of_budget: false,
    };
    if !s.run(0, 0) {
        let f = if s.out_of_budget {
            Feasibility::Unknown
        } else {
            Feasibility::Infeasible
        };
        return Ok((f, s.nodes));
    }
    let mut flat = vec![0; h.instance_count()];
    let mut next_copy = vec![0; h.edge_count()];
    for (slot, &e) in s.slot_edge.iter().enumerate() {
        flat[h.offsets()[e] + next_copy[e]] = s.class[slot];
        next_copy[e] += 1;
    }
    let p = CoverPartition::from_flat(h, k, flat)?;
    debug_assert!(verify_cover_partition(h, &p)
        .map(|v| v.is_valid())
        .unwrap_or(false));
    Ok((Feasibility::Feasible(p), s.nodes))
}

/// The upper bound `min(δ, W / T)`, with `W` the number of edge instances and
/// `T` the minimum cover size.
pub fn covering_upper_bound(h: &MultiHypergraph) -> Result<usize> {
    let delta = h.min_degree().unwrap_or(0);
    if delta == 0 {
        return Ok(0);
    }
    let t = min_cover_size(h)?;
    Ok(delta.min(h.instance_count() / t))
}

/// Largest `k` for which [`feasible_k`] holds, searching downward from
/// [`covering_upper_bound`] (capped by `limits.max_k`).
///
/// A hypergraph with an isolated vertex has covering number 0.
pub fn covering_number_exact(h: &MultiHypergraph, limits: SolverLimits) -> Result<ExactOutcome> {
    if h.n_vertices() == 0 {
        return input("hypergraph has no vertices");
    }
    let mut out = ExactOutcome {
        value: Some(0),
        lower: 0,
        upper: 0,
        witness: None,
        refuted: vec![],
        nodes: 0,
    };
    if h.isolated_vertex().is_some() {
        return Ok(out);
    }
    let bound = covering_upper_bound(h)?;
    let bound = limits.max_k.map_or(bound, |m| bound.min(m));
    out.upper = bound;
    out.lower = 1;
    out.witness = Some(CoverPartition::constant(h, 1, 0)?);
    let start = Instant::now();
    let mut settled = true;
    for k in (2..=bound).rev() {
        let mut step = limits;
        if let Some(t) = limits.time_budget {
            step.time_budget = Some(t.saturating_sub(start.elapsed()));
        }
        let (f, nodes) = feasible_k_counted(h, k, step)?;
        out.nodes += nodes;
        match f {
            Feasibility::Feasible(p) => {
                out.lower = k;
                out.witness = Some(p);
                break;
            }
            Feasibility::Infeasible => {
                out.refuted.push(k);
                if settled {
                    out.upper = k - 1;
                }
            }
            Feasibility::Unknown => settled = false,
        }
    }
    out.value = (out.lower == out.upper).then_some(out.lower);
    Ok(out)
}
