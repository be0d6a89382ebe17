use std::collections::HashMap;

use crate::error::{infeasible, Error, Result};
use crate::hypergraph::{Edge, EdgeInstance, MultiHypergraph};
use crate::levelling::{level, pull_back};
use crate::partition::{verify_cover_partition, CoverPartition, Verification};

/// A two-class split produced by [`split2_multi`].
#[derive(Debug, Clone)]
pub struct Split2Outcome {
    pub partition: CoverPartition,
    /// Pairing rounds that coloured at least one repeated edge.
    pub rounds: usize,
    /// Whether the simple residual had to be handed to the solver.
    pub callback_used: bool,
}

/// Splits a multihypergraph with minimum degree at least `d` into two covering
/// classes, given a solver for the simple case.
///
/// While some edge (restricted to the still uncovered vertices) is repeated,
/// one copy goes to class 0 and another to class 1, covering all its vertices
/// twice. What remains is a simple hypergraph on the uncovered vertices with
/// minimum degree still at least `d`; it is levelled to `(r, d)` with `r` the
/// largest edge size of `h`, passed to `solver`, and the answer pulled back.
/// Instances that no step needed alternate between the classes by copy index.
pub fn split2_multi<F>(h: &MultiHypergraph, d: usize, mut solver: F) -> Result<Split2Outcome>
where
    F: FnMut(&MultiHypergraph) -> Result<CoverPartition>,
{
    let delta = h.min_degree().unwrap_or(0);
    if h.n_vertices() > 0 && delta < d {
        return infeasible(format!("minimum degree {delta} is below {d}"));
    }
    let r = h.max_edge_size();
    let instances = h.instances();
    let mut class: Vec<Option<usize>> = vec![None; instances.len()];
    let mut covered = vec![false; h.n_vertices()];
    let mut rounds = 0;

    let residual_sets = |class: &[Option<usize>], covered: &[bool]| -> Vec<(usize, Vec<usize>)> {
        instances
            .iter()
            .enumerate()
            .filter(|(flat, _)| class[*flat].is_none())
            .filter_map(|(flat, &inst)| {
                let rest: Vec<usize> = h
                    .instance_vertices(inst)
                    .iter()
                    .copied()
                    .filter(|&v| !covered[v])
                    .collect();
                (!rest.is_empty()).then_some((flat, rest))
            })
            .collect()
    };

    loop {
        let residual = residual_sets(&class, &covered);
        let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        for (flat, set) in residual {
            match index.get(&set) {
                Some(&g) => groups[g].1.push(flat),
                None => {
                    index.insert(set.clone(), groups.len());
                    groups.push((set, vec![flat]));
                }
            }
        }
        let mut paired = false;
        for (set, members) in &groups {
            if members.len() < 2 || set.iter().all(|&v| covered[v]) {
                continue;
            }
            class[members[0]] = Some(0);
            class[members[1]] = Some(1);
            for &v in set {
                covered[v] = true;
            }
            paired = true;
        }
        if !paired {
            break;
        }
        rounds += 1;
    }

    let mut callback_used = false;
    let uncovered: Vec<usize> = (0..h.n_vertices()).filter(|&v| !covered[v]).collect();
    if !uncovered.is_empty() {
        let mut relabel = vec![usize::MAX; h.n_vertices()];
        for (i, &v) in uncovered.iter().enumerate() {
            relabel[v] = i;
        }
        let residual = residual_sets(&class, &covered);
        let edges = residual
            .iter()
            .map(|(_, set)| Edge::simple(set.iter().map(|&v| relabel[v]).collect()))
            .collect::<Result<Vec<_>>>()?;
        let simple = MultiHypergraph::new(uncovered.len(), edges)?;
        let lev = level(&simple, r, d)?;
        callback_used = true;
        let solved = solver(lev.target())?;
        if solved.k() != 2 {
            return Err(Error::Input(format!(
                "solver returned {} classes, expected 2",
                solved.k()
            )));
        }
        let pulled = pull_back(&lev, &solved)?;
        for (i, (flat, _)) in residual.iter().enumerate() {
            class[*flat] = Some(pulled.class_of(EdgeInstance::new(i, 0)));
        }
    }

    let flat: Vec<usize> = class
        .into_iter()
        .zip(&instances)
        .map(|(c, inst)| c.unwrap_or(inst.copy_index % 2))
        .collect();
    let partition = CoverPartition::from_flat(h, 2, flat)?;
    match verify_cover_partition(h, &partition)? {
        Verification::Valid => Ok(Split2Outcome {
            partition,
            rounds,
            callback_used,
        }),
        Verification::Uncovered { class, vertex } => Err(Error::Internal(format!(
            "two-class split leaves vertex {vertex} uncovered by class {class}"
        ))),
    }
}
