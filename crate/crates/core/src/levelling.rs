//! Levellings: replacing a hypergraph of minimum degree `d` and edge size at
//! most `r` by an `r`-uniform `d`-regular one whose cover partitions pull back.
//!
//! A levelling of `H0` is `H1` together with an embedding of `V(H0)` into
//! `V(H1)` and an injective map `f` from the edge instances of `H0` to those of
//! `H1` such that
//!
//! 1. `f(e)` meets the embedded copy of `V(H0)` only inside `e`,
//! 2. every instance of `H1` meeting the embedded vertices is some `f(e)`,
//! 3. `H1` is `r`-uniform and `d`-regular.
//!
//! Any `k`-class cover partition of `H1` then induces one of `H0` through `f`.

use std::collections::HashMap;

use crate::error::{infeasible, input, Error, Result};
use crate::hypergraph::{Edge, EdgeInstance, MultiHypergraph};
use crate::partition::{verify_cover_partition, CoverPartition, Verification};

/// Output of [`trim_to_degree`].
#[derive(Debug, Clone)]
pub struct Trimmed {
    pub hypergraph: MultiHypergraph,
    /// Input instance of every output instance, in the output's flat order.
    pub provenance: Vec<EdgeInstance>,
}

/// Deletes vertices from edges until every vertex has degree exactly `d`.
///
/// Vertices are processed in increasing order. A vertex of degree `d + x` is
/// removed from its `x` incident instances with the largest
/// `(edge_index, copy_index)`. Copies of one input edge that end up with the
/// same vertex set stay in one output entry; edges may shrink to empty.
pub fn trim_to_degree(h: &MultiHypergraph, d: usize) -> Result<Trimmed> {
    let degrees = h.degrees();
    if let Some(v) = degrees.iter().position(|&x| x < d) {
        return infeasible(format!("vertex {v} has degree {} < {d}", degrees[v]));
    }
    let instances = h.instances();
    let mut sets: Vec<Vec<usize>> = instances
        .iter()
        .map(|&i| h.instance_vertices(i).to_vec())
        .collect();

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n_vertices()];
    for (flat, set) in sets.iter().enumerate() {
        for &v in set {
            incident[v].push(flat);
        }
    }
    for (v, inc) in incident.iter().enumerate() {
        let excess = inc.len() - d;
        // flat order is (edge_index, copy_index) order
        for &flat in inc.iter().rev().take(excess) {
            sets[flat].retain(|&u| u != v);
        }
    }

    let mut edges = Vec::new();
    let mut provenance = Vec::with_capacity(instances.len());
    let mut flat = 0;
    for e in h.edges() {
        let mut runs: Vec<(Vec<usize>, Vec<EdgeInstance>)> = Vec::new();
        for _ in 0..e.multiplicity() {
            let set = std::mem::take(&mut sets[flat]);
            match runs.iter_mut().find(|(s, _)| *s == set) {
                Some((_, members)) => members.push(instances[flat]),
                None => runs.push((set, vec![instances[flat]])),
            }
            flat += 1;
        }
        for (set, members) in runs {
            edges.push(Edge::new(set, members.len())?);
            provenance.extend(members);
        }
    }
    let hypergraph = MultiHypergraph::new(h.n_vertices(), edges)?;
    Ok(Trimmed {
        hypergraph,
        provenance,
    })
}

/// A levelling together with the maps that make partitions pull back.
#[derive(Debug, Clone)]
pub struct LevellingMap {
    source: MultiHypergraph,
    target: MultiHypergraph,
    // target instance of each source instance, in the source's flat order
    edge_map: Vec<EdgeInstance>,
    embedded: Vec<usize>,
}

impl LevellingMap {
    /// The identity levelling of a hypergraph that is already regular and uniform.
    pub fn identity(h: &MultiHypergraph) -> Self {
        Self {
            source: h.clone(),
            target: h.clone(),
            edge_map: h.instances(),
            embedded: (0..h.n_vertices()).collect(),
        }
    }

    /// Assembles a map from parts without checking it; see [`is_levelling`].
    pub fn from_parts(
        source: MultiHypergraph,
        target: MultiHypergraph,
        edge_map: Vec<EdgeInstance>,
        embedded: Vec<usize>,
    ) -> Result<Self> {
        if edge_map.len() != source.instance_count() {
            return input("edge map must cover every source instance");
        }
        Ok(Self {
            source,
            target,
            edge_map,
            embedded,
        })
    }

    pub fn source(&self) -> &MultiHypergraph {
        &self.source
    }

    pub fn target(&self) -> &MultiHypergraph {
        &self.target
    }

    pub fn embedded(&self) -> &[usize] {
        &self.embedded
    }

    pub fn image(&self, inst: EdgeInstance) -> EdgeInstance {
        self.edge_map[self.source.flat_index(inst)]
    }

    pub fn edge_map(&self) -> &[EdgeInstance] {
        &self.edge_map
    }

    /// Relabels the target's edges, e.g. after [`MultiHypergraph::canonicalized`].
    pub fn with_target_order(mut self, target: MultiHypergraph, old_to_new: &[usize]) -> Self {
        for inst in &mut self.edge_map {
            inst.edge_index = old_to_new[inst.edge_index];
        }
        self.target = target;
        self
    }
}

/// Builds an `(r, d)`-levelling of `h`.
///
/// If `h` is already `d`-regular and `r`-uniform the identity map is returned.
/// Otherwise `h` is trimmed to degree `d`, `d` disjoint copies of the trimmed
/// hypergraph are taken (copy 0 keeps the original vertex numbers), and every
/// trimmed instance `e` gets `r - |e|` fresh vertices which are added to all `d`
/// copies of `e`.
pub fn level(h: &MultiHypergraph, r: usize, d: usize) -> Result<LevellingMap> {
    if d == 0 {
        return input("levelling degree must be positive");
    }
    if let Some(e) = h.edges().iter().find(|e| e.len() > r) {
        return infeasible(format!(
            "edge {:?} has more than {r} vertices",
            e.vertices()
        ));
    }
    if h.is_regular(d) && h.is_uniform(r) {
        return Ok(LevellingMap::identity(h));
    }
    let trimmed = trim_to_degree(h, d)?;
    let t = &trimmed.hypergraph;
    let n = h.n_vertices();

    let mut next_vertex = d * n;
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(d * t.instance_count());
    let mut padding: Vec<Vec<usize>> = Vec::with_capacity(t.instance_count());
    for inst in t.instances() {
        let pad = r - t.instance_vertices(inst).len();
        padding.push((next_vertex..next_vertex + pad).collect());
        next_vertex += pad;
    }
    for copy in 0..d {
        for (flat, inst) in t.instances().into_iter().enumerate() {
            let mut set: Vec<usize> = t
                .instance_vertices(inst)
                .iter()
                .map(|&v| copy * n + v)
                .collect();
            set.extend_from_slice(&padding[flat]);
            sets.push(set);
        }
    }

    // group identical sets; record the target instance of each built set
    let mut entries: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut built_instance = Vec::with_capacity(sets.len());
    for set in sets {
        let e = match index.get(&set) {
            Some(&e) => e,
            None => {
                index.insert(set.clone(), entries.len());
                entries.push((set, 0));
                entries.len() - 1
            }
        };
        built_instance.push(EdgeInstance::new(e, entries[e].1));
        entries[e].1 += 1;
    }
    let edges = entries
        .into_iter()
        .map(|(set, m)| Edge::new(set, m))
        .collect::<Result<Vec<_>>>()?;
    let target = MultiHypergraph::new(next_vertex, edges)?;

    // copy 0 holds the images; built_instance[flat] for flat < |T| is copy 0
    let mut edge_map = vec![EdgeInstance::new(0, 0); h.instance_count()];
    for (flat, &src) in trimmed.provenance.iter().enumerate() {
        edge_map[h.flat_index(src)] = built_instance[flat];
    }
    Ok(LevellingMap {
        source: h.clone(),
        target,
        edge_map,
        embedded: (0..n).collect(),
    })
}

/// Checks every defining condition of an `(r, d)`-levelling exhaustively.
pub fn is_levelling(l: &LevellingMap, r: usize, d: usize) -> bool {
    let (src, tgt) = (&l.source, &l.target);
    if src.max_edge_size() > r || src.min_degree().is_some_and(|m| m < d) {
        return false;
    }
    if !tgt.is_uniform(r) || !tgt.is_regular(d) {
        return false;
    }
    // embedding V0 -> V1
    if l.embedded.len() != src.n_vertices() {
        return false;
    }
    let mut preimage = vec![None; tgt.n_vertices()];
    for (u, &w) in l.embedded.iter().enumerate() {
        if w >= tgt.n_vertices() || preimage[w].is_some() {
            return false;
        }
        preimage[w] = Some(u);
    }
    // f injective and into the target
    if l.edge_map.len() != src.instance_count() {
        return false;
    }
    let mut hit = vec![false; tgt.instance_count()];
    for &t in &l.edge_map {
        if !tgt.contains_instance(t) {
            return false;
        }
        let flat = tgt.flat_index(t);
        if hit[flat] {
            return false;
        }
        hit[flat] = true;
    }
    // f(e) ∩ V0 ⊂ e
    for s in src.instances() {
        let e = src.edge(s.edge_index);
        let image = l.image(s);
        for &w in tgt.instance_vertices(image) {
            if let Some(u) = preimage[w] {
                if !e.contains(u) {
                    return false;
                }
            }
        }
    }
    // every target instance meeting V0 is an image
    tgt.instances().into_iter().all(|t| {
        hit[tgt.flat_index(t)]
            || tgt
                .instance_vertices(t)
                .iter()
                .all(|&w| preimage[w].is_none())
    })
}

/// Induces a partition of the source from a valid cover partition of the target.
pub fn pull_back(l: &LevellingMap, p: &CoverPartition) -> Result<CoverPartition> {
    match verify_cover_partition(&l.target, p)? {
        Verification::Valid => {}
        Verification::Uncovered { class, vertex } => {
            return input(format!(
                "partition is not a cover of the levelling target: class {class} misses vertex {vertex}"
            ))
        }
    }
    let pulled = CoverPartition::from_fn(&l.source, p.k(), |s| p.class_of(l.image(s)))?;
    match verify_cover_partition(&l.source, &pulled)? {
        Verification::Valid => Ok(pulled),
        Verification::Uncovered { class, vertex } => Err(Error::Internal(format!(
            "pulled-back partition leaves vertex {vertex} uncovered by class {class}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiHypergraph {
        MultiHypergraph::from_sets(4, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]).unwrap()
    }

    fn fano() -> MultiHypergraph {
        MultiHypergraph::from_sets(
            7,
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn trimming_a_regular_graph_is_a_no_op() {
        let c4 = MultiHypergraph::from_sets(4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let t = trim_to_degree(&c4, 2).unwrap();
        assert_eq!(t.hypergraph, c4);
        assert_eq!(t.provenance, c4.instances());
    }

    #[test]
    fn trimming_k4_to_two() {
        let t = trim_to_degree(&k4(), 2).unwrap();
        assert!(t.hypergraph.is_regular(2));
        assert_eq!(t.hypergraph.instance_count(), 6);
        // vertex 3 ends up removed from its last incident instance: edge 23 becomes empty
        assert!(t.hypergraph.edges().iter().any(|e| e.is_empty()));
    }

    #[test]
    fn trimming_a_star() {
        let star = MultiHypergraph::from_sets(4, [[0, 1], [0, 2], [0, 3]]).unwrap();
        let t = trim_to_degree(&star, 1).unwrap();
        assert!(t.hypergraph.is_regular(1));
        let sets: Vec<&[usize]> = t.hypergraph.edges().iter().map(|e| e.vertices()).collect();
        assert_eq!(sets, vec![&[0, 1][..], &[2][..], &[3][..]]);
    }

    #[test]
    fn trimming_below_degree_fails() {
        assert!(matches!(
            trim_to_degree(&k4(), 4),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn identity_on_fano() {
        let l = level(&fano(), 3, 3).unwrap();
        assert_eq!(l.target(), &fano());
        assert!(is_levelling(&l, 3, 3));
        assert!(!is_levelling(&l, 3, 4));
        let ident = LevellingMap::identity(&fano());
        assert!(!is_levelling(&ident, 3, 4));
    }

    #[test]
    fn levelling_k4() {
        let l = level(&k4(), 2, 2).unwrap();
        assert!(is_levelling(&l, 2, 2));
        assert_eq!(l.target().instance_count(), 2 * 6);
        let l = level(&k4(), 3, 3).unwrap();
        assert!(is_levelling(&l, 3, 3));
    }

    #[test]
    fn levelling_a_path_with_pendant() {
        // 0-1-2 plus pendant 1-3: min degree 1
        let h = MultiHypergraph::from_sets(4, [[0, 1], [1, 2], [1, 3]]).unwrap();
        let l = level(&h, 2, 1).unwrap();
        assert!(is_levelling(&l, 2, 1));
        assert!(l.target().is_regular(1));
        assert!(l.target().is_uniform(2));
    }

    #[test]
    fn broken_maps_are_detected() {
        let l = level(&k4(), 2, 2).unwrap();
        let mut map = l.edge_map().to_vec();
        map.swap(0, 5);
        let bad = LevellingMap::from_parts(
            l.source().clone(),
            l.target().clone(),
            map,
            l.embedded().to_vec(),
        )
        .unwrap();
        assert!(!is_levelling(&bad, 2, 2));
        let mut map = l.edge_map().to_vec();
        map[1] = map[0];
        let bad = LevellingMap::from_parts(
            l.source().clone(),
            l.target().clone(),
            map,
            l.embedded().to_vec(),
        )
        .unwrap();
        assert!(!is_levelling(&bad, 2, 2));
    }

    #[test]
    fn pull_back_through_identity() {
        let c4 = MultiHypergraph::from_sets(4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let l = level(&c4, 2, 2).unwrap();
        let p = CoverPartition::from_flat(&c4, 2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(pull_back(&l, &p).unwrap(), p);
        let bad = CoverPartition::from_flat(&c4, 2, vec![0, 0, 1, 1]).unwrap();
        assert!(matches!(pull_back(&l, &bad), Err(Error::Input(_))));
    }
}
