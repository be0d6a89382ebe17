//! The `.hyg` text format and the JSON partition / levelling sidecar files.
//!
//! ```text
//! hyg 1
//! vertices 4
//! # a 4-cycle with one doubled edge
//! edge 2 0 1
//! edge 1 1 2
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, EdgeInstance, MultiHypergraph};
use crate::levelling::LevellingMap;
use crate::partition::CoverPartition;

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

pub fn parse_hyg(text: &str) -> Result<MultiHypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, "hyg 1")) => {}
        Some((no, other)) => return parse_err(no, format!("expected `hyg 1`, found `{other}`")),
        None => return parse_err(1, "empty file"),
    }
    let n = match lines.next() {
        Some((no, l)) => {
            let mut it = l.split_whitespace();
            if it.next() != Some("vertices") {
                return parse_err(no, "expected `vertices <n>`");
            }
            let n = it
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or(Error::Parse {
                    line: no,
                    msg: "bad vertex count".into(),
                })?;
            if it.next().is_some() {
                return parse_err(no, "trailing tokens after vertex count");
            }
            n
        }
        None => return parse_err(2, "missing `vertices` line"),
    };

    let mut edges = Vec::new();
    for (no, l) in lines {
        let mut it = l.split_whitespace();
        if it.next() != Some("edge") {
            return parse_err(no, format!("expected `edge`, found `{l}`"));
        }
        let nums = it
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line: no,
                msg: e.to_string(),
            })?;
        let Some((&mult, vertices)) = nums.split_first() else {
            return parse_err(no, "edge line needs a multiplicity");
        };
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return parse_err(no, "edge vertices must be strictly increasing");
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return parse_err(no, format!("vertex {v} out of range for {n} vertices"));
        }
        let edge = Edge::new(vertices.to_vec(), mult).map_err(|e| Error::Parse {
            line: no,
            msg: e.to_string(),
        })?;
        edges.push(edge);
    }
    MultiHypergraph::new(n, edges)
}

/// Writes `h` with its edges in stored order. Use [`MultiHypergraph::canonicalized`]
/// first for byte-stable output.
pub fn write_hyg(h: &MultiHypergraph) -> String {
    let mut out = format!("hyg 1\nvertices {}\n", h.n_vertices());
    for e in h.edges() {
        write!(out, "edge {}", e.multiplicity()).unwrap();
        for v in e.vertices() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFile {
    pub k: usize,
    pub classes: Vec<Vec<[usize; 2]>>,
}

impl PartitionFile {
    pub fn from_partition(p: &CoverPartition) -> Self {
        Self {
            k: p.k(),
            classes: p
                .classes()
                .into_iter()
                .map(|c| {
                    c.into_iter()
                        .map(|i| [i.edge_index, i.copy_index])
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_partition(&self, h: &MultiHypergraph) -> Result<CoverPartition> {
        if self.classes.len() != self.k {
            return Err(Error::Input(format!(
                "k = {} but {} classes listed",
                self.k,
                self.classes.len()
            )));
        }
        let classes: Vec<Vec<EdgeInstance>> = self
            .classes
            .iter()
            .map(|c| c.iter().map(|&[e, i]| EdgeInstance::new(e, i)).collect())
            .collect();
        CoverPartition::from_classes(h, &classes)
    }
}

pub fn write_partition(p: &CoverPartition) -> String {
    serde_json::to_string(&PartitionFile::from_partition(p)).expect("plain data") + "\n"
}

pub fn parse_partition(text: &str, h: &MultiHypergraph) -> Result<CoverPartition> {
    let file: PartitionFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    file.to_partition(h)
}

/// Sidecar describing a levelling between two `.hyg` files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevellingSidecar {
    pub source_file: String,
    pub target_file: String,
    /// `[[src_edge, src_copy], [tgt_edge, tgt_copy]]` per source instance.
    pub edge_map: Vec<[[usize; 2]; 2]>,
    /// Target vertex of each source vertex.
    pub embedded: Vec<usize>,
}

impl LevellingSidecar {
    pub fn new(map: &LevellingMap, source_file: &str, target_file: &str) -> Self {
        let edge_map = map
            .source()
            .instances()
            .into_iter()
            .map(|s| {
                let t = map.image(s);
                [[s.edge_index, s.copy_index], [t.edge_index, t.copy_index]]
            })
            .collect();
        Self {
            source_file: source_file.to_string(),
            target_file: target_file.to_string(),
            edge_map,
            embedded: map.embedded().to_vec(),
        }
    }
}
