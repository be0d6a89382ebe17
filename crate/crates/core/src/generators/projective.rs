use crate::error::{input, Result};
use crate::hypergraph::MultiHypergraph;

/// Dimension and (prime) field size of a projective space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectiveParams {
    pub t: usize,
    pub q: usize,
}

impl ProjectiveParams {
    pub fn new(t: usize, q: usize) -> Result<Self> {
        if t == 0 {
            return input("projective dimension must be at least 1");
        }
        if !is_prime(q) {
            return input(format!("field size {q} is not prime"));
        }
        Ok(Self { t, q })
    }

    /// `(q^(t+1) - 1) / (q - 1)`
    pub fn point_count(&self) -> usize {
        (self.q.pow(self.t as u32 + 1) - 1) / (self.q - 1)
    }

    /// Points on a hyperplane, `(q^t - 1) / (q - 1)`; also the number of
    /// hyperplanes through a point.
    pub fn hyperplane_size(&self) -> usize {
        (self.q.pow(self.t as u32) - 1) / (self.q - 1)
    }
}

pub(crate) fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..)
            .take_while(|i| i * i <= q)
            .all(|i| !q.is_multiple_of(i))
}

/// Normalized coordinate vectors (first nonzero entry 1) of `PG(t, q)` in
/// lexicographic order; the position in this list is the vertex number.
pub fn projective_points(p: ProjectiveParams) -> Vec<Vec<usize>> {
    let dim = p.t + 1;
    let total = p.q.pow(dim as u32);
    let mut out = Vec::with_capacity(p.point_count());
    for code in 1..total {
        let mut v = vec![0; dim];
        let mut c = code;
        for slot in v.iter_mut().rev() {
            *slot = c % p.q;
            c /= p.q;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// Points of `PG(t, q)` against its hyperplanes `{x : a·x = 0 (mod q)}`.
///
/// The result is `d`-regular and `d`-uniform with `d = (q^t - 1)/(q - 1)`,
/// and has as many hyperplanes as points. Edges are in canonical order.
pub fn gen_projective(t: usize, q: usize) -> Result<MultiHypergraph> {
    let p = ProjectiveParams::new(t, q)?;
    let points = projective_points(p);
    let edges: Vec<Vec<usize>> = points
        .iter()
        .map(|a| {
            points
                .iter()
                .enumerate()
                .filter(|(_, x)| a.iter().zip(x.iter()).map(|(u, v)| u * v).sum::<usize>() % q == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let h = MultiHypergraph::from_sets(points.len(), edges)?;
    Ok(h.canonicalized().0)
}

/// The Fano plane, `PG(2, 2)`.
pub fn gen_fano() -> MultiHypergraph {
    gen_projective(2, 2).expect("2 is prime")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_counts() {
        let h = gen_fano();
        assert_eq!(h.n_vertices(), 7);
        assert_eq!(h.edge_count(), 7);
        assert!(h.is_uniform(3) && h.is_regular(3) && h.is_simple());
    }

    #[test]
    fn pg23_counts() {
        let h = gen_projective(2, 3).unwrap();
        assert_eq!((h.n_vertices(), h.edge_count()), (13, 13));
        assert!(h.is_uniform(4) && h.is_regular(4));
    }

    #[test]
    fn projective_line_over_f3() {
        let h = gen_projective(1, 3).unwrap();
        assert_eq!(h.n_vertices(), 4);
        assert_eq!(h.edge_count(), 4);
        assert!(h.is_uniform(1) && h.is_regular(1));
    }

    #[test]
    fn incidence_counts_over_grid() {
        for t in 1..=3 {
            for q in [2, 3, 5] {
                let p = ProjectiveParams::new(t, q).unwrap();
                let h = gen_projective(t, q).unwrap();
                let d = p.hyperplane_size();
                assert_eq!(h.n_vertices(), p.point_count());
                assert_eq!(h.edge_count(), p.point_count(), "t={t} q={q}");
                assert!(h.is_regular(d) && h.is_uniform(d), "t={t} q={q}");
                assert!(h.is_simple());
            }
        }
    }

    #[test]
    fn composite_fields_rejected() {
        assert!(gen_projective(2, 4).is_err());
        assert!(gen_projective(2, 1).is_err());
        assert!(gen_projective(0, 2).is_err());
    }

    #[test]
    fn points_are_normalized_and_sorted() {
        let pts = projective_points(ProjectiveParams::new(2, 2).unwrap());
        assert_eq!(pts[0], vec![0, 0, 1]);
        assert_eq!(pts[6], vec![1, 1, 1]);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }
}
