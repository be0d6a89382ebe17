use super::{endpoints, EdgeColouring};
use crate::error::{Error, Result};
use crate::hypergraph::MultiHypergraph;

/// Proper edge colouring of a simple graph with at most `Δ + 1` colours
/// (Misra–Gries fan rotation with alternating-path inversion).
pub fn vizing_edge_colour(g: &MultiHypergraph) -> Result<EdgeColouring> {
    let ends = endpoints(g)?;
    if !g.is_simple() {
        return Err(Error::Unsupported(
            "edge colouring with Δ + 1 colours needs a simple graph".into(),
        ));
    }
    let n = g.n_vertices();
    let palette = g.max_degree() + 1;
    let mut state = State::new(n, palette, ends);
    for e in 0..state.ends.len() {
        state.colour_edge(e);
    }
    let colours = state
        .colour
        .iter()
        .map(|c| c.expect("every edge coloured"))
        .collect();
    Ok(EdgeColouring {
        palette_size: palette,
        colours,
    })
}

struct State {
    palette: usize,
    ends: Vec<(usize, usize)>,
    colour: Vec<Option<usize>>,
    // at[v * palette + c] = edge of colour c at v
    at: Vec<Option<usize>>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl State {
    fn new(n: usize, palette: usize, ends: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in ends.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        Self {
            palette,
            colour: vec![None; ends.len()],
            at: vec![None; n * palette],
            ends,
            adj,
        }
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v * self.palette + c].is_none()
    }

    fn free_colour(&self, v: usize) -> usize {
        (0..self.palette)
            .find(|&c| self.is_free(v, c))
            .expect("degree below palette size")
    }

    fn set(&mut self, e: usize, c: Option<usize>) {
        let (u, v) = self.ends[e];
        if let Some(old) = self.colour[e] {
            self.at[u * self.palette + old] = None;
            self.at[v * self.palette + old] = None;
        }
        self.colour[e] = c;
        if let Some(c) = c {
            self.at[u * self.palette + c] = Some(e);
            self.at[v * self.palette + c] = Some(e);
        }
    }

    fn colour_edge(&mut self, e: usize) {
        let (u, v0) = self.ends[e];

        // maximal fan at u starting with v0
        let mut fan = vec![(v0, e)];
        loop {
            let last = fan.last().unwrap().0;
            let next = self.adj[u].iter().copied().find(|&(w, f)| {
                self.colour[f].is_some_and(|c| self.is_free(last, c))
                    && !fan.iter().any(|&(x, _)| x == w)
            });
            match next {
                Some(x) => fan.push(x),
                None => break,
            }
        }

        let c = self.free_colour(u);
        let d = self.free_colour(fan.last().unwrap().0);

        // invert the cd-path that starts at u with a d-edge
        if c != d {
            let mut path = Vec::new();
            let (mut cur, mut want) = (u, d);
            while let Some(f) = self.at[cur * self.palette + want] {
                path.push(f);
                cur = self.other(f, cur);
                want = if want == d { c } else { d };
            }
            let old: Vec<usize> = path.iter().map(|&f| self.colour[f].unwrap()).collect();
            for &f in &path {
                self.set(f, None);
            }
            for (&f, &o) in path.iter().zip(&old) {
                self.set(f, Some(if o == c { d } else { c }));
            }
        }

        // first w in the fan whose prefix is still a fan and which has d free
        let mut w = None;
        for i in 0..fan.len() {
            if i > 0 {
                let prev = fan[i - 1].0;
                match self.colour[fan[i].1] {
                    Some(col) if self.is_free(prev, col) => {}
                    _ => break,
                }
            }
            if self.is_free(fan[i].0, d) {
                w = Some(i);
                break;
            }
        }
        let w = w.expect("Misra–Gries guarantees a rotation point");

        // rotate the prefix fan[0..=w] and colour the last edge with d
        let shifted: Vec<Option<usize>> = (0..w).map(|j| self.colour[fan[j + 1].1]).collect();
        for &(_, f) in &fan[..=w] {
            self.set(f, None);
        }
        for (j, col) in shifted.into_iter().enumerate() {
            self.set(fan[j].1, col);
        }
        self.set(fan[w].1, Some(d));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(n: usize, p: f64, seed: u64) -> MultiHypergraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sets = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    sets.push(vec![u, v]);
                }
            }
        }
        MultiHypergraph::from_sets(n, sets).unwrap()
    }

    /// Exhaustive search for a proper colouring with `c` colours.
    fn colourable(g: &MultiHypergraph, c: usize) -> bool {
        let m = g.instance_count();
        let ends = endpoints(g).unwrap();
        let total = c.pow(m as u32);
        (0..total).any(|mut code| {
            let cols: Vec<usize> = (0..m)
                .map(|_| {
                    let x = code % c;
                    code /= c;
                    x
                })
                .collect();
            (0..m).all(|a| {
                (a + 1..m).all(|b| {
                    let (p, q) = ends[a];
                    let (r, s) = ends[b];
                    cols[a] != cols[b] || (p != r && p != s && q != r && q != s)
                })
            })
        })
    }

    #[test]
    fn path_uses_at_most_three() {
        let g = MultiHypergraph::from_sets(3, [[0, 1], [1, 2]]).unwrap();
        let c = vizing_edge_colour(&g).unwrap();
        assert!(c.is_proper(&g));
        assert!(c.palette_size <= 3);
    }

    #[test]
    fn triangle_needs_three() {
        let g = MultiHypergraph::from_sets(3, [[0, 1], [1, 2], [0, 2]]).unwrap();
        assert!(!colourable(&g, 2));
        let c = vizing_edge_colour(&g).unwrap();
        assert!(c.is_proper(&g));
        let mut used = c.colours.clone();
        used.sort();
        used.dedup();
        assert_eq!(used.len(), 3);
    }

    #[test]
    fn random_graphs_are_properly_coloured() {
        for seed in 0..40 {
            let g = random_graph(30, 0.3, seed);
            let c = vizing_edge_colour(&g).unwrap();
            assert!(c.is_proper(&g), "seed {seed}");
            assert!(c.palette_size <= g.max_degree() + 1);
        }
        for seed in 0..200 {
            let g = random_graph(9, 0.6, 1000 + seed);
            let c = vizing_edge_colour(&g).unwrap();
            assert!(c.is_proper(&g), "seed {seed}");
        }
    }

    #[test]
    fn multigraphs_are_rejected() {
        let g = MultiHypergraph::from_sets(2, [[0, 1], [0, 1]]).unwrap();
        assert!(matches!(vizing_edge_colour(&g), Err(Error::Unsupported(_))));
    }
}
