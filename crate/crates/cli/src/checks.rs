//! Brute-force cross-checks independent of the search in `covering::exact`.

use covering::partition::is_rainbow_colouring;
use covering::MultiHypergraph;

/// First vertex `k`-colouring (in lexicographic order) under which every edge
/// of `dual` sees all `k` colours, found by trying all `k^n` colourings.
pub fn exhaustive_rainbow_colouring(dual: &MultiHypergraph, k: usize) -> Option<Vec<usize>> {
    let n = dual.n_vertices();
    let total = k.checked_pow(n as u32)?;
    (0..total).find_map(|mut code| {
        let colours: Vec<usize> = (0..n)
            .map(|_| {
                let c = code % k;
                code /= k;
                c
            })
            .collect();
        is_rainbow_colouring(dual, &colours, k).then_some(colours)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use covering::generators::{gen_complete, gen_fano};

    #[test]
    fn fano_dual_has_no_two_colouring() {
        assert!(exhaustive_rainbow_colouring(&gen_fano().dualize().unwrap(), 2).is_none());
    }

    #[test]
    fn k4_dual_three_colouring() {
        let c = exhaustive_rainbow_colouring(&gen_complete(4).unwrap().dualize().unwrap(), 3);
        assert!(c.is_some());
    }
}
