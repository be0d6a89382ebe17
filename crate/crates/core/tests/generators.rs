use covering::exact::{covering_number_exact, min_cover_size, SolverLimits};
use covering::generators::{
    cube_vertices, expand, extend_by_vertex, gen_complete, gen_cube, gen_fano,
    gen_odd_near_regular, gen_projective, gen_random_regular_uniform, gen_triangle_multi,
    multiply_edges, ProjectiveParams,
};
use covering::{Error, MultiHypergraph};

fn oracle(h: &MultiHypergraph) -> usize {
    covering_number_exact(h, SolverLimits::default())
        .unwrap()
        .value
        .expect("small instance settles")
}

#[test]
fn projective_counts() {
    let fano = gen_projective(2, 2).unwrap();
    assert_eq!((fano.n_vertices(), fano.instance_count()), (7, 7));
    assert!(fano.is_uniform(3) && fano.is_regular(3));
    assert_eq!(fano, gen_fano());

    let pg23 = gen_projective(2, 3).unwrap();
    assert_eq!((pg23.n_vertices(), pg23.instance_count()), (13, 13));
    assert!(pg23.is_uniform(4) && pg23.is_regular(4));

    let line = gen_projective(1, 3).unwrap();
    assert_eq!((line.n_vertices(), line.instance_count()), (4, 4));
    assert!(line.is_uniform(1) && line.is_regular(1));

    for t in 1..=3 {
        for q in [2usize, 3, 5] {
            let h = gen_projective(t, q).unwrap();
            let points = (q.pow(t as u32 + 1) - 1) / (q - 1);
            let size = (q.pow(t as u32) - 1) / (q - 1);
            assert_eq!(h.n_vertices(), points);
            assert_eq!(h.instance_count(), points);
            assert!(h.is_uniform(size) && h.is_regular(size) && h.is_simple());
            let p = ProjectiveParams::new(t, q).unwrap();
            assert_eq!((p.point_count(), p.hyperplane_size()), (points, size));
        }
    }
    assert!(matches!(gen_projective(2, 4), Err(Error::Input(_))));
}

#[test]
fn cube_examples() {
    let h = gen_cube(4).unwrap();
    assert_eq!(h.n_vertices(), 11);
    assert_eq!(h.instance_count(), 4);
    assert!(h.is_uniform(7));
    assert_eq!(h.min_degree(), Some(2));

    assert_eq!(cube_vertices(2), vec![vec![1], vec![2], vec![1, 2]]);
    let h = gen_cube(2).unwrap();
    let mut edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.vertices().to_vec()).collect();
    edges.sort();
    assert_eq!(edges, vec![vec![0, 2], vec![1, 2]]);

    for d in 4..=5 {
        assert_eq!(oracle(&gen_cube(d).unwrap()), 1);
    }
}

#[test]
fn cube_half_edge_sets_miss_a_vertex() {
    for d in 1..=8 {
        let h = gen_cube(d).unwrap();
        let sets = cube_vertices(d);
        // label each generated edge by the coordinate all its vertices share
        let label: Vec<usize> = h
            .edges()
            .iter()
            .map(|e| {
                (1..=d)
                    .find(|i| {
                        e.len() == sets.iter().filter(|a| a.contains(i)).count()
                            && e.vertices().iter().all(|&v| sets[v].contains(i))
                    })
                    .unwrap()
            })
            .collect();
        for mask in 0u32..1 << d {
            let b: Vec<usize> = (1..=d).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            if 2 * b.len() > d {
                continue;
            }
            let rest: Vec<usize> = (1..=d).filter(|i| !b.contains(i)).collect();
            let witness = sets.iter().position(|a| *a == rest).unwrap();
            let covered = h
                .edges()
                .iter()
                .zip(&label)
                .any(|(e, i)| b.contains(i) && e.contains(witness));
            assert!(!covered, "d={d} B={b:?}");
        }
    }
}

#[test]
fn triangle_examples() {
    let k2 = gen_triangle_multi(2).unwrap();
    assert!(k2.is_simple());
    assert_eq!(oracle(&k2), 1);

    let k3 = gen_triangle_multi(3).unwrap();
    let m: Vec<usize> = k3.edges().iter().map(|e| e.multiplicity()).collect();
    assert_eq!(m, vec![2, 2, 1]);
    assert_eq!(k3.min_degree(), Some(3));
    assert!(oracle(&k3) <= 2);

    let k4 = gen_triangle_multi(4).unwrap();
    assert_eq!(k4.min_degree(), Some(4));
    assert!(oracle(&k4) <= 3);

    for k in 2..=9 {
        let h = gen_triangle_multi(k).unwrap();
        assert!(h.instance_count() < 2 * k);
        assert_eq!(h.min_degree(), Some((4 * k + 1) / 3 - 1));
    }
    assert!(matches!(gen_triangle_multi(1), Err(Error::Input(_))));
}

#[test]
fn complete_and_near_regular() {
    let h = gen_odd_near_regular(3).unwrap();
    assert_eq!(h.n_vertices(), 5);
    assert_eq!(h.degrees(), vec![4, 3, 3, 3, 3]);
    assert_eq!(h.instance_count(), 8);
    assert!(oracle(&h) <= 2);

    for k in [3, 5, 7] {
        let h = gen_odd_near_regular(k).unwrap();
        assert_eq!(h.min_degree(), Some(k));
        assert!(h.is_simple() && h.is_graph());
    }
    assert!(oracle(&gen_complete(5).unwrap()) < 4);
    assert!(gen_odd_near_regular(4).is_err());
}

#[test]
fn extend_and_multiply() {
    let ext = extend_by_vertex(&gen_fano()).unwrap();
    assert!(ext.is_uniform(4));
    assert_eq!(ext.degree(7).unwrap(), 7);

    let k3 = gen_complete(3).unwrap();
    let ext = extend_by_vertex(&k3).unwrap();
    assert!(ext.is_uniform(3));
    assert_eq!(ext.degree(3).unwrap(), 3);

    assert_eq!(multiply_edges(&k3, 1).unwrap(), k3);
    assert!(multiply_edges(&k3, 2).unwrap().is_regular(4));
    assert!(multiply_edges(&k3, 0).is_err());

    for h in [
        k3,
        gen_complete(4).unwrap(),
        gen_fano(),
        gen_odd_near_regular(3).unwrap(),
    ] {
        let base = oracle(&h);
        for s in 2..=3 {
            assert!(oracle(&multiply_edges(&h, s).unwrap()) >= base);
        }
    }
}

#[test]
fn expansion_of_the_triangle() {
    let k3 = gen_complete(3).unwrap();
    let e = expand(&k3, 2, 2, None).unwrap();
    let h = &e.hypergraph;
    assert!(h.is_uniform(3));
    assert_eq!(e.embedded, vec![0, 1, 2]);
    for &v in &e.embedded {
        assert_eq!(h.degree(v).unwrap(), 4);
    }
    assert!(h.min_degree().unwrap() >= 4);

    let t = min_cover_size(&k3).unwrap();
    assert_eq!(t, 2);
    let out = covering_number_exact(h, SolverLimits::default()).unwrap();
    assert!(out.upper <= 2 * 3 / t);

    assert!(matches!(expand(&k3, 2, 2, Some(1)), Err(Error::Input(_))));
}

#[test]
fn random_regular_uniform() {
    let h = gen_random_regular_uniform(6, 3, 2, 7).unwrap();
    assert_eq!(h.instance_count(), 4);
    assert!(h.is_regular(2) && h.is_uniform(3));

    let m = gen_random_regular_uniform(4, 2, 1, 7).unwrap();
    assert_eq!(m.instance_count(), 2);
    assert!(m.is_regular(1) && m.is_uniform(2));

    for seed in 0..5 {
        assert_eq!(
            gen_random_regular_uniform(12, 3, 5, seed).unwrap(),
            gen_random_regular_uniform(12, 3, 5, seed).unwrap()
        );
    }
    assert!(matches!(
        gen_random_regular_uniform(5, 3, 2, 0),
        Err(Error::Input(_))
    ));
}
