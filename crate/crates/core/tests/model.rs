use covering::format::{parse_hyg, parse_partition, write_hyg, write_partition};
use covering::generators::{gen_complete, gen_fano};
use covering::partition::is_rainbow_colouring;
use covering::verify_cover_partition;
use covering::{CoverPartition, Edge, EdgeInstance, Error, MultiHypergraph, Verification};

fn c4() -> MultiHypergraph {
    MultiHypergraph::from_sets(4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap()
}

#[test]
fn degrees_count_instances() {
    let fano = gen_fano();
    assert!((0..7).all(|v| fano.degree(v).unwrap() == 3));

    let empty = MultiHypergraph::new(1, vec![]).unwrap();
    assert_eq!(empty.degree(0).unwrap(), 0);

    let tri = MultiHypergraph::new(
        3,
        vec![
            Edge::new(vec![0, 1], 2).unwrap(),
            Edge::simple(vec![1, 2]).unwrap(),
            Edge::simple(vec![0, 2]).unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(tri.degree(0).unwrap(), 3);
    assert!(matches!(tri.degree(3), Err(Error::Input(_))));
}

#[test]
fn handshake_identity() {
    for h in [gen_fano(), gen_complete(6).unwrap(), c4()] {
        let by_degree: usize = h.degrees().iter().sum();
        let by_edges: usize = h.edges().iter().map(|e| e.len() * e.multiplicity()).sum();
        assert_eq!(by_degree, by_edges);
    }
}

#[test]
fn verifier_examples() {
    let fano = gen_fano();
    let one = CoverPartition::constant(&fano, 1, 0).unwrap();
    assert!(verify_cover_partition(&fano, &one).unwrap().is_valid());

    let h = c4();
    let e = |i| EdgeInstance::new(i, 0);
    let pos = |a: usize, b: usize| {
        h.edges()
            .iter()
            .position(|x| x.vertices() == [a, b])
            .unwrap()
    };
    let matchings = CoverPartition::from_classes(
        &h,
        &[
            vec![e(pos(0, 1)), e(pos(2, 3))],
            vec![e(pos(1, 2)), e(pos(0, 3))],
        ],
    )
    .unwrap();
    assert_eq!(
        verify_cover_partition(&h, &matchings).unwrap(),
        Verification::Valid
    );

    let paths = CoverPartition::from_classes(
        &h,
        &[
            vec![e(pos(0, 1)), e(pos(1, 2))],
            vec![e(pos(2, 3)), e(pos(0, 3))],
        ],
    )
    .unwrap();
    assert_eq!(
        verify_cover_partition(&h, &paths).unwrap(),
        Verification::Uncovered {
            class: 0,
            vertex: 3
        }
    );
}

#[test]
fn partial_assignment_is_rejected() {
    let h = c4();
    let err = CoverPartition::from_classes(&h, &[vec![EdgeInstance::new(0, 0)], vec![]]);
    assert!(matches!(err, Err(Error::Input(_))));
}

#[test]
fn dual_swaps_parameters() {
    let fano = gen_fano();
    let dual = fano.dualize().unwrap();
    assert_eq!(dual.n_vertices(), 7);
    assert!(dual.is_uniform(3) && dual.is_regular(3));

    let single = MultiHypergraph::from_sets(2, [[0, 1]]).unwrap();
    let dual = single.dualize().unwrap();
    assert_eq!(dual.n_vertices(), 1);
    assert_eq!(dual.edge_count(), 2);
    assert!(dual.edges().iter().all(|e| e.vertices() == [0]));

    // 3-uniform, vertex degrees 1..=2
    let h = MultiHypergraph::from_sets(5, [vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
    let dual = h.dualize().unwrap();
    assert!(dual.is_regular(3));
    assert_eq!(dual.max_edge_size(), 2);

    let doubled = MultiHypergraph::new(2, vec![Edge::new(vec![0, 1], 2).unwrap()]).unwrap();
    assert!(matches!(doubled.dualize(), Err(Error::Unsupported(_))));
}

fn all_simple(n: usize, max_edges: usize) -> Vec<MultiHypergraph> {
    let masks: Vec<u32> = (1..1u32 << n).collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        n: usize,
        masks: &[u32],
        start: usize,
        max_edges: usize,
        pick: &mut Vec<u32>,
        out: &mut Vec<MultiHypergraph>,
    ) {
        let union = pick.iter().fold(0, |a, &m| a | m);
        if !pick.is_empty() && union == (1 << n) - 1 {
            let sets = pick
                .iter()
                .map(|&m| (0..n).filter(|v| m >> v & 1 == 1).collect::<Vec<_>>());
            out.push(MultiHypergraph::from_sets(n, sets).unwrap());
        }
        if pick.len() == max_edges {
            return;
        }
        for i in start..masks.len() {
            pick.push(masks[i]);
            rec(n, masks, i + 1, max_edges, pick, out);
            pick.pop();
        }
    }
    rec(n, &masks, 0, max_edges, &mut pick, &mut out);
    out
}

#[test]
fn dual_of_dual_is_the_input() {
    for n in 1..=4 {
        for h in all_simple(n, 3) {
            let back = h.dualize().unwrap().dualize().unwrap();
            assert_eq!(back.canonicalized().0, h.canonicalized().0);
        }
    }
}

#[test]
fn covers_are_rainbow_colourings_of_the_dual() {
    for n in 1..=4 {
        for h in all_simple(n, 4) {
            let dual = h.dualize().unwrap();
            let m = h.instance_count();
            for k in 1usize..=3 {
                for code in 0..k.pow(m as u32) {
                    let colours: Vec<usize> = (0..m).map(|i| code / k.pow(i as u32) % k).collect();
                    let p = CoverPartition::from_flat(&h, k, colours.clone()).unwrap();
                    let valid = verify_cover_partition(&h, &p).unwrap().is_valid();
                    assert_eq!(valid, is_rainbow_colouring(&dual, &colours, k));
                }
            }
        }
    }
}

#[test]
fn text_formats_round_trip() {
    let h = MultiHypergraph::new(
        4,
        vec![
            Edge::new(vec![0, 1], 2).unwrap(),
            Edge::simple(vec![1, 2, 3]).unwrap(),
            Edge::simple(vec![]).unwrap(),
        ],
    )
    .unwrap();
    let back = parse_hyg(&write_hyg(&h)).unwrap();
    assert_eq!(back, h);

    let p = CoverPartition::from_flat(&h, 2, vec![0, 1, 1, 0]).unwrap();
    assert_eq!(parse_partition(&write_partition(&p), &h).unwrap(), p);
}

#[test]
fn parse_errors_carry_a_line() {
    let err = parse_hyg("hyg 1\nvertices 2\nedge 1 0 5\n").unwrap_err();
    assert!(
        matches!(err, Error::Parse { line: 3, .. } | Error::Input(_)),
        "{err:?}"
    );
}
