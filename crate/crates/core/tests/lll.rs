use covering::generators::{gen_complete, gen_fano, gen_random_regular_uniform};
use covering::lll::{
    big_m, cover_recursive, deviation, random_cover_resample, recursion_depth, split_balanced,
    threshold_case1, BalanceRule, Case1Diagnostic, CoverCase, LllParams,
};
use covering::{verify_cover_partition, Error, MultiHypergraph};

/// Natural log from the series `ln x = 2 atanh((x-1)/(x+1))` after halving
/// `x` into `[1, 2)`.
fn ln_series(x: f64) -> f64 {
    fn atanh_series(y: f64) -> f64 {
        let (mut term, mut sum, y2) = (y, 0.0, y * y);
        for n in 0..400 {
            sum += term / (2 * n + 1) as f64;
            term *= y2;
        }
        sum
    }
    let ln2 = 2.0 * atanh_series(1.0 / 3.0);
    let (mut m, mut e) = (x, 0i32);
    while m >= 2.0 {
        m /= 2.0;
        e += 1;
    }
    while m < 1.0 {
        m *= 2.0;
        e -= 1;
    }
    e as f64 * ln2 + 2.0 * atanh_series((m - 1.0) / (m + 1.0))
}

fn oracle_case1(r: usize, k: usize) -> f64 {
    let l = ln_series(r as f64);
    (1.0 + 5.0 * ln_series(l) / l) * k as f64 * l
}

#[test]
fn threshold_matches_series_oracle() {
    assert_eq!(threshold_case1(3, 1), 2);
    assert_eq!(threshold_case1(64, 2), 23);
    for r in 3..=128 {
        for k in 1..=16 {
            let want = oracle_case1(r, k).ceil() as i64;
            let got = threshold_case1(r, k) as i64;
            assert!((got - want).abs() <= 1, "r={r} k={k}: {got} vs {want}");
        }
    }
}

#[test]
fn balance_slack_examples() {
    let lambda = deviation(4, 100);
    assert!((lambda - 4.0 * (100.0 * ln_series(400.0)).sqrt()).abs() < 1e-9);
    assert!((lambda - 97.9).abs() < 0.05);
    assert_eq!(BalanceRule::Strict.threshold(4, 100), 0);
}

#[test]
fn recursion_depth_halves_below_target() {
    for r in [3, 8, 50, 1000] {
        let target = 2.0 * big_m(r) / 3.0;
        for k in 1..200 {
            let i = recursion_depth(r, k);
            assert!((k as f64) / 2f64.powi(i as i32) < target);
            if i > 0 {
                assert!((k as f64) / 2f64.powi(i as i32 - 1) >= target);
            }
        }
    }
}

#[test]
fn diagnostic_in_the_generous_regime() {
    for r in 3..=6 {
        for k in 2..=4 {
            let rk = (r * k) as f64;
            let d = (3.0 * rk * rk.ln()).ceil() as usize;
            let diag = Case1Diagnostic::new(r, d, k);
            assert!(diag.chain_holds());
            assert!(diag.lll_applies(), "r={r} k={k} d={d}: {}", diag.product);
        }
    }
}

#[test]
fn resampling_examples() {
    for seed in 0..5 {
        let h = gen_random_regular_uniform(12, 3, 12, seed).unwrap();
        assert!(12 >= threshold_case1(3, 2));
        let p = random_cover_resample(&h, 2, &LllParams::with_seed(seed)).unwrap();
        assert!(verify_cover_partition(&h, &p).unwrap().is_valid());
    }
    let h = gen_random_regular_uniform(15, 3, 9, 1).unwrap();
    let p = random_cover_resample(&h, 3, &LllParams::default()).unwrap();
    assert!(verify_cover_partition(&h, &p).unwrap().is_valid());

    match random_cover_resample(&gen_fano(), 2, &LllParams::default()) {
        Err(Error::Exhausted { bad_vertices, .. }) => assert!(!bad_vertices.is_empty()),
        other => panic!("Fano cannot split in two: {other:?}"),
    }
}

#[test]
fn balanced_split_examples() {
    let c6 = MultiHypergraph::from_sets(6, (0..6).map(|i| [i, (i + 1) % 6])).unwrap();
    let s = split_balanced(&c6, BalanceRule::Strict, 100, 0).unwrap();
    assert_eq!(s.rounds, 0);
    assert_eq!(s.red.len(), 6);

    let h = gen_random_regular_uniform(20, 4, 100, 3).unwrap();
    let a = split_balanced(&h, BalanceRule::Practical, 10_000, 9).unwrap();
    let b = split_balanced(&h, BalanceRule::Practical, 10_000, 9).unwrap();
    assert_eq!(a, b);
    let red = MultiHypergraph::restrict_to_instances(&h, &a.red_instances(&h)).0;
    let blue = MultiHypergraph::restrict_to_instances(&h, &a.blue_instances(&h)).0;
    assert!(red.min_degree().unwrap() >= a.threshold);
    assert!(blue.min_degree().unwrap() >= a.threshold);

    let path = MultiHypergraph::from_sets(3, [[0, 1], [1, 2]]).unwrap();
    assert!(matches!(
        split_balanced(&path, BalanceRule::Practical, 10, 0),
        Err(Error::Input(_))
    ));
}

#[test]
fn recursive_cover_examples() {
    let h = gen_random_regular_uniform(24, 3, 12, 5).unwrap();
    let direct = cover_recursive(&h, 2, &LllParams::default()).unwrap();
    assert_eq!(direct.depth, 0);
    assert_eq!(direct.leaves, 1);

    let h = gen_random_regular_uniform(30, 3, 30, 11).unwrap();
    let params = LllParams {
        force_case: Some(CoverCase::Recursive),
        ..LllParams::with_seed(4)
    };
    let out = cover_recursive(&h, 4, &params).unwrap();
    assert_eq!((out.depth, out.leaves), (1, 2));
    assert_eq!(out.partition.k(), 4);
    assert!(verify_cover_partition(&h, &out.partition)
        .unwrap()
        .is_valid());
    let again = cover_recursive(&h, 4, &params).unwrap();
    assert_eq!(again.partition, out.partition);

    let g = gen_complete(5).unwrap();
    assert!(matches!(
        cover_recursive(&g, 2, &params),
        Err(Error::Input(_))
    ));
}
