use ffdirichlet::algebra::{Field, LogNorm, Poly, PolyMat};
use ffdirichlet::dirichlet::{dirichlet_solve, verify_system, Epsilon, LinearFormsY, WeightVector};
use ffdirichlet::goodness::{di_measure_probe, sublevel_measure, value_distribution, PolyMap, UniPoly};
use ffdirichlet::lattice::{det_lognorm, flow_tau, lambda1_poly};
use ffdirichlet::laurent::{Ball, Laurent};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

fn small_field() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3), Just(4), Just(5)]
}

fn balanced(m: usize, n: usize, rng: &mut ChaCha8Rng) -> WeightVector {
    let cols: Vec<i64> = (0..n).map(|_| rng.gen_range(0..4)).collect();
    let mut rows = vec![0i64; m];
    for _ in 0..cols.iter().sum::<i64>() {
        rows[rng.gen_range(0..m)] += 1;
    }
    WeightVector::new(m, rows.into_iter().chain(cols).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_text_round_trips(q in small_field(), seed in any::<u64>(), top in -5i64..6, prec in 0i64..30) {
        let f = field(q);
        let x = Laurent::random(&f, top, prec, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(Laurent::parse(&f, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn poly_text_round_trips(q in small_field(), seed in any::<u64>(), deg in 0usize..8) {
        let f = field(q);
        let p = Poly::random(&f, deg, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(Poly::parse(&f, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn absolute_value_is_ultrametric(q in small_field(), seed in any::<u64>()) {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Laurent::random(&f, rng.gen_range(-4..5), 20, &mut rng);
        let b = Laurent::random(&f, rng.gen_range(-4..5), 20, &mut rng);
        let (na, nb) = (a.lognorm().unwrap(), b.lognorm().unwrap());
        prop_assert!((&a + &b).lognorm_upper() <= na.max(nb));
        prop_assert_eq!((&a * &b).lognorm().unwrap(), na + nb);
    }

    #[test]
    fn plain_system_always_has_a_witness(q in prop_oneof![Just(2u32), Just(3)], seed in any::<u64>(), shape in 0usize..3) {
        let (m, n) = [(1, 1), (1, 2), (2, 1)][shape];
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = LinearFormsY::random(&f, m, n, 32, seed);
        let t = balanced(m, n, &mut rng);
        let sol = dirichlet_solve(&y, &t).unwrap();
        prop_assert!(verify_system(&y, &t, &sol, None).unwrap());
    }

    #[test]
    fn flow_preserves_covolume(q in prop_oneof![Just(2u32), Just(3)], seed in any::<u64>(), shape in 0usize..3) {
        let (m, n) = [(1, 1), (1, 2), (2, 1)][shape];
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..m * n)
            .map(|_| {
                let digits: Vec<(i64, _)> = (1..=12).map(|k| (-k, f.elem(rng.gen_range(0..q)).unwrap())).collect();
                Laurent::from_terms(&f, &digits, None)
            })
            .collect();
        let y = LinearFormsY::new(&f, m, n, entries).unwrap();
        let t = balanced(m, n, &mut rng);
        prop_assert_eq!(det_lognorm(&flow_tau(&y, &t).unwrap()).unwrap(), LogNorm::Finite(0));
    }

    #[test]
    fn lambda1_is_a_lattice_invariant(q in prop_oneof![Just(2u32), Just(3)], seed in any::<u64>(), k in 1usize..4) {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<Poly>> = (0..k).map(|_| (0..k).map(|_| Poly::random(&f, 3, &mut rng)).collect()).collect();
        let m = PolyMat::from_rows(&f, rows);
        prop_assume!(!m.det().is_zero());
        // random unimodular matrix from elementary row operations
        let mut u = PolyMat::identity(&f, k);
        for _ in 0..3 * k {
            let (i, j) = (rng.gen_range(0..k), rng.gen_range(0..k));
            if i == j {
                u.swap_rows(0, i);
                continue;
            }
            let c = Poly::random(&f, 2, &mut rng);
            let added: Vec<Poly> = (0..k).map(|col| u.get(i, col) + &(&c * u.get(j, col))).collect();
            for (col, v) in added.into_iter().enumerate() {
                u.set(i, col, v);
            }
        }
        prop_assert_eq!(lambda1_poly(&u.mul(&m)).unwrap(), lambda1_poly(&m).unwrap());
    }

    #[test]
    fn sublevel_measure_is_monotone(q in prop_oneof![Just(2u32), Just(3)], seed in any::<u64>(), radius in -3i64..1) {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs: Vec<Laurent> = (0..3).map(|_| Laurent::from_poly(&Poly::random(&f, 1, &mut rng))).collect();
        let phi = UniPoly::new(&f, coeffs);
        let outer = Ball::closed(&Laurent::zero(&f), 0).unwrap();
        let digits: Vec<(i64, _)> = (1..=4).map(|k| (-k, f.elem(rng.gen_range(0..q)).unwrap())).collect();
        let inner = Ball::closed(&Laurent::from_terms(&f, &digits, None), radius - 1).unwrap();
        let mut last = None;
        for s in 1..=5 {
            let eps = Epsilon::new(s).unwrap();
            let big = sublevel_measure(&phi, &outer, eps, 1 << 20).unwrap();
            let small = sublevel_measure(&phi, &inner, eps, 1 << 20).unwrap();
            prop_assert!(small <= big);
            if let Some(prev) = last {
                prop_assert!(big <= prev);
            }
            last = Some(big);
        }
    }

    #[test]
    fn scaling_by_t_shifts_the_distribution(q in prop_oneof![Just(2u32), Just(3)], seed in any::<u64>()) {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs: Vec<Laurent> = (0..3).map(|_| Laurent::from_poly(&Poly::random(&f, 1, &mut rng))).collect();
        let phi = UniPoly::new(&f, coeffs);
        let scaled = phi.scale(&Laurent::from_poly(&Poly::t(&f)));
        let ball = Ball::unit(&f);
        let d = value_distribution(&phi, &ball, -8, 1 << 20).unwrap();
        let ds = value_distribution(&scaled, &ball, -7, 1 << 20).unwrap();
        for k in -8..2 {
            prop_assert_eq!(ds.measure_at_most(k + 1), d.measure_at_most(k));
        }
    }
}

#[test]
fn probe_curve_is_non_increasing() {
    let f = field(3);
    let curve = di_measure_probe(&PolyMap::moment_curve(&f, 2), &Ball::unit(&f), Epsilon::new(1).unwrap(), &[2, 3, 4], 4, 1 << 20).unwrap();
    assert!(curve.is_non_increasing());
}

#[test]
fn goodness_is_monotone_in_the_constants() {
    use ffdirichlet::cli::golden::curve_balls;
    use ffdirichlet::goodness::{cg_good_check, coefficient_grid};
    use num_rational::Ratio;

    let f = field(2);
    let family = coefficient_grid(&f, 2, 1);
    let balls = curve_balls(&f).unwrap();
    let eps: Vec<Epsilon> = (1..=4).map(|s| Epsilon::new(s).unwrap()).collect();
    let check = |c: i64, alpha: Ratio<i64>| cg_good_check(&family, Ratio::from_integer(c), alpha, &balls, &eps, 1 << 20).unwrap();
    let base = check(2, Ratio::new(1, 2));
    assert!(base.passed());
    let looser = [check(3, Ratio::new(1, 2)), check(2, Ratio::new(1, 3))];
    for r in &looser {
        assert!(r.passed());
        assert!(r.min_margin.unwrap() >= base.min_margin.unwrap());
    }
    // tightening enough must eventually fail
    assert!(!check(1, Ratio::from_integer(4)).passed());
}
