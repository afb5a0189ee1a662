use monochar::characters::sampling::{northern_hemisphere, random_cycle, random_two_chain};
use monochar::characters::{predicted_string_defect, transition_phase, winding_number};
use monochar::{
    cech_check, cech_rep, character, holonomy, latitude_loop, sphere_mesh, string_defect, string_potential, Circle,
    Complex, Error, IntChain, MeshScheme, Monopole, Pole, QuadratureSpec, EXACT_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn octa(level: u32) -> Complex {
    sphere_mesh(MeshScheme::Octahedron, level).unwrap()
}

fn quad() -> QuadratureSpec {
    QuadratureSpec::default()
}

/// Random 2-chain using only triangles that stay away from both poles, so
/// its boundary avoids every Dirac string.
fn off_axis_chain(k: &Complex, rng: &mut ChaCha8Rng, terms: usize) -> IntChain {
    let allowed: Vec<usize> = (0..k.count(2))
        .filter(|&t| k.simplex(2, t).vertices().iter().all(|&v| k.point(v).rho() > 1e-6))
        .collect();
    IntChain::from_terms(
        2,
        (0..terms).map(|_| (allowed[rng.gen_range(0..allowed.len())], rng.gen_range(-3..=3))),
    )
}

#[test]
fn construction() {
    let k = octa(1);
    let chi = character(&Monopole::new(0.5), &k, EXACT_TOL, false).unwrap();
    assert_eq!(chi.chern(), 1);
    assert_eq!(chi.characteristic_class().unwrap(), 1);
    match character(&Monopole::new(0.3), &k, EXACT_TOL, false) {
        Err(Error::Quantization { defect }) => assert!((defect - 0.4).abs() < 1e-12),
        other => panic!("expected a quantization error, got {other:?}"),
    }
    let zero = character(&Monopole::new(0.0), &k, EXACT_TOL, false).unwrap();
    assert_eq!(zero.chern(), 0);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let (c, _) = random_cycle(&k, &mut rng).unwrap();
        assert!(zero.evaluate(&c).unwrap().value().abs() < 1e-12);
    }
}

#[test]
fn characteristic_classes() {
    let k = octa(1);
    let class = |g: f64| character(&Monopole::new(g), &k, EXACT_TOL, false).unwrap().characteristic_class().unwrap();
    assert_eq!(class(1.5), 3);
    assert_eq!(class(0.0), 0);
    assert_eq!(class(-1.0), -2);
    let bad = character(&Monopole::new(0.3), &k, EXACT_TOL, true).unwrap();
    assert!(bad.is_defective());
    match bad.characteristic_class() {
        Err(Error::Integrality { defect }) => assert!((defect - 0.4).abs() < 1e-12),
        other => panic!("expected an integrality error, got {other:?}"),
    }
}

#[test]
fn summary_json() {
    let k = octa(1);
    let chi = character(&Monopole::new(0.5), &k, EXACT_TOL, false).unwrap();
    let mut v = serde_json::to_value(chi.summary()).unwrap();
    monochar::cli::round_floats(&mut v);
    assert_eq!(v.to_string(), r#"{"chern":1,"defect":0.0,"g":0.5,"period":1.0}"#);
}

#[test]
fn equator_values() {
    let k = octa(2);
    let eq = latitude_loop(&k, 0.0).unwrap();
    let half = character(&Monopole::new(0.5), &k, EXACT_TOL, false).unwrap();
    assert!(half.evaluate(&eq).unwrap().distance(&Circle::new(0.5, 1e-9)) < 1e-9);
    let one = character(&Monopole::new(1.0), &k, EXACT_TOL, false).unwrap();
    assert!(one.evaluate(&eq).unwrap().distance(&Circle::new(0.0, 1e-9)) < 1e-9);
    assert_eq!(half.evaluate(&IntChain::zero(1)).unwrap().value(), 0.0);
    assert!(matches!(half.evaluate(&IntChain::simplex(1, 0)), Err(Error::Argument(_))));
    let north = northern_hemisphere(&k);
    assert!((half.evaluate_with_cap(&eq, &north).unwrap().value() - 0.5).abs() < 1e-12);
    assert!(half.evaluate_with_cap(&eq, &IntChain::zero(2)).is_err());
}

#[test]
fn relation_holds_for_quantized_charge() {
    let k = octa(2);
    let chi = character(&Monopole::new(0.5), &k, EXACT_TOL, false).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let (c, _) = random_cycle(&k, &mut rng).unwrap();
        let s = random_two_chain(&k, &mut rng, 15);
        assert!(chi.relation_defect(&c, &s).unwrap() < 1e-9);
    }
    let f = k.fundamental_cycle().unwrap();
    assert!(chi.relation_defect(&IntChain::zero(1), &f).unwrap() < 1e-9);
    assert!(chi.relation_defect(&IntChain::zero(1), &IntChain::zero(1)).is_err());
}

#[test]
fn relation_fails_by_two_g_when_defective() {
    let k = octa(1);
    let chi = character(&Monopole::new(0.25), &k, EXACT_TOL, true).unwrap();
    let f = k.fundamental_cycle().unwrap();
    let d = chi.relation_defect(&latitude_loop(&k, 0.0).unwrap(), &f).unwrap();
    assert!((d - 0.5).abs() < 1e-9);
}

#[test]
fn evaluation_is_a_homomorphism() {
    let k = octa(2);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for g in [0.5, 1.0, 1.5, -2.0] {
        let chi = character(&Monopole::new(g), &k, EXACT_TOL, false).unwrap();
        for _ in 0..30 {
            let (a, _) = random_cycle(&k, &mut rng).unwrap();
            let (b, _) = random_cycle(&k, &mut rng).unwrap();
            let lhs = chi.evaluate(&(&a + &b)).unwrap();
            let rhs = chi.evaluate(&a).unwrap() + chi.evaluate(&b).unwrap();
            assert!(lhs.distance(&rhs) < 1e-9);
            let neg = chi.evaluate(&a.scaled(-1)).unwrap();
            assert!(neg.distance(&-chi.evaluate(&a).unwrap()) < 1e-9);
        }
    }
}

#[test]
fn caps_do_not_matter_when_quantized() {
    let k = octa(2);
    let chi = character(&Monopole::new(0.5), &k, EXACT_TOL, false).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let (c, given) = random_cycle(&k, &mut rng).unwrap();
        let solved = chi.cap_solver().solve(&c).unwrap();
        let a = chi.evaluate_with_cap(&c, &given).unwrap();
        let b = chi.evaluate_with_cap(&c, &solved).unwrap();
        assert!(a.distance(&b) < 1e-9);
    }
}

#[test]
fn caps_matter_when_defective() {
    let k = octa(2);
    let f = k.fundamental_cycle().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for g in [0.3, 0.25, 0.7, -0.4] {
        let chi = character(&Monopole::new(g), &k, EXACT_TOL, true).unwrap();
        let expected = (2.0 * g).rem_euclid(1.0);
        for _ in 0..20 {
            let (c, s) = random_cycle(&k, &mut rng).unwrap();
            let a = chi.evaluate_with_cap(&c, &s).unwrap();
            let b = chi.evaluate_with_cap(&c, &(&s + &f)).unwrap();
            assert!(((b - a).value() - expected).abs() < 1e-9, "g = {g}");
        }
    }
}

#[test]
fn holonomy_examples() {
    let k = octa(2);
    let eq = latitude_loop(&k, 0.0).unwrap();
    let hol = |g: f64, pole| holonomy(&string_potential(&Monopole::new(g), pole), &k, &eq, &quad()).unwrap().value();
    assert!((hol(0.5, Pole::South) - 0.5).abs() < 1e-8);
    assert!((hol(0.5, Pole::North) - 0.5).abs() < 1e-8);
    assert!((hol(0.3, Pole::South) - 0.3).abs() < 1e-8);
    assert!((hol(0.3, Pole::North) - 0.7).abs() < 1e-8);
}

#[test]
fn string_defects() {
    let k = octa(2);
    let eq = latitude_loop(&k, 0.0).unwrap();
    let defect = |g: f64, c: &IntChain| string_defect(&Monopole::new(g), &k, c, Pole::South, Pole::North, &quad()).unwrap();
    assert!(defect(1.0, &eq) < 1e-8);
    assert!((defect(0.25, &eq) - 0.5).abs() < 1e-8);
    // a triangle away from the axis does not wind around it
    let t = (0..k.count(2))
        .find(|&t| k.simplex(2, t).vertices().iter().all(|&v| k.point(v).z.abs() < 0.8))
        .unwrap();
    let small = k.boundary(&IntChain::simplex(2, t)).unwrap();
    assert_eq!(winding_number(&k, &small).unwrap().round(), 0.0);
    for g in [0.1, 0.25, 0.37, 1.0] {
        assert!(defect(g, &small) < 1e-8);
        assert!((defect(g, &eq) - predicted_string_defect(&Monopole::new(g), &k, &eq).unwrap()).abs() < 1e-8);
    }
    let twice = eq.scaled(2);
    assert!((defect(0.3, &twice) - 0.2).abs() < 1e-8);
}

#[test]
fn holonomy_agrees_with_character() {
    let k = octa(2);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for g in [0.5, 1.0, -1.5] {
        let cfg = Monopole::new(g);
        let chi = character(&cfg, &k, EXACT_TOL, false).unwrap();
        let south = string_potential(&cfg, Pole::South);
        let north = string_potential(&cfg, Pole::North);
        let eq = latitude_loop(&k, 0.0).unwrap();
        let mut cycles = vec![eq];
        for _ in 0..40 {
            cycles.push(k.boundary(&off_axis_chain(&k, &mut rng, 10)).unwrap());
        }
        for c in &cycles {
            let value = chi.evaluate(c).unwrap();
            let hs = holonomy(&south, &k, c, &quad()).unwrap();
            let hn = holonomy(&north, &k, c, &quad()).unwrap();
            assert!(value.distance(&hs) < 1e-6);
            assert!(value.distance(&hn) < 1e-6);
            assert!(hs.distance(&hn) < 1e-8);
        }
    }
}

#[test]
fn cech_examples() {
    let k = octa(1);
    let rep = cech_rep(2, &Monopole::new(1.0), &k).unwrap();
    let out = cech_check(&rep).unwrap();
    assert_eq!(out.winding, 2);
    assert!(out.cocycle_residual < 1e-8);
    let trivial = cech_check(&cech_rep(0, &Monopole::new(0.0), &k).unwrap()).unwrap();
    assert_eq!(trivial.winding, 0);
    assert!(trivial.cocycle_residual == 0.0);
    let one = cech_check(&cech_rep(1, &Monopole::new(0.5), &k).unwrap()).unwrap();
    let chi = character(&Monopole::new(0.5), &k, EXACT_TOL, false).unwrap();
    assert_eq!(one.winding, chi.characteristic_class().unwrap());
    assert!(matches!(cech_rep(1, &Monopole::new(0.3), &k), Err(Error::Argument(_))));
}

#[test]
fn cech_winding_equals_class() {
    let k = octa(1);
    for n in -3..=3 {
        let cfg = Monopole::new(n as f64 / 2.0);
        let out = cech_check(&cech_rep(n, &cfg, &k).unwrap()).unwrap();
        let chi = character(&cfg, &k, EXACT_TOL, false).unwrap();
        assert_eq!(out.winding, n);
        assert_eq!(out.characteristic_class, chi.characteristic_class().unwrap());
        assert!((out.winding_integral - n as f64).abs() < 1e-8);
    }
}

#[test]
fn transition_function_winds_n_times() {
    for n in -3..=3i64 {
        let steps = 360;
        let mut total = 0.0;
        for i in 0..steps {
            let a = std::f64::consts::TAU * i as f64 / steps as f64;
            let b = std::f64::consts::TAU * (i + 1) as f64 / steps as f64;
            total += transition_phase(n, b) - transition_phase(n, a);
        }
        assert!((total - n as f64).abs() < 1e-12);
    }
}
