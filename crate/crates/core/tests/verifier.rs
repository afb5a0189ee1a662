mod common;

use monochar::verifier::{
    cech_report, period_scan_charges, quantization_scan, r2_membership, r2_report, relation_report, retract_report,
    sequence5_report, strings_report, uct_report,
};
use monochar::{
    character, curvature_form, shell_mesh, sphere_mesh, Complex, Error, Form, MeshScheme, Monopole, QuadratureSpec,
    EXACT_TOL,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn octa(level: u32) -> Complex {
    sphere_mesh(MeshScheme::Octahedron, level).unwrap()
}

#[test]
fn sequence_at_degree_two() {
    let r = sequence5_report(&octa(1), 2).unwrap();
    assert!(r.passed());
    let v = r.to_value();
    assert_eq!(v["report"], "sequence5");
    assert_eq!(v["left"], "H^2(S2,R/Z)=circle");
    assert_eq!(v["right"], "Lambda3=0");
    assert_eq!(v["iso"], "H2_hat ≅ R/Z");
    assert_eq!(v["claims"].as_array().unwrap().len(), 3);
}

#[test]
fn sequence_at_degree_one() {
    let r = sequence5_report(&octa(1), 1).unwrap();
    assert!(r.passed(), "{:#}", r.to_value());
    let periods = r.to_value()["periods"].as_array().unwrap().clone();
    assert_eq!(periods.len(), period_scan_charges().len());
    for row in &periods {
        let g = row["g"].as_f64().unwrap();
        assert!((row["period"].as_f64().unwrap() - 2.0 * g).abs() < 1e-9);
        assert_eq!(row["class"].as_i64().unwrap(), (2.0 * g).round() as i64);
    }
    assert!(matches!(sequence5_report(&octa(0), 3), Err(Error::Argument(_))));
}

#[test]
fn period_column_steps_by_two() {
    let k = octa(2);
    let period = |g: f64| character(&Monopole::new(g), &k, EXACT_TOL, true).unwrap().period();
    for g in [-1.3, -0.5, 0.0, 0.3, 0.5, 0.7, 1.0, 2.25] {
        assert!((period(g + 1.0) - period(g) - 2.0).abs() < 1e-12, "g = {g}");
    }
}

#[test]
fn uct_rows() {
    let r = uct_report(&sphere_mesh::<f64>(MeshScheme::Icosahedron, 1).unwrap()).unwrap();
    assert!(r.passed());
    let rows = r.to_value()["rows"].as_array().unwrap().clone();
    let circles: Vec<u64> = rows.iter().map(|row| row["circle_factors"].as_u64().unwrap()).collect();
    assert_eq!(circles, vec![1, 0, 1]);
    for row in &rows {
        assert!(row["ext"]["torsion"].as_array().unwrap().is_empty());
    }
}

#[test]
fn reports_need_a_closed_surface() {
    let rp2 = common::projective_plane();
    assert!(uct_report(&rp2).is_err());
    let shell: Complex = shell_mesh(MeshScheme::Octahedron, 0, 1.0, 2.0).unwrap();
    assert!(sequence5_report(&shell, 2).is_err());
    assert!(retract_report(&octa(0), &octa(0)).is_err());
}

#[test]
fn scan_table() {
    let k = octa(2);
    let g = [0.3, 0.5, 0.7, 1.0, 1.5];
    let table = quantization_scan(&k, &g, 11, 40, EXACT_TOL).unwrap();
    assert!(table.passed());
    for row in &table.rows {
        let expected = (2.0 * row.g - (2.0 * row.g).round()).abs();
        assert!((row.defect - expected).abs() < 1e-9);
        assert_eq!(row.quantized, expected < 1e-9);
        if row.quantized {
            assert!(row.cap_disagreement < 1e-9);
        } else {
            assert!((row.cap_disagreement - expected).abs() < 1e-9);
        }
    }
    assert_eq!(table.report().claims.len(), g.len());
}

#[test]
fn r2_examples() {
    let k = octa(1);
    let omega = curvature_form(&Monopole::new(1.0));
    assert!(r2_membership(&omega, 2, &k, EXACT_TOL).unwrap().member);
    assert!(!r2_membership(&omega, 1, &k, EXACT_TOL).unwrap().member);
    let zero = Form::zero(2).unwrap();
    let m = r2_membership(&zero, 0, &k, EXACT_TOL).unwrap();
    assert!(m.member && m.torsion_free);
    assert!(r2_report(&k, 1.0, EXACT_TOL).unwrap().passed());
    assert!(r2_report(&k, 0.3, EXACT_TOL).unwrap().passed());
}

#[test]
fn retract_matches_groups() {
    let r = retract_report(&octa(1), &shell_mesh::<f64>(MeshScheme::Octahedron, 1, 1.0, 2.0).unwrap()).unwrap();
    assert!(r.passed(), "{:#}", r.to_value());
    let rows = r.to_value()["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[2]["shell"], "Z");
}

#[test]
fn relation_and_cech_and_strings() {
    let k = octa(2);
    assert!(relation_report(&k, 0.5, 3, 30, EXACT_TOL).unwrap().passed());
    assert!(matches!(relation_report(&k, 0.3, 3, 30, EXACT_TOL), Err(Error::Quantization { .. })));
    let cech = cech_report(&k, &[-2, -1, 0, 1, 2]).unwrap();
    assert!(cech.passed());
    assert_eq!(cech.claims.len(), 5);
    let quad = QuadratureSpec::default();
    for g in [0.25, 0.3, 1.0] {
        assert!(strings_report(&k, g, &quad).unwrap().passed());
    }
}

#[test]
fn relabelled_mesh_gives_identical_descriptors() {
    let k = sphere_mesh(MeshScheme::Icosahedron, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut perm: Vec<usize> = (0..k.count(0)).collect();
    perm.shuffle(&mut rng);
    let mut order: Vec<usize> = (0..k.count(2)).collect();
    order.shuffle(&mut rng);
    let p = k.permuted(&perm, &order).unwrap();
    let rows = |k: &Complex| -> Value {
        let v = uct_report(k).unwrap().to_value();
        v["rows"].clone()
    };
    assert_eq!(rows(&k), rows(&p));
}
