//! Acceptance suite: one test per certification criterion, each printing a
//! single pass/fail line (run with `--nocapture` to see them).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use h21_core::caratheodory::{expand_p, rational_from_schur, sample_schur, schur_to_coeffs};
use h21_core::classes::{build_from_p, extremal_witness, GeometricClass};
use h21_core::eta::eta_root;
use h21_core::functionals::{h21_log, h21_schur_raw, log_coeffs, SsVariant};
use h21_core::verifier::{
    consistency_suite, envelope_check, ss_printed_erratum, theoretical_bound, verify_class,
    verify_extremal, SearchConfig, Status,
};
use h21_core::ykm::{y_closed, y_oracle};
use h21_core::{Report, Series, C64};

const SEED: u64 = 42;

fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn criterion(id: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {id:02} {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {id:02} {name} failed: {detail}");
}

fn certify(tag: GeometricClass) -> Report {
    verify_class::<f64>(tag, &SearchConfig::default())
}

fn constant_bound_checks(r: &Report) -> (bool, String) {
    let extremal = r.extremal_value.expect("filled by verify_class");
    let ok = r.theoretical_bound == 0.25
        && r.observed_max >= 0.249
        && r.observed_max <= 0.25 + 1e-9
        && (extremal - 0.25).abs() <= 1e-12
        && r.status == Status::Pass
        && r.wall_time_s <= 60.0;
    let detail = format!(
        "bound={}, observed={}, extremal={}, status={}, wall={:.2}s",
        r.theoretical_bound, r.observed_max, extremal, r.status, r.wall_time_s
    );
    (ok, detail)
}

#[test]
fn criterion_01_ss_bound() {
    let r = certify(GeometricClass::Ss);
    let (ok, detail) = constant_bound_checks(&r);
    criterion(1, "ss-bound", ok, &detail);
}

#[test]
fn criterion_02_f2_bound() {
    let r = certify(GeometricClass::F2);
    let (ok, detail) = constant_bound_checks(&r);

    // the extremal function coincides with the symmetric-points witness
    let w_ss = extremal_witness::<f64>(GeometricClass::Ss);
    let w_f2 = extremal_witness::<f64>(GeometricClass::F2);
    let same_witness = w_ss == w_f2;
    let p = expand_p(&rational_from_schur(&w_ss), 8).unwrap();
    let f_ss = build_from_p(GeometricClass::Ss, &p, 8).unwrap();
    let f_f2 = build_from_p(GeometricClass::F2, &p, 8).unwrap();
    let same_function = f_ss.series().max_deviation(f_f2.series()) <= 1e-12;

    criterion(
        2,
        "f2-bound",
        ok && same_witness && same_function,
        &format!("{detail}, shared extremal function: {same_function}"),
    );
}

#[test]
fn criterion_03_f1_bound() {
    let r = certify(GeometricClass::F1);
    let eta = r.eta.expect("f1 has an eta");
    let ok = (eta - 0.0302689).abs() <= 1e-5
        && (r.theoretical_bound - 0.155106).abs() <= 1e-5
        && r.observed_max >= r.theoretical_bound - 1e-3
        && r.observed_max <= r.theoretical_bound + 1e-9
        && r.status == Status::Pass;
    criterion(
        3,
        "f1-bound",
        ok,
        &format!(
            "eta={eta}, bound={}, observed={}, status={}",
            r.theoretical_bound, r.observed_max, r.status
        ),
    );
}

#[test]
fn criterion_04_f3_bound() {
    let r = certify(GeometricClass::F3);
    let eta = r.eta.expect("f3 has an eta");
    // own-oracle bound: bisection + Horner quartic, scaled by 2304
    let bound_ok = (r.theoretical_bound - 0.2342).abs() <= 1e-4;
    // zeta1 = 1 slice is constant 133/2304 regardless of zeta2, zeta3
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let slice_ok = (0..16).all(|_| {
        let z2 = h21_core::caratheodory::sample_disk::<f64, _>(&mut rng);
        let z3 = h21_core::caratheodory::sample_disk::<f64, _>(&mut rng);
        let h = h21_schur_raw(GeometricClass::F3, 1.0, z2, z3, SsVariant::Recurrence);
        (h.norm() - 133.0 / 2304.0).abs() <= 1e-12
    });
    let ok = (eta - 0.373776).abs() <= 1e-5
        && bound_ok
        && r.observed_max >= r.theoretical_bound - 1e-3
        && r.observed_max <= r.theoretical_bound + 1e-9
        && slice_ok
        && r.status == Status::Pass;
    criterion(
        4,
        "f3-bound",
        ok,
        &format!(
            "eta={eta}, bound={}, observed={}, slice133/2304={slice_ok}, status={}",
            r.theoretical_bound, r.observed_max, r.status
        ),
    );
}

#[test]
fn criterion_05_f4_bound() {
    let r = certify(GeometricClass::F4);
    let eta = r.eta.expect("f4 has an eta");
    let extremal = r.extremal_value.expect("filled by verify_class");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let slice_ok = (0..16).all(|_| {
        let z2 = h21_core::caratheodory::sample_disk::<f64, _>(&mut rng);
        let z3 = h21_core::caratheodory::sample_disk::<f64, _>(&mut rng);
        let h = h21_schur_raw(GeometricClass::F4, 1.0, z2, z3, SsVariant::Recurrence);
        (h.norm() - 1.0 / 12.0).abs() <= 1e-12
    });
    let ok = (eta - 0.381423).abs() <= 1e-5
        && (r.theoretical_bound - 0.1839).abs() <= 1e-4
        && (extremal - r.theoretical_bound).abs() <= 1e-4
        && r.observed_max >= r.theoretical_bound - 1e-3
        && r.observed_max <= r.theoretical_bound + 1e-9
        && slice_ok
        && r.status == Status::Pass;
    criterion(
        5,
        "f4-bound",
        ok,
        &format!(
            "eta={eta}, bound={}, extremal={extremal}, observed={}, slice1/12={slice_ok}",
            r.theoretical_bound, r.observed_max
        ),
    );
}

#[test]
fn criterion_06_witness_reconstruction() {
    // printed 6-decimal coefficients of the three reference witnesses
    let eta1: f64 = eta_root(GeometricClass::F1).unwrap();
    let eta3: f64 = eta_root(GeometricClass::F3).unwrap();
    let eta4: f64 = eta_root(GeometricClass::F4).unwrap();
    type WitnessRow = (f64, f64, f64, [f64; 4], [f64; 4]);
    let cases: [WitnessRow; 3] = [
        (
            eta1,
            1.0,
            0.0,
            [1.0, 0.0605378, 1.0, 0.0],
            [1.0, 0.0, -1.0, 0.0],
        ),
        (
            eta3,
            -1.0,
            0.0,
            [1.0, 0.0, -1.0, 0.0],
            [1.0, -0.747551, 1.0, 0.0],
        ),
        (
            eta4,
            -0.0871127,
            1.0,
            [1.0, 0.261084, 0.261084, 1.0],
            [1.0, -0.501762, 0.501762, -1.0],
        ),
    ];
    let mut worst: f64 = 0.0;
    for (z1, z2, z3, num, den) in cases {
        let params = h21_core::Schur::from_real(z1, z2, z3).unwrap();
        let w = rational_from_schur(&params);
        for k in 0..4 {
            worst = worst.max((w.numerator()[k] - c64(num[k], 0.0)).norm());
            worst = worst.max((w.denominator()[k] - c64(den[k], 0.0)).norm());
        }
    }
    criterion(
        6,
        "witness-reconstruction",
        worst <= 5e-6,
        &format!("worst printed-coefficient deviation {worst:.2e}"),
    );
}

#[test]
fn criterion_07_disk_maximum_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let triples: Vec<(f64, f64, f64)> = (0..1000)
        .map(|_| {
            (
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            )
        })
        .collect();
    let worst = triples
        .par_iter()
        .map(|&(a, b, c)| (y_closed(a, b, c).value - y_oracle(a, b, c, 720, 720).value).abs())
        .reduce(|| 0.0, f64::max);
    criterion(
        7,
        "disk-maximum-equivalence",
        worst <= 1e-4,
        &format!("1000 triples, worst |closed - oracle| = {worst:.3e}"),
    );
}

#[test]
fn criterion_08_route_agreement() {
    let mut worst: f64 = 0.0;
    for tag in GeometricClass::ALL {
        worst = worst.max(consistency_suite::<f64>(tag, 200, SEED));
    }
    let erratum = ss_printed_erratum::<f64>();
    let erratum_ok = (erratum.modulus_gap - 10.0 / 48.0).abs() <= 1e-12;
    criterion(
        8,
        "route-agreement",
        worst <= 1e-10 && erratum_ok,
        &format!(
            "worst residual {worst:.3e}; flagged erratum gap {} (expected 10/48)",
            erratum.modulus_gap
        ),
    );
}

#[test]
fn criterion_09_envelope_domination() {
    let mut worst = f64::NEG_INFINITY;
    for tag in GeometricClass::ALL {
        worst = worst.max(envelope_check::<f64>(tag, 500, SEED));
    }
    criterion(
        9,
        "envelope-domination",
        worst <= 1e-10,
        &format!("500 samples per class, worst violation {worst:.3e}"),
    );
}

#[test]
fn criterion_10_rotation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst: f64 = 0.0;
    for tag in GeometricClass::ALL {
        for _ in 0..20 {
            let params = sample_schur::<f64, _>(&mut rng);
            let cs = schur_to_coeffs(&params);
            let mut coeffs = vec![c64(0.0, 0.0); 9];
            coeffs[0] = c64(1.0, 0.0);
            coeffs[1] = cs.c1;
            coeffs[2] = cs.c2;
            coeffs[3] = cs.c3;
            let p = Series::new(coeffs);
            let f = build_from_p(tag, &p, 8).unwrap();
            let base = h21_log(&log_coeffs(&f)).norm();
            for _ in 0..16 {
                let theta = rng.gen_range(0.0..std::f64::consts::TAU);
                let rotated = f.series().rotate(theta).unwrap();
                let l = Series::new(rotated.coeffs()[1..].to_vec()).log().unwrap();
                let g = h21_core::functionals::LogCoeffVector {
                    gamma1: l.coeff(1) * c64(0.5, 0.0),
                    gamma2: l.coeff(2) * c64(0.5, 0.0),
                    gamma3: l.coeff(3) * c64(0.5, 0.0),
                };
                worst = worst.max((h21_log(&g).norm() - base).abs());
            }
        }
    }
    criterion(
        10,
        "rotation-invariance",
        worst <= 1e-12,
        &format!("20 functions x 16 angles per class, worst drift {worst:.3e}"),
    );
}

#[test]
fn bounds_against_frozen_references() {
    // frozen high-precision values of the three eta-based bounds
    let b1: f64 = theoretical_bound(GeometricClass::F1).unwrap();
    let b3: f64 = theoretical_bound(GeometricClass::F3).unwrap();
    let b4: f64 = theoretical_bound(GeometricClass::F4).unwrap();
    assert!((b1 - 0.1551061623738112).abs() <= 1e-13);
    assert!((b3 - 0.2341940215306529).abs() <= 1e-13);
    assert!((b4 - 0.18390899048394105).abs() <= 1e-13);
    assert!((verify_extremal::<f64>(GeometricClass::F1) - b1).abs() <= 1e-12);
    assert!((verify_extremal::<f64>(GeometricClass::F3) - b3).abs() <= 1e-12);
    assert!((verify_extremal::<f64>(GeometricClass::F4) - b4).abs() <= 1e-4);
}
