//! Acceptance battery: one test per criterion, each printing a single
//! pass/fail line. Run with --nocapture to see the lines on success.

use octodp::verify::run_criterion;

fn check(number: usize) {
    let r = run_criterion(number);
    let status = if r.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {:2} [{status}] {} ({} ms): {}",
        r.number, r.name, r.millis, r.detail
    );
    assert!(r.passed, "criterion {} failed: {}", r.number, r.detail);
}

#[test]
fn criterion_01_parametrization_identity() {
    check(1);
}

#[test]
fn criterion_02_discriminant_oracle() {
    check(2);
}

#[test]
fn criterion_03_triangulation_census() {
    check(3);
}

#[test]
fn criterion_04_toric_ideal() {
    check(4);
}

#[test]
fn criterion_05_line_census() {
    check(5);
}

#[test]
fn criterion_06_product_of_roots_formulas() {
    check(6);
}

#[test]
fn criterion_07_naruki_general_vectors() {
    check(7);
}

#[test]
fn criterion_08_stable_arrangement_examples() {
    check(8);
}

#[test]
fn criterion_09_nonstable_arrangement_examples() {
    check(9);
}

#[test]
fn criterion_10_discriminant_initial_form() {
    check(10);
}

#[test]
fn criterion_11_blowdown_roundtrip() {
    check(11);
}

#[test]
fn criterion_12_newton_polygon_criterion() {
    check(12);
}
