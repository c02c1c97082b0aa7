//! Kernel invariants, 256 randomized cases each.

mod kernel;

const CASES: u32 = 256;

#[test]
fn s_polynomials_reduce_to_zero() {
    kernel::s_polynomials_reduce_to_zero(CASES).unwrap();
}

#[test]
fn normal_forms_are_idempotent() {
    kernel::normal_forms_are_idempotent(CASES).unwrap();
}

#[test]
fn colon_times_divisor_lands_in_ideal() {
    kernel::colon_times_divisor_lands_in_ideal(CASES).unwrap();
}

#[test]
fn products_and_intersections() {
    kernel::products_and_intersections(CASES).unwrap();
}

#[test]
fn saturation_is_stable() {
    kernel::saturation_is_stable(CASES).unwrap();
}

#[test]
fn resolutions_are_complexes() {
    kernel::resolutions_are_complexes(CASES).unwrap();
}

#[test]
fn module_resolutions_are_complexes() {
    kernel::module_resolutions_are_complexes(CASES).unwrap();
}

#[test]
fn auslander_buchsbaum() {
    kernel::auslander_buchsbaum(CASES).unwrap();
}

#[test]
fn auslander_buchsbaum_for_modules() {
    kernel::auslander_buchsbaum_for_modules(CASES).unwrap();
}

#[test]
fn fitting_ideals_ignore_the_presentation() {
    kernel::fitting_ideals_ignore_the_presentation(CASES).unwrap();
}

#[test]
fn fitting_chain_is_monotone() {
    kernel::fitting_chain_is_monotone(CASES).unwrap();
}

#[test]
fn every_suite_is_listed() {
    let names: Vec<&str> = kernel::SUITES.iter().map(|(n, _)| *n).collect();
    assert_eq!(names.len(), 11);
    assert!(names.contains(&"fitting_chain_is_monotone"));
}
