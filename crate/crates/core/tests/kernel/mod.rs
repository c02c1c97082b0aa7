//! Randomized kernel invariants over GF(32003)[x, y, z], shared by the
//! property tests and the acceptance harness.

use std::sync::LazyLock;

use modcore::groebner::{is_groebner_basis, normal_form, Ideal};
use modcore::modalg::{PolyMatrix, PresentedModule};
use modcore::poly::{Monomial, PolyRing, Polynomial};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

static R: LazyLock<PolyRing> = LazyLock::new(|| PolyRing::grevlex(32003, &["x", "y", "z"]).unwrap());

pub type Suite = fn(u32) -> Result<(), String>;

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn poly_from(terms: &[(u32, u32, u32, i64)]) -> Polynomial {
    Polynomial::from_terms(&R, terms.iter().map(|&(a, b, c, k)| (Monomial::from_exponents(&[a, b, c]).unwrap(), k)))
}

/// A homogeneous form of degree `d`, possibly zero.
fn form(d: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0..=d, 0..=d, -40i64..40), 1..4).prop_map(move |ts| {
        let terms: Vec<_> = ts
            .into_iter()
            .map(|(a, b, k)| {
                let a = a.min(d);
                let b = b.min(d - a);
                (a, b, d - a - b, k)
            })
            .collect();
        poly_from(&terms)
    })
}

fn nonzero_form(lo: u32, hi: u32) -> impl Strategy<Value = Polynomial> {
    (lo..=hi).prop_flat_map(form).prop_filter("nonzero", |p| !p.is_zero())
}

/// Inhomogeneous polynomial of degree at most 3.
fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -30i64..30), 1..5).prop_map(|ts| poly_from(&ts))
}

fn homogeneous_ideal(max_gens: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(nonzero_form(1, 3), 1..=max_gens).prop_map(|g| Ideal::new(&R, g))
}

fn ideal(max_gens: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(poly(), 1..=max_gens).prop_map(|g| Ideal::new(&R, g))
}

/// Cokernel of a random homogeneous matrix on two generators of degree zero.
fn small_module() -> impl Strategy<Value = PresentedModule> {
    prop::collection::vec((1u32..=2).prop_flat_map(|d| (form(d), form(d))), 1..=3).prop_map(|cols| {
        let cols: Vec<Vec<Polynomial>> = cols.into_iter().map(|(a, b)| vec![a, b]).collect();
        PresentedModule::from_columns(&R, vec![0, 0], cols).unwrap()
    })
}

fn in_ideal(i: &Ideal, f: &Polynomial) -> bool {
    i.contains(f).unwrap()
}

pub const SUITES: &[(&str, Suite)] = &[
    ("s_polynomials_reduce_to_zero", s_polynomials_reduce_to_zero),
    ("normal_forms_are_idempotent", normal_forms_are_idempotent),
    ("colon_times_divisor_lands_in_ideal", colon_times_divisor_lands_in_ideal),
    ("products_and_intersections", products_and_intersections),
    ("saturation_is_stable", saturation_is_stable),
    ("resolutions_are_complexes", resolutions_are_complexes),
    ("module_resolutions_are_complexes", module_resolutions_are_complexes),
    ("auslander_buchsbaum", auslander_buchsbaum),
    ("auslander_buchsbaum_for_modules", auslander_buchsbaum_for_modules),
    ("fitting_ideals_ignore_the_presentation", fitting_ideals_ignore_the_presentation),
    ("fitting_chain_is_monotone", fitting_chain_is_monotone),
];

pub fn s_polynomials_reduce_to_zero(cases: u32) -> Result<(), String> {
    run(cases, ideal(3), |i| {
        let g = i.groebner_basis();
        prop_assert!(is_groebner_basis(g));
        for f in i.gens() {
            prop_assert!(normal_form(f, g).is_zero());
        }
        Ok(())
    })
}

pub fn normal_forms_are_idempotent(cases: u32) -> Result<(), String> {
    run(cases, (ideal(3), poly()), |(i, f)| {
        let g = i.groebner_basis();
        let nf = normal_form(&f, g);
        prop_assert_eq!(&normal_form(&nf, g), &nf);
        prop_assert!(in_ideal(&i, &f.sub_ref(&nf)));
        let lead = i.leading_monomials();
        for (m, _) in nf.terms() {
            prop_assert!(!lead.iter().any(|l| l.divides(m)));
        }
        Ok(())
    })
}

pub fn colon_times_divisor_lands_in_ideal(cases: u32) -> Result<(), String> {
    run(cases, (homogeneous_ideal(3), homogeneous_ideal(2)), |(j, i)| {
        let q = j.quotient(&i).ideal;
        prop_assert!(j.contains_ideal(&q.product(&i)));
        prop_assert!(q.contains_ideal(&j));
        Ok(())
    })
}

pub fn products_and_intersections(cases: u32) -> Result<(), String> {
    run(cases, (ideal(2), ideal(2)), |(i, j)| {
        let meet = i.intersect(&j);
        prop_assert!(meet.contains_ideal(&i.product(&j)));
        prop_assert!(i.contains_ideal(&meet));
        prop_assert!(j.contains_ideal(&meet));
        prop_assert_eq!(&meet, &i.intersect_syz(&j));
        Ok(())
    })
}

pub fn saturation_is_stable(cases: u32) -> Result<(), String> {
    run(cases, (homogeneous_ideal(3), nonzero_form(1, 2)), |(j, f)| {
        let s = j.saturate(&f).unwrap().ideal;
        prop_assert!(s.contains_ideal(&j));
        prop_assert_eq!(&s.quotient_by(&f), &s);
        prop_assert_eq!(&s.saturate(&f).unwrap().ideal, &s);
        Ok(())
    })
}

pub fn resolutions_are_complexes(cases: u32) -> Result<(), String> {
    run(cases, homogeneous_ideal(3), |i| {
        let m = PresentedModule::quotient_ring(&i).unwrap();
        let res = m.free_resolution();
        prop_assert!(res.is_complex());
        prop_assert!(res.is_minimal());
        prop_assert!(res.length() <= 3);
        for d in 0..=8 {
            prop_assert_eq!(m.hilbert_function(d) as i64, res.euler_characteristic(d));
            prop_assert_eq!(m.hilbert_function(d), i.hilbert_function(d));
        }
        Ok(())
    })
}

pub fn module_resolutions_are_complexes(cases: u32) -> Result<(), String> {
    run(cases, small_module(), |m| {
        let res = m.free_resolution();
        prop_assert!(res.is_complex());
        for d in 0..=8 {
            prop_assert_eq!(m.hilbert_function(d) as i64, res.euler_characteristic(d));
        }
        Ok(())
    })
}

pub fn auslander_buchsbaum(cases: u32) -> Result<(), String> {
    run(cases, homogeneous_ideal(3), |i| {
        prop_assume!(!i.is_unit());
        let m = PresentedModule::quotient_ring(&i).unwrap();
        let pd = m.projective_dimension().unwrap();
        let depth = m.depth().unwrap();
        prop_assert_eq!(pd + depth, 3);
        prop_assert!(depth as i64 <= m.dimension());
        Ok(())
    })
}

pub fn auslander_buchsbaum_for_modules(cases: u32) -> Result<(), String> {
    run(cases, small_module(), |m| {
        prop_assume!(!m.is_zero_module());
        prop_assert_eq!(m.projective_dimension().unwrap() + m.depth().unwrap(), 3);
        Ok(())
    })
}

pub fn fitting_ideals_ignore_the_presentation(cases: u32) -> Result<(), String> {
    run(cases, (small_module(), 0usize..3), |(m, k)| {
        // adjoin a generator equal to v_k times the first one, and a redundant relation
        let v = R.var(k);
        let z = Polynomial::zero(&R);
        let mut cols: Vec<Vec<Polynomial>> = m
            .presentation()
            .columns()
            .iter()
            .map(|c| c.iter().cloned().chain([z.clone()]).collect())
            .collect();
        cols.push(vec![v.clone(), z.clone(), Polynomial::constant(&R, -1)]);
        let extra: Vec<Polynomial> = cols[0].iter().map(|p| p.mul_ref(&v)).collect();
        cols.push(extra);
        let pres = PolyMatrix::from_columns(&R, 3, cols).unwrap();
        let bigger = PresentedModule::new(&R, vec![0, 0, 1], pres).unwrap();
        for t in 0..=3 {
            prop_assert_eq!(&m.fitting_ideal(t), &bigger.fitting_ideal(t));
        }
        prop_assert_eq!(m.mu(), bigger.mu());
        Ok(())
    })
}

pub fn fitting_chain_is_monotone(cases: u32) -> Result<(), String> {
    run(cases, small_module(), |m| {
        for t in 0..3 {
            prop_assert!(m.fitting_ideal(t + 1).contains_ideal(&m.fitting_ideal(t)));
        }
        prop_assert!(m.fitting_ideal(2).is_unit());
        prop_assert!(m.annihilator().contains_ideal(&m.fitting_ideal(0)));
        Ok(())
    })
}
