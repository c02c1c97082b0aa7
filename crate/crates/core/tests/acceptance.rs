//! Acceptance suite: one PASS/FAIL line per criterion, with its time budget.
//!
//! Exits nonzero when a criterion outside `KNOWN_FAILURES` fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use modcore::checks::{
    build_ideal_module, check_an, check_ext_vanishing, check_cm_rees, residual_intersection, rng_for, verify_balanced,
    BalancedStatus, BuildMode, HypothesisReport, McParams,
};
use modcore::groebner::{Height, Ideal};
use modcore::modalg::{PresentedModule, Submodule};
use modcore::poly::PolyRing;
use modcore::rees::{ReductionNumber, ReesPackage};
use modcore::Result;

mod kernel;

/// Criteria expected to fail, with the reason printed next to the FAIL line.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    5,
    "the twisted cubic has analytic spread 3 = mu, so every minimal reduction is H itself and r_U(H) = 0",
)];

type Criterion = (u32, &'static str, u64, fn() -> Result<Check>);

struct Check {
    pass: bool,
    detail: String,
}

impl Check {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Check { pass, detail: detail.into() }
    }
}

fn ring(vars: &[&str]) -> PolyRing {
    PolyRing::grevlex(32003, vars).unwrap()
}

fn ideal_module(r: &PolyRing, gens: &[&str]) -> Result<PresentedModule> {
    PresentedModule::from_ideal(&Ideal::parse(r, gens)?)
}

fn edge() -> Result<(PolyRing, Ideal)> {
    let r = ring(&["x1", "x2", "x3", "x4"]);
    let i = Ideal::parse(&r, &["x1*x2", "x2*x3", "x3*x4", "x1*x4"])?;
    Ok((r, i))
}

fn cubic() -> Result<(PolyRing, Ideal)> {
    let r = ring(&["x0", "x1", "x2", "x3"]);
    let i = Ideal::parse(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"])?;
    Ok((r, i))
}

fn plus_free(e: &PresentedModule) -> Result<PresentedModule> {
    e.direct_sum(&PresentedModule::free(e.ring(), 1, 0), 2)
}

fn c1() -> Result<Check> {
    let (_, i) = edge()?;
    let ell = ReesPackage::new(&PresentedModule::from_ideal(&i)?)?.analytic_spread();
    let (ht, mu) = (i.height(), i.minimal_generator_count());
    Ok(Check::new(ht == Height::Finite(2) && mu == 4 && ell == 3, format!("ht {ht:?}, mu {mu}, ell {ell}")))
}

fn c2() -> Result<Check> {
    let (_, i) = edge()?;
    let mut pass = true;
    let mut detail = Vec::new();
    for (mode, mu) in [(BuildMode::PlusFree, 5), (BuildMode::PowerSum, 8)] {
        let v = build_ideal_module(&i, 2, mode)?.verdicts;
        pass &= v.ell_module == 4
            && v.nonfree_codim == Height::Finite(2)
            && v.codim_matches
            && v.mu_module == mu
            && v.mu_exceeds
            && v.ell_formula;
        detail.push(format!("{mode:?}: ell {} codim {:?} mu {}", v.ell_module, v.nonfree_codim, v.mu_module));
    }
    Ok(Check::new(pass, detail.join("; ")))
}

fn c3() -> Result<Check> {
    let r = ring(&["x", "y"]);
    let e = ideal_module(&r, &["x^2", "x*y", "y^2"])?;
    let rp = ReesPackage::new(&e)?;
    let m = Ideal::maximal(&r);
    let cubics = Submodule::full(&e).scaled(&m);
    let mut ok = 0;
    let trials = 8;
    for seed in 0..trials {
        let j = rp.random_reduction(None, &mut rng_for(seed))?;
        let colon = j.colon_into();
        let good = j.gens().len() == 2
            && rp.is_reduction(&j)?
            && colon == m
            && Submodule::full(&e).scaled(&colon).same_as(&cubics)?
            && j.scaled(&colon).same_as(&cubics)?;
        ok += good as u64;
    }
    let core = rp.core_monte_carlo(8, 3, &mut rng_for(42))?.core;
    let core_ok = core.same_as(&cubics)?;
    let fitt = e.fitting_ideal(2);
    let fitt_ok = Submodule::full(&e).scaled(&fitt).same_as(&cubics)?;
    Ok(Check::new(
        ok == trials && core_ok && fitt_ok,
        format!("{ok}/{trials} reductions with J:I = (x,y) and both products m^3; core = m^3 {core_ok}; Fitt_2 I = m^3 {fitt_ok}"),
    ))
}

fn c4() -> Result<Check> {
    let r = ring(&["x", "y"]);
    let e = plus_free(&ideal_module(&r, &["x^2", "x*y", "y^2"])?)?;
    let rp = ReesPackage::new(&e)?;
    let core = rp.core_monte_carlo(8, 3, &mut rng_for(42))?.core;
    let full = Submodule::full(&e);
    let m = Ideal::maximal(&r);
    let fitt = e.fitting_ideal(3);
    let fitt_ok = fitt == m && full.scaled(&fitt).same_as(&core)?;
    let mut ok = 0;
    let trials = 5;
    for seed in 100..100 + trials {
        let u = rp.random_reduction(None, &mut rng_for(seed))?;
        let colon = u.colon_into();
        let good = colon == m && full.scaled(&colon).same_as(&core)? && u.scaled(&colon).same_as(&core)?;
        ok += good as u64;
    }
    Ok(Check::new(
        fitt_ok && ok == trials,
        format!("Fitt_3(E) = (x,y) and Fitt_3(E)E = core: {fitt_ok}; {ok}/{trials} reductions with (U:E)E = (U:E)U = core"),
    ))
}

fn c5() -> Result<Check> {
    let (_, h) = cubic()?;
    let he = PresentedModule::from_ideal(&h)?;
    let rp = ReesPackage::new(&he)?;
    let mut numbers = Vec::new();
    let mut graded_agrees = true;
    for seed in 0..5 {
        let u = rp.random_reduction(None, &mut rng_for(seed))?;
        let r = rp.reduction_number(&u, rp.caps().max_x_degree)?;
        graded_agrees &= rp.reduction_number_by_components(&u, rp.caps().max_t_degree)? == r;
        numbers.push(r);
    }
    let r_ok = numbers.iter().all(|n| *n == ReductionNumber::Exact(1));
    let cm_h = check_cm_rees(&rp)?.cohen_macaulay;

    let e = plus_free(&he)?;
    let rpe = ReesPackage::new(&e)?;
    let hyp = HypothesisReport::build("H+R(-2)", &rpe)?;
    let hyp_ok = hyp.gs_level == 3 && hyp.verdict().is_pass();
    let rep = verify_balanced("H+R(-2)", &rpe, 6, 7, McParams::default())?;
    let verdicts = [rep.colons_agree, rep.colon_products_agree, rep.equals_core];
    let bal_ok = rep.status == BalancedStatus::Balanced && verdicts.iter().all(|v| *v == Some(true));
    let shown: Vec<String> = numbers
        .iter()
        .map(|n| match n {
            ReductionNumber::Exact(r) => r.to_string(),
            ReductionNumber::AtLeast(r) => format!(">={r}"),
        })
        .collect();
    Ok(Check::new(
        r_ok && cm_h && hyp_ok && bal_ok,
        format!(
            "r_U(H) over 5 reductions = [{}] (want 1, graded check agrees {graded_agrees}); R(H) CM {cm_h}; hypotheses {:?}; balanced verdicts {verdicts:?}",
            shown.join(", "),
            hyp.verdict()
        ),
    ))
}

fn an_corpus() -> Result<Vec<(&'static str, PresentedModule)>> {
    let r2 = ring(&["x", "y"]);
    let r3 = ring(&["x", "y", "z"]);
    let (_, h) = cubic()?;
    Ok(vec![
        ("m^2", ideal_module(&r2, &["x^2", "x*y", "y^2"])?),
        ("(xy,xz,yz)", ideal_module(&r3, &["x*y", "x*z", "y*z"])?),
        ("H", PresentedModule::from_ideal(&h)?),
    ])
}

fn top_s(e: &PresentedModule) -> usize {
    e.mu().min(e.ring().nvars() + e.rank() - 1)
}

fn c6() -> Result<Check> {
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, e) in an_corpus()? {
        let table = check_an(&e, top_s(&e), 20, 6)?;
        let mut proper = 0;
        for row in &table.rows {
            pass &= row.errors.is_empty()
                && row.proper + row.improper == row.trials
                && row.cohen_macaulay == row.proper
                && row.height_exact == row.proper;
            proper += row.proper;
        }
        pass &= proper > 0;
        let rows: Vec<String> =
            table.rows.iter().map(|r| format!("i={} {}/{} CM", r.i, r.cohen_macaulay, r.proper)).collect();
        detail.push(format!("{name}: {}", rows.join(" ")));
    }
    Ok(Check::new(pass, detail.join("; ")))
}

fn c7() -> Result<Check> {
    let (mut draws, mut first, mut done, mut logged) = (0, 0, 0, 0);
    for (_, e) in an_corpus()? {
        let w = Submodule::full(&e);
        for s in 1..=top_s(&e) {
            for seed in 0..20u64 {
                draws += 1;
                if let Ok(c) = residual_intersection(&e, &w, s, 7_000 + seed) {
                    done += 1;
                    first += c.first_draw_ok as usize;
                    logged += c.failures.len();
                    let need = |i: usize| (i + 1).saturating_sub(e.rank());
                    if !c.prefix_heights.iter().enumerate().all(|(i, h)| h.at_least(need(i))) {
                        done -= 1;
                    }
                }
            }
        }
    }
    let rate = first as f64 / draws as f64;
    Ok(Check::new(
        rate >= 0.95 && done == draws,
        format!("{first}/{draws} first draws ({:.1}%), {done}/{draws} after retries, {logged} prefix failures logged", rate * 100.0),
    ))
}

fn c8() -> Result<Check> {
    let (_, i) = edge()?;
    let e = plus_free(&PresentedModule::from_ideal(&i)?)?;
    let rp = ReesPackage::new(&e)?;
    let ext = check_ext_vanishing(&rp).verdict;
    let rep = verify_balanced("edge+R(-2)", &rp, 3, 5, McParams::default())?;
    Ok(Check::new(
        ext.is_fail() && rep.status == BalancedStatus::FailedHypothesis && rep.equals_core.is_none(),
        format!("ext vanishing {ext:?}; verify_balanced {:?}", rep.status),
    ))
}

fn c9() -> Result<Check> {
    let cases = 256;
    let mut failed = Vec::new();
    for (name, suite) in kernel::SUITES {
        if let Err(e) = suite(cases) {
            failed.push(format!("{name}: {e}"));
        }
    }
    Ok(Check::new(
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} suites x {cases} cases", kernel::SUITES.len())
        } else {
            failed.join("; ")
        },
    ))
}

fn c10() -> Result<Check> {
    let r = ring(&["x", "y"]);
    let lin = ReesPackage::new(&ideal_module(&r, &["x", "y"])?)?;
    let lin_ok = lin.rees_ideal() == lin.sym_ideal();
    let free = ReesPackage::new(&PresentedModule::free(&r, 2, 0))?;
    let free_ok = free.rees_ideal().groebner_basis().is_empty();
    let sq = ReesPackage::new(&ideal_module(&r, &["x^2", "x*y", "y^2"])?)?;
    let want = sq.sym_ideal().sum(&Ideal::parse(sq.big_ring(), &["T1*T3 - T2^2"])?);
    let sq_ok = sq.rees_ideal().contains_ideal(&want) && want.contains_ideal(sq.rees_ideal()) && sq.rees_ideal() != sq.sym_ideal();
    Ok(Check::new(
        lin_ok && free_ok && sq_ok,
        format!("(x,y) linear type {lin_ok}; rees(R^2) = 0 {free_ok}; rees(m^2) = sym + (T1T3 - T2^2) {sq_ok}"),
    ))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "edge ideal invariants", 10, c1),
        (2, "modules from the edge ideal", 60, c2),
        (3, "core of m^2", 60, c3),
        (4, "core of m^2 + R(-2)", 120, c4),
        (5, "twisted cubic corpus", 600, c5),
        (6, "Artin-Nagata trials", 600, c6),
        (7, "residual intersection construction", 600, c7),
        (8, "negative control", 600, c8),
        (9, "kernel property suites", 600, c9),
        (10, "linear type checks", 600, c10),
    ];
    let mut unexpected = Vec::new();
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(c) => (c.pass && elapsed <= Duration::from_secs(limit), c.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {n:>2} ({name}) {:.2}s of {limit}s: {detail}", elapsed.as_secs_f64());
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        match (pass, known) {
            (false, Some((_, why))) => println!("     known failure: {why}"),
            (false, None) => unexpected.push(n),
            (true, Some(_)) => println!("     note: listed as a known failure but passed"),
            (true, None) => {}
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
