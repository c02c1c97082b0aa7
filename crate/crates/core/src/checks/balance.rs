use rayon::prelude::*;
use serde::Serialize;

use super::{check_gs, derive_seed, rng_for, ser_ideal, ser_opt_ideal, ser_vectors, GsVerdict, HypothesisReport, Verdict};
use crate::error::{Error, Result};
use crate::groebner::{Height, Ideal};
use crate::modalg::{PresentedModule, Submodule};
use crate::poly::Polynomial;
use crate::rees::{CoreEstimate, ReductionNumber, ReesPackage, DEFAULT_SAMPLES, DEFAULT_WINDOW};

const STREAM_REDUCTIONS: u64 = 1;
const STREAM_CORE: u64 = 2;

/// Sample budget and stabilization window of a Monte Carlo core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct McParams {
    pub samples: usize,
    pub window: usize,
}

impl Default for McParams {
    fn default() -> Self {
        McParams { samples: DEFAULT_SAMPLES, window: DEFAULT_WINDOW }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FreeQuotient {
    pub ell: usize,
    #[serde(serialize_with = "ser_ideal")]
    pub colon: Ideal,
    /// `Fitt_{ℓ-1}(U) ⊆ (U : E)`.
    pub lower_vanishes: bool,
    /// `Fitt_ℓ(U) + (U : E) = R`.
    pub upper_is_unit: bool,
    pub verdict: Verdict,
}

/// Tests whether `U/(U:E)U` is free of rank `ℓ = μ(U)` over `R/(U:E)` through the
/// Fitting ideals of `U ⊗ R/(U:E)`.
pub fn verify_free_quotient(e: &PresentedModule, u: &Submodule) -> Result<FreeQuotient> {
    if u.parent() != e {
        return Err(Error::ParentMismatch);
    }
    let colon = u.colon_into();
    let um = u.minimalized().as_module();
    let ell = um.ngens();
    let (lower_vanishes, upper_is_unit) = if colon.is_unit() {
        (true, true)
    } else {
        let lower = ell == 0 || colon.contains_ideal(&um.fitting_ideal(ell - 1));
        (lower, um.fitting_ideal(ell).sum(&colon).is_unit())
    };
    let verdict = Verdict::from_bool(lower_vanishes && upper_is_unit);
    Ok(FreeQuotient { ell, colon, lower_vanishes, upper_is_unit, verdict })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionSample {
    pub index: usize,
    pub seed: u64,
    #[serde(serialize_with = "ser_vectors")]
    pub generators: Vec<Vec<Polynomial>>,
    #[serde(serialize_with = "ser_ideal")]
    pub colon: Ideal,
    pub colon_height: Height,
    /// `(U:E)E = (U:E)U`.
    pub balanced: bool,
    pub free_quotient: Verdict,
    #[serde(skip)]
    pub reduction: Submodule,
    #[serde(skip)]
    pub product: Submodule,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoreSummary {
    #[serde(serialize_with = "ser_vectors")]
    pub generators: Vec<Vec<Polynomial>>,
    pub samples_used: usize,
    pub samples: usize,
    pub window: usize,
    pub seed: u64,
    #[serde(skip)]
    pub submodule: Submodule,
}

impl CoreSummary {
    fn new(est: CoreEstimate, mc: McParams, seed: u64) -> Self {
        CoreSummary {
            generators: est.core.gens().to_vec(),
            samples_used: est.samples_used,
            samples: mc.samples,
            window: mc.window,
            seed,
            submodule: est.core,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BalancedStatus {
    Balanced,
    NotBalanced,
    FailedHypothesis,
    Partial,
}

#[derive(Clone, Debug, Serialize)]
pub struct BalancedReport {
    pub status: BalancedStatus,
    pub hypotheses: HypothesisReport,
    pub seed: u64,
    pub samples: Vec<ReductionSample>,
    /// (i) all `K_i` coincide.
    pub colons_agree: Option<bool>,
    /// (ii) `K_i E = K_i U_i` for every sample.
    pub colon_products_agree: Option<bool>,
    /// (iii) `K_i U_i` equals the Monte Carlo core.
    pub equals_core: Option<bool>,
    /// Every `ht(K_i) ≥ ℓ - e + 1`.
    pub colon_height_bound: Option<bool>,
    pub core: Option<CoreSummary>,
    pub notes: Vec<String>,
}

fn sample_reductions(rp: &ReesPackage, count: usize, seed: u64) -> Result<Vec<ReductionSample>> {
    let e = rp.parent();
    let full = Submodule::full(e);
    (0..count)
        .into_par_iter()
        .map(|index| {
            let s = derive_seed(seed, STREAM_REDUCTIONS, index as u64);
            let u = rp.random_reduction(None, &mut rng_for(s))?;
            let colon = u.colon_into();
            let product = u.scaled(&colon);
            let balanced = full.scaled(&colon).same_as(&product)?;
            let free_quotient = verify_free_quotient(e, &u)?.verdict;
            Ok(ReductionSample {
                index,
                seed: s,
                generators: u.gens().to_vec(),
                colon_height: colon.height(),
                colon,
                balanced,
                free_quotient,
                reduction: u,
                product,
            })
        })
        .collect()
}

fn monte_carlo(rp: &ReesPackage, mc: McParams, seed: u64) -> Result<Option<CoreSummary>> {
    let s = derive_seed(seed, STREAM_CORE, 0);
    match rp.core_monte_carlo(mc.samples, mc.window, &mut rng_for(s)) {
        Ok(est) => Ok(Some(CoreSummary::new(est, mc, s))),
        Err(Error::NoStabilization { .. }) => Ok(None),
        Err(err) => Err(err),
    }
}

/// Samples `reductions` minimal reductions and evaluates the three balanced-core
/// verdicts, unless a hypothesis fails.
pub fn verify_balanced(id: &str, rp: &ReesPackage, reductions: usize, seed: u64, mc: McParams) -> Result<BalancedReport> {
    let mut hypotheses = HypothesisReport::build(id, rp)?;
    hypotheses.seeds.push(seed);
    let mut report = BalancedReport {
        status: BalancedStatus::FailedHypothesis,
        hypotheses,
        seed,
        samples: Vec::new(),
        colons_agree: None,
        colon_products_agree: None,
        equals_core: None,
        colon_height_bound: None,
        core: None,
        notes: Vec::new(),
    };
    let hyp = report.hypotheses.verdict();
    if hyp.is_fail() {
        report.notes.push("hypotheses fail; equivalences not asserted".into());
        return Ok(report);
    }
    let mut partial = false;
    if let Verdict::Inconclusive(r) = hyp {
        report.notes.push(r);
        partial = true;
    }
    let samples = sample_reductions(rp, reductions, seed)?;
    let e = rp.parent();
    let bound = (rp.analytic_spread() + 1).saturating_sub(e.rank());
    report.colons_agree = Some(samples.windows(2).all(|w| w[0].colon == w[1].colon));
    report.colon_products_agree = Some(samples.iter().all(|s| s.balanced));
    report.colon_height_bound = Some(samples.iter().all(|s| s.colon_height.at_least(bound)));
    report.core = monte_carlo(rp, mc, seed)?;
    match &report.core {
        Some(core) => {
            let mut eq = true;
            for s in &samples {
                eq &= s.product.same_as(&core.submodule)?;
            }
            report.equals_core = Some(eq);
        }
        None => {
            report.notes.push(format!("core did not stabilize within {} samples", mc.samples));
            partial = true;
        }
    }
    report.samples = samples;
    let verdicts = [report.colons_agree, report.colon_products_agree, report.equals_core];
    report.status = if verdicts.contains(&Some(false)) {
        BalancedStatus::NotBalanced
    } else if partial {
        BalancedStatus::Partial
    } else {
        BalancedStatus::Balanced
    };
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pd1Status {
    Verified,
    Refuted,
    HypothesesUnmet,
    Partial,
}

#[derive(Clone, Debug, Serialize)]
pub struct Pd1CoreReport {
    pub status: Pd1Status,
    pub pd: Option<usize>,
    pub torsionfree: bool,
    pub gs: GsVerdict,
    pub ell: usize,
    pub e: usize,
    /// Least reduction number among the sampled reductions.
    pub reduction_number: Option<ReductionNumber>,
    pub reduction_bound: usize,
    #[serde(serialize_with = "ser_opt_ideal")]
    pub fitting: Option<Ideal>,
    pub core_matches: Option<bool>,
    /// `(U_i : E) = Fitt_ℓ(E)` per sample.
    pub colon_matches: Vec<bool>,
    pub core: Option<CoreSummary>,
    pub seed: u64,
}

fn least(rs: &[ReductionNumber]) -> Option<ReductionNumber> {
    let exact = rs.iter().filter_map(|r| match r {
        ReductionNumber::Exact(k) => Some(*k),
        ReductionNumber::AtLeast(_) => None,
    });
    match exact.min() {
        Some(k) => Some(ReductionNumber::Exact(k)),
        None => rs.iter().copied().max_by_key(|r| match r {
            ReductionNumber::Exact(k) | ReductionNumber::AtLeast(k) => *k,
        }),
    }
}

/// `core(E) = Fitt_ℓ(E)·E` and `(U : E) = Fitt_ℓ(E)` for modules of projective
/// dimension at most one with small reduction number.
pub fn verify_pd1_core(rp: &ReesPackage, reductions: usize, seed: u64, mc: McParams) -> Result<Pd1CoreReport> {
    let e = rp.parent();
    let rank = e.rank();
    let ell = rp.analytic_spread();
    let bound = ell - rank;
    let pd = e.projective_dimension();
    let torsionfree = e.is_torsionfree();
    let gs = check_gs(e, ell + 1 - rank);
    let samples = sample_reductions(rp, reductions.max(1), seed)?;
    let cap = rp.caps().max_t_degree;
    let rs = samples
        .iter()
        .map(|s| rp.reduction_number(&s.reduction, cap))
        .collect::<Result<Vec<_>>>()?;
    let reduction_number = least(&rs);
    let mut report = Pd1CoreReport {
        status: Pd1Status::HypothesesUnmet,
        pd,
        torsionfree,
        gs,
        ell,
        e: rank,
        reduction_number,
        reduction_bound: bound,
        fitting: None,
        core_matches: None,
        colon_matches: Vec::new(),
        core: None,
        seed,
    };
    let r_ok = matches!(reduction_number, Some(ReductionNumber::Exact(r)) if r <= bound);
    if !(pd.is_some_and(|p| p <= 1) && torsionfree && report.gs.holds && r_ok) {
        return Ok(report);
    }
    let fitt = e.fitting_ideal(ell);
    report.colon_matches = samples.iter().map(|s| s.colon == fitt).collect();
    report.core = monte_carlo(rp, mc, seed)?;
    report.core_matches = match &report.core {
        Some(c) => Some(Submodule::full(e).scaled(&fitt).same_as(&c.submodule)?),
        None => None,
    };
    report.fitting = Some(fitt);
    let colons_ok = report.colon_matches.iter().all(|&b| b);
    report.status = match report.core_matches {
        Some(true) if colons_ok => Pd1Status::Verified,
        Some(_) => Pd1Status::Refuted,
        None if !colons_ok => Pd1Status::Refuted,
        None => Pd1Status::Partial,
    };
    Ok(report)
}
