//! Hypothesis checkers, residual-intersection constructions and core verdicts
//! for graded modules.

mod balance;
mod residual;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Height, Ideal};
use crate::modalg::{PresentedModule, Submodule};
use crate::poly::Polynomial;
use crate::rees::ReesPackage;

pub use balance::{
    verify_balanced, verify_free_quotient, verify_pd1_core, BalancedReport, BalancedStatus, FreeQuotient,
    McParams, Pd1CoreReport, Pd1Status, ReductionSample,
};
pub use residual::{check_an, residual_intersection, AnRow, AnTable, PrefixFailure, ResidualCertificate};

/// Three-valued outcome: inconclusive is never the same as false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive(String),
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail)
    }

    /// Fail dominates, then inconclusive.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Inconclusive(r), _) | (_, Verdict::Inconclusive(r)) => Verdict::Inconclusive(r),
            _ => Verdict::Pass,
        }
    }
}

/// Polynomial text of the reduced Gröbner basis, sorted.
pub fn render_ideal(i: &Ideal) -> Vec<String> {
    let mut v: Vec<String> = i.groebner_basis().iter().map(Polynomial::render).collect();
    v.sort();
    v
}

pub fn render_vectors(vs: &[Vec<Polynomial>]) -> Vec<Vec<String>> {
    vs.iter().map(|v| v.iter().map(Polynomial::render).collect()).collect()
}

fn ser_ideal<S: serde::Serializer>(i: &Ideal, s: S) -> std::result::Result<S::Ok, S::Error> {
    render_ideal(i).serialize(s)
}

fn ser_opt_ideal<S: serde::Serializer>(i: &Option<Ideal>, s: S) -> std::result::Result<S::Ok, S::Error> {
    i.as_ref().map(render_ideal).serialize(s)
}

fn ser_vectors<S: serde::Serializer>(vs: &[Vec<Polynomial>], s: S) -> std::result::Result<S::Ok, S::Error> {
    render_vectors(vs).serialize(s)
}

/// Deterministic per-item seed derived from a session seed.
pub fn derive_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xC2B2_AE3D_27D4_EB4F);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GsVerdict {
    pub s: usize,
    pub e: usize,
    pub holds: bool,
    /// `(t, ht Fitt_{t+e-1}(E))` for every `t` checked.
    pub heights: Vec<(usize, Height)>,
    pub first_failing_t: Option<usize>,
}

/// `G_s`: `ht Fitt_{t+e-1}(E) ≥ t + 1` for `1 ≤ t ≤ s - 1`.
pub fn check_gs(e: &PresentedModule, s: usize) -> GsVerdict {
    let rank = e.rank();
    let mut heights = Vec::new();
    let mut first_failing_t = None;
    for t in 1..s {
        let h = e.fitting_ideal(t + rank - 1).height();
        if !h.at_least(t + 1) && first_failing_t.is_none() {
            first_failing_t = Some(t);
        }
        heights.push((t, h));
    }
    GsVerdict { s, e: rank, holds: first_failing_t.is_none(), heights, first_failing_t }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtEntry {
    pub j: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtVanishing {
    /// Inclusive range `1..=ℓ-e-1`; empty when `ℓ ≤ e + 1`.
    pub range: (usize, usize),
    pub entries: Vec<ExtEntry>,
    pub verdict: Verdict,
}

/// `Ext^{j+1}(E^j, R) = 0` for `1 ≤ j ≤ ℓ - e - 1`.
pub fn check_ext_vanishing(rp: &ReesPackage) -> ExtVanishing {
    let e = rp.parent().rank();
    let top = rp.analytic_spread().saturating_sub(e + 1);
    let mut entries = Vec::new();
    let mut verdict = Verdict::Pass;
    for j in 1..=top {
        let v = match rp.graded_component(j) {
            Ok(ej) => Verdict::from_bool(ej.ext(j + 1).is_zero),
            Err(err) => Verdict::Inconclusive(err.to_string()),
        };
        verdict = verdict.and(v.clone());
        entries.push(ExtEntry { j, verdict: v });
    }
    ExtVanishing { range: (1, top), entries, verdict }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CmRees {
    pub depth: Option<usize>,
    pub dim: i64,
    pub cohen_macaulay: bool,
    /// Cohen–Macaulayness implies `(S_2)`; its failure does not refute `(S_2)`.
    pub s2: Verdict,
}

/// Cohen–Macaulayness of `R(E)` as a quotient of the big polynomial ring.
pub fn check_cm_rees(rp: &ReesPackage) -> Result<CmRees> {
    let m = rp.rees_algebra_module()?;
    let depth = m.depth();
    let dim = rp.rees_dimension();
    let cm = depth.is_none_or(|d| d as i64 == dim);
    let s2 = if cm {
        Verdict::Pass
    } else {
        Verdict::Inconclusive("R(E) is not Cohen-Macaulay; (S_2) not verified".into())
    };
    Ok(CmRees { depth, dim, cohen_macaulay: cm, s2 })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerEntry {
    pub j: usize,
    pub pd: Option<usize>,
    pub depth: Option<usize>,
    pub capped: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypothesisReport {
    pub module: String,
    pub e: usize,
    pub ell: usize,
    pub d: usize,
    pub mu: usize,
    pub gs_level: usize,
    pub gs: GsVerdict,
    pub ext_vanishing: ExtVanishing,
    pub cm_rees: CmRees,
    pub powers: Vec<PowerEntry>,
    pub torsionfree: bool,
    /// Finite projective dimension certifies orientability.
    pub orientable_pd: Option<usize>,
    pub seeds: Vec<u64>,
}

impl HypothesisReport {
    pub fn build(id: &str, rp: &ReesPackage) -> Result<Self> {
        let e = rp.parent();
        let rank = e.rank();
        let ell = rp.analytic_spread();
        let gs_level = (ell + 1).saturating_sub(rank).max(1);
        let top = ell.saturating_sub(rank + 1).max(1);
        let powers = (1..=top)
            .map(|j| match rp.graded_component(j) {
                Ok(m) => PowerEntry { j, pd: m.projective_dimension(), depth: m.depth(), capped: false },
                Err(_) => PowerEntry { j, pd: None, depth: None, capped: true },
            })
            .collect();
        Ok(HypothesisReport {
            module: id.to_string(),
            e: rank,
            ell,
            d: e.ring().nvars(),
            mu: e.mu(),
            gs_level,
            gs: check_gs(e, gs_level),
            ext_vanishing: check_ext_vanishing(rp),
            cm_rees: check_cm_rees(rp)?,
            powers,
            torsionfree: e.is_torsionfree(),
            orientable_pd: e.projective_dimension(),
            seeds: Vec::new(),
        })
    }

    /// Combined verdict over every hypothesis.
    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.gs.holds)
            .and(self.ext_vanishing.verdict.clone())
            .and(self.cm_rees.s2.clone())
            .and(Verdict::from_bool(self.torsionfree && self.e > 0 && self.orientable_pd.is_some()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BuildMode {
    PlusFree,
    PowerSum,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdealModuleVerdicts {
    pub ell_ideal: usize,
    pub ell_module: usize,
    pub ell_formula: bool,
    pub height_ideal: Height,
    pub nonfree_codim: Height,
    pub codim_matches: bool,
    pub mu_ideal: usize,
    pub mu_module: usize,
    /// `μ(I) > ℓ(I)` forces `μ(E) > ℓ(E)`.
    pub mu_exceeds: bool,
}

#[derive(Clone, Debug)]
pub struct IdealModule {
    pub module: PresentedModule,
    pub verdicts: IdealModuleVerdicts,
}

/// `I ⊕ R(-δ)^{e-1}` or `I^{⊕e}`, with `δ` the generator degree of `I`.
pub fn build_ideal_module(i: &Ideal, e: usize, mode: BuildMode) -> Result<IdealModule> {
    if e == 0 {
        return Err(Error::Precondition("e must be at least 1".into()));
    }
    let base = PresentedModule::from_ideal(i)?;
    let delta = base.common_degree()?;
    let ring = i.ring();
    let mut m = base.clone();
    for _ in 1..e {
        m = match mode {
            BuildMode::PlusFree => m.direct_sum(&PresentedModule::free(ring, 1, 0), delta)?,
            BuildMode::PowerSum => m.direct_sum(&base, 0)?,
        };
    }
    let ell_ideal = ReesPackage::new(&base)?.analytic_spread();
    let ell_module = ReesPackage::new(&m)?.analytic_spread();
    let height_ideal = i.height();
    let nonfree_codim = m.fitting_ideal(m.rank()).height();
    let mu_ideal = base.mu();
    let mu_module = m.mu();
    let verdicts = IdealModuleVerdicts {
        ell_ideal,
        ell_module,
        ell_formula: ell_module == ell_ideal + e - 1,
        height_ideal,
        nonfree_codim,
        codim_matches: nonfree_codim == height_ideal,
        mu_ideal,
        mu_module,
        mu_exceeds: mu_ideal <= ell_ideal || mu_module > ell_module,
    };
    Ok(IdealModule { module: m, verdicts })
}

/// Submodule generated by coordinate vectors given as polynomial text.
pub fn parse_submodule(e: &PresentedModule, vectors: &[Vec<&str>]) -> Result<Submodule> {
    let gens = vectors.iter().map(|v| e.parse_element(v)).collect::<Result<Vec<_>>>()?;
    Submodule::new(e, gens)
}
