use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{check_gs, derive_seed, rng_for, ser_ideal, ser_vectors};
use crate::error::{Error, Result};
use crate::groebner::{Height, Ideal};
use crate::modalg::{PresentedModule, Submodule};
use crate::poly::Polynomial;

const RETRY_CAP: usize = 20;
const SUBSET_LIMIT: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrefixFailure {
    pub attempt: usize,
    /// 1-based indices of the elements whose colon was too small.
    pub subset: Vec<usize>,
    pub required: usize,
    pub found: Height,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualCertificate {
    pub s: usize,
    pub e: usize,
    pub seed: u64,
    #[serde(serialize_with = "ser_vectors")]
    pub elements: Vec<Vec<Polynomial>>,
    #[serde(rename = "k", serialize_with = "ser_ideal")]
    pub colon: Ideal,
    /// `ht((a_1..a_i) : E)` for `0 ≤ i ≤ s`.
    pub prefix_heights: Vec<Height>,
    pub subsets_checked: bool,
    pub height: Height,
    pub proper: bool,
    /// `R/K` Cohen–Macaulay; `None` when `K = R`.
    pub cohen_macaulay: Option<bool>,
    pub attempts: usize,
    pub first_draw_ok: bool,
    pub failures: Vec<PrefixFailure>,
}

fn random_form<R: Rng>(e: &PresentedModule, deg: i64, rng: &mut R) -> Polynomial {
    let ring = e.ring();
    let p = ring.characteristic();
    let terms = ring
        .monomials_of_degree(deg)
        .into_iter()
        .map(|m| (m, rng.gen_range(0..p) as i64));
    Polynomial::from_terms(ring, terms)
}

/// A random homogeneous element of `W` in the top generator degree.
fn random_element<R: Rng>(w: &Submodule, rng: &mut R) -> Vec<Polynomial> {
    let e = w.parent();
    let degs = w.degrees();
    let top = degs.iter().copied().max().unwrap_or(0);
    let mut v = vec![Polynomial::zero(e.ring()); e.ngens()];
    for (g, d) in w.gens().iter().zip(degs) {
        let f = random_form(e, top - d, rng);
        for (a, c) in v.iter_mut().zip(g) {
            *a = &*a + &(c * &f);
        }
    }
    v
}

fn colon_of(e: &PresentedModule, elements: &[Vec<Polynomial>], idx: &[usize]) -> Ideal {
    let gens = idx.iter().map(|&k| elements[k].clone()).collect();
    Submodule::new(e, gens).expect("homogeneous draws").colon_into()
}

fn required(i: usize, e: usize) -> usize {
    (i + 1).saturating_sub(e)
}

/// Draws `a_1..a_s` in `W` with `ht((a_1..a_i) : E) ≥ i - e + 1` for every prefix
/// (every subset when `s ≤ 5`) and returns `K = (a_1..a_s) : E`.
pub fn residual_intersection(e: &PresentedModule, w: &Submodule, s: usize, seed: u64) -> Result<ResidualCertificate> {
    if w.parent() != e {
        return Err(Error::ParentMismatch);
    }
    if s == 0 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    let h = w.colon_into().height();
    if !h.at_least(s) {
        return Err(Error::Precondition(format!("ht(W : E) = {h} < s = {s}")));
    }
    let gs = check_gs(e, s);
    if !gs.holds {
        return Err(Error::Precondition(format!("E fails G_{s} at t = {}", gs.first_failing_t.unwrap())));
    }
    let rank = e.rank();
    let mut rng = rng_for(seed);
    let mut failures = Vec::new();
    for attempt in 1..=RETRY_CAP {
        let elements: Vec<Vec<Polynomial>> = (0..s).map(|_| random_element(w, &mut rng)).collect();
        let mut prefix_heights = Vec::with_capacity(s + 1);
        let mut colon = None;
        let mut failed = false;
        for i in 0..=s {
            let idx: Vec<usize> = (0..i).collect();
            let k = colon_of(e, &elements, &idx);
            let h = k.height();
            if !h.at_least(required(i, rank)) && !failed {
                failures.push(PrefixFailure { attempt, subset: idx.iter().map(|x| x + 1).collect(), required: required(i, rank), found: h });
                failed = true;
            }
            prefix_heights.push(h);
            if i == s {
                colon = Some(k);
            }
        }
        let subsets_checked = s <= SUBSET_LIMIT;
        if subsets_checked && !failed {
            for mask in 1u32..(1 << s) {
                let idx: Vec<usize> = (0..s).filter(|b| mask >> b & 1 == 1).collect();
                let need = required(idx.len(), rank);
                let is_prefix = mask & (mask + 1) == 0;
                if need == 0 || is_prefix {
                    continue;
                }
                let h = colon_of(e, &elements, &idx).height();
                if !h.at_least(need) {
                    failures.push(PrefixFailure { attempt, subset: idx.iter().map(|x| x + 1).collect(), required: need, found: h });
                    failed = true;
                    break;
                }
            }
        }
        if failed {
            continue;
        }
        let colon = colon.unwrap();
        let height = prefix_heights[s];
        let proper = !colon.is_unit();
        let cohen_macaulay = if proper {
            Some(PresentedModule::quotient_ring(&colon)?.is_cohen_macaulay())
        } else {
            None
        };
        return Ok(ResidualCertificate {
            s,
            e: rank,
            seed,
            elements,
            colon,
            prefix_heights,
            subsets_checked,
            height,
            proper,
            cohen_macaulay,
            attempts: attempt,
            first_draw_ok: attempt == 1,
            failures,
        });
    }
    let last = failures.last().map(|f| format!("{:?}", f.subset)).unwrap_or_default();
    Err(Error::RetryCapExceeded { attempts: RETRY_CAP, reason: format!("height bound fails on elements {last}") })
}

#[derive(Clone, Debug, Serialize)]
pub struct AnRow {
    pub i: usize,
    pub expected_height: usize,
    pub trials: usize,
    pub proper: usize,
    pub improper: usize,
    pub cohen_macaulay: usize,
    pub height_exact: usize,
    pub first_draw_ok: usize,
    pub errors: Vec<String>,
    /// `(trial, failure)` for every rejected draw.
    pub failures: Vec<(usize, PrefixFailure)>,
    #[serde(skip)]
    pub certificates: Vec<ResidualCertificate>,
}

impl AnRow {
    /// Every proper `K` is Cohen–Macaulay.
    pub fn all_cm(&self) -> bool {
        self.errors.is_empty() && self.cohen_macaulay == self.proper
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnTable {
    pub e: usize,
    pub s: usize,
    pub seed: u64,
    pub rows: Vec<AnRow>,
}

impl AnTable {
    pub fn all_cm(&self) -> bool {
        self.rows.iter().all(AnRow::all_cm)
    }
}

/// Runs `trials` residual intersections of `E` for each `e ≤ i ≤ min(s, d + e - 1)`.
pub fn check_an(e: &PresentedModule, s: usize, trials: usize, seed: u64) -> Result<AnTable> {
    let rank = e.rank();
    if s < rank {
        return Err(Error::Precondition(format!("s = {s} is below the rank {rank}")));
    }
    let top = s.min(e.ring().nvars() + rank - 1);
    let full = Submodule::full(e);
    let mut rows = Vec::new();
    for i in rank.max(1)..=top {
        let results: Vec<Result<ResidualCertificate>> = (0..trials)
            .into_par_iter()
            .map(|t| residual_intersection(e, &full, i, derive_seed(seed, i as u64, t as u64)))
            .collect();
        let expected_height = required(i, rank);
        let mut row = AnRow {
            i,
            expected_height,
            trials,
            proper: 0,
            improper: 0,
            cohen_macaulay: 0,
            height_exact: 0,
            first_draw_ok: 0,
            errors: Vec::new(),
            failures: Vec::new(),
            certificates: Vec::new(),
        };
        for (t, r) in results.into_iter().enumerate() {
            match r {
                Ok(c) => {
                    row.failures.extend(c.failures.iter().cloned().map(|f| (t, f)));
                    row.first_draw_ok += c.first_draw_ok as usize;
                    if c.proper {
                        row.proper += 1;
                        row.cohen_macaulay += (c.cohen_macaulay == Some(true)) as usize;
                        row.height_exact += (c.height == Height::Finite(expected_height)) as usize;
                    } else {
                        row.improper += 1;
                    }
                    row.certificates.push(c);
                }
                Err(err) => row.errors.push(format!("trial {t}: {err}")),
            }
        }
        rows.push(row);
    }
    Ok(AnTable { e: rank, s, seed, rows })
}
