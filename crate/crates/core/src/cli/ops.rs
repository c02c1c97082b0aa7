//! Task table and task execution.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use serde_json::{json, Value};

use super::dsl::{Session, Task};
use super::report::Status;
use crate::checks::{
    self, check_an, check_cm_rees, check_ext_vanishing, check_gs, derive_seed, rng_for, residual_intersection, verify_balanced,
    verify_free_quotient, verify_pd1_core, BalancedStatus, BuildMode, HypothesisReport, McParams, Pd1Status, Verdict,
};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modalg::{PresentedModule, Submodule};
use crate::poly::Polynomial;
use crate::rees::{Caps, ReductionNumber, ReesPackage, DEFAULT_SAMPLES, DEFAULT_WINDOW};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgKind {
    Ideal,
    Module,
    /// An ideal or a module.
    Any,
    Submodule,
    OptModule,
    OptSubmodule,
}

impl ArgKind {
    pub fn optional(self) -> bool {
        matches!(self, ArgKind::OptModule | ArgKind::OptSubmodule)
    }

    pub fn describe(self) -> &'static str {
        match self {
            ArgKind::Ideal => "an ideal",
            ArgKind::Module | ArgKind::OptModule => "a module",
            ArgKind::Any => "an ideal or module",
            ArgKind::Submodule | ArgKind::OptSubmodule => "a submodule",
        }
    }
}

#[derive(Debug)]
pub struct OpSpec {
    pub name: &'static str,
    pub args: &'static [ArgKind],
    pub flags: &'static [&'static str],
    pub required_flags: &'static [&'static str],
    pub randomized: bool,
    /// A seed is optional once this many arguments are supplied.
    pub seed_unless_arg: Option<usize>,
    /// The first argument must have all generators in one degree.
    pub equigenerated: bool,
}

impl OpSpec {
    pub fn usage(&self) -> String {
        let args: Vec<String> = self
            .args
            .iter()
            .map(|a| if a.optional() { format!("[{}]", a.describe()) } else { a.describe().to_string() })
            .collect();
        if args.is_empty() {
            "no arguments".into()
        } else {
            args.join(", ")
        }
    }
}

const fn op(name: &'static str, args: &'static [ArgKind]) -> OpSpec {
    OpSpec { name, args, flags: &[], required_flags: &[], randomized: false, seed_unless_arg: None, equigenerated: false }
}

use ArgKind::*;

const MC_FLAGS: &[&str] = &["seed", "samples", "window"];
const BAL_FLAGS: &[&str] = &["seed", "reductions", "samples", "window"];

pub static OPS: &[OpSpec] = &[
    op("groebner_basis", &[Ideal]),
    op("height", &[Ideal]),
    op("dimension", &[Any]),
    op("mu", &[Any]),
    op("rank", &[Module]),
    OpSpec { flags: &["degree"], required_flags: &["degree"], ..op("hilbert_function", &[Any]) },
    op("intersect", &[Ideal, Ideal]),
    op("quotient", &[Ideal, Ideal]),
    op("saturate", &[Ideal, Ideal]),
    op("resolution", &[Module]),
    op("pd", &[Module]),
    op("depth", &[Module]),
    OpSpec { flags: &["index"], required_flags: &["index"], ..op("ext", &[Module]) },
    OpSpec { flags: &["index"], required_flags: &["index"], ..op("fitting", &[Module]) },
    op("annihilator", &[Module]),
    op("torsionfree", &[Module]),
    op("colon", &[Submodule]),
    OpSpec { equigenerated: true, ..op("sym_ideal", &[Module]) },
    OpSpec { equigenerated: true, ..op("rees_ideal", &[Module]) },
    OpSpec { equigenerated: true, ..op("fiber_ideal", &[Module]) },
    OpSpec { equigenerated: true, ..op("linear_type", &[Module]) },
    OpSpec { equigenerated: true, ..op("analytic_spread", &[Module]) },
    OpSpec { equigenerated: true, ..op("is_reduction", &[Module, Submodule]) },
    OpSpec {
        flags: &["seed", "max_degree"],
        randomized: true,
        seed_unless_arg: Some(1),
        equigenerated: true,
        ..op("reduction_number", &[Module, OptSubmodule])
    },
    OpSpec { flags: MC_FLAGS, randomized: true, equigenerated: true, ..op("core", &[Module]) },
    OpSpec { flags: &["s"], required_flags: &["s"], ..op("check_gs", &[Module]) },
    OpSpec {
        flags: &["s", "seed"],
        required_flags: &["s"],
        randomized: true,
        ..op("residual_intersection", &[Module, OptSubmodule])
    },
    OpSpec { flags: &["s", "trials", "seed"], randomized: true, ..op("check_an", &[Module]) },
    OpSpec { equigenerated: true, ..op("check_ext_vanishing", &[Module]) },
    OpSpec { equigenerated: true, ..op("check_cm_rees", &[Module]) },
    OpSpec { equigenerated: true, ..op("hypotheses", &[Module]) },
    op("verify_free_quotient", &[Module, Submodule]),
    OpSpec { flags: BAL_FLAGS, randomized: true, equigenerated: true, ..op("verify_balanced", &[Module]) },
    OpSpec { flags: BAL_FLAGS, randomized: true, equigenerated: true, ..op("verify_pd1_core", &[Module]) },
    OpSpec { flags: &["e", "mode"], required_flags: &["e"], ..op("build_ideal_module", &[Ideal]) },
];

/// Result of one task before timing and bookkeeping.
pub struct Outcome {
    pub status: Status,
    pub value: Option<Value>,
    pub error: Option<String>,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { status: Status::Ok, value: Some(value), error: None }
    }

    fn with(status: Status, value: Value) -> Self {
        Outcome { status, value: Some(value), error: None }
    }

    /// Maps library errors onto report statuses; capped computations stay inconclusive.
    pub fn from_error(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::DegreeCap { what, cap } => Outcome {
                status: Status::Inconclusive,
                value: Some(json!({ "cap": cap, "what": what })),
                error: Some(msg),
            },
            Error::NoStabilization { samples } => Outcome {
                status: Status::Inconclusive,
                value: Some(json!({ "samples": samples })),
                error: Some(msg),
            },
            Error::Precondition(_) | Error::Torsion => {
                Outcome { status: Status::FailedHypothesis, value: None, error: Some(msg) }
            }
            _ => Outcome { status: Status::Error, value: None, error: Some(msg) },
        }
    }
}

/// Shared state for one run: caps and lazily built Rees packages.
pub struct Runner<'s> {
    pub session: &'s Session,
    pub caps: Caps,
    rees: HashMap<String, OnceLock<std::result::Result<Arc<ReesPackage>, Error>>>,
}

fn ideal_value(i: &Ideal) -> Value {
    let mut gens: Vec<String> = i.minimalized().gens().iter().map(|g| g.monic().render()).collect();
    gens.sort();
    json!({ "generators": gens })
}

fn gb_value(i: &Ideal) -> Value {
    json!({ "groebner_basis": checks::render_ideal(i) })
}

fn vectors_value(vs: &[Vec<Polynomial>]) -> Value {
    json!(checks::render_vectors(vs))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn verdict_status(v: &Verdict) -> Status {
    match v {
        Verdict::Inconclusive(_) => Status::Inconclusive,
        _ => Status::Ok,
    }
}

impl<'s> Runner<'s> {
    pub fn new(session: &'s Session, caps: Caps) -> Self {
        let rees = session
            .names
            .iter()
            .filter(|n| session.module(n).is_some())
            .map(|n| (n.clone(), OnceLock::new()))
            .collect();
        Runner { session, caps, rees }
    }

    fn rees(&self, name: &str) -> Result<Arc<ReesPackage>> {
        self.rees[name]
            .get_or_init(|| ReesPackage::with_caps(self.module(name), self.caps).map(Arc::new))
            .clone()
    }

    fn module(&self, name: &str) -> &PresentedModule {
        self.session.module(name).expect("validated at parse time")
    }

    fn ideal(&self, name: &str) -> &Ideal {
        self.session.ideal(name).expect("validated at parse time")
    }

    fn submodule(&self, name: &str) -> &Submodule {
        self.session.submodule(name).expect("validated at parse time").1
    }

    fn sub_of(&self, e: &str, u: &str) -> Result<&Submodule> {
        let sub = self.submodule(u);
        if sub.parent() != self.module(e) {
            return Err(Error::ParentMismatch);
        }
        Ok(sub)
    }

    fn setting(&self, task: &Task, key: &str) -> Option<u64> {
        task.flags
            .get(key)
            .and_then(|v| v.parse().ok())
            .or_else(|| self.session.settings.get(key).copied())
    }

    /// The seed of a randomized task, offset by its index when it comes from the session default.
    fn seed(&self, task: &Task) -> u64 {
        match task.flags.get("seed").and_then(|v| v.parse().ok()) {
            Some(s) => s,
            None => derive_seed(self.session.settings.get("seed").copied().unwrap_or(0), 0, task.index as u64),
        }
    }

    fn mc(&self, task: &Task) -> McParams {
        McParams {
            samples: self.setting(task, "samples").map_or(DEFAULT_SAMPLES, |v| v as usize),
            window: self.setting(task, "window").map_or(DEFAULT_WINDOW, |v| v as usize),
        }
    }

    /// Effective parameters, recorded in the report.
    pub fn params(&self, task: &Task) -> BTreeMap<String, Value> {
        let mut p: BTreeMap<String, Value> = BTreeMap::new();
        for (k, v) in &task.flags {
            let val = v.parse::<u64>().map_or_else(|_| json!(v), |n| json!(n));
            p.insert(k.clone(), val);
        }
        let spec = task.op;
        let has_source = spec.seed_unless_arg.is_some_and(|k| task.args.len() > k);
        if spec.randomized && !has_source {
            p.insert("seed".into(), json!(self.seed(task)));
        }
        if spec.flags.contains(&"samples") {
            let mc = self.mc(task);
            p.insert("samples".into(), json!(mc.samples));
            p.insert("window".into(), json!(mc.window));
        }
        if spec.name == "reduction_number" {
            p.entry("max_degree".into()).or_insert(json!(self.caps.max_x_degree));
        }
        p
    }

    pub fn execute(&self, task: &Task) -> Outcome {
        let mut out = match self.dispatch(task) {
            Ok(o) => o,
            Err(e) => Outcome::from_error(e),
        };
        if out.status == Status::Inconclusive {
            let caps = json!({ "max_t_degree": self.caps.max_t_degree, "max_x_degree": self.caps.max_x_degree });
            out.value = Some(match out.value.take() {
                Some(Value::Object(mut m)) => {
                    m.insert("caps".into(), caps);
                    Value::Object(m)
                }
                Some(v) => json!({ "result": v, "caps": caps }),
                None => json!({ "caps": caps }),
            });
        }
        out
    }

    fn flag(&self, task: &Task, key: &str) -> Option<usize> {
        self.setting(task, key).map(|v| v as usize)
    }

    fn dispatch(&self, task: &Task) -> Result<Outcome> {
        let a = &task.args;
        let name = a.first().map(String::as_str).unwrap_or_default();
        let seed = self.seed(task);
        Ok(match task.op.name {
            "groebner_basis" => Outcome::ok(gb_value(self.ideal(name))),
            "height" => Outcome::ok(to_value(&self.ideal(name).height())),
            "dimension" => match self.session.ideal(name) {
                Some(i) => Outcome::ok(json!(i.krull_dimension())),
                None => Outcome::ok(json!(self.module(name).dimension())),
            },
            "mu" => match self.session.ideal(name) {
                Some(i) if i.is_homogeneous() => Outcome::ok(json!(i.minimal_generator_count())),
                Some(_) => return Err(Error::Precondition("mu needs a homogeneous ideal".into())),
                None => Outcome::ok(json!(self.module(name).mu())),
            },
            "rank" => Outcome::ok(json!(self.module(name).rank())),
            "hilbert_function" => {
                let d = self.flag(task, "degree").unwrap() as i64;
                match self.session.ideal(name) {
                    Some(i) => Outcome::ok(json!({ "of": "quotient", "degree": d, "value": i.hilbert_function(d) })),
                    None => Outcome::ok(json!({ "of": "module", "degree": d, "value": self.module(name).hilbert_function(d) })),
                }
            }
            "intersect" => Outcome::ok(ideal_value(&self.ideal(&a[0]).intersect(self.ideal(&a[1])))),
            "quotient" => {
                let q = self.ideal(&a[0]).quotient(self.ideal(&a[1]));
                let mut v = ideal_value(&q.ideal);
                v["divisor_was_zero"] = json!(q.divisor_was_zero);
                Outcome::ok(v)
            }
            "saturate" => {
                let j = self.ideal(&a[0]);
                let mut acc: Option<Ideal> = None;
                for g in self.ideal(&a[1]).gens() {
                    let s = j.saturate(g)?.ideal;
                    acc = Some(match acc {
                        None => s,
                        Some(x) => x.intersect(&s),
                    });
                }
                Outcome::ok(ideal_value(&acc.unwrap_or_else(|| j.clone())))
            }
            "resolution" => {
                let res = self.module(name).free_resolution();
                let degrees: Vec<&[i64]> = (0..=res.length()).map(|k| res.degrees(k)).collect();
                Outcome::ok(json!({ "ranks": res.ranks(), "degrees": degrees, "length": res.length() }))
            }
            "pd" => Outcome::ok(json!(self.module(name).projective_dimension())),
            "depth" => Outcome::ok(json!(self.module(name).depth())),
            "ext" => {
                let i = self.flag(task, "index").unwrap();
                let x = self.module(name).ext(i);
                Outcome::ok(json!({ "index": i, "is_zero": x.is_zero, "mu": x.module.mu(), "degrees": x.module.minimal().module.degrees() }))
            }
            "fitting" => {
                let t = self.flag(task, "index").unwrap();
                Outcome::ok(ideal_value(&self.module(name).fitting_ideal(t)))
            }
            "annihilator" => Outcome::ok(ideal_value(&self.module(name).annihilator())),
            "torsionfree" => Outcome::ok(json!(self.module(name).is_torsionfree())),
            "colon" => Outcome::ok(ideal_value(&self.submodule(name).colon_into())),
            "sym_ideal" => Outcome::ok(ideal_value(self.rees(name)?.sym_ideal())),
            "rees_ideal" => Outcome::ok(ideal_value(self.rees(name)?.rees_ideal())),
            "fiber_ideal" => Outcome::ok(ideal_value(self.rees(name)?.fiber_ideal())),
            "linear_type" => {
                let rp = self.rees(name)?;
                Outcome::ok(json!(rp.rees_ideal() == rp.sym_ideal()))
            }
            "analytic_spread" => Outcome::ok(json!(self.rees(name)?.analytic_spread())),
            "is_reduction" => {
                let u = self.sub_of(name, &a[1])?;
                Outcome::ok(json!(self.rees(name)?.is_reduction(u)?))
            }
            "reduction_number" => self.reduction_number(task, seed)?,
            "core" => {
                let rp = self.rees(name)?;
                let mc = self.mc(task);
                let est = rp.core_monte_carlo(mc.samples, mc.window, &mut rng_for(seed))?;
                Outcome::ok(json!({
                    "generators": vectors_value(est.core.gens()),
                    "mu": est.core.mu(),
                    "samples_used": est.samples_used,
                    "samples": mc.samples,
                    "window": mc.window,
                    "seed": seed,
                }))
            }
            "check_gs" => {
                let v = check_gs(self.module(name), self.flag(task, "s").unwrap());
                Outcome::ok(to_value(&v))
            }
            "residual_intersection" => {
                let e = self.module(name);
                let w = match a.get(1) {
                    Some(u) => self.sub_of(name, u)?.clone(),
                    None => Submodule::full(e),
                };
                let c = residual_intersection(e, &w, self.flag(task, "s").unwrap(), seed)?;
                Outcome::ok(to_value(&c))
            }
            "check_an" => {
                let e = self.module(name);
                let s = self.flag(task, "s").unwrap_or_else(|| e.mu().min(e.ring().nvars() + e.rank() - 1));
                let trials = self.flag(task, "trials").unwrap_or(20);
                let t = check_an(e, s, trials, seed)?;
                Outcome::ok(to_value(&t))
            }
            "check_ext_vanishing" => {
                let v = check_ext_vanishing(&*self.rees(name)?);
                Outcome::with(verdict_status(&v.verdict), to_value(&v))
            }
            "check_cm_rees" => {
                let v = check_cm_rees(&*self.rees(name)?)?;
                Outcome::with(verdict_status(&v.s2), to_value(&v))
            }
            "hypotheses" => {
                let h = HypothesisReport::build(name, &*self.rees(name)?)?;
                let mut v = to_value(&h);
                v["verdict"] = to_value(&h.verdict());
                Outcome::with(verdict_status(&h.verdict()), v)
            }
            "verify_free_quotient" => {
                let fq = verify_free_quotient(self.module(name), self.sub_of(name, &a[1])?)?;
                Outcome::ok(to_value(&fq))
            }
            "verify_balanced" => {
                let m = self.flag(task, "reductions").unwrap_or(6);
                let r = verify_balanced(name, &*self.rees(name)?, m, seed, self.mc(task))?;
                let status = match r.status {
                    BalancedStatus::FailedHypothesis => Status::FailedHypothesis,
                    BalancedStatus::Partial => Status::Inconclusive,
                    _ => Status::Ok,
                };
                Outcome::with(status, to_value(&r))
            }
            "verify_pd1_core" => {
                let m = self.flag(task, "reductions").unwrap_or(5);
                let r = verify_pd1_core(&*self.rees(name)?, m, seed, self.mc(task))?;
                let status = match r.status {
                    Pd1Status::HypothesesUnmet => Status::FailedHypothesis,
                    Pd1Status::Partial => Status::Inconclusive,
                    _ => Status::Ok,
                };
                Outcome::with(status, to_value(&r))
            }
            "build_ideal_module" => {
                let mode = match task.flags.get("mode").map(String::as_str) {
                    None | Some("plus_free") => BuildMode::PlusFree,
                    Some("power_sum") => BuildMode::PowerSum,
                    Some(other) => return Err(Error::Precondition(format!("unknown mode `{other}`"))),
                };
                let b = checks::build_ideal_module(self.ideal(name), self.flag(task, "e").unwrap(), mode)?;
                Outcome::ok(json!({
                    "mode": to_value(&mode),
                    "ngens": b.module.ngens(),
                    "degrees": b.module.degrees(),
                    "rank": b.module.rank(),
                    "verdicts": to_value(&b.verdicts),
                }))
            }
            other => unreachable!("task `{other}` is in the table but not dispatched"),
        })
    }

    fn reduction_number(&self, task: &Task, seed: u64) -> Result<Outcome> {
        let name = &task.args[0];
        let rp = self.rees(name)?;
        let max_degree = self.flag(task, "max_degree").unwrap_or(self.caps.max_x_degree);
        let (u, drawn) = match task.args.get(1) {
            Some(u) => (self.sub_of(name, u)?.clone(), false),
            None => (rp.random_reduction(None, &mut rng_for(seed))?, true),
        };
        let r = rp.reduction_number(&u, max_degree)?;
        let mut v = json!({ "reduction_number": to_value(&r), "max_degree": max_degree });
        if drawn {
            v["reduction"] = vectors_value(u.gens());
            v["seed"] = json!(seed);
        }
        Ok(match r {
            ReductionNumber::Exact(_) => Outcome::ok(v),
            ReductionNumber::AtLeast(_) => Outcome::with(Status::Inconclusive, v),
        })
    }
}
