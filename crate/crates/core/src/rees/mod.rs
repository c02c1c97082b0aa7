//! Symmetric and Rees algebras of graded modules, special fibers, reductions,
//! reduction numbers and Monte Carlo cores.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modalg::ops::{minimal_subset, SpanGb, Vect};
use crate::modalg::{PolyMatrix, PresentedModule, Submodule};
use crate::poly::{Monomial, PolyRing, Polynomial};

pub const DEFAULT_MAX_T_DEGREE: usize = 6;
pub const DEFAULT_MAX_X_DEGREE: usize = 10;
pub const DEFAULT_SAMPLES: usize = 12;
pub const DEFAULT_WINDOW: usize = 3;
const RETRY_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_t_degree: usize,
    pub max_x_degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_t_degree: DEFAULT_MAX_T_DEGREE, max_x_degree: DEFAULT_MAX_X_DEGREE }
    }
}

/// `r_U(E)`, or a lower bound when the search hit its cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ReductionNumber {
    Exact(usize),
    AtLeast(usize),
}

/// Result of intersecting random minimal reductions.
#[derive(Clone, Debug)]
pub struct CoreEstimate {
    pub core: Submodule,
    pub samples_used: usize,
    pub reductions: Vec<Submodule>,
}

/// The Rees algebra of a torsionfree module `E` with generators in one degree,
/// presented as a quotient of `R[T_1..T_n]`.
pub struct ReesPackage {
    parent: PresentedModule,
    big: PolyRing,
    nx: usize,
    degree: i64,
    inverting: Polynomial,
    sym: Ideal,
    rees: Ideal,
    fiber_ring: PolyRing,
    fiber: Ideal,
    ell: OnceLock<usize>,
    caps: Caps,
    components: Mutex<HashMap<usize, PresentedModule>>,
}

impl std::fmt::Debug for ReesPackage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ReesPackage")
            .field("ring", &self.big)
            .field("rees", &self.rees)
            .field("fiber", &self.fiber)
            .finish()
    }
}

/// Key for picking the saturating element: cheap saturation first.
fn inverting_cost(f: &Polynomial) -> (i64, usize, i64) {
    let content = f.monomial_content();
    let rest = f.div_monomial(&content).unwrap();
    let support = content.support_mask().count_ones() as usize;
    (rest.degree().unwrap_or(0), support, f.degree().unwrap_or(0))
}

impl ReesPackage {
    pub fn new(e: &PresentedModule) -> Result<Self> {
        Self::with_caps(e, Caps::default())
    }

    pub fn with_caps(e: &PresentedModule, caps: Caps) -> Result<Self> {
        let k = e.ngens() - e.rank();
        let a = if k == 0 {
            Polynomial::one(e.ring())
        } else {
            e.presentation()
                .minors(k)
                .into_iter()
                .enumerate()
                .min_by_key(|(i, f)| (inverting_cost(f), *i))
                .map(|(_, f)| f)
                .expect("rank guarantees a nonzero minor")
        };
        Self::build(e, a, caps)
    }

    /// Uses `a` (a nonzero element of `Fitt_e(E)`) to remove torsion.
    pub fn with_inverting_element(e: &PresentedModule, a: Polynomial, caps: Caps) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::Precondition("inverting element must be nonzero".into()));
        }
        let fitt = e.fitting_ideal(e.rank());
        if !fitt.contains(&a)? {
            return Err(Error::Precondition("inverting element is not in Fitt_e(E)".into()));
        }
        Self::build(e, a, caps)
    }

    fn build(e: &PresentedModule, a: Polynomial, caps: Caps) -> Result<Self> {
        let degree = e.common_degree()?;
        if e.rank() == 0 {
            return Err(Error::Precondition("module must have positive rank".into()));
        }
        if !e.is_torsionfree() {
            return Err(Error::Torsion);
        }
        let base = e.ring();
        let nx = base.nvars();
        let n = e.ngens();
        let mut names = base.vars().to_vec();
        let mut weights = base.weights().to_vec();
        let shift = (1 - degree).max(0);
        let mut t_names = Vec::with_capacity(n);
        for i in 0..n {
            let mut name = format!("T{}", i + 1);
            while names.contains(&name) {
                name.push('_');
            }
            names.push(name.clone());
            t_names.push(name);
            weights.push((degree + shift) as u32);
        }
        let big = base.derived(&names, weights)?;
        let embed: Vec<usize> = (0..nx).collect();
        let tvars: Vec<Polynomial> = (0..n).map(|i| big.var(nx + i)).collect();
        let sym_gens: Vec<Polynomial> = e
            .relations()
            .iter()
            .map(|col| {
                col.iter()
                    .zip(&tvars)
                    .fold(Polynomial::zero(&big), |acc, (c, t)| &acc + &(&c.map_vars(&big, &embed) * t))
            })
            .collect();
        let sym = Ideal::new(&big, sym_gens);
        let rees = sym.saturate(&a.map_vars(&big, &embed))?.ideal;
        let fiber_ring = PolyRing::grevlex(base.characteristic(), &t_names)?;
        let to_fiber: Vec<usize> = (0..nx + n).map(|i| i.saturating_sub(nx)).collect();
        let fiber_gens = rees
            .gens()
            .iter()
            .map(|g| {
                let terms: Vec<(Monomial, i64)> = g
                    .terms()
                    .iter()
                    .filter(|(m, _)| (0..nx).all(|v| m.exponent(v) == 0))
                    .map(|&(m, c)| (m, c as i64))
                    .collect();
                Polynomial::from_terms(&big, terms).map_vars(&fiber_ring, &to_fiber)
            })
            .collect();
        let fiber = Ideal::new(&fiber_ring, fiber_gens);
        Ok(ReesPackage {
            parent: e.clone(),
            big,
            nx,
            degree,
            inverting: a,
            sym,
            rees,
            fiber_ring,
            fiber,
            ell: OnceLock::new(),
            caps,
            components: Mutex::new(HashMap::new()),
        })
    }

    pub fn parent(&self) -> &PresentedModule {
        &self.parent
    }

    pub fn big_ring(&self) -> &PolyRing {
        &self.big
    }

    pub fn fiber_ring(&self) -> &PolyRing {
        &self.fiber_ring
    }

    pub fn inverting_element(&self) -> &Polynomial {
        &self.inverting
    }

    pub fn sym_ideal(&self) -> &Ideal {
        &self.sym
    }

    pub fn rees_ideal(&self) -> &Ideal {
        &self.rees
    }

    pub fn fiber_ideal(&self) -> &Ideal {
        &self.fiber
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// Common degree of the generators of `E`.
    pub fn generator_degree(&self) -> i64 {
        self.degree
    }

    /// `ℓ(E) = dim F(E)`.
    pub fn analytic_spread(&self) -> usize {
        *self.ell.get_or_init(|| self.fiber.krull_dimension().max(0) as usize)
    }

    /// Splits a polynomial of the big ring by its `T`-monomial into base-ring coefficients.
    fn split_t(&self, g: &Polynomial) -> Vec<(Monomial, Polynomial)> {
        let base = self.parent.ring();
        let n = self.parent.ngens();
        let mut groups: Vec<(Monomial, Vec<(Monomial, i64)>)> = Vec::new();
        for &(m, c) in g.terms() {
            let mut t = Monomial::ONE;
            let mut x = Monomial::ONE;
            for v in 0..self.nx {
                x.set_exponent(v, m.exponent(v));
            }
            for i in 0..n {
                t.set_exponent(i, m.exponent(self.nx + i));
            }
            match groups.iter_mut().find(|(k, _)| *k == t) {
                Some((_, terms)) => terms.push((x, c as i64)),
                None => groups.push((t, vec![(x, c as i64)])),
            }
        }
        groups
            .into_iter()
            .map(|(t, terms)| (t, Polynomial::from_terms(base, terms)))
            .collect()
    }

    /// Rees generators split into pieces homogeneous in the `T`-degree.
    fn rees_pieces(&self) -> Vec<(usize, Vec<(Monomial, Polynomial)>)> {
        let mut out = Vec::new();
        for g in self.rees.gens() {
            let mut by_deg: HashMap<usize, Vec<(Monomial, Polynomial)>> = HashMap::new();
            for (t, c) in self.split_t(g) {
                by_deg.entry(t.total_degree() as usize).or_default().push((t, c));
            }
            let mut keys: Vec<usize> = by_deg.keys().copied().collect();
            keys.sort();
            for k in keys {
                out.push((k, by_deg.remove(&k).unwrap()));
            }
        }
        out
    }

    fn t_monomials(&self, j: usize) -> Vec<Monomial> {
        self.fiber_ring.monomials_of_degree(j as i64)
    }

    fn t_degree_of(&self, m: &Monomial) -> i64 {
        self.parent
            .degrees()
            .iter()
            .enumerate()
            .map(|(i, d)| m.exponent(i) as i64 * d)
            .sum()
    }

    /// Coordinates in `E^j` of `Σ coeffs·(μ·ν)`.
    fn place(&self, index: &HashMap<Monomial, usize>, len: usize, piece: &[(Monomial, Polynomial)], nu: &Monomial) -> Vect {
        let base = self.parent.ring();
        let mut v = vec![Polynomial::zero(base); len];
        for (mu, c) in piece {
            let k = index[&mu.mul(nu)];
            v[k] = &v[k] + c;
        }
        v
    }

    /// `E^j = [R(E)]_j` presented on the `T`-monomials of degree `j`.
    pub fn graded_component(&self, j: usize) -> Result<PresentedModule> {
        if j == 0 {
            return Err(Error::Precondition("graded components start at j = 1".into()));
        }
        if j > self.caps.max_t_degree {
            return Err(Error::DegreeCap { what: format!("graded component E^{j}"), cap: self.caps.max_t_degree });
        }
        if let Some(m) = self.components.lock().unwrap().get(&j) {
            return Ok(m.clone());
        }
        let base = self.parent.ring();
        let monos = self.t_monomials(j);
        let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let degrees: Vec<i64> = monos.iter().map(|m| self.t_degree_of(m)).collect();
        let mut cols: Vec<Vect> = Vec::new();
        for (k, piece) in self.rees_pieces() {
            if k > j {
                continue;
            }
            for nu in self.t_monomials(j - k) {
                cols.push(self.place(&index, monos.len(), &piece, &nu));
            }
        }
        let keep = minimal_subset(base, &degrees, &cols);
        let cols: Vec<Vect> = keep.into_iter().map(|i| cols[i].clone()).collect();
        let m = PresentedModule::new(base, degrees, PolyMatrix::from_columns(base, monos.len(), cols)?)?;
        self.components.lock().unwrap().insert(j, m.clone());
        Ok(m)
    }

    /// Images in `F(E)_1` of the generators of `U`: the constant parts of their coordinates.
    fn fiber_forms(&self, u: &Submodule) -> Vec<Polynomial> {
        let f = &self.fiber_ring;
        u.gens()
            .iter()
            .map(|g| {
                let terms = g
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.is_constant())
                    .map(|(i, c)| (Monomial::var(i, 1), c.leading_coeff().unwrap_or(0) as i64));
                Polynomial::from_terms(f, terms)
            })
            .filter(|p| !p.is_zero())
            .collect()
    }

    fn fiber_quotient(&self, u: &Submodule) -> Ideal {
        self.fiber.sum(&Ideal::new(&self.fiber_ring, self.fiber_forms(u)))
    }

    /// `U` is a reduction iff its linear forms cut `F(E)` down to dimension zero.
    pub fn is_reduction(&self, u: &Submodule) -> Result<bool> {
        if u.parent() != &self.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(self.fiber_quotient(u).krull_dimension() <= 0)
    }

    /// The submodule generated by `count` random `k`-combinations of the generators.
    pub fn random_combinations<R: Rng>(&self, count: usize, rng: &mut R) -> Submodule {
        let base = self.parent.ring();
        let p = base.characteristic();
        let gens = (0..count)
            .map(|_| {
                (0..self.parent.ngens())
                    .map(|_| Polynomial::constant(base, rng.gen_range(0..p) as i64))
                    .collect()
            })
            .collect();
        Submodule::new(&self.parent, gens).expect("constant combinations are homogeneous")
    }

    /// A random reduction with `count` generators (default `ℓ(E)`), redrawn until
    /// the reduction test passes.
    pub fn random_reduction<R: Rng>(&self, count: Option<usize>, rng: &mut R) -> Result<Submodule> {
        let count = count.unwrap_or_else(|| self.analytic_spread());
        for _ in 0..RETRY_CAP {
            let u = self.random_combinations(count, rng);
            if self.is_reduction(&u)? {
                return Ok(u);
            }
        }
        Err(Error::RetryCapExceeded {
            attempts: RETRY_CAP,
            reason: format!("no reduction with {count} generators found"),
        })
    }

    /// Least `r ≤ max_degree` with `U·E^r = E^{r+1}`, read off the Hilbert function of
    /// `F(E)/U·F(E)` (by graded Nakayama, equality modulo the maximal ideal suffices).
    pub fn reduction_number(&self, u: &Submodule, max_degree: usize) -> Result<ReductionNumber> {
        if !self.is_reduction(u)? {
            return Err(Error::Precondition("U is not a reduction of E".into()));
        }
        let q = self.fiber_quotient(u);
        for r in 0..=max_degree {
            if q.hilbert_function(r as i64 + 1) == 0 {
                return Ok(ReductionNumber::Exact(r));
            }
        }
        Ok(ReductionNumber::AtLeast(max_degree))
    }

    /// The same number computed by comparing `U·E^r` and `E^{r+1}` inside the
    /// presented component `E^{r+1}`.
    pub fn reduction_number_by_components(&self, u: &Submodule, max_degree: usize) -> Result<ReductionNumber> {
        if u.parent() != &self.parent {
            return Err(Error::ParentMismatch);
        }
        for r in 0..=max_degree.min(self.caps.max_t_degree.saturating_sub(1)) {
            if self.equals_next_power(u, r)? {
                return Ok(ReductionNumber::Exact(r));
            }
        }
        Ok(ReductionNumber::AtLeast(max_degree))
    }

    /// Does `U·E^r = E^{r+1}` hold?
    pub fn equals_next_power(&self, u: &Submodule, r: usize) -> Result<bool> {
        let comp = self.graded_component(r + 1)?;
        let base = self.parent.ring();
        let monos = self.t_monomials(r + 1);
        let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut span: Vec<Vect> = comp.relations().to_vec();
        for g in u.gens() {
            let piece: Vec<(Monomial, Polynomial)> = g
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::var(i, 1), c.clone()))
                .collect();
            for nu in self.t_monomials(r) {
                span.push(self.place(&index, monos.len(), &piece, &nu));
            }
        }
        let top = comp.degrees().iter().copied().max().unwrap_or(0);
        let cap = top + self.caps.max_x_degree as i64;
        let gb = SpanGb::truncated(base, comp.degrees(), &span, cap);
        Ok((0..comp.ngens()).all(|i| gb.contains(&comp.generator(i))))
    }

    /// Intersects random minimal reductions until the intersection is unchanged for
    /// `window` consecutive samples.
    pub fn core_monte_carlo<R: Rng>(&self, samples: usize, window: usize, rng: &mut R) -> Result<CoreEstimate> {
        if window == 0 || samples < window {
            return Err(Error::Precondition("samples must be at least the stabilization window".into()));
        }
        let first = self.random_reduction(None, rng)?;
        let mut core = first.clone();
        let mut reductions = vec![first];
        let mut unchanged = 0;
        for used in 2..=samples {
            let u = self.random_reduction(None, rng)?;
            let next = core.intersect(&u)?;
            if next.same_as(&core)? {
                unchanged += 1;
            } else {
                unchanged = 0;
            }
            core = next;
            reductions.push(u);
            if unchanged >= window {
                return Ok(CoreEstimate { core, samples_used: used, reductions });
            }
        }
        Err(Error::NoStabilization { samples })
    }

    /// `R(E)` as a cyclic module over the big polynomial ring.
    pub fn rees_algebra_module(&self) -> Result<PresentedModule> {
        PresentedModule::quotient_ring(&self.rees)
    }

    /// `dim R(E)`.
    pub fn rees_dimension(&self) -> i64 {
        self.rees.krull_dimension()
    }

    /// Linear form `Σ v_i T_i` of a coordinate vector.
    pub fn linear_form(&self, v: &[Polynomial]) -> Polynomial {
        let embed: Vec<usize> = (0..self.nx).collect();
        v.iter().enumerate().fold(Polynomial::zero(&self.big), |acc, (i, c)| {
            &acc + &(&c.map_vars(&self.big, &embed) * &self.big.var(self.nx + i))
        })
    }
}
