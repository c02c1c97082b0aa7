use std::fmt;
use std::sync::OnceLock;

use super::engine::{minimal_generators, GbEngine, ModCtx, Vector};
use crate::error::{Error, Result};
use crate::poly::{parse_poly, Monomial, MonomialOrder, PolyRing, Polynomial};

#[derive(Clone, Debug)]
struct GbData {
    polys: Vec<Polynomial>,
    engine: GbEngine,
}

/// An ideal of a polynomial ring given by generators, with a lazily computed
/// reduced Gröbner basis for the ring's order.
#[derive(Clone)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    gb: OnceLock<GbData>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Heights of proper ideals are finite; the unit ideal has infinite height.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Height {
    Finite(usize),
    Infinite,
}

impl Height {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Height::Finite(h) => h >= k,
            Height::Infinite => true,
        }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Finite(h) => write!(f, "{h}"),
            Height::Infinite => write!(f, "inf"),
        }
    }
}

/// `(J : f^∞)` together with the least `k` such that `(J : f^k)` is already stable.
#[derive(Clone, Debug)]
pub struct Saturation {
    pub ideal: Ideal,
    pub exponent: u32,
}

/// `(J : I)`; `divisor_was_zero` flags the degenerate case `I = 0`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ideal: Ideal,
    pub divisor_was_zero: bool,
}

fn vectors(ctx: &ModCtx, polys: &[Polynomial]) -> Vec<Vector> {
    polys.iter().map(|p| ctx.encode_poly(p, 0)).collect()
}

fn first_components(ctx: &ModCtx, v: &[Vector]) -> Vec<Polynomial> {
    v.iter().map(|x| ctx.to_polys(x).swap_remove(0)).collect()
}

/// Reduced Gröbner basis of `polys` (all in `ring`).
pub(crate) fn reduced_gb(ring: &PolyRing, polys: &[Polynomial]) -> Vec<Polynomial> {
    let ctx = ModCtx::ideal(ring);
    let e = GbEngine::compute(ctx.clone(), vectors(&ctx, polys), None);
    first_components(&ctx, &e.reduced())
}

impl Ideal {
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .inspect(|g| assert!(g.ring() == ring, "generator from another ring"))
            .collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    pub fn parse(ring: &PolyRing, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|s| parse_poly(s, ring)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &PolyRing) -> Self {
        Ideal::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn gb_data(&self) -> &GbData {
        self.gb.get_or_init(|| {
            let ctx = ModCtx::ideal(&self.ring);
            let e = GbEngine::compute(ctx.clone(), vectors(&ctx, &self.gens), None);
            let red = e.reduced();
            let polys = first_components(&ctx, &red);
            GbData { polys, engine: GbEngine::from_basis(ctx, red) }
        })
    }

    /// The reduced Gröbner basis for the ring's order, sorted by leading term.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        &self.gb_data().polys
    }

    /// Reduced Gröbner basis for another order; the result lives in the re-ordered ring.
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Result<Vec<Polynomial>> {
        let target = self.ring.with_order(order)?;
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.in_ring(&target)).collect();
        Ok(reduced_gb(&target, &gens))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let data = self.gb_data();
        let ctx = &data.engine.ctx;
        ctx.to_polys(&data.engine.reduce(ctx.encode_poly(f, 0))).swap_remove(0)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.normal_form(f).is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.normal_form(g).is_zero())
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().first().is_some_and(|g| g.is_constant())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner_basis()
            .iter()
            .map(|g| g.leading_monomial().unwrap())
            .collect()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens).minimalized()
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Drops redundant generators; only homogeneous ideals are guaranteed minimal.
    pub fn minimalized(&self) -> Ideal {
        if !self.is_homogeneous() {
            return self.clone();
        }
        let ctx = ModCtx::ideal(&self.ring);
        let idx = minimal_generators(&ctx, &vectors(&ctx, &self.gens));
        Ideal::new(&self.ring, idx.into_iter().map(|i| self.gens[i].clone()).collect())
    }

    /// Minimal number of generators (homogeneous ideals).
    pub fn minimal_generator_count(&self) -> usize {
        self.minimalized().gens.len()
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1−t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        let vars = &self.ring.vars();
        let t = self.ring.fresh_name("t");
        let mut names = vec![t];
        names.extend(vars.iter().cloned());
        let mut weights = vec![1];
        weights.extend_from_slice(self.ring.weights());
        let big = PolyRing::with_weights(self.ring.characteristic(), &names, weights, MonomialOrder::Block { split: 1 })
            .expect("valid extended ring");
        let shift: Vec<usize> = (1..=vars.len()).collect();
        let tv = big.var(0);
        let one_minus_t = &Polynomial::one(&big) - &tv;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&tv * &g.map_vars(&big, &shift));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.map_vars(&big, &shift));
        }
        let back: Vec<usize> = std::iter::once(0).chain(0..vars.len()).collect();
        let kept = reduced_gb(&big, &gens)
            .into_iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponent(0) == 0))
            .map(|g| g.map_vars(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `I ∩ J` from a Gröbner basis of the submodule of `R^2` spanned by `(a, a)` and `(b, 0)`.
    pub fn intersect_syz(&self, other: &Ideal) -> Ideal {
        let ctx = ModCtx::new(&self.ring, vec![0, 0]);
        let mut gens: Vec<Vector> = Vec::new();
        for a in &self.gens {
            gens.push(ctx.encode_polys(&[a.clone(), a.clone()]));
        }
        for b in &other.gens {
            gens.push(ctx.encode_poly(b, 0));
        }
        let e = GbEngine::compute(ctx.clone(), gens, None);
        let kept = e
            .reduced()
            .into_iter()
            .filter(|v| v[0].comp == 1)
            .map(|v| ctx.to_polys(&v).swap_remove(1))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `(J : g)` as `(J ∩ (g)) / g`.
    pub fn quotient_by(&self, g: &Polynomial) -> Ideal {
        if g.is_zero() {
            return Ideal::unit(&self.ring);
        }
        let meet = self.intersect_syz(&Ideal::new(&self.ring, vec![g.clone()]));
        let gens = meet
            .gens
            .iter()
            .map(|h| h.exact_div(g).expect("element of (g) is divisible by g"))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `(J : I) = ∩_g (J : g)` over the generators `g` of `I`.
    pub fn quotient(&self, divisor: &Ideal) -> Quotient {
        let mut acc: Option<Ideal> = None;
        for g in &divisor.gens {
            let q = self.quotient_by(g);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect_syz(&q),
            });
        }
        match acc {
            None => Quotient { ideal: Ideal::unit(&self.ring), divisor_was_zero: true },
            Some(ideal) => Quotient { ideal, divisor_was_zero: false },
        }
    }

    /// `(J : f^∞)`.
    ///
    /// Homogeneous input is saturated by each variable dividing `f` with a reverse
    /// lexicographic order that puts the variable last, and by the rest of `f` through
    /// an auxiliary variable `y = f`. Otherwise `t·f − 1` is adjoined and `t` eliminated.
    pub fn saturate(&self, f: &Polynomial) -> Result<Saturation> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::Precondition("saturation by the zero polynomial".into()));
        }
        if f.is_constant() || self.is_zero() {
            return Ok(Saturation { ideal: self.clone(), exponent: 0 });
        }
        let sat = if self.is_homogeneous() && f.is_homogeneous() {
            let content = f.monomial_content();
            let mut cur = self.clone();
            for i in 0..self.ring.nvars() {
                if content.exponent(i) > 0 {
                    cur = cur.saturate_variable(i);
                }
            }
            let rest = f.div_monomial(&content).unwrap();
            if !rest.is_constant() {
                cur = cur.saturate_homogeneous(&rest);
            }
            cur
        } else {
            self.saturate_rabinowitsch(f)
        };
        let exponent = self.stabilization_exponent(&sat, f);
        Ok(Saturation { ideal: sat, exponent })
    }

    fn stabilization_exponent(&self, sat: &Ideal, f: &Polynomial) -> u32 {
        let mut k = 0;
        for g in &sat.gens {
            let mut p = g.clone();
            let mut e = 0;
            while !self.normal_form(&p).is_zero() {
                p = &p * f;
                e += 1;
            }
            k = k.max(e);
        }
        k
    }

    /// `(J : x_i^∞)` for homogeneous `J`.
    pub fn saturate_variable(&self, i: usize) -> Ideal {
        let n = self.ring.nvars();
        // position of each variable in a ring where x_i comes last
        let perm: Vec<usize> = (0..n)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => j,
                std::cmp::Ordering::Equal => n - 1,
                std::cmp::Ordering::Greater => j - 1,
            })
            .collect();
        let mut inv = vec![0; n];
        for (j, &p) in perm.iter().enumerate() {
            inv[p] = j;
        }
        let names: Vec<String> = inv.iter().map(|&j| self.ring.vars()[j].clone()).collect();
        let weights: Vec<u32> = inv.iter().map(|&j| self.ring.weights()[j]).collect();
        let r2 = self.ring.derived(&names, weights).expect("permuted ring");
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.map_vars(&r2, &perm)).collect();
        let out = reduced_gb(&r2, &gens)
            .into_iter()
            .map(|g| {
                let e = g.monomial_content().exponent(n - 1);
                let g = g.div_monomial(&Monomial::var(n - 1, e)).unwrap();
                g.map_vars(&self.ring, &inv)
            })
            .collect();
        Ideal::new(&self.ring, out)
    }

    /// `(J : f^∞)` for homogeneous `J` and `f` via `J + (f − y)` saturated by `y`.
    fn saturate_homogeneous(&self, f: &Polynomial) -> Ideal {
        let n = self.ring.nvars();
        let y = self.ring.fresh_name("y");
        let mut names = self.ring.vars().to_vec();
        names.push(y);
        let mut weights = self.ring.weights().to_vec();
        weights.push(f.degree().unwrap() as u32);
        let big = self.ring.derived(&names, weights).expect("extended ring");
        let id: Vec<usize> = (0..n).collect();
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.map_vars(&big, &id)).collect();
        gens.push(&f.map_vars(&big, &id) - &big.var(n));
        let mut images: Vec<Polynomial> = (0..n).map(|i| self.ring.var(i)).collect();
        images.push(f.clone());
        let out = reduced_gb(&big, &gens)
            .into_iter()
            .map(|g| {
                let e = g.monomial_content().exponent(n);
                g.div_monomial(&Monomial::var(n, e)).unwrap().substitute(&self.ring, &images)
            })
            .collect();
        Ideal::new(&self.ring, out)
    }

    fn saturate_rabinowitsch(&self, f: &Polynomial) -> Ideal {
        let n = self.ring.nvars();
        let t = self.ring.fresh_name("t");
        let mut names = vec![t];
        names.extend(self.ring.vars().iter().cloned());
        let mut weights = vec![1];
        weights.extend_from_slice(self.ring.weights());
        let big = PolyRing::with_weights(self.ring.characteristic(), &names, weights, MonomialOrder::Block { split: 1 })
            .expect("extended ring");
        let shift: Vec<usize> = (1..=n).collect();
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.map_vars(&big, &shift)).collect();
        gens.push(&(&big.var(0) * &f.map_vars(&big, &shift)) - &Polynomial::one(&big));
        let back: Vec<usize> = std::iter::once(0).chain(0..n).collect();
        let kept = reduced_gb(&big, &gens)
            .into_iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponent(0) == 0))
            .map(|g| g.map_vars(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `(J : f^∞)` by iterating `J ↦ (J : f)` until the chain stabilizes.
    pub fn saturate_iterated(&self, f: &Polynomial) -> Saturation {
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let next = cur.quotient_by(f);
            if next == cur {
                return Saturation { ideal: cur, exponent: k };
            }
            cur = next;
            k += 1;
        }
    }

    /// `I ∩ k[keep]`, expressed in the same ring.
    pub fn eliminate(&self, keep: &[usize]) -> Ideal {
        let n = self.ring.nvars();
        let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
        if elim.is_empty() {
            return self.clone();
        }
        let mut order: Vec<usize> = elim.clone();
        order.extend((0..n).filter(|i| keep.contains(i)));
        let mut perm = vec![0; n];
        for (pos, &j) in order.iter().enumerate() {
            perm[j] = pos;
        }
        let names: Vec<String> = order.iter().map(|&j| self.ring.vars()[j].clone()).collect();
        let weights: Vec<u32> = order.iter().map(|&j| self.ring.weights()[j]).collect();
        let big = PolyRing::with_weights(
            self.ring.characteristic(),
            &names,
            weights,
            MonomialOrder::Block { split: elim.len() },
        )
        .expect("block ring");
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.map_vars(&big, &perm)).collect();
        let split = elim.len();
        let kept = reduced_gb(&big, &gens)
            .into_iter()
            .filter(|g| g.terms().iter().all(|(m, _)| (0..split).all(|v| m.exponent(v) == 0)))
            .map(|g| g.map_vars(&self.ring, &order))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `dim R/I`, read off the leading-term ideal; `-1` for the unit ideal.
    pub fn krull_dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let masks: Vec<u32> = self
            .leading_monomials()
            .iter()
            .map(|m| m.support_mask())
            .collect();
        max_independent_set(self.ring.nvars(), &masks) as i64
    }

    pub fn height(&self) -> Height {
        match self.krull_dimension() {
            -1 => Height::Infinite,
            d => Height::Finite(self.ring.nvars() - d as usize),
        }
    }

    /// `dim_k (R/I)_d`, counted on standard monomials.
    pub fn hilbert_function(&self, d: i64) -> usize {
        let lts = self.leading_monomials();
        self.ring
            .monomials_of_degree(d)
            .into_iter()
            .filter(|m| !lts.iter().any(|l| l.divides(m)))
            .count()
    }

    /// Image under a variable renaming into `target`.
    pub fn map_vars(&self, target: &PolyRing, var_map: &[usize]) -> Ideal {
        Ideal::new(target, self.gens.iter().map(|g| g.map_vars(target, var_map)).collect())
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.groebner_basis() == other.groebner_basis()
    }
}

/// Size of the largest variable set containing no support mask from `masks`.
fn max_independent_set(n: usize, masks: &[u32]) -> usize {
    fn rec(i: usize, n: usize, set: u32, size: usize, masks: &[u32], best: &mut usize) {
        if size + (n - i) <= *best {
            return;
        }
        if i == n {
            *best = size;
            return;
        }
        let with = set | (1 << i);
        if masks.iter().all(|&m| m & !with != 0) {
            rec(i + 1, n, with, size + 1, masks, best);
        }
        rec(i + 1, n, set, size, masks, best);
    }
    let mut best = 0;
    rec(0, n, 0, 0, masks, &mut best);
    best
}

pub fn groebner_basis(ideal: &Ideal, order: MonomialOrder) -> Result<Vec<Polynomial>> {
    if &order == ideal.ring.order() {
        return Ok(ideal.groebner_basis().to_vec());
    }
    ideal.groebner_basis_in(order)
}

/// Normal form of `f` with respect to `g`, which must be a Gröbner basis.
pub fn normal_form(f: &Polynomial, g: &[Polynomial]) -> Polynomial {
    let ctx = ModCtx::ideal(f.ring());
    let e = GbEngine::from_basis(ctx.clone(), g.iter().map(|p| ctx.encode_poly(p, 0)).collect());
    ctx.to_polys(&e.reduce(ctx.encode_poly(f, 0))).swap_remove(0)
}

/// Buchberger's criterion: every S-polynomial of `g` reduces to zero modulo `g`.
pub fn is_groebner_basis(g: &[Polynomial]) -> bool {
    let Some(first) = g.first() else { return true };
    let ctx = ModCtx::ideal(first.ring());
    let polys = g.iter().map(|p| ctx.encode_poly(p, 0)).collect();
    GbEngine::from_basis(ctx, polys).is_groebner()
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    Ok(a.intersect(b))
}

pub fn quotient_ideal(j: &Ideal, i: &Ideal) -> Result<Quotient> {
    if j.ring != i.ring {
        return Err(Error::RingMismatch);
    }
    Ok(j.quotient(i))
}

pub fn saturate(j: &Ideal, f: &Polynomial) -> Result<Saturation> {
    j.saturate(f)
}

pub fn eliminate(ideal: &Ideal, keep: &[usize]) -> Ideal {
    ideal.eliminate(keep)
}

pub fn krull_dimension(ideal: &Ideal) -> i64 {
    ideal.krull_dimension()
}

pub fn height(ideal: &Ideal) -> Height {
    ideal.height()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::grevlex(32003, vars).unwrap()
    }

    fn id(r: &PolyRing, g: &[&str]) -> Ideal {
        Ideal::parse(r, g).unwrap()
    }

    fn p(r: &PolyRing, s: &str) -> Polynomial {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"]);
        let i = id(&r, &["x^2", "x*y", "y^2"]);
        let mut got: Vec<String> = i.groebner_basis().iter().map(|g| g.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["x*y", "x^2", "y^2"]);
    }

    #[test]
    fn linear_elimination() {
        let r = ring(&["x", "y"]);
        let i = id(&r, &["x+y", "x-y"]);
        assert_eq!(i.groebner_basis(), &[p(&r, "y"), p(&r, "x")]);
        assert!(i.contains(&p(&r, "x")).unwrap());
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"]);
        assert!(normal_form(&p(&r, "x^2"), &[p(&r, "x")]).is_zero());
        assert_eq!(normal_form(&p(&r, "x^2+y"), &[]), p(&r, "x^2+y"));
        let g = id(&r, &["x^2", "y^2"]);
        assert!(normal_form(&p(&r, "x^2*y + y^3"), g.groebner_basis()).is_zero());
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y"]);
        assert!(!id(&r, &["x^2", "x*y", "y^2"]).contains(&p(&r, "1")).unwrap());
        assert!(!id(&r, &["x^2", "y^2"]).contains(&p(&r, "x*y")).unwrap());
        let other = ring(&["a", "b"]);
        assert_eq!(id(&r, &["x"]).contains(&p(&other, "a")), Err(Error::RingMismatch));
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        assert_eq!(id(&r, &["x"]).intersect(&id(&r, &["y"])), id(&r, &["x*y"]));
        let i = id(&r, &["x^2+y", "x*y"]);
        assert_eq!(i.intersect(&i), i);
        let r4 = ring(&["x1", "x2", "x3", "x4"]);
        let edge = id(&r4, &["x1*x2", "x2*x3", "x3*x4", "x1*x4"]);
        let a = id(&r4, &["x1", "x3"]);
        let b = id(&r4, &["x2", "x4"]);
        assert_eq!(a.intersect(&b), edge);
        assert_eq!(a.intersect_syz(&b), edge);
    }

    #[test]
    fn quotients() {
        let r = ring(&["x", "y"]);
        let j = id(&r, &["x^2", "y^2"]);
        let q = j.quotient(&id(&r, &["x^2", "x*y", "y^2"]));
        assert!(!q.divisor_was_zero);
        assert_eq!(q.ideal, id(&r, &["x", "y"]));
        assert_eq!(j.quotient(&Ideal::unit(&r)).ideal, j);
        assert!(j.quotient(&j).ideal.is_unit());
        let z = j.quotient(&Ideal::zero(&r));
        assert!(z.divisor_was_zero && z.ideal.is_unit());
    }

    #[test]
    fn saturations() {
        let r = ring(&["x", "y"]);
        let s = id(&r, &["x*y"]).saturate(&p(&r, "y")).unwrap();
        assert_eq!(s.ideal, id(&r, &["x"]));
        assert_eq!(s.exponent, 1);
        let j = id(&r, &["x^2", "x*y"]);
        let one = j.saturate(&p(&r, "1")).unwrap();
        assert_eq!(one.ideal, j);
        assert_eq!(one.exponent, 0);

        let r4 = ring(&["x", "y", "T1", "T2"]);
        let j = id(&r4, &["x^2*T1 - x*y*T2"]);
        let x = p(&r4, "x");
        let s = j.saturate(&x).unwrap();
        assert_eq!(s.ideal, id(&r4, &["x*T1 - y*T2"]));
        assert_eq!(s.exponent, 1);
        let it = j.saturate_iterated(&x);
        assert_eq!(it.ideal, s.ideal);
        assert_eq!(it.exponent, s.exponent);
    }

    #[test]
    fn saturation_by_non_monomial_and_inhomogeneous() {
        let r = ring(&["x", "y", "z"]);
        let j = id(&r, &["(x+y)^2*z", "(x+y)*z^2*x"]);
        let f = p(&r, "x+y");
        let s = j.saturate(&f).unwrap();
        assert_eq!(s.ideal, j.saturate_iterated(&f).ideal);
        assert_eq!(s.ideal, id(&r, &["z"]));
        let jn = id(&r, &["x*y - x", "x^2"]);
        let g = p(&r, "x");
        let a = jn.saturate(&g).unwrap();
        assert!(a.ideal.is_unit());
        assert_eq!(a.ideal, jn.saturate_iterated(&g).ideal);
        assert!(j.saturate(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn elimination() {
        let r = ring(&["t", "x"]);
        assert!(id(&r, &["t*x - 1"]).eliminate(&[1]).is_zero());
        let i = id(&r, &["t - x^2"]);
        assert_eq!(i.eliminate(&[0, 1]), i);
        let r5 = ring(&["x", "y", "T1", "T2", "T3"]);
        let graph = id(&r5, &["T1 - x^2", "T2 - x*y", "T3 - y^2"]);
        assert_eq!(graph.eliminate(&[2, 3, 4]), id(&r5, &["T1*T3 - T2^2"]));
    }

    #[test]
    fn dimension_and_height() {
        let r4 = ring(&["x1", "x2", "x3", "x4"]);
        assert_eq!(Ideal::zero(&r4).krull_dimension(), 4);
        let edge = id(&r4, &["x1*x2", "x2*x3", "x3*x4", "x1*x4"]);
        assert_eq!(edge.krull_dimension(), 2);
        assert_eq!(edge.height(), Height::Finite(2));
        assert_eq!(Ideal::zero(&r4).height(), Height::Finite(0));
        assert_eq!(Ideal::unit(&r4).krull_dimension(), -1);
        assert_eq!(Ideal::unit(&r4).height(), Height::Infinite);
        let r3 = ring(&["x", "y", "z"]);
        assert_eq!(id(&r3, &["x*y", "x*z", "y*z"]).krull_dimension(), 1);
        assert_eq!(id(&r3, &["x", "y"]).height(), Height::Finite(2));
    }

    #[test]
    fn hilbert_function_of_veronese_relation() {
        let r = ring(&["T1", "T2", "T3"]);
        let i = id(&r, &["T1*T3 - T2^2"]);
        // k[s^2, st, t^2] in degree d has dimension 2d + 1
        for d in 0..6 {
            assert_eq!(i.hilbert_function(d), 2 * d as usize + 1);
        }
    }
}
