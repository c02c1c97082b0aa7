//! Submodule computations in a graded free module `F = ⊕ R(-shift_i)`.

use crate::groebner::engine::{minimal_generators, GbEngine, ModCtx, Term, Vector};
use crate::groebner::Ideal;
use crate::poly::{Monomial, PolyRing, Polynomial};

pub(crate) type Vect = Vec<Polynomial>;

/// Degree of a vector under `shifts` (the largest term degree), `None` for zero.
pub(crate) fn vector_degree(_ring: &PolyRing, shifts: &[i64], v: &[Polynomial]) -> Option<i64> {
    v.iter()
        .zip(shifts)
        .filter_map(|(p, s)| p.degree().map(|d| d + s))
        .max()
}

pub(crate) fn is_homogeneous_vector(ring: &PolyRing, shifts: &[i64], v: &[Polynomial]) -> bool {
    let Some(d) = vector_degree(ring, shifts, v) else { return true };
    v.iter().zip(shifts).all(|(p, s)| {
        p.terms().iter().all(|(m, _)| ring.degree_of(m) + s == d)
    })
}

pub(crate) fn is_zero_vector(v: &[Polynomial]) -> bool {
    v.iter().all(|p| p.is_zero())
}

/// Gröbner basis of a span, used for membership and normal forms.
#[derive(Clone, Debug)]
pub(crate) struct SpanGb {
    engine: GbEngine,
    rank: usize,
}

impl SpanGb {
    pub fn new(ring: &PolyRing, shifts: &[i64], gens: &[Vect]) -> Self {
        let ctx = ModCtx::new(ring, shifts.to_vec());
        let vs: Vec<Vector> = gens.iter().map(|g| ctx.encode_polys(g)).collect();
        let e = GbEngine::compute(ctx.clone(), vs, None);
        SpanGb { engine: GbEngine::from_basis(ctx, e.reduced()), rank: shifts.len() }
    }

    /// Truncated basis: exact membership for elements of degree at most `cap`.
    pub fn truncated(ring: &PolyRing, shifts: &[i64], gens: &[Vect], cap: i64) -> Self {
        let ctx = ModCtx::new(ring, shifts.to_vec());
        let vs: Vec<Vector> = gens.iter().map(|g| ctx.encode_polys(g)).collect();
        let e = GbEngine::compute(ctx.clone(), vs, Some(cap));
        SpanGb { engine: GbEngine::from_basis(ctx, e.reduced()), rank: shifts.len() }
    }

    pub fn reduce(&self, v: &[Polynomial]) -> Vect {
        let ctx = &self.engine.ctx;
        let r = self.engine.reduce(ctx.encode_polys(v));
        let mut out = ctx.to_polys(&r);
        out.truncate(self.rank);
        out
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        let ctx = &self.engine.ctx;
        self.engine.reduce(ctx.encode_polys(v)).is_empty()
    }

    /// Leading monomials per component.
    pub fn leading_terms(&self) -> Vec<(Monomial, u32)> {
        self.engine.leading_terms()
    }
}

/// Indices of a minimal generating subset of homogeneous `gens`, in input order.
pub(crate) fn minimal_subset(ring: &PolyRing, shifts: &[i64], gens: &[Vect]) -> Vec<usize> {
    let ctx = ModCtx::new(ring, shifts.to_vec());
    let vs: Vec<Vector> = gens.iter().map(|g| ctx.encode_polys(g)).collect();
    minimal_generators(&ctx, &vs)
}

/// Minimal generators of the syzygy module of `cols`, each of degree `col_degs[j]`.
pub(crate) fn syzygies(ring: &PolyRing, shifts: &[i64], cols: &[Vect], col_degs: &[i64]) -> Vec<Vect> {
    let n = shifts.len();
    let t = cols.len();
    if t == 0 {
        return Vec::new();
    }
    let mut big_shifts = shifts.to_vec();
    big_shifts.extend_from_slice(col_degs);
    let ctx = ModCtx::new(ring, big_shifts);
    let gens: Vec<Vector> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut v = ctx.encode_polys(c);
            v.push(Term { m: Monomial::ONE, comp: (n + j) as u32, c: 1 });
            v
        })
        .collect();
    let e = GbEngine::compute(ctx.clone(), gens, None);
    let syz: Vec<Vect> = e
        .reduced()
        .into_iter()
        .filter(|v| v[0].comp as usize >= n)
        .map(|v| ctx.to_polys(&v).split_off(n))
        .collect();
    let keep = minimal_subset(ring, col_degs, &syz);
    keep.into_iter().map(|k| syz[k].clone()).collect()
}

/// `span(a) ∩ span(b)`.
pub(crate) fn intersect_spans(ring: &PolyRing, shifts: &[i64], a: &[Vect], b: &[Vect]) -> Vec<Vect> {
    let n = shifts.len();
    let mut doubled = shifts.to_vec();
    doubled.extend_from_slice(shifts);
    let ctx = ModCtx::new(ring, doubled);
    let zero = vec![Polynomial::zero(ring); n];
    let mut gens: Vec<Vector> = Vec::new();
    for v in a {
        let mut w = v.clone();
        w.extend(v.iter().cloned());
        gens.push(ctx.encode_polys(&w));
    }
    for v in b {
        let mut w = v.clone();
        w.extend(zero.iter().cloned());
        gens.push(ctx.encode_polys(&w));
    }
    let e = GbEngine::compute(ctx.clone(), gens, None);
    let out: Vec<Vect> = e
        .reduced()
        .into_iter()
        .filter(|v| v[0].comp as usize >= n)
        .map(|v| ctx.to_polys(&v).split_off(n))
        .collect();
    let keep = minimal_subset(ring, shifts, &out);
    keep.into_iter().map(|k| out[k].clone()).collect()
}

/// `{r ∈ R : r·v ∈ span(sub)}` for a homogeneous `v`.
pub(crate) fn colon_vector(ring: &PolyRing, shifts: &[i64], v: &[Polynomial], sub: &[Vect]) -> Ideal {
    let n = shifts.len();
    let Some(dv) = vector_degree(ring, shifts, v) else {
        return Ideal::unit(ring);
    };
    let mut big = shifts.to_vec();
    big.push(dv);
    let ctx = ModCtx::new(ring, big);
    let z = Polynomial::zero(ring);
    let mut gens: Vec<Vector> = Vec::new();
    let mut w = v.to_vec();
    w.push(Polynomial::one(ring));
    gens.push(ctx.encode_polys(&w));
    for s in sub {
        let mut w = s.clone();
        w.push(z.clone());
        gens.push(ctx.encode_polys(&w));
    }
    let e = GbEngine::compute(ctx.clone(), gens, None);
    let out = e
        .reduced()
        .into_iter()
        .filter(|v| v[0].comp as usize == n)
        .map(|v| ctx.to_polys(&v).swap_remove(n))
        .collect();
    Ideal::new(ring, out)
}

/// `{v ∈ F : f·v ∈ span(sub)}`.
pub(crate) fn colon_by_element(ring: &PolyRing, shifts: &[i64], sub: &[Vect], f: &Polynomial) -> Vec<Vect> {
    let n = shifts.len();
    let df = f.degree().unwrap_or(0);
    let mut big = shifts.to_vec();
    big.extend(shifts.iter().map(|s| s + df));
    let ctx = ModCtx::new(ring, big);
    let z = Polynomial::zero(ring);
    let mut gens: Vec<Vector> = Vec::new();
    for i in 0..n {
        let mut w = vec![z.clone(); 2 * n];
        w[i] = f.clone();
        w[n + i] = Polynomial::one(ring);
        gens.push(ctx.encode_polys(&w));
    }
    for s in sub {
        let mut w = s.clone();
        w.resize(2 * n, z.clone());
        gens.push(ctx.encode_polys(&w));
    }
    let e = GbEngine::compute(ctx.clone(), gens, None);
    e.reduced()
        .into_iter()
        .filter(|v| v[0].comp as usize >= n)
        .map(|v| ctx.to_polys(&v).split_off(n))
        .collect()
}

/// Presentation of `span(gens) + span(rels)` modulo `span(rels)`, on the
/// generators `gens`: returns the relation columns among them.
pub(crate) fn subquotient_relations(
    ring: &PolyRing,
    shifts: &[i64],
    gens: &[Vect],
    gen_degs: &[i64],
    rels: &[Vect],
) -> Vec<Vect> {
    let p = gens.len();
    let mut all: Vec<Vect> = gens.to_vec();
    all.extend(rels.iter().cloned());
    let mut degs = gen_degs.to_vec();
    degs.extend(rels.iter().map(|r| vector_degree(ring, shifts, r).unwrap_or(0)));
    let syz = syzygies(ring, shifts, &all, &degs);
    let mut out: Vec<Vect> = syz
        .into_iter()
        .map(|mut s| {
            s.truncate(p);
            s
        })
        .filter(|s| !is_zero_vector(s))
        .collect();
    let keep = minimal_subset(ring, gen_degs, &out);
    out = keep.into_iter().map(|k| out[k].clone()).collect();
    out
}
