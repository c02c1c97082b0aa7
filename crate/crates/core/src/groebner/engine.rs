//! Buchberger's algorithm on vectors of polynomials.
//!
//! Elements of a free module `R^n` are sparse lists of terms `c * m * e_i`, sorted
//! descending in the position-over-term order: a smaller component index is larger,
//! ties are broken by the ring's monomial order. Ideals are the case `n = 1`.
//!
//! Pairs are selected by the degree of their lcm (component shifts included) and
//! then by creation index. Redundant pairs are discarded with the Gebauer–Möller
//! criteria; the coprime-leading-term criterion is used only in rank one.
//! Homogeneous input is processed degree by degree, which makes it possible to
//! stop at a degree cap and to detect which inputs are minimal generators.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::poly::{Monomial, PolyRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub m: Monomial,
    pub comp: u32,
    pub c: u32,
}

pub(crate) type Vector = Vec<Term>;

/// Ring plus degree shifts of the basis vectors of the ambient free module.
#[derive(Clone, Debug)]
pub(crate) struct ModCtx {
    pub ring: PolyRing,
    pub shifts: Vec<i64>,
}

impl ModCtx {
    pub fn new(ring: &PolyRing, shifts: Vec<i64>) -> Self {
        ModCtx { ring: ring.clone(), shifts }
    }

    pub fn ideal(ring: &PolyRing) -> Self {
        ModCtx { ring: ring.clone(), shifts: vec![0] }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        b.comp
            .cmp(&a.comp)
            .then_with(|| self.ring.cmp_monomials(&a.m, &b.m))
    }

    #[inline]
    pub fn term_degree(&self, t: &Term) -> i64 {
        self.ring.degree_of(&t.m) + self.shifts[t.comp as usize]
    }

    pub fn degree(&self, v: &[Term]) -> Option<i64> {
        v.iter().map(|t| self.term_degree(t)).max()
    }

    pub fn is_homogeneous(&self, v: &[Term]) -> bool {
        let mut it = v.iter().map(|t| self.term_degree(t));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn encode_polys(&self, polys: &[Polynomial]) -> Vector {
        let mut v = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            debug_assert!(p.ring() == &self.ring);
            v.extend(p.terms().iter().map(|&(m, c)| Term { m, comp: i as u32, c }));
        }
        v
    }

    pub fn encode_poly(&self, p: &Polynomial, comp: usize) -> Vector {
        p.terms()
            .iter()
            .map(|&(m, c)| Term { m, comp: comp as u32, c })
            .collect()
    }

    pub fn to_polys(&self, v: &[Term]) -> Vec<Polynomial> {
        let mut per: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); self.rank()];
        for t in v {
            per[t.comp as usize].push((t.m, t.c));
        }
        per.into_iter()
            .map(|terms| Polynomial::from_sorted(&self.ring, terms))
            .collect()
    }

    /// `a - b`.
    #[cfg(test)]
    pub fn sub(&self, a: &[Term], b: &[Term]) -> Vector {
        let f = self.ring.field();
        self.combine(a, f.neg(1), &Monomial::ONE, b)
    }

    /// `a + c * m * b`, merging two sorted term lists.
    pub fn combine(&self, a: &[Term], c: u32, m: &Monomial, b: &[Term]) -> Vector {
        let f = self.ring.field();
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &Term| Term { m: t.m.mul(m), comp: t.comp, c: f.mul(t.c, c) };
        let mut bj = b.first().map(scaled);
        while i < a.len() {
            let Some(tb) = bj else { break };
            match self.cmp(&a[i], &tb) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    if tb.c != 0 {
                        out.push(tb);
                    }
                    j += 1;
                    bj = b.get(j).map(scaled);
                }
                Ordering::Equal => {
                    let s = f.add(a[i].c, tb.c);
                    if s != 0 {
                        out.push(Term { c: s, ..a[i] });
                    }
                    i += 1;
                    j += 1;
                    bj = b.get(j).map(scaled);
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        if c != 0 {
            if let Some(tb) = bj {
                out.push(tb);
                out.extend(b[j + 1..].iter().map(scaled));
            }
        }
        out
    }

    pub fn scale_mul(&self, v: &[Term], c: u32, m: &Monomial) -> Vector {
        let f = self.ring.field();
        if c == 0 {
            return Vec::new();
        }
        v.iter()
            .map(|t| Term { m: t.m.mul(m), comp: t.comp, c: f.mul(t.c, c) })
            .collect()
    }

    pub fn monic(&self, v: Vector) -> Vector {
        match v.first() {
            Some(t) if t.c != 1 => {
                let inv = self.ring.field().inv(t.c);
                self.scale_mul(&v, inv, &Monomial::ONE)
            }
            _ => v,
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    alive: bool,
}

#[derive(Clone, Debug)]
pub(crate) struct GbEngine {
    pub ctx: ModCtx,
    basis: Vec<Vector>,
    lead: Vec<(Monomial, u32)>,
    masks: Vec<u32>,
    redundant: Vec<bool>,
    pairs: Vec<Pair>,
    heap: BinaryHeap<Reverse<(i64, usize)>>,
    /// Set when a degree cap stopped the computation with work left over.
    pub truncated: bool,
}

/// Outcome of feeding generators to the engine.
#[derive(Clone, Debug)]
pub(crate) struct Completion {
    /// `minimal[k]` is true iff input `k` was not in the span of the earlier basis
    /// (meaningful for homogeneous input: these inputs form a minimal generating set).
    pub minimal: Vec<bool>,
}

impl GbEngine {
    pub fn new(ctx: ModCtx) -> Self {
        GbEngine {
            ctx,
            basis: Vec::new(),
            lead: Vec::new(),
            masks: Vec::new(),
            redundant: Vec::new(),
            pairs: Vec::new(),
            heap: BinaryHeap::new(),
            truncated: false,
        }
    }

    /// Reducer over a list already known to be a Gröbner basis; no pairs are formed.
    pub fn from_basis(ctx: ModCtx, basis: Vec<Vector>) -> Self {
        let mut e = GbEngine::new(ctx);
        for v in basis {
            if v.is_empty() {
                continue;
            }
            let v = e.ctx.monic(v);
            e.lead.push((v[0].m, v[0].comp));
            e.masks.push(v[0].m.support_mask());
            e.redundant.push(false);
            e.basis.push(v);
        }
        e
    }

    /// Gröbner basis of `gens`, processed by degree when homogeneous.
    pub fn compute(ctx: ModCtx, gens: Vec<Vector>, degree_cap: Option<i64>) -> Self {
        let mut e = GbEngine::new(ctx);
        e.add_generators(gens, degree_cap);
        e
    }

    #[inline]
    fn find_reducer(&self, t: &Term) -> Option<usize> {
        let mask = t.m.support_mask();
        (0..self.basis.len()).find(|&k| {
            let (lm, lc) = self.lead[k];
            lc == t.comp && self.masks[k] & !mask == 0 && lm.divides(&t.m)
        })
    }

    /// Full normal form of `f`.
    pub fn reduce(&self, f: Vector) -> Vector {
        let field = self.ctx.ring.field();
        let mut rem: Vector = Vec::new();
        let mut cur = f;
        let mut start = 0;
        while start < cur.len() {
            let t = cur[start];
            if let Some(k) = self.find_reducer(&t) {
                let g = &self.basis[k];
                let q = t.m.div(&g[0].m).expect("reducer divides");
                cur = self.ctx.combine(&cur[start + 1..], field.neg(t.c), &q, &g[1..]);
                start = 0;
            } else {
                rem.push(t);
                start += 1;
            }
        }
        rem
    }

    pub fn reduces_to_zero(&self, f: Vector) -> bool {
        self.reduce(f).is_empty()
    }

    fn pair_degree(&self, lcm: &Monomial, comp: u32) -> i64 {
        self.ctx.ring.degree_of(lcm) + self.ctx.shifts[comp as usize]
    }

    fn insert(&mut self, h: Vector) {
        debug_assert!(!h.is_empty());
        let h = self.ctx.monic(h);
        let (lh, ch) = (h[0].m, h[0].comp);
        let hi = self.basis.len();
        let rank_one = self.ctx.rank() == 1;

        // New pairs with the Gebauer–Möller product/chain filtering.
        let mut cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&i| !self.redundant[i] && self.lead[i].1 == ch)
            .map(|i| {
                let li = self.lead[i].0;
                (i, li.lcm(&lh), rank_one && li.is_coprime(&lh))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(p) = cands.pop() {
            let dominated = || {
                cands.iter().chain(kept.iter()).any(|q| q.1.divides(&p.1))
            };
            if p.2 || !dominated() {
                kept.push(p);
            }
        }
        // Old pairs made redundant by the new leading term.
        for pair in self.pairs.iter_mut().filter(|p| p.alive && p.comp == ch) {
            if lh.divides(&pair.lcm) {
                let li = self.lead[pair.i].0;
                let lj = self.lead[pair.j].0;
                if li.lcm(&lh) != pair.lcm && lj.lcm(&lh) != pair.lcm {
                    pair.alive = false;
                }
            }
        }
        for i in 0..hi {
            if !self.redundant[i] && self.lead[i].1 == ch && lh.divides(&self.lead[i].0) {
                self.redundant[i] = true;
            }
        }

        self.basis.push(h);
        self.lead.push((lh, ch));
        self.masks.push(lh.support_mask());
        self.redundant.push(false);

        kept.sort_by_key(|p| p.0);
        for (i, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let deg = self.pair_degree(&lcm, ch);
            let idx = self.pairs.len();
            self.pairs.push(Pair { i, j: hi, lcm, comp: ch, alive: true });
            self.heap.push(Reverse((deg, idx)));
        }
    }

    fn next_pair_degree(&mut self) -> Option<i64> {
        while let Some(&Reverse((deg, idx))) = self.heap.peek() {
            if self.pairs[idx].alive {
                return Some(deg);
            }
            self.heap.pop();
        }
        None
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let field = self.ctx.ring.field();
        let gi = &self.basis[p.i];
        let gj = &self.basis[p.j];
        let qi = p.lcm.div(&gi[0].m).unwrap();
        let qj = p.lcm.div(&gj[0].m).unwrap();
        let a = self.ctx.scale_mul(&gi[1..], 1, &qi);
        self.ctx.combine(&a, field.neg(1), &qj, &gj[1..])
    }

    /// Processes every pending pair of degree at most `limit` (all pairs if `None`).
    fn process_pairs(&mut self, limit: Option<i64>) {
        while let Some(deg) = self.next_pair_degree() {
            if limit.is_some_and(|l| deg > l) {
                break;
            }
            let Reverse((_, idx)) = self.heap.pop().unwrap();
            self.pairs[idx].alive = false;
            let pair = self.pairs[idx].clone();
            let s = self.spoly(&pair);
            let r = self.reduce(s);
            if !r.is_empty() {
                self.insert(r);
            }
        }
    }

    /// Adds generators and completes the basis (up to `degree_cap` for homogeneous input).
    pub fn add_generators(&mut self, gens: Vec<Vector>, degree_cap: Option<i64>) -> Completion {
        let n = gens.len();
        let mut minimal = vec![false; n];
        let homogeneous = gens.iter().all(|g| self.ctx.is_homogeneous(g))
            && self.basis.iter().all(|g| self.ctx.is_homogeneous(g));
        if !homogeneous {
            for (k, g) in gens.into_iter().enumerate() {
                let r = self.reduce(g);
                if !r.is_empty() {
                    minimal[k] = true;
                    self.insert(r);
                }
            }
            self.process_pairs(None);
            return Completion { minimal };
        }
        let mut order: Vec<(i64, usize)> = gens
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_empty())
            .map(|(k, g)| (self.ctx.degree(g).unwrap(), k))
            .collect();
        order.sort();
        let mut gens: Vec<Option<Vector>> = gens.into_iter().map(Some).collect();
        let mut next = 0;
        loop {
            let d_in = order.get(next).map(|x| x.0);
            let d_pair = self.next_pair_degree();
            let d = match (d_in, d_pair) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if degree_cap.is_some_and(|cap| d > cap) {
                self.truncated = true;
                break;
            }
            self.process_pairs(Some(d));
            while next < order.len() && order[next].0 == d {
                let k = order[next].1;
                let g = gens[k].take().unwrap();
                let r = self.reduce(g);
                if !r.is_empty() {
                    minimal[k] = true;
                    self.insert(r);
                }
                next += 1;
            }
        }
        Completion { minimal }
    }

    /// The reduced Gröbner basis, sorted ascending by leading term.
    pub fn reduced(&self) -> Vec<Vector> {
        let mut out: Vec<Vector> = Vec::new();
        for (k, g) in self.basis.iter().enumerate() {
            if self.redundant[k] {
                continue;
            }
            let mut v = vec![g[0]];
            v.extend(self.reduce(g[1..].to_vec()));
            out.push(v);
        }
        out.sort_by(|a, b| self.ctx.cmp(&a[0], &b[0]));
        out
    }

    pub fn leading_terms(&self) -> Vec<(Monomial, u32)> {
        (0..self.basis.len())
            .filter(|&k| !self.redundant[k])
            .map(|k| self.lead[k])
            .collect()
    }

    /// Verifies that every S-vector of the current basis reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let n = self.basis.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.lead[i].1 != self.lead[j].1 {
                    continue;
                }
                let lcm = self.lead[i].0.lcm(&self.lead[j].0);
                let p = Pair { i, j, lcm, comp: self.lead[i].1, alive: true };
                if !self.reduces_to_zero(self.spoly(&p)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Minimal generators of the submodule spanned by homogeneous `gens`, in their
/// original order.
pub(crate) fn minimal_generators(ctx: &ModCtx, gens: &[Vector]) -> Vec<usize> {
    let mut engine = GbEngine::new(ctx.clone());
    let c = engine.add_generators(gens.to_vec(), None);
    (0..gens.len()).filter(|&k| c.minimal[k]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn polys(r: &PolyRing, src: &[&str]) -> Vec<Vector> {
        let ctx = ModCtx::ideal(r);
        src.iter()
            .map(|s| ctx.encode_poly(&parse_poly(s, r).unwrap(), 0))
            .collect()
    }

    #[test]
    fn cyclic_three_basis_is_groebner() {
        let r = PolyRing::grevlex(32003, &["a", "b", "c"]).unwrap();
        let gens = polys(&r, &["a+b+c", "a*b+b*c+c*a", "a*b*c-1"]);
        let e = GbEngine::compute(ModCtx::ideal(&r), gens.clone(), None);
        assert!(e.is_groebner());
        let red = GbEngine::from_basis(ModCtx::ideal(&r), e.reduced());
        assert!(red.is_groebner());
        for g in gens {
            assert!(red.reduces_to_zero(g));
        }
    }

    #[test]
    fn minimal_generators_drop_redundant_inputs() {
        let r = PolyRing::grevlex(32003, &["x", "y"]).unwrap();
        let gens = polys(&r, &["x^2", "x*y", "x^2*y + x*y^2", "y^2", "x^3"]);
        assert_eq!(minimal_generators(&ModCtx::ideal(&r), &gens), vec![0, 1, 3]);
    }

    #[test]
    fn combine_cancels() {
        let r = PolyRing::grevlex(32003, &["x", "y"]).unwrap();
        let ctx = ModCtx::ideal(&r);
        let a = polys(&r, &["x + y"]).remove(0);
        assert!(ctx.sub(&a, &a).is_empty());
    }
}
