use std::fmt;
use std::sync::{Arc, OnceLock};

use super::matrix::{subsets, PolyMatrix};
use super::ops::{
    colon_by_element, colon_vector, intersect_spans, is_homogeneous_vector, is_zero_vector,
    minimal_subset, subquotient_relations, syzygies, vector_degree, SpanGb, Vect,
};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{parse_poly, PolyRing, Polynomial};

/// A graded module `coker(R^t → R^n)` with generators in prescribed degrees.
#[derive(Clone)]
pub struct PresentedModule(Arc<Inner>);

struct Inner {
    ring: PolyRing,
    degrees: Vec<i64>,
    pres: PolyMatrix,
    relations: OnceLock<SpanGb>,
    rank: OnceLock<usize>,
    minimal: OnceLock<Minimized>,
    resolution: OnceLock<FreeResolution>,
}

/// A minimal presentation together with the images of the original generators.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub module: PresentedModule,
    /// `images[i]` expresses old generator `i` in the new generators.
    pub images: Vec<Vec<Polynomial>>,
}

/// A minimal graded free resolution `0 ← F_0 ← F_1 ← … ← F_p ← 0`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: PolyRing,
    /// Generator degrees of `F_0, …, F_p`.
    degrees: Vec<Vec<i64>>,
    /// `maps[k]` is the matrix of `F_{k+1} → F_k`.
    maps: Vec<PolyMatrix>,
}

/// `Ext^i_R(E, R)` with a flag telling whether it vanishes.
#[derive(Clone, Debug)]
pub struct ExtModule {
    pub module: PresentedModule,
    pub is_zero: bool,
}

impl fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker{:?} degrees {:?}", self.0.pres, self.0.degrees)
    }
}

impl PartialEq for PresentedModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ring == other.0.ring && self.0.degrees == other.0.degrees && self.0.pres == other.0.pres)
    }
}

impl PresentedModule {
    /// Cokernel of `pres` on generators of the given degrees; every column must be
    /// homogeneous.
    pub fn new(ring: &PolyRing, degrees: Vec<i64>, pres: PolyMatrix) -> Result<Self> {
        if pres.nrows() != degrees.len() {
            return Err(Error::Shape(format!(
                "presentation has {} rows for {} generators",
                pres.nrows(),
                degrees.len()
            )));
        }
        if pres.ring() != ring {
            return Err(Error::RingMismatch);
        }
        for c in pres.columns() {
            if !is_homogeneous_vector(ring, &degrees, c) {
                return Err(Error::Precondition("presentation column is not homogeneous".into()));
            }
        }
        Ok(PresentedModule(Arc::new(Inner {
            ring: ring.clone(),
            degrees,
            pres,
            relations: OnceLock::new(),
            rank: OnceLock::new(),
            minimal: OnceLock::new(),
            resolution: OnceLock::new(),
        })))
    }

    pub fn from_columns(ring: &PolyRing, degrees: Vec<i64>, cols: Vec<Vect>) -> Result<Self> {
        let n = degrees.len();
        let m = PolyMatrix::from_columns(ring, n, cols)?;
        PresentedModule::new(ring, degrees, m)
    }

    /// `R(-degree)^r`.
    pub fn free(ring: &PolyRing, r: usize, degree: i64) -> Self {
        PresentedModule::new(ring, vec![degree; r], PolyMatrix::zero(ring, r, 0)).expect("free module")
    }

    /// The ideal `I` as a module on its given generators.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let ring = ideal.ring();
        let gens = ideal.gens();
        if !ideal.is_homogeneous() {
            return Err(Error::Precondition("ideal generators must be homogeneous".into()));
        }
        let degrees: Vec<i64> = gens.iter().map(|g| g.degree().unwrap()).collect();
        let cols: Vec<Vect> = gens.iter().map(|g| vec![g.clone()]).collect();
        let syz = syzygies(ring, &[0], &cols, &degrees);
        PresentedModule::from_columns(ring, degrees, syz)
    }

    /// The cyclic module `R/I`.
    pub fn quotient_ring(ideal: &Ideal) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::Precondition("ideal generators must be homogeneous".into()));
        }
        let cols = ideal.gens().iter().map(|g| vec![g.clone()]).collect();
        PresentedModule::from_columns(ideal.ring(), vec![0], cols)
    }

    /// `self ⊕ other(-twist)`.
    pub fn direct_sum(&self, other: &PresentedModule, twist: i64) -> Result<Self> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        let mut degrees = self.0.degrees.clone();
        degrees.extend(other.0.degrees.iter().map(|d| d + twist));
        PresentedModule::new(self.ring(), degrees, self.0.pres.block_diagonal(&other.0.pres))
    }

    pub fn ring(&self) -> &PolyRing {
        &self.0.ring
    }

    pub fn ngens(&self) -> usize {
        self.0.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0.degrees
    }

    pub fn presentation(&self) -> &PolyMatrix {
        &self.0.pres
    }

    pub fn relations(&self) -> &[Vect] {
        self.0.pres.columns()
    }

    /// The common degree of all generators, required by reduction machinery.
    pub fn common_degree(&self) -> Result<i64> {
        let mut ds = self.0.degrees.clone();
        ds.sort();
        ds.dedup();
        match ds.as_slice() {
            [d] => Ok(*d),
            [] => Err(Error::Precondition("module has no generators".into())),
            _ => Err(Error::MixedDegrees(ds)),
        }
    }

    pub(crate) fn relation_gb(&self) -> &SpanGb {
        self.0
            .relations
            .get_or_init(|| SpanGb::new(self.ring(), self.degrees(), self.relations()))
    }

    /// Normal form of a coordinate vector modulo the relations.
    pub fn reduce(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        self.relation_gb().reduce(v)
    }

    pub fn is_zero_element(&self, v: &[Polynomial]) -> bool {
        self.relation_gb().contains(v)
    }

    /// The `i`-th generator as a coordinate vector.
    pub fn generator(&self, i: usize) -> Vec<Polynomial> {
        let mut v = vec![Polynomial::zero(self.ring()); self.ngens()];
        v[i] = Polynomial::one(self.ring());
        v
    }

    pub fn element_degree(&self, v: &[Polynomial]) -> Option<i64> {
        vector_degree(self.ring(), self.degrees(), v)
    }

    pub fn is_zero_module(&self) -> bool {
        self.minimal().module.ngens() == 0
    }

    /// Rank over the fraction field.
    pub fn rank(&self) -> usize {
        *self.0.rank.get_or_init(|| self.ngens() - self.0.pres.rank())
    }

    /// A minimal presentation: unit entries pruned, then minimal relations.
    pub fn minimal(&self) -> &Minimized {
        self.0.minimal.get_or_init(|| self.compute_minimal())
    }

    fn compute_minimal(&self) -> Minimized {
        let ring = self.ring().clone();
        let field = ring.field();
        let mut degrees = self.0.degrees.clone();
        let mut cols: Vec<Vect> = self.relations().to_vec();
        let mut images: Vec<Vect> = (0..self.ngens()).map(|i| self.generator(i)).collect();
        loop {
            let pivot = cols.iter().enumerate().find_map(|(j, c)| {
                c.iter().position(|p| p.is_constant() && !p.is_zero()).map(|i| (j, i))
            });
            let Some((j, i)) = pivot else { break };
            let col = cols.swap_remove(j);
            let inv = field.inv(col[i].leading_coeff().unwrap());
            let eliminate = |v: &mut Vect| {
                if v[i].is_zero() {
                    v.remove(i);
                    return;
                }
                let factor = v[i].scale(inv);
                for (a, c) in v.iter_mut().zip(&col) {
                    if !c.is_zero() {
                        *a = &*a - &(&factor * c);
                    }
                }
                debug_assert!(v[i].is_zero());
                v.remove(i);
            };
            cols.iter_mut().for_each(&eliminate);
            images.iter_mut().for_each(&eliminate);
            degrees.remove(i);
            cols.retain(|c| !is_zero_vector(c));
        }
        let keep = minimal_subset(&ring, &degrees, &cols);
        let cols: Vec<Vect> = keep.into_iter().map(|k| cols[k].clone()).collect();
        let module = PresentedModule::from_columns(&ring, degrees, cols).expect("minimal presentation");
        Minimized { module, images }
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.minimal().module.ngens()
    }

    /// `Fitt_t(E)`: the ideal of `(n - t)`-minors of the presentation.
    pub fn fitting_ideal(&self, t: usize) -> Ideal {
        let n = self.ngens();
        if t >= n {
            return Ideal::unit(self.ring());
        }
        Ideal::new(self.ring(), self.0.pres.minors(n - t))
    }

    /// The first nonzero maximal-size minor generating `Fitt_e(E)`, `e` the rank.
    pub fn first_nonzero_fitting_minor(&self) -> Polynomial {
        let k = self.ngens() - self.rank();
        if k == 0 {
            return Polynomial::one(self.ring());
        }
        let m = &self.0.pres;
        for cols in subsets(m.ncols(), k) {
            for rows in subsets(m.nrows(), k) {
                let sub = PolyMatrix::from_columns(
                    self.ring(),
                    k,
                    cols.iter().map(|&j| rows.iter().map(|&i| m.get(i, j).clone()).collect()).collect(),
                )
                .unwrap();
                if let Some(d) = sub.minors(k).pop() {
                    return d;
                }
            }
        }
        unreachable!("rank guarantees a nonzero minor")
    }

    /// `ann_R(E)`.
    pub fn annihilator(&self) -> Ideal {
        let rels = self.relations().to_vec();
        let mut acc: Option<Ideal> = None;
        for i in 0..self.ngens() {
            let q = colon_vector(self.ring(), self.degrees(), &self.generator(i), &rels);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect_syz(&q),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(self.ring()))
    }

    /// Krull dimension of `R/ann(E)`; `-1` for the zero module.
    pub fn dimension(&self) -> i64 {
        self.annihilator().krull_dimension()
    }

    /// True iff the torsion submodule vanishes, tested by checking that a nonzero
    /// element of `Fitt_e(E)` is a nonzerodivisor on `E`.
    pub fn is_torsionfree(&self) -> bool {
        let f = self.first_nonzero_fitting_minor();
        if f.is_constant() {
            return true;
        }
        let colon = colon_by_element(self.ring(), self.degrees(), self.relations(), &f);
        colon.iter().all(|v| self.is_zero_element(v))
    }

    /// A minimal graded free resolution.
    pub fn free_resolution(&self) -> &FreeResolution {
        self.0.resolution.get_or_init(|| self.compute_resolution())
    }

    fn compute_resolution(&self) -> FreeResolution {
        let min = &self.minimal().module;
        let ring = self.ring().clone();
        let mut degrees = vec![min.degrees().to_vec()];
        let mut maps = Vec::new();
        let mut cols: Vec<Vect> = min.relations().to_vec();
        while !cols.is_empty() {
            let prev = degrees.last().unwrap().clone();
            let cdeg: Vec<i64> = cols.iter().map(|c| vector_degree(&ring, &prev, c).unwrap()).collect();
            maps.push(PolyMatrix::from_columns(&ring, prev.len(), cols.clone()).unwrap());
            let next = syzygies(&ring, &prev, &cols, &cdeg);
            degrees.push(cdeg);
            cols = next;
        }
        FreeResolution { ring, degrees, maps }
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        if self.is_zero_module() {
            return None;
        }
        Some(self.free_resolution().length())
    }

    /// `d - pd(E)` by Auslander–Buchsbaum; `None` stands for the zero module (infinite depth).
    pub fn depth(&self) -> Option<usize> {
        self.projective_dimension().map(|p| self.ring().nvars() - p)
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        match self.depth() {
            None => true,
            Some(d) => d as i64 == self.dimension(),
        }
    }

    /// `Ext^i_R(E, R)` from the dualized minimal resolution.
    pub fn ext(&self, i: usize) -> ExtModule {
        let res = self.free_resolution();
        let ring = self.ring();
        if i > res.length() {
            return ExtModule { module: PresentedModule::free(ring, 0, 0), is_zero: true };
        }
        let dual_deg: Vec<i64> = res.degrees[i].iter().map(|d| -d).collect();
        let n = dual_deg.len();
        // kernel of d_{i+1}^T : F_i* → F_{i+1}*
        let kernel: Vec<Vect> = if i < res.length() {
            let d = &res.maps[i];
            let next_dual: Vec<i64> = res.degrees[i + 1].iter().map(|x| -x).collect();
            let cols: Vec<Vect> = (0..n).map(|j| d.row(j)).collect();
            syzygies(ring, &next_dual, &cols, &dual_deg)
        } else {
            (0..n)
                .map(|j| {
                    let mut v = vec![Polynomial::zero(ring); n];
                    v[j] = Polynomial::one(ring);
                    v
                })
                .collect()
        };
        // image of d_i^T : F_{i-1}* → F_i*
        let image: Vec<Vect> = if i == 0 {
            Vec::new()
        } else {
            let d = &res.maps[i - 1];
            (0..d.nrows()).map(|k| d.row(k)).filter(|v| !is_zero_vector(v)).collect()
        };
        let img = SpanGb::new(ring, &dual_deg, &image);
        let is_zero = kernel.iter().all(|v| img.contains(v));
        let kdeg: Vec<i64> = kernel.iter().map(|v| vector_degree(ring, &dual_deg, v).unwrap()).collect();
        let rels = subquotient_relations(ring, &dual_deg, &kernel, &kdeg, &image);
        let module = PresentedModule::from_columns(ring, kdeg, rels).expect("ext presentation");
        ExtModule { module, is_zero }
    }

    /// `dim_k E_d`.
    pub fn hilbert_function(&self, d: i64) -> usize {
        let lts = self.relation_gb().leading_terms();
        let ring = self.ring();
        let mut count = 0;
        for (i, &di) in self.degrees().iter().enumerate() {
            for m in ring.monomials_of_degree(d - di) {
                if !lts.iter().any(|(l, c)| *c as usize == i && l.divides(&m)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Parses a coordinate vector.
    pub fn parse_element(&self, entries: &[&str]) -> Result<Vec<Polynomial>> {
        if entries.len() != self.ngens() {
            return Err(Error::LengthMismatch(entries.len(), self.ngens()));
        }
        entries.iter().map(|s| parse_poly(s, self.ring())).collect()
    }
}

impl FreeResolution {
    /// Length `p` of the resolution.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    /// Generator degrees of `F_k`.
    pub fn degrees(&self, k: usize) -> &[i64] {
        &self.degrees[k]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.columns().iter().all(|c| c.iter().all(|p| p.is_zero() || !p.is_constant())))
    }

    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].mul(&w[1]).unwrap().is_zero())
    }

    /// `Σ_k (-1)^k dim_k (F_k)_d`.
    pub fn euler_characteristic(&self, d: i64) -> i64 {
        let mut acc = 0i64;
        for (k, degs) in self.degrees.iter().enumerate() {
            let dim: i64 = degs
                .iter()
                .map(|&a| self.ring.monomials_of_degree(d - a).len() as i64)
                .sum();
            acc += if k % 2 == 0 { dim } else { -dim };
        }
        acc
    }
}

/// A submodule of a presented module, given by coordinate vectors read modulo
/// the relations.
#[derive(Clone, Debug)]
pub struct Submodule {
    parent: PresentedModule,
    gens: Vec<Vect>,
    span: OnceLock<SpanGb>,
}

impl Submodule {
    pub fn new(parent: &PresentedModule, gens: Vec<Vect>) -> Result<Self> {
        for g in &gens {
            if g.len() != parent.ngens() {
                return Err(Error::LengthMismatch(g.len(), parent.ngens()));
            }
            if g.iter().any(|p| p.ring() != parent.ring()) {
                return Err(Error::RingMismatch);
            }
            if !is_homogeneous_vector(parent.ring(), parent.degrees(), g) {
                return Err(Error::Precondition("submodule generator is not homogeneous".into()));
            }
        }
        let gens = gens.into_iter().filter(|g| !parent.is_zero_element(g)).collect();
        Ok(Submodule { parent: parent.clone(), gens, span: OnceLock::new() })
    }

    /// The whole module.
    pub fn full(parent: &PresentedModule) -> Self {
        let gens = (0..parent.ngens()).map(|i| parent.generator(i)).collect();
        Submodule::new(parent, gens).unwrap()
    }

    pub fn zero(parent: &PresentedModule) -> Self {
        Submodule::new(parent, Vec::new()).unwrap()
    }

    pub fn parent(&self) -> &PresentedModule {
        &self.parent
    }

    pub fn gens(&self) -> &[Vect] {
        &self.gens
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.gens.iter().map(|g| self.parent.element_degree(g).unwrap()).collect()
    }

    /// Generators together with the parent's relations, spanning the preimage in `R^n`.
    fn preimage_gens(&self) -> Vec<Vect> {
        let mut all = self.gens.clone();
        all.extend(self.parent.relations().iter().cloned());
        all
    }

    fn span(&self) -> &SpanGb {
        self.span.get_or_init(|| {
            SpanGb::new(self.parent.ring(), self.parent.degrees(), &self.preimage_gens())
        })
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        self.span().contains(v)
    }

    pub fn contains_submodule(&self, other: &Submodule) -> Result<bool> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(other.gens.iter().all(|g| self.contains(g)))
    }

    pub fn same_as(&self, other: &Submodule) -> Result<bool> {
        Ok(self.contains_submodule(other)? && other.contains_submodule(self)?)
    }

    pub fn is_everything(&self) -> bool {
        (0..self.parent.ngens()).all(|i| self.contains(&self.parent.generator(i)))
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Submodule::new(&self.parent, gens)
    }

    /// `I·U`.
    pub fn scaled(&self, ideal: &Ideal) -> Submodule {
        let mut gens = Vec::new();
        for f in ideal.gens() {
            for g in &self.gens {
                gens.push(g.iter().map(|p| p * f).collect());
            }
        }
        Submodule::new(&self.parent, gens).expect("product of homogeneous data").minimalized()
    }

    /// Drops generators that are redundant modulo the relations.
    pub fn minimalized(&self) -> Submodule {
        let rels = self.parent.relations();
        let mut all: Vec<Vect> = rels.to_vec();
        all.extend(self.gens.iter().cloned());
        let keep = minimal_subset(self.parent.ring(), self.parent.degrees(), &all);
        let gens = keep
            .into_iter()
            .filter(|&k| k >= rels.len())
            .map(|k| all[k].clone())
            .collect();
        Submodule { parent: self.parent.clone(), gens, span: OnceLock::new() }
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        let (ring, degs) = (self.parent.ring(), self.parent.degrees());
        let meet = intersect_spans(ring, degs, &self.preimage_gens(), &other.preimage_gens());
        Ok(Submodule::new(&self.parent, meet)?.minimalized())
    }

    /// `U` as a module in its own right, presented on its generators.
    pub fn as_module(&self) -> PresentedModule {
        let (ring, degs) = (self.parent.ring(), self.parent.degrees());
        let gdeg = self.degrees();
        let rels = subquotient_relations(ring, degs, &self.gens, &gdeg, self.parent.relations());
        PresentedModule::from_columns(ring, gdeg, rels).expect("submodule presentation")
    }

    /// `E / U`.
    pub fn quotient(&self) -> PresentedModule {
        let mut cols = self.parent.relations().to_vec();
        cols.extend(self.gens.iter().cloned());
        PresentedModule::from_columns(self.parent.ring(), self.parent.degrees().to_vec(), cols)
            .expect("quotient presentation")
    }

    /// `(U :_R E) = {r : rE ⊆ U}`.
    pub fn colon_into(&self) -> Ideal {
        let (ring, degs) = (self.parent.ring(), self.parent.degrees());
        let span = self.preimage_gens();
        let mut acc: Option<Ideal> = None;
        for i in 0..self.parent.ngens() {
            let q = colon_vector(ring, degs, &self.parent.generator(i), &span);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect_syz(&q),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(ring))
    }

    pub fn mu(&self) -> usize {
        self.minimalized().gens.len()
    }
}

pub fn module_from_ideal(ideal: &Ideal) -> Result<PresentedModule> {
    PresentedModule::from_ideal(ideal)
}

pub fn direct_sum(a: &PresentedModule, b: &PresentedModule, twist: i64) -> Result<PresentedModule> {
    a.direct_sum(b, twist)
}

/// Syzygies among vectors of `R^n` (standard grading of the ambient module).
pub fn syzygy_matrix(ring: &PolyRing, vectors: &[Vec<Polynomial>]) -> Result<PolyMatrix> {
    let n = vectors.first().map_or(0, |v| v.len());
    let shifts = vec![0; n];
    for v in vectors {
        if v.len() != n {
            return Err(Error::LengthMismatch(v.len(), n));
        }
        if !is_homogeneous_vector(ring, &shifts, v) {
            return Err(Error::Precondition("vectors must be homogeneous".into()));
        }
    }
    let degs: Vec<i64> = vectors.iter().map(|v| vector_degree(ring, &shifts, v).unwrap_or(0)).collect();
    let syz = syzygies(ring, &shifts, vectors, &degs);
    PolyMatrix::from_columns(ring, vectors.len(), syz)
}

pub fn free_resolution(e: &PresentedModule) -> FreeResolution {
    e.free_resolution().clone()
}

pub fn projective_dimension(e: &PresentedModule) -> Option<usize> {
    e.projective_dimension()
}

pub fn depth(e: &PresentedModule) -> Option<usize> {
    e.depth()
}

pub fn ext_module(e: &PresentedModule, i: usize) -> ExtModule {
    e.ext(i)
}

pub fn fitting_ideal(e: &PresentedModule, t: usize) -> Ideal {
    e.fitting_ideal(t)
}

pub fn annihilator(e: &PresentedModule) -> Ideal {
    e.annihilator()
}

pub fn colon_into(u: &Submodule, e: &PresentedModule) -> Result<Ideal> {
    if u.parent() != e {
        return Err(Error::NotContained);
    }
    Ok(u.colon_into())
}

pub fn rank(e: &PresentedModule) -> usize {
    e.rank()
}

pub fn mu(e: &PresentedModule) -> usize {
    e.mu()
}

pub fn is_torsionfree(e: &PresentedModule) -> bool {
    e.is_torsionfree()
}

pub fn submodule_intersect(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    a.intersect(b)
}
