use super::*;
use crate::groebner::Ideal;
use crate::poly::{parse_poly, PolyRing, Polynomial};

fn r2() -> PolyRing {
    PolyRing::grevlex(32003, &["x", "y"]).unwrap()
}

fn r4() -> PolyRing {
    PolyRing::grevlex(32003, &["x1", "x2", "x3", "x4"]).unwrap()
}

fn m2(r: &PolyRing) -> PresentedModule {
    PresentedModule::from_ideal(&Ideal::parse(r, &["x^2", "x*y", "y^2"]).unwrap()).unwrap()
}

fn edge(r: &PolyRing) -> Ideal {
    Ideal::parse(r, &["x1*x2", "x2*x3", "x3*x4", "x1*x4"]).unwrap()
}

fn p(r: &PolyRing, s: &str) -> Polynomial {
    parse_poly(s, r).unwrap()
}

#[test]
fn ideal_as_module() {
    let r = r2();
    let e = m2(&r);
    assert_eq!(e.ngens(), 3);
    assert_eq!(e.relations().len(), 2);
    assert_eq!(e.rank(), 1);
    let row = PolyMatrix::parse(&r, &[&["x^2", "x*y", "y^2"]]).unwrap();
    assert!(row.mul(e.presentation()).unwrap().is_zero());
    // the relations span the same module as the Hilbert–Burch columns
    let hb = PolyMatrix::parse(&r, &[&["-y", "0"], &["x", "-y"], &["0", "x"]]).unwrap();
    for c in hb.columns() {
        assert!(e.is_zero_element(c));
    }

    let f = PresentedModule::from_ideal(&Ideal::parse(&r, &["x^2 + y^2"]).unwrap()).unwrap();
    assert_eq!((f.ngens(), f.relations().len(), f.rank()), (1, 0, 1));

    let er = r4();
    let em = PresentedModule::from_ideal(&edge(&er)).unwrap();
    assert_eq!((em.ngens(), em.rank()), (4, 1));
    assert_eq!(PresentedModule::from_ideal(&Ideal::zero(&r)).unwrap_err(), crate::Error::ZeroIdeal);
}

#[test]
fn direct_sums() {
    let r = r2();
    let e = m2(&r).direct_sum(&PresentedModule::free(&r, 1, 0), 2).unwrap();
    assert_eq!(e.degrees(), &[2, 2, 2, 2]);
    assert_eq!(e.rank(), 2);
    assert_eq!(e.common_degree().unwrap(), 2);
    let same = m2(&r).direct_sum(&PresentedModule::free(&r, 0, 0), 0).unwrap();
    assert_eq!(same.ngens(), 3);
    assert_eq!(same.fitting_ideal(1), m2(&r).fitting_ideal(1));

    let er = r4();
    let em = PresentedModule::from_ideal(&edge(&er))
        .unwrap()
        .direct_sum(&PresentedModule::free(&er, 1, 0), 2)
        .unwrap();
    assert_eq!((em.rank(), em.mu()), (2, 5));
}

#[test]
fn syzygy_examples() {
    let r = r2();
    let s = syzygy_matrix(&r, &[vec![p(&r, "x")], vec![p(&r, "y")]]).unwrap();
    assert_eq!(s.ncols(), 1);
    let c = s.column(0);
    // proportional to (-y, x)
    assert_eq!(&(&c[0] * &p(&r, "x")) + &(&c[1] * &p(&r, "y")), Polynomial::zero(&r));
    assert_eq!(c[0].degree(), Some(1));

    let basis = vec![vec![p(&r, "1"), p(&r, "0")], vec![p(&r, "0"), p(&r, "1")]];
    assert_eq!(syzygy_matrix(&r, &basis).unwrap().ncols(), 0);

    let gens: Vec<Vec<Polynomial>> = ["x^2", "x*y", "y^2"].iter().map(|g| vec![p(&r, g)]).collect();
    let hb = syzygy_matrix(&r, &gens).unwrap();
    assert_eq!((hb.nrows(), hb.ncols()), (3, 2));
    let row = PolyMatrix::parse(&r, &[&["x^2", "x*y", "y^2"]]).unwrap();
    assert!(row.mul(&hb).unwrap().is_zero());
    let e = PresentedModule::from_columns(&r, vec![2, 2, 2], hb.into_columns()).unwrap();
    // E ≅ (x,y)^2, whose d-th graded piece is all of R_d for d ≥ 2
    for d in 0..=6 {
        let expect = if d < 2 { 0 } else { d as usize + 1 };
        assert_eq!(e.hilbert_function(d), expect);
    }
}

#[test]
fn resolutions() {
    let r = r2();
    let res = m2(&r).free_resolution().clone();
    assert_eq!(res.ranks(), vec![3, 2]);
    assert_eq!(res.degrees(0), &[2, 2, 2]);
    assert_eq!(res.degrees(1), &[3, 3]);
    assert!(res.is_minimal());
    assert_eq!(m2(&r).projective_dimension(), Some(1));

    assert_eq!(PresentedModule::free(&r, 3, 1).free_resolution().length(), 0);

    let r3 = PolyRing::grevlex(32003, &["x", "y", "z"]).unwrap();
    let q = PresentedModule::quotient_ring(&Ideal::parse(&r3, &["x*y", "x*z", "y*z"]).unwrap()).unwrap();
    assert_eq!(q.projective_dimension(), Some(2));
    let res = q.free_resolution();
    assert_eq!(res.ranks(), vec![1, 3, 2]);
    assert!(res.is_complex());
    for d in 0..=8 {
        assert_eq!(res.euler_characteristic(d), q.hilbert_function(d) as i64);
    }
}

#[test]
fn depths() {
    let r = r2();
    assert_eq!(PresentedModule::free(&r, 1, 0).depth(), Some(2));
    assert_eq!(m2(&r).depth(), Some(1));
    let er = r4();
    let q = PresentedModule::quotient_ring(&edge(&er)).unwrap();
    assert_eq!(q.projective_dimension(), Some(3));
    assert_eq!(q.depth(), Some(1));
    assert!(!q.is_cohen_macaulay());
    assert_eq!(PresentedModule::free(&r, 0, 0).depth(), None);
}

#[test]
fn ext_examples() {
    let r = r2();
    assert!(PresentedModule::free(&r, 2, 0).ext(1).is_zero);
    let e = m2(&r);
    for i in 2..5 {
        assert!(e.ext(i).is_zero);
    }
    let ext1 = e.ext(1);
    assert!(!ext1.is_zero);
    assert!(!ext1.module.is_zero_module());
    // Hom(m^2, R) ≅ R is free of rank one
    let ext0 = e.ext(0);
    assert!(!ext0.is_zero);
    assert_eq!(ext0.module.mu(), 1);
}

#[test]
fn fitting_ideals() {
    let r = r2();
    let f = p(&r, "x^3 + y^3");
    let cyc = PresentedModule::quotient_ring(&Ideal::new(&r, vec![f.clone()])).unwrap();
    assert_eq!(cyc.fitting_ideal(0), Ideal::new(&r, vec![f]));
    let xy = Ideal::parse(&r, &["x", "y"]).unwrap();
    assert_eq!(m2(&r).fitting_ideal(2), xy);
    let e = m2(&r).direct_sum(&PresentedModule::free(&r, 1, 0), 2).unwrap();
    assert_eq!(e.fitting_ideal(3), xy);
    assert!(e.fitting_ideal(4).is_unit());
    assert!(e.fitting_ideal(1).is_zero());
}

#[test]
fn colon_and_annihilator() {
    let r = r2();
    let e = m2(&r);
    assert!(Submodule::full(&e).colon_into().is_unit());
    // x^2 and y^2 are the first and last generators of (x,y)^2
    let one = Polynomial::one(&r);
    let z = Polynomial::zero(&r);
    let u = Submodule::new(&e, vec![vec![one.clone(), z.clone(), z.clone()], vec![z.clone(), z.clone(), one]])
        .unwrap();
    let k = colon_into(&u, &e).unwrap();
    let xy = Ideal::parse(&r, &["x", "y"]).unwrap();
    assert_eq!(k, xy);
    let j = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
    assert_eq!(k, j.quotient(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap()).ideal);

    let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
    assert_eq!(PresentedModule::quotient_ring(&i).unwrap().annihilator(), i);
    assert!(e.annihilator().is_zero());
    assert!(colon_into(&u, &PresentedModule::free(&r, 3, 2)).is_err());
}

#[test]
fn ranks_mus_and_torsion() {
    let r = r2();
    assert_eq!(PresentedModule::free(&r, 3, 0).rank(), 3);
    assert_eq!(PresentedModule::free(&r, 3, 0).mu(), 3);
    assert_eq!(m2(&r).rank(), 1);
    let e = m2(&r).direct_sum(&PresentedModule::free(&r, 1, 0), 2).unwrap();
    assert_eq!(e.rank(), 2);
    assert_eq!(e.mu(), 4);
    let er = r4();
    assert_eq!(PresentedModule::from_ideal(&edge(&er)).unwrap().mu(), 4);

    assert!(m2(&r).is_torsionfree());
    assert!(e.is_torsionfree());
    let tors = PresentedModule::quotient_ring(&Ideal::parse(&r, &["x"]).unwrap())
        .unwrap()
        .direct_sum(&PresentedModule::free(&r, 1, 0), 0)
        .unwrap();
    assert_eq!(tors.rank(), 1);
    assert!(!tors.is_torsionfree());
}

#[test]
fn minimal_presentation_prunes_units() {
    let r = r2();
    // generators g1, g2, g3 with g3 = x*g1 + y*g2 imposed as a relation of degree 1 in g3's slot
    let cols = vec![vec![p(&r, "x"), p(&r, "y"), p(&r, "-1")]];
    let m = PresentedModule::from_columns(&r, vec![0, 0, 1], cols).unwrap();
    let min = m.minimal();
    assert_eq!(min.module.ngens(), 2);
    assert_eq!(min.module.relations().len(), 0);
    assert_eq!(min.images[2], vec![p(&r, "x"), p(&r, "y")]);
    assert_eq!(m.mu(), 2);
    assert_eq!(m.rank(), 2);
}

#[test]
fn submodule_intersections() {
    let r = r2();
    let e = m2(&r);
    let one = Polynomial::one(&r);
    let z = Polynomial::zero(&r);
    let u1 = Submodule::new(&e, vec![vec![one.clone(), z.clone(), z.clone()], vec![z.clone(), z.clone(), one.clone()]])
        .unwrap();
    assert!(u1.intersect(&u1).unwrap().same_as(&u1).unwrap());
    assert!(u1.intersect(&Submodule::full(&e)).unwrap().same_as(&u1).unwrap());
    let u2 = Submodule::new(&e, vec![vec![one.clone(), one.clone(), z.clone()], vec![z.clone(), z.clone(), one.clone()]])
        .unwrap();
    let meet = u1.intersect(&u2).unwrap();
    assert!(u1.contains_submodule(&meet).unwrap());
    assert!(u2.contains_submodule(&meet).unwrap());
    assert!(meet.contains(&[z.clone(), z.clone(), one.clone()]));
    // x^2 + xy is in span(x^2+xy) but not in span(x^2, y^2)
    assert!(!meet.contains(&[one.clone(), one.clone(), z.clone()]));
    let other = Submodule::full(&PresentedModule::free(&r, 3, 2));
    assert!(matches!(u1.intersect(&other), Err(crate::Error::ParentMismatch)));
}
