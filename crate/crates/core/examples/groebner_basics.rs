//! Gröbner bases, membership, intersections, quotients and saturation.

use modcore::groebner::Ideal;
use modcore::poly::PolyRing;

fn main() -> modcore::Result<()> {
    let r = PolyRing::grevlex(32003, &["x", "y", "z"])?;
    let i = Ideal::parse(&r, &["x^2 - y*z", "x*y - z^2", "y^2 - x*z"])?;
    println!("reduced basis:");
    for g in i.groebner_basis() {
        println!("  {}", g.render());
    }
    let f = modcore::poly::parse_poly("x^3 - x*y*z", &r)?;
    println!("x^3 - x*y*z in I: {}", i.contains(&f)?);
    println!("dim R/I = {}, ht I = {:?}", i.krull_dimension(), i.height());

    let a = Ideal::parse(&r, &["x", "y"])?;
    let b = Ideal::parse(&r, &["y", "z"])?;
    let meet = a.intersect(&b);
    println!("(x,y) ∩ (y,z) = {:?}", meet.minimalized().gens().iter().map(|g| g.render()).collect::<Vec<_>>());

    let j = Ideal::parse(&r, &["x^2*y", "x*y^2"])?;
    let q = j.quotient(&Ideal::parse(&r, &["x", "y"])?);
    println!("(x^2y, xy^2) : (x,y) = {:?}", q.ideal.minimalized().gens().iter().map(|g| g.render()).collect::<Vec<_>>());
    let s = j.saturate(&r.var(0))?;
    println!("saturation by x: {:?} (exponent {})", s.ideal.minimalized().gens().iter().map(|g| g.render()).collect::<Vec<_>>(), s.exponent);
    Ok(())
}
