//! Free resolutions, depth, Ext and Fitting ideals of a module.

use modcore::groebner::Ideal;
use modcore::modalg::PresentedModule;
use modcore::poly::PolyRing;

fn main() -> modcore::Result<()> {
    let r = PolyRing::grevlex(32003, &["x0", "x1", "x2", "x3"])?;
    let h = Ideal::parse(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"])?;
    let quot = PresentedModule::quotient_ring(&h)?;
    let res = quot.free_resolution();
    println!("betti ranks of R/H: {:?}", res.ranks());
    println!("minimal: {}, complex: {}", res.is_minimal(), res.is_complex());
    println!("pd = {:?}, depth = {:?}, dim = {}", quot.projective_dimension(), quot.depth(), quot.dimension());
    println!("Cohen-Macaulay: {}", quot.is_cohen_macaulay());
    for i in 0..4 {
        println!("Ext^{i}(R/H, R) vanishes: {}", quot.ext(i).is_zero);
    }
    let e = PresentedModule::from_ideal(&h)?;
    for t in 0..4 {
        let f = e.fitting_ideal(t);
        println!("ht Fitt_{t}(H) = {:?}", f.height());
    }
    Ok(())
}
