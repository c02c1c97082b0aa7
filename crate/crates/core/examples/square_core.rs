//! Minimal reductions and the core of m^2 in two variables.

use modcore::checks::{render_vectors, rng_for, verify_balanced, McParams};
use modcore::groebner::Ideal;
use modcore::modalg::{PresentedModule, Submodule};
use modcore::poly::PolyRing;
use modcore::rees::ReesPackage;

fn main() -> modcore::Result<()> {
    let r = PolyRing::grevlex(32003, &["x", "y"])?;
    let m2 = PresentedModule::from_ideal(&Ideal::parse(&r, &["x^2", "x*y", "y^2"])?)?;
    let rp = ReesPackage::new(&m2)?;

    let mut rng = rng_for(42);
    for k in 0..3 {
        let u = rp.random_reduction(None, &mut rng)?;
        let colon = u.colon_into();
        println!("J_{k} = {:?}", render_vectors(u.gens()));
        println!("  J : E = {:?}, r_J = {:?}", colon.gens().iter().map(|g| g.render()).collect::<Vec<_>>(), rp.reduction_number(&u, 6)?);
    }

    let est = rp.core_monte_carlo(8, 3, &mut rng_for(42))?;
    let m = Ideal::maximal(&r);
    let cubics = Submodule::full(&m2).scaled(&m);
    println!("core after {} samples equals m^3: {}", est.samples_used, est.core.same_as(&cubics)?);

    let rep = verify_balanced("m2", &rp, 8, 7, McParams { samples: 8, window: 3 })?;
    println!("balanced: {:?}", rep.status);
    Ok(())
}
