//! Core of a rank-two module of projective dimension one.

use modcore::checks::{rng_for, verify_pd1_core, McParams};
use modcore::groebner::Ideal;
use modcore::modalg::{PresentedModule, Submodule};
use modcore::poly::PolyRing;
use modcore::rees::ReesPackage;

fn main() -> modcore::Result<()> {
    let r = PolyRing::grevlex(32003, &["x", "y"])?;
    let m2 = PresentedModule::from_ideal(&Ideal::parse(&r, &["x^2", "x*y", "y^2"])?)?;
    let e = m2.direct_sum(&PresentedModule::free(&r, 1, 0), 2)?;
    println!("rank {}, mu {}, pd {:?}", e.rank(), e.mu(), e.projective_dimension());

    let rp = ReesPackage::new(&e)?;
    let core = rp.core_monte_carlo(8, 3, &mut rng_for(42))?.core;
    let fitt = e.fitting_ideal(3);
    let predicted = Submodule::full(&e).scaled(&fitt);
    println!("Fitt_3(E) = {:?}", fitt.minimalized().gens().iter().map(|g| g.render()).collect::<Vec<_>>());
    println!("core = Fitt_3(E) E: {}", core.same_as(&predicted)?);

    let rep = verify_pd1_core(&rp, 5, 11, McParams { samples: 8, window: 3 })?;
    println!("{}", serde_json::to_string_pretty(&rep).unwrap());
    Ok(())
}
