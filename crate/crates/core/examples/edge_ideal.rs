//! Analytic spread of the edge ideal of a 4-cycle and of modules built from it.

use modcore::checks::{build_ideal_module, BuildMode};
use modcore::groebner::Ideal;
use modcore::modalg::PresentedModule;
use modcore::poly::PolyRing;
use modcore::rees::ReesPackage;

fn main() -> modcore::Result<()> {
    let r = PolyRing::grevlex(32003, &["x1", "x2", "x3", "x4"])?;
    let i = Ideal::parse(&r, &["x1*x2", "x2*x3", "x3*x4", "x1*x4"])?;
    let rp = ReesPackage::new(&PresentedModule::from_ideal(&i)?)?;
    println!("ht = {:?}, mu = {}, ell = {}", i.height(), i.minimal_generator_count(), rp.analytic_spread());
    println!("fiber relations: {:?}", rp.fiber_ideal().gens().iter().map(|g| g.render()).collect::<Vec<_>>());

    for mode in [BuildMode::PlusFree, BuildMode::PowerSum] {
        let built = build_ideal_module(&i, 2, mode)?;
        println!("{mode:?}: {}", serde_json::to_string_pretty(&built.verdicts).unwrap());
    }
    Ok(())
}
