//! Residual intersections and the Artin-Nagata table of a pd-one ideal.

use modcore::checks::{check_an, residual_intersection};
use modcore::groebner::Ideal;
use modcore::modalg::{PresentedModule, Submodule};
use modcore::poly::PolyRing;

fn main() -> modcore::Result<()> {
    let r = PolyRing::grevlex(32003, &["x", "y", "z"])?;
    let e = PresentedModule::from_ideal(&Ideal::parse(&r, &["x*y", "x*z", "y*z"])?)?;
    for s in 1..=3 {
        let c = residual_intersection(&e, &Submodule::full(&e), s, 2024)?;
        println!(
            "s = {s}: K = {:?}, ht {:?}, proper {}, CM {:?}, attempts {}",
            c.colon.minimalized().gens().iter().map(|g| g.render()).collect::<Vec<_>>(),
            c.height,
            c.proper,
            c.cohen_macaulay,
            c.attempts
        );
    }
    let table = check_an(&e, 3, 20, 2024)?;
    for row in &table.rows {
        println!("i = {}: {}/{} proper, {} CM, {} of expected height", row.i, row.proper, row.trials, row.cohen_macaulay, row.height_exact);
    }
    println!("all CM: {}", table.all_cm());
    Ok(())
}
