//! Symmetric algebra, Rees algebra and special fiber of m^2 in two variables.

use modcore::groebner::Ideal;
use modcore::modalg::PresentedModule;
use modcore::poly::PolyRing;
use modcore::rees::ReesPackage;

fn show(label: &str, i: &Ideal) {
    let mut g: Vec<String> = i.minimalized().gens().iter().map(|p| p.monic().render()).collect();
    g.sort();
    println!("{label}: {g:?}");
}

fn main() -> modcore::Result<()> {
    let r = PolyRing::grevlex(32003, &["x", "y"])?;
    for gens in [vec!["x", "y"], vec!["x^2", "x*y", "y^2"]] {
        let e = PresentedModule::from_ideal(&Ideal::parse(&r, &gens)?)?;
        let rp = ReesPackage::new(&e)?;
        println!("E = ({})", gens.join(", "));
        show("  sym", rp.sym_ideal());
        show("  rees", rp.rees_ideal());
        show("  fiber", rp.fiber_ideal());
        println!("  linear type: {}", rp.sym_ideal() == rp.rees_ideal());
        println!("  dim R(E) = {}, ell = {}", rp.rees_dimension(), rp.analytic_spread());
    }
    let free = PresentedModule::free(&r, 2, 0);
    show("rees ideal of R^2", ReesPackage::new(&free)?.rees_ideal());
    Ok(())
}
