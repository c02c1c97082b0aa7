//! Hypotheses and balanced colons for the twisted cubic plus a free summand.

use modcore::checks::{verify_balanced, HypothesisReport, McParams};
use modcore::groebner::Ideal;
use modcore::modalg::PresentedModule;
use modcore::poly::PolyRing;
use modcore::rees::ReesPackage;

fn main() -> modcore::Result<()> {
    let r = PolyRing::grevlex(32003, &["x0", "x1", "x2", "x3"])?;
    let h = Ideal::parse(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"])?;
    let e = PresentedModule::from_ideal(&h)?.direct_sum(&PresentedModule::free(&r, 1, 0), 2)?;
    let rp = ReesPackage::new(&e)?;

    let hyp = HypothesisReport::build("H+R(-2)", &rp)?;
    println!("e = {}, ell = {}, G_{} holds: {}", hyp.e, hyp.ell, hyp.gs_level, hyp.gs.holds);
    println!("ext vanishing: {:?}", hyp.ext_vanishing.verdict);
    println!("overall: {:?}", hyp.verdict());

    let rep = verify_balanced("H+R(-2)", &rp, 6, 7, McParams::default())?;
    println!("status {:?}", rep.status);
    println!("colons agree {:?}, products agree {:?}, equals core {:?}", rep.colons_agree, rep.colon_products_agree, rep.equals_core);
    Ok(())
}
