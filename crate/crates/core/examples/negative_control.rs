//! The edge ideal plus a free summand fails the Ext condition.

use modcore::checks::{check_ext_vanishing, verify_balanced, McParams};
use modcore::groebner::Ideal;
use modcore::modalg::PresentedModule;
use modcore::poly::PolyRing;
use modcore::rees::ReesPackage;

fn main() -> modcore::Result<()> {
    let r = PolyRing::grevlex(32003, &["x1", "x2", "x3", "x4"])?;
    let i = Ideal::parse(&r, &["x1*x2", "x2*x3", "x3*x4", "x1*x4"])?;
    let e = PresentedModule::from_ideal(&i)?.direct_sum(&PresentedModule::free(&r, 1, 0), 2)?;
    let rp = ReesPackage::new(&e)?;
    let ext = check_ext_vanishing(&rp);
    println!("{}", serde_json::to_string_pretty(&ext).unwrap());
    let rep = verify_balanced("edge+R(-2)", &rp, 3, 5, McParams::default())?;
    println!("verify_balanced: {:?}", rep.status);
    Ok(())
}
