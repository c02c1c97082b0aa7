//! Runs a session file, or a built-in one, and prints the text report.

use modcore::cli::{emit_report, run_source, Format, RunOptions};

const DEMO: &str = "\
ring R = GF(32003)[x, y];
ideal m2 = (x^2, x*y, y^2);
module E_msq = ideal m2;
task analytic_spread E_msq;
task core E_msq --samples 8 --seed 42;
";

fn main() {
    let src = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable session file"),
        None => DEMO.to_string(),
    };
    match run_source(&src, &RunOptions::default()) {
        Ok(report) => {
            print!("{}", String::from_utf8(emit_report(&report, Format::Text)).unwrap());
            std::process::exit(report.exit_code());
        }
        Err(e) => {
            eprintln!("parse error at {e}");
            std::process::exit(4);
        }
    }
}
