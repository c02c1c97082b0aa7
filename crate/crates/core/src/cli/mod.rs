//! Session files: parsing, execution and reports.
//!
//! ```text
//! ring R = GF(32003)[x, y];
//! ideal I = (x^2, x*y, y^2);
//! module E = ideal I;
//! task core E --samples 8 --seed 42;
//! ```

mod dsl;
mod ops;
mod report;

use std::time::Instant;

use rayon::prelude::*;

pub use dsl::{parse_session, parse_session_with, Object, ParseError, ParseOptions, Session, Task};
pub use ops::{ArgKind, OpSpec, OPS};
pub use report::{emit_report, session_hash, Format, Report, ReportOptions, Status, TaskReport, SCHEMA_VERSION};

use crate::rees::Caps;

/// Version string written into every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub characteristic: Option<u32>,
    pub caps: Caps,
}

/// Runs every task; tasks are independent and run concurrently, the report keeps
/// their order.
pub fn run_session(session: &Session, opts: &RunOptions) -> Report {
    let runner = ops::Runner::new(session, opts.caps);
    let tasks = session
        .tasks
        .par_iter()
        .map(|task| {
            let start = Instant::now();
            let out = runner.execute(task);
            TaskReport {
                index: task.index,
                line: task.line,
                op: task.op.name.to_string(),
                args: task.args.clone(),
                params: runner.params(task),
                status: out.status,
                value: out.value,
                error: out.error,
                elapsed_ms: (start.elapsed().as_secs_f64() * 1000.0 * 1000.0).round() / 1000.0,
            }
        })
        .collect();
    let options = ReportOptions {
        characteristic: opts.characteristic,
        max_t_degree: opts.caps.max_t_degree,
        max_x_degree: opts.caps.max_x_degree,
    };
    Report {
        version: VERSION.to_string(),
        schema: SCHEMA_VERSION,
        session_hash: session_hash(&session.source, &options),
        options,
        tasks,
    }
}

/// Parses and runs a session source in one step.
pub fn run_source(src: &str, opts: &RunOptions) -> Result<Report, ParseError> {
    let session = parse_session_with(src, &ParseOptions { characteristic: opts.characteristic })?;
    Ok(run_session(&session, opts))
}

#[cfg(test)]
mod tests;
