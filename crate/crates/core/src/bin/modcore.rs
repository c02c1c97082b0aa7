use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use modcore::cli::{emit_report, run_source, Format, RunOptions};
use modcore::rees::Caps;

#[derive(Parser)]
#[command(name = "modcore", version, about = "Cores, reductions and residual intersections of modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a session file and print its report.
    Run {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        /// Override the characteristic declared in the session.
        #[arg(long = "char", value_name = "P")]
        characteristic: Option<u32>,
        #[arg(long, value_name = "N", default_value_t = Caps::default().max_t_degree)]
        max_t_degree: usize,
        #[arg(long, value_name = "N", default_value_t = Caps::default().max_x_degree)]
        max_x_degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

fn main() -> ExitCode {
    let Command::Run { file, format, characteristic, max_t_degree, max_x_degree } = Cli::parse().command;
    let src = match std::fs::read_to_string(&file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("modcore: cannot read {}: {e}", file.display());
            return ExitCode::from(4);
        }
    };
    let opts = RunOptions { characteristic, caps: Caps { max_t_degree, max_x_degree } };
    let report = match run_source(&src, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{}:{e}", file.display());
            return ExitCode::from(4);
        }
    };
    let format = match format {
        OutFormat::Json => Format::Json,
        OutFormat::Text => Format::Text,
    };
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(&emit_report(&report, format)).is_err() {
        return ExitCode::from(4);
    }
    ExitCode::from(report.exit_code() as u8)
}
