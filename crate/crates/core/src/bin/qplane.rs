use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qplane::suites::{
    all_passed, list_suites, render_json, render_text, run_suite, SuiteConfig, DEFAULT_SEED,
};
use qplane::text::parse_bindings;

#[derive(Parser)]
#[command(
    name = "qplane",
    version,
    about = "Exact checks for GL_{p,q'}(2) and its quantum planes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        /// Parameter values, e.g. `p=2,q'=q^2`.
        #[arg(long, default_value = "")]
        bindings: String,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Report every elapsed time as 0 for byte-stable output.
        #[arg(long)]
        no_timing: bool,
    },
    /// List the registered suites.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::List => {
            for s in list_suites() {
                println!("{:<26} {}  [{}]", s.name, s.description, s.anchor);
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            suite,
            bindings,
            output,
            seed,
            no_timing,
        } => {
            let bindings = match parse_bindings(&bindings) {
                Ok(b) => b,
                Err(err) => {
                    eprintln!("error: invalid --bindings: {err}");
                    return ExitCode::from(2);
                }
            };
            let config = SuiteConfig {
                suite,
                bindings,
                seed,
                timing: !no_timing,
            };
            let results = match run_suite(&config) {
                Ok(r) => r,
                Err(err) => {
                    eprintln!("error: {err}");
                    return ExitCode::from(2);
                }
            };
            match output {
                Output::Json => println!("{}", render_json(&results)),
                Output::Text => print!("{}", render_text(&results)),
            }
            if all_passed(&results) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
