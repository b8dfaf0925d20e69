use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dnc_cli::{run, CliConfig};

fn main() -> ExitCode {
    let config = CliConfig::parse();
    dnc_core::arith::bernoulli::init_from_env();
    let out = run(&config);
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    ExitCode::from(out.code)
}
