use std::io::Write;
use std::process::ExitCode;

use bwtop::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(o.output.as_bytes());
            ExitCode::from(if o.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
