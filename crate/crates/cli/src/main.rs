use std::io::Write;
use std::process::ExitCode;

use bnskein_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.report).expect("reports serialize");
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
