use std::process::ExitCode;

use clap::Parser;
use cohom_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match execute(&cli, &echo) {
        Ok(out) => {
            println!("{}", out.render(cli.opts.json));
            ExitCode::from(out.exit_code())
        }
        Err(usage) => {
            eprintln!("error: {}", usage.0);
            ExitCode::from(2)
        }
    }
}
