use std::process::ExitCode;
use trigsb_cli::commands::{self, run};
use trigsb_cli::parse_problem;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (cmd, file, flags) = match commands::parse_args(&args) {
        Ok(parsed) => parsed,
        Err(msg) => {
            eprintln!("{msg}");
            return ExitCode::from(commands::EXIT_USAGE as u8);
        }
    };
    let input = match std::fs::read_to_string(&file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(66);
        }
    };
    let problem = match parse_problem(&input) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(commands::EXIT_DATA as u8);
        }
    };
    let out = run(&problem, &cmd, &flags);
    print!("{}", out.report);
    ExitCode::from(out.exit as u8)
}
