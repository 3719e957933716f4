use clap::error::ErrorKind;
use clap::Parser;

use vocform_cli::{exit_kind, run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            let code = match error.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = error.print();
            std::process::exit(code);
        }
    };
    if let Err(error) = run(cli) {
        eprintln!("error: {error:#}");
        std::process::exit(exit_kind(&error).code());
    }
}
