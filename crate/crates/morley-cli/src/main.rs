use clap::error::ErrorKind;
use clap::Parser;

use morley_cli::app::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = run(cli);
    print!("{}", outcome.out);
    eprint!("{}", outcome.err);
    std::process::exit(outcome.code);
}
