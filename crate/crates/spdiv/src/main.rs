use clap::Parser;

use spdiv::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(error) = run(cli, &mut out) {
        eprintln!("error: {error}");
        std::process::exit(error.exit_code());
    }
}
