use clap::Parser;

use twinsieve::cli;

fn main() {
    let args = cli::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    std::process::exit(cli::exit_code(cli::execute(&args, &mut stdout)));
}
