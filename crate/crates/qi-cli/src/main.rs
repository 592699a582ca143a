use clap::Parser;

fn main() {
    let cli = qi_cli::Cli::parse();
    std::process::exit(qi_cli::run(cli));
}
