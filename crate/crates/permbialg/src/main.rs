use clap::Parser;

fn main() {
    let cli = permbialg::cli::Cli::parse();
    std::process::exit(permbialg::cli::run(cli));
}
