use clap::Parser;

fn main() {
    let cli = deptflow::cli::Cli::parse();
    std::process::exit(deptflow::cli::run(cli));
}
