use clap::Parser;

fn main() {
    let cli = qalg3_cli::Cli::parse();
    std::process::exit(qalg3_cli::run(cli));
}
