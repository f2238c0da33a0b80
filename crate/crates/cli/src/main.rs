use clap::Parser;

fn main() {
    env_logger::init();
    let cli = rangescore_cli::args::Cli::parse();
    if let Err(err) = rangescore_cli::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
