use clap::Parser;

fn main() {
    let cli = bxqm::cli::Cli::parse();
    let code = bxqm::cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
