use clap::Parser;

fn main() {
    let cli = burge_cli::Cli::parse();
    let code = burge_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
