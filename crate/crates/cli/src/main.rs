use clap::Parser;

fn main() {
    let cli = pcflab_cli::Cli::parse();
    match pcflab_cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
