use cgsum_cli::{run, Cli};
use clap::Parser;

fn main() {
    let cli = Cli::parse();
    let code = match run(
        cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    ) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
