use clap::Parser;

fn main() {
    let cli = nslg_tool::Cli::parse();
    if let Err(e) = nslg_tool::run(cli) {
        eprintln!("nslg: {e}");
        std::process::exit(e.exit_code());
    }
}
