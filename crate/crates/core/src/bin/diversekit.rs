use clap::Parser;
use diversekit::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let out = run(&config);
    if !out.json.is_empty() {
        println!("{}", out.json);
    }
    eprintln!("{}", out.summary);
    std::process::exit(out.exit_code);
}
