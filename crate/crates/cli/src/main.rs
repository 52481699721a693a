use clap::Parser;

use mixshuffle_cli::app::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            if !output.text.is_empty() {
                println!("{}", output.text);
            }
            std::process::exit(output.code);
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}
