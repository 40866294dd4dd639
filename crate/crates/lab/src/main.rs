use std::process::ExitCode;

use clap::Parser;
use engel_lab::{
    cli::{echo, run, Cli},
    exit, Status,
};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let command = format!("engel-lab {}", echo(&args[1..]));
    match run(&cli, command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(if report.status == Status::Ok { exit::OK } else { exit::MISMATCH } as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
