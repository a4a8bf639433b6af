mod args;
mod commands;
mod inputs;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use tate_core::{F2, F3, F5, F7, Q};

use args::Cli;
use inputs::Source;
use output::{CliError, CliResult};

fn execute(cli: &Cli) -> CliResult<(String, bool)> {
    let src = Source::resolve(cli.command.input())?;
    let out = match src.field() {
        "F2" => commands::run::<F2>(&cli.command, &src),
        "F3" => commands::run::<F3>(&cli.command, &src),
        "F5" => commands::run::<F5>(&cli.command, &src),
        "F7" => commands::run::<F7>(&cli.command, &src),
        "Q" => commands::run::<Q>(&cli.command, &src),
        other => Err(commands::not_a_field(other)),
    }?;
    Ok((out.render(cli.command.input().format)?, out.failed))
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", serde_json::to_string(&e.to_json()).expect("JSON values serialize"));
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Usage(e.render().to_string().trim().to_string())),
    };
    match execute(&cli) {
        Ok((text, failed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => fail(&e),
    }
}
