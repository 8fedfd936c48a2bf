use std::process::ExitCode;

use clap::Parser;

use orbitcount_cli::args::{Cli, Command, Format};
use orbitcount_cli::report::RunReport;
use orbitcount_cli::run::{run, CliError};

fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let format = match &cli.command {
        Command::Count { common, .. } | Command::Bounds { common, .. } | Command::Certify { common } => common.format,
    };
    match run(&cli.command) {
        Ok(report) => {
            print!("{}", render(&report, format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = e.exit_code();
            match e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Cap(msg) => eprintln!("error: {msg}"),
                CliError::Violation(msg, report) => {
                    print!("{}", render(&report, format));
                    eprintln!("violation: {msg}");
                }
            }
            ExitCode::from(code)
        }
    }
}
