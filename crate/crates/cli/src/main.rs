use clap::Parser;
use std::io::Write;
use std::process::ExitCode;
use tabalg_cli::report::ErrorRecord;
use tabalg_cli::{run, Cli, RunConfig, EXIT_INVALID};

fn emit_errors(errors: &[ErrorRecord]) {
    let mut stderr = std::io::stderr().lock();
    for e in errors {
        let line = serde_json::to_string(e).expect("error records are plain data");
        let _ = writeln!(stderr, "{line}");
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit_errors(&[ErrorRecord {
                error: "InvalidParams".to_string(),
                message: e.to_string().trim_end().to_string(),
                exit_code: EXIT_INVALID,
                d: None,
                k: None,
            }]);
            return ExitCode::from(EXIT_INVALID as u8);
        }
    };
    let config = RunConfig::from(cli);
    let outcome = run(&config);
    emit_errors(&outcome.errors);

    let mut code = outcome.exit_code;
    if !outcome.output.is_empty() {
        let written = match &config.output_path {
            Some(path) => std::fs::write(path, &outcome.output),
            None => std::io::stdout()
                .lock()
                .write_all(outcome.output.as_bytes()),
        };
        if let Err(e) = written {
            emit_errors(&[ErrorRecord {
                error: "Io".to_string(),
                message: e.to_string(),
                exit_code: EXIT_INVALID,
                d: None,
                k: None,
            }]);
            code = code.max(EXIT_INVALID);
        }
    }
    ExitCode::from(code as u8)
}
