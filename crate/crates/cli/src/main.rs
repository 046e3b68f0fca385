use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use domsr::{run, Cli, Env};

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which is reserved for exhaustion here
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = Env::from_process().and_then(|env| run(&cli, env));
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(out.stdout.as_bytes()).and_then(|()| stdout.flush());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
