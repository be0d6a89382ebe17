use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use covering_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli);
    let mut stdout = std::io::stdout().lock();
    if cli.json {
        let line = serde_json::to_string(&out.record).expect("plain data");
        let _ = writeln!(stdout, "{line}");
    } else {
        let _ = stdout.write_all(out.stdout.as_bytes());
        if !cli.quiet {
            for line in &out.log {
                eprintln!("{line}");
            }
        }
    }
    ExitCode::from(out.record.exit.code() as u8)
}
