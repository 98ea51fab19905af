use std::io::Write;

use anyhow::Context;

fn main() -> anyhow::Result<()> {
    let run = hopfkit_cli::run_args(std::env::args_os());
    let mut out = std::io::stdout().lock();
    out.write_all(run.stdout.as_bytes()).context("writing the report")?;
    out.flush().context("writing the report")?;
    std::io::stderr().write_all(run.stderr.as_bytes()).context("writing diagnostics")?;
    std::process::exit(run.code);
}
