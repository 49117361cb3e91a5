use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = qss::cli::run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut out,
        &mut stderr.lock(),
    );
    let _ = out.flush();
    ExitCode::from(code as u8)
}
