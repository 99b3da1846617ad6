use std::io::{self, BufWriter};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let mut stdout = BufWriter::new(io::stdout().lock());
    let mut stderr = io::stderr().lock();
    let code = combinadics::cli::run(std::env::args_os(), &mut stdin, &mut stdout, &mut stderr);
    drop(stdout);
    ExitCode::from(code as u8)
}
