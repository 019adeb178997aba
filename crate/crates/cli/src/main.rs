use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out, err) = nakayama_cli::run(std::env::args_os());
    std::io::stdout()
        .write_all(out.as_bytes())
        .expect("write to stdout");
    std::io::stderr()
        .write_all(err.as_bytes())
        .expect("write to stderr");
    ExitCode::from(code as u8)
}
