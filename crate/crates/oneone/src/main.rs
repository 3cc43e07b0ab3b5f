use std::process::ExitCode;

fn main() -> ExitCode {
    let (out, code) = oneone::cli::run_args(std::env::args());
    if code == oneone::cli::EXIT_USAGE {
        eprintln!("{out}");
    } else {
        println!("{out}");
    }
    ExitCode::from(code as u8)
}
