use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(photocorr::cli::main_entry(std::env::args_os()))
}
