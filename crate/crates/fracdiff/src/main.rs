use std::process::ExitCode;

fn main() -> ExitCode {
    fracdiff::cli::main_with(std::env::args_os())
}
