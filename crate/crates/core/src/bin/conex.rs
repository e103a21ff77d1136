use std::process::ExitCode;

fn main() -> ExitCode {
    cone_expectiles::cli::main()
}
