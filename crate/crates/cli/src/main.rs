fn main() -> std::process::ExitCode {
    superpi_cli::main_entry()
}
