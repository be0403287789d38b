fn main() -> std::process::ExitCode {
    jforge_cli::app::main()
}
