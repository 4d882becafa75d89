fn main() {
    std::process::exit(uhosp::cli::main_with_args(std::env::args_os()));
}
