fn main() {
    std::process::exit(qmertens::cli::main_with_args(std::env::args_os()));
}
