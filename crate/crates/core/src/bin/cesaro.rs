fn main() {
    std::process::exit(cesaro::cli::main_with_args(std::env::args_os()));
}
