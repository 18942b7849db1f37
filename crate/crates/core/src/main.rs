fn main() {
    std::process::exit(coend::cli::main_with_args(std::env::args_os()));
}
