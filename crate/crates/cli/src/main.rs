fn main() {
    std::process::exit(delannoy_cli::main_with_args(std::env::args_os()));
}
