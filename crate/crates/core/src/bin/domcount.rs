fn main() {
    std::process::exit(domcount::cli::main_with_args(std::env::args_os()));
}
