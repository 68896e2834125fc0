fn main() {
    std::process::exit(semisym::cli::main_with_args(std::env::args_os()));
}
