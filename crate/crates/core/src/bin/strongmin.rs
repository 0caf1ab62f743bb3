fn main() {
    std::process::exit(strongmin::cli::main_with_args(std::env::args_os()));
}
