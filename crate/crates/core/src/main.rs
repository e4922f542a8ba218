fn main() {
    std::process::exit(bcolor::cli::main_with_args(std::env::args_os()));
}
