fn main() {
    std::process::exit(holospin::cli::main_with_args(std::env::args_os()));
}
