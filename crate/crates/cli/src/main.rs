fn main() {
    std::process::exit(a4poly_cli::run(std::env::args_os()));
}
