fn main() {
    std::process::exit(corehooks::cli::run(std::env::args_os()));
}
