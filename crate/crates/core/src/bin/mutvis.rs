fn main() {
    std::process::exit(mutvis::cli::run(std::env::args_os()));
}
