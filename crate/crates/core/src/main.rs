fn main() {
    std::process::exit(splitjac::cli::run(std::env::args().collect()));
}
