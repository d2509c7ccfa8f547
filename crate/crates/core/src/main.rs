fn main() {
    std::process::exit(iasi::cli::run(std::env::args_os()));
}
