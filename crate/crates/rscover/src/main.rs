fn main() {
    std::process::exit(rscover::cli::run());
}
