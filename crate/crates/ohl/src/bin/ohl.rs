fn main() {
    std::process::exit(ohl::cli::run());
}
