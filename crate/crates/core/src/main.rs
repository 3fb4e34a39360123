fn main() {
    std::process::exit(wreath_hurwitz::cli::run());
}
