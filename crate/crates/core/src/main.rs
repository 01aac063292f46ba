fn main() {
    std::process::exit(corings::cli::main_with_args());
}
