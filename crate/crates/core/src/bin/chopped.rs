fn main() {
    std::process::exit(chopped::cli::main());
}
