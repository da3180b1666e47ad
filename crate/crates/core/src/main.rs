fn main() {
    std::process::exit(unistoch::cli::main());
}
