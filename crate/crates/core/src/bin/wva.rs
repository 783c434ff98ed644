fn main() {
    std::process::exit(wva::cli::main());
}
