fn main() {
    std::process::exit(odd_wedge::cli::main());
}
