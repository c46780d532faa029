fn main() {
    std::process::exit(finwell_cli::run());
}
