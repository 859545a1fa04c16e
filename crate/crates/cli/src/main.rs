fn main() {
    std::process::exit(sparse_resultant_cli::run(std::env::args_os()));
}
