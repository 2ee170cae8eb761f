fn main() {
    std::process::exit(weighted_homology::cli::main_with_args(std::env::args_os()));
}
