fn main() {
    std::process::exit(affine_jack::cli::run(std::env::args_os()));
}
