fn main() {
    std::process::exit(helmholtz2d::cli::run(std::env::args_os()));
}
