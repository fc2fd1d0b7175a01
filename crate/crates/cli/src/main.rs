fn main() {
    std::process::exit(specfun_cli::run(std::env::args_os()));
}
