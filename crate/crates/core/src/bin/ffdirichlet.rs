fn main() {
    std::process::exit(ffdirichlet::cli::run(std::env::args_os()));
}
