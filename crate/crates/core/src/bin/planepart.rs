fn main() {
    std::process::exit(planepart::cli::run(std::env::args_os()));
}
