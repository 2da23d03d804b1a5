fn main() {
    std::process::exit(arrlab::cli::run(std::env::args_os()));
}
