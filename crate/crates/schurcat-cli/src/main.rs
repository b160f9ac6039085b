fn main() {
    std::process::exit(schurcat_cli::run(std::env::args_os()));
}
