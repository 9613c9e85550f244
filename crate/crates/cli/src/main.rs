fn main() {
    std::process::exit(leibniz_cli::run(std::env::args_os()));
}
