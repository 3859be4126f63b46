fn main() {
    std::process::exit(hydro_cli::run(std::env::args_os()));
}
