fn main() {
    std::process::exit(lapspread::cli::run(std::env::args_os()));
}
