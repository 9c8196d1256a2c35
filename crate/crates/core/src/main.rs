fn main() {
    std::process::exit(nncalc::cli::run(std::env::args_os()));
}
