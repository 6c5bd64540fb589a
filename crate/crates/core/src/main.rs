fn main() {
    std::process::exit(sextic_qsc::cli::run(std::env::args_os()));
}
