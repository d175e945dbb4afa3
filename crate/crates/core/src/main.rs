fn main() {
    std::process::exit(boolcube::cli::dispatch(std::env::args_os()));
}
