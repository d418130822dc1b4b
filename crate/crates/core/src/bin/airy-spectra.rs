fn main() {
    std::process::exit(airy_spectra::cli::run(std::env::args_os()));
}
