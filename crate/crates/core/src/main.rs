fn main() {
    std::process::exit(fibcat::cli::main_entry(std::env::args_os()));
}
