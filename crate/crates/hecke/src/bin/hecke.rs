fn main() {
    std::process::exit(hecke::cli::main_with(std::env::args_os()));
}
