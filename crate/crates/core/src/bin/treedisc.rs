fn main() {
    std::process::exit(treedisc::cli::main_with(std::env::args_os()));
}
