fn main() {
    std::process::exit(rcx_cli::main_with_args(std::env::args_os()));
}
