fn main() {
    std::process::exit(rpt_cli::run_from_args(std::env::args_os()));
}
