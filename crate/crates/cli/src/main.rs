fn main() {
    std::process::exit(disc_census_cli::run(std::env::args_os()));
}
