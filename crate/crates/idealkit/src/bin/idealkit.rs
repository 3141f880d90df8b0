fn main() { std::process::exit(idealkit::cli::run()) }
