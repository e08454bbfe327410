fn main() { std::process::exit(zetamass::cli::run()); }
