fn main() {
    std::process::exit(dstockwell::cli::run());
}
