fn main() {
    std::process::exit(theta_g2::cli::run());
}
