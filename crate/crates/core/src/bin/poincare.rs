fn main() {
    std::process::exit(joint_poincare::cli::run());
}
