fn main() {
    contact_sextic::cli::run();
}
