fn main() {
    qtcomb::cli::main();
}
