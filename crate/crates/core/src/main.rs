fn main() {
    legendrian::cli::main()
}
