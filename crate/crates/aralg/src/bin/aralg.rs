fn main() {
    // placeholder while the library is under construction
    eprintln!("aralg: not yet wired up");
    std::process::exit(2);
}
