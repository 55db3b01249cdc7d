fn main() {
    // Placeholder while the core library lands; the real driver follows.
    eprintln!("bifurc: not yet wired up");
    std::process::exit(2);
}
