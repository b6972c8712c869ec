fn main() {
    std::fs::write(
        "crates/nilop/tests/golden/triangle3.svg",
        nilop::acceptance::standard_figure(3),
    )
    .unwrap();
    std::fs::write(
        "crates/nilop/tests/golden/triangle6.svg",
        nilop::acceptance::standard_figure(6),
    )
    .unwrap();
    println!("written");
}
