//! Runs every acceptance criterion and prints the table.
//! `cargo run --release --example acceptance_table -- <seed>`

use quadric_moduli::acceptance::{run_all, AcceptanceConfig, DEFAULT_SEED};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
    for c in run_all(&AcceptanceConfig { seed, samples: None }) {
        println!("{}", c.line());
    }
}
