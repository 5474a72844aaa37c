//! Sectional paths and (restricted) powers of Gamma(D_N, 1).
//!
//!     cargo run --example powers -- 7 2

use std::collections::BTreeSet;

use quiverkit::families::build_gamma_d;
use quiverkit::paths::{enumerate_sectional_paths, power};
use quiverkit::{validate, VertexLabel};

fn main() -> quiverkit::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (rank, m) = (*args.first().unwrap_or(&7), *args.get(1).unwrap_or(&2));
    let q = build_gamma_d(rank)?;

    let start = VertexLabel::numeric(0, m.min(rank - 2), rank);
    println!("restricted sectional paths of length {m} from {start}:");
    for p in enumerate_sectional_paths(&q, start, m, true)? {
        println!("  {p}");
    }

    let plain = power(&q, m, false)?;
    let restricted = power(&q, m, true)?;
    let dropped: BTreeSet<_> = plain
        .arrow_set()
        .difference(restricted.arrow_set())
        .collect();
    println!(
        "power {m}: {} arrows plain, {} restricted, {} removed",
        plain.arrow_count(),
        restricted.arrow_count(),
        dropped.len()
    );
    for (a, b) in dropped {
        println!("  {a} -> {b}");
    }
    println!(
        "restricted power is a stable translation quiver: {}",
        validate(&restricted).is_stable_translation_quiver()
    );
    Ok(())
}
