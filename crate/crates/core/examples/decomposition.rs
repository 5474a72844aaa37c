//! Finds Gamma(D_n, m) inside the restricted m-th power of Gamma(D_{nm-m+1}, 1)
//! and identifies the remaining components.
//!
//!     cargo run --example decomposition -- 4 2

use quiverkit::decomposition::{d_component, decompose, ComponentClass};

fn main() -> quiverkit::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, m) = (*args.first().unwrap_or(&4), *args.get(1).unwrap_or(&2));

    let d = d_component(n, m)?;
    println!(
        "sigma embeds Gamma(D_{n},{m}) as a {}-vertex component:",
        d.quiver.len()
    );
    for (a, b) in d.sigma.iter().take(8) {
        println!("  {a} -> {b}");
    }

    let report = decompose(n, m)?;
    for (k, c) in report.components.iter().enumerate() {
        let what = match c.class {
            ComponentClass::D => format!("Gamma(D_{n},{m})"),
            ComponentClass::A(r) => format!("ZA_{} quotient on rows = {r} mod {m}", n - 1),
            ComponentClass::Unidentified => "unidentified".to_string(),
        };
        println!("component {k}: {:>4} vertices, {what}", c.quiver.len());
    }
    Ok(())
}
