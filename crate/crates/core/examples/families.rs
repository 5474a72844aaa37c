//! Builds the three quiver families and checks the mesh condition on each.
//!
//!     cargo run --example families -- 4 2

use quiverkit::families::{build_gamma_d, build_gamma_d_m, build_za_quotient, m_cluster_period};
use quiverkit::validate;

fn main() -> quiverkit::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, m) = (*args.first().unwrap_or(&4), *args.get(1).unwrap_or(&2));
    let big = m_cluster_period(n, m);

    for (name, q) in [
        (format!("Gamma(D_{n},1)"), build_gamma_d(n)?),
        (format!("Gamma(D_{n},{m})"), build_gamma_d_m(n, m)?),
        (
            format!("ZA_{}/tau^{big}", n - 1),
            build_za_quotient(n - 1, big)?,
        ),
    ] {
        let r = validate(&q);
        println!(
            "{name:<16} period {:>3}  {:>4} vertices  {:>4} arrows  stable translation quiver: {}",
            q.period(),
            q.len(),
            q.arrow_count(),
            r.is_stable_translation_quiver()
        );
    }

    // the translation twists the fork rows when the period is odd
    let q = build_gamma_d(7)?;
    for v in q.vertices().filter(|v| v.col == 0 && v.row.is_fork()) {
        println!("tau{v} = {}", q.tau(v).unwrap());
    }
    Ok(())
}
