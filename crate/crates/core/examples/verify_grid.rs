//! Reruns every verification suite over a small grid on a worker pool.
//! `QUIVERKIT_JOBS` sets the pool size.
//!
//!     cargo run --release --example verify_grid -- 6 4

use quiverkit::verify::{grid, jobs_from_env, run_grid, Suite};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n_max, m_max) = (*args.first().unwrap_or(&5), *args.get(1).unwrap_or(&3));
    let mut failed = 0;
    for suite in Suite::ALL {
        let cells = if suite == Suite::Torus {
            vec![(4, 2)]
        } else {
            grid(n_max, m_max)
        };
        let verdicts = run_grid(suite, &cells, jobs_from_env());
        failed += verdicts.iter().filter(|v| !v.ok).count();
        for v in verdicts.iter().filter(|v| !v.ok) {
            println!("{v}");
        }
        println!(
            "{suite:<14} {}/{} cells",
            verdicts.iter().filter(|v| v.ok).count(),
            verdicts.len()
        );
    }
    std::process::exit(i32::from(failed > 0));
}
