//! The unrestricted square of Gamma(D_4, 1): four isolated vertices and a
//! 12-vertex component whose mesh complex is a torus.
//!
//!     cargo run --example torus

use quiverkit::components::connected_components;
use quiverkit::families::build_gamma_d;
use quiverkit::paths::power;
use quiverkit::topology::{classify_surface, mesh_complex};

fn main() -> quiverkit::Result<()> {
    let square = power(&build_gamma_d(4)?, 2, false)?;
    for (k, c) in connected_components(&square).iter().enumerate() {
        let complex = mesh_complex(c)?;
        let r = classify_surface(&complex);
        let (v, e, f) = complex.counts();
        println!(
            "component {k}: (V,E,F) = ({v},{e},{f}), chi = {:>2}, {}",
            r.euler_characteristic, r.classification
        );
    }
    Ok(())
}
