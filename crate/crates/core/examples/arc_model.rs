//! Tagged m-arcs of the punctured polygon, m-moves, and the map rho onto
//! the quiver side. Writes `arcs.svg` to the current directory.
//!
//!     cargo run --example arc_model -- 4 2

use quiverkit::arcs::{
    build_gamma_odot, enumerate_m_arcs, m_moves, rho, rho_mapping, tau_m_arc, Tag, TaggedArc,
};
use quiverkit::decomposition::d_component;
use quiverkit::export::export_arcs_svg;
use quiverkit::iso::check_isomorphism;

fn main() -> quiverkit::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, m) = (*args.first().unwrap_or(&4), *args.get(1).unwrap_or(&2));

    let arcs = enumerate_m_arcs(n, m)?;
    println!("{} tagged {m}-arcs", arcs.len());
    for a in arcs.iter().take(6) {
        let moves: Vec<String> = m_moves(n, m, a)?.iter().map(|b| b.to_string()).collect();
        println!(
            "  {a:<9} rho={:<8} tau_m={:<9} moves to {}",
            rho(n, m, a)?.to_string(),
            tau_m_arc(n, m, a)?.to_string(),
            moves.join(", ")
        );
    }

    let odot = build_gamma_odot(n, m)?;
    let d = d_component(n, m)?;
    match check_isomorphism(&odot, &d.quiver, &rho_mapping(n, m)?) {
        Ok(()) => println!("rho is an isomorphism onto the D-component"),
        Err(e) => println!("rho fails: {e}"),
    }

    let highlight = if (n, m) == (4, 2) {
        Some(vec![
            TaggedArc::plain(6, 2),
            TaggedArc::tagged(6, Tag::Minus),
        ])
    } else {
        None
    };
    std::fs::write("arcs.svg", export_arcs_svg(n, m, highlight.as_deref())?)?;
    println!("wrote arcs.svg");
    Ok(())
}
