//! JSON round trip and Graphviz output.
//!
//!     cargo run --example export > d3.dot && dot -Kneato -n -Tsvg d3.dot

use quiverkit::export::{export_dot, from_json_str, to_json_string};
use quiverkit::families::build_gamma_d;

fn main() -> quiverkit::Result<()> {
    let q = build_gamma_d(3)?;
    let json = to_json_string(&q)?;
    let back = from_json_str(&json)?;
    assert_eq!(back, q);
    eprintln!("{} bytes of JSON, round trip ok", json.len());
    print!("{}", export_dot(&q, true));
    Ok(())
}
