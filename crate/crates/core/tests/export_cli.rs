mod common;

use std::path::Path;
use std::process::Command;

use common::family_quivers;
use quiverkit::arcs::{build_gamma_odot, Tag, TaggedArc};
use quiverkit::export::{
    export_arcs_svg, export_dot, export_json, from_json_str, import_json, to_json_string,
};
use quiverkit::families::build_gamma_d;
use quiverkit::paths::power;

#[test]
fn json_round_trips_everything() {
    let mut qs = family_quivers(8);
    qs.push(build_gamma_odot(4, 2).unwrap());
    qs.push(power(&build_gamma_d(7).unwrap(), 2, true).unwrap());
    for q in qs {
        let s = to_json_string(&q).unwrap();
        assert_eq!(to_json_string(&q).unwrap(), s);
        let back = from_json_str(&s).unwrap();
        assert_eq!(back, q);
        assert_eq!(to_json_string(&back).unwrap(), s);
    }
}

#[test]
fn json_rejects_bad_documents() {
    let q = build_gamma_d(4).unwrap();
    let mut doc = export_json(&q);
    doc.tau.push([3, 1000]);
    assert!(import_json(&doc).unwrap_err().to_string().contains("1000"));
    let mut doc = export_json(&q);
    doc.vertices[0].row = "0bra".into();
    assert!(import_json(&doc).is_err());
    assert!(from_json_str("{\"schema_version\": \"1.0\"}").is_err());
}

#[test]
fn dot_is_balanced() {
    let q = build_gamma_d(5).unwrap();
    let dot = export_dot(&q, true);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    assert_eq!(
        dot.matches(" -> ").count(),
        q.arrow_count() + q.tau_map().len()
    );
}

fn svg_elements(svg: &str, tag: &str, class: &str) -> usize {
    let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("version"), Some("1.1"));
    root.descendants()
        .filter(|n| n.tag_name().name() == tag && n.attribute("class") == Some(class))
        .count()
}

#[test]
fn svg_is_well_formed() {
    for (n, m) in [(3, 1), (4, 2), (5, 3), (6, 4)] {
        let svg = export_arcs_svg(n, m, None).unwrap();
        let big = n * m - m + 1;
        assert_eq!(svg_elements(&svg, "path", "arc"), n * big);
        assert_eq!(svg_elements(&svg, "line", "tag"), big);
        assert_eq!(svg_elements(&svg, "circle", "vertex"), big);
        assert_eq!(svg_elements(&svg, "circle", "puncture"), 1);
    }
    let hl = [TaggedArc::plain(6, 2), TaggedArc::tagged(6, Tag::Minus)];
    let svg = export_arcs_svg(4, 2, Some(&hl)).unwrap();
    assert_eq!(svg_elements(&svg, "path", "arc"), 2);
    let err = export_arcs_svg(
        4,
        2,
        Some(&[
            TaggedArc::plain(6, 2),
            TaggedArc::plain(1, 3),
            TaggedArc::plain(2, 3),
        ]),
    )
    .unwrap_err()
    .to_string();
    assert!(
        err.contains("D[1,3]") && err.contains("D[2,3]") && !err.contains("D[6,2]"),
        "{err}"
    );
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quiverkit"))
        .args(args)
        .output()
        .unwrap();
    let text =
        String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr);
    (out.status.code().unwrap(), text)
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn cli_build_power_components_iso_topology() {
    let dir = tempfile::tempdir().unwrap();
    let d42 = dir.path().join("d42.json");
    let za = dir.path().join("za37.json");
    let d7 = dir.path().join("d7.json");
    let mu = dir.path().join("mu.json");
    assert_eq!(
        cli(&[
            "build",
            "--family",
            "dm",
            "--n",
            "4",
            "--m",
            "2",
            "--out",
            p(&d42)
        ])
        .0,
        0
    );
    assert_eq!(
        cli(&[
            "build",
            "--family",
            "za",
            "--rows",
            "3",
            "--period",
            "7",
            "--out",
            p(&za)
        ])
        .0,
        0
    );
    assert_eq!(
        cli(&["build", "--family", "d", "--n", "7", "--out", p(&d7)]).0,
        0
    );

    let (code, text) = cli(&["iso", "--a", p(&d42), "--b", p(&za)]);
    assert_eq!(code, 1);
    assert!(
        text.contains("not isomorphic (28 vs 21 vertices)"),
        "{text}"
    );

    assert_eq!(
        cli(&[
            "power",
            "--in",
            p(&d7),
            "--m",
            "2",
            "--restricted",
            "--out",
            p(&mu)
        ])
        .0,
        0
    );
    let (code, text) = cli(&["components", "--in", p(&mu), "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let sizes: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, vec![28, 21]);

    let d4 = dir.path().join("d4.json");
    let sq = dir.path().join("sq.json");
    cli(&["build", "--family", "d", "--n", "4", "--out", p(&d4)]);
    cli(&["power", "--in", p(&d4), "--m", "2", "--out", p(&sq)]);
    let (code, text) = cli(&["topology", "--in", p(&sq), "--component", "0"]);
    assert_eq!(code, 0);
    assert!(
        text.contains("(12,36,24)") && text.contains("torus"),
        "{text}"
    );
    assert_eq!(cli(&["topology", "--in", p(&sq), "--component", "9"]).0, 2);

    let (code, text) = cli(&["dot", "--in", p(&d4), "--tau"]);
    assert_eq!(code, 0);
    assert!(text.contains("dashed"));
}

#[test]
fn cli_arcs_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("a.svg");
    let (code, text) = cli(&[
        "arcs",
        "--n",
        "4",
        "--m",
        "2",
        "--svg",
        p(&svg),
        "--highlight",
        "6,2",
        "6-",
    ]);
    assert_eq!(code, 0);
    assert!(text.starts_with("28 tagged 2-arcs"));
    assert_eq!(
        svg_elements(&std::fs::read_to_string(&svg).unwrap(), "path", "arc"),
        2
    );
    assert_eq!(
        cli(&[
            "arcs",
            "--n",
            "4",
            "--m",
            "2",
            "--svg",
            p(&svg),
            "--highlight",
            "1,3"
        ])
        .0,
        2
    );

    let (code, text) = cli(&["verify", "d-component", "--n", "4", "--m", "2"]);
    assert_eq!(code, 0);
    assert!(
        text.contains("28 vertices") && text.contains("sigma witness"),
        "{text}"
    );
    let (code, text) = cli(&["verify", "torus"]);
    assert_eq!(code, 0);
    assert!(text.contains("chi=0") && text.contains("orientable") && text.contains("torus"));
    let (code, text) = cli(&["verify", "decomposition", "--grid", "4", "3"]);
    assert_eq!(code, 0);
    assert_eq!(text.lines().filter(|l| l.starts_with("ok")).count(), 6);
    assert_eq!(cli(&["verify", "nonsense"]).0, 2);
    assert_eq!(cli(&["build", "--family", "d", "--out", p(&svg)]).0, 2);
}

#[test]
fn cli_verify_respects_job_count() {
    let out = Command::new(env!("CARGO_BIN_EXE_quiverkit"))
        .args(["verify", "lemma-3-6", "--grid", "5", "3"])
        .env("QUIVERKIT_JOBS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let cells: Vec<&str> = text.lines().filter(|l| l.starts_with("ok")).collect();
    assert_eq!(cells.len(), 9);
    assert!(cells[0].contains("n=3 m=1") && cells[8].contains("n=5 m=3"));
}
