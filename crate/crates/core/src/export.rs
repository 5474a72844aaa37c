//! JSON documents, Graphviz DOT and SVG arc diagrams.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arcs::{enumerate_m_arcs, is_m_arc, PuncturedPolygon, Tag, TaggedArc};
use crate::error::{Error, Result};
use crate::label::{RowLabel, VertexLabel};
use crate::quiver::{Provenance, TranslationQuiver};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub col: usize,
    pub id: usize,
    /// `"0"`, `"0bar"`, `"1"`, ...
    pub row: String,
}

/// One quiver per file. Fields are declared in key order so the serialised
/// form has sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDocument {
    pub arrows: Vec<[usize; 2]>,
    pub params: Provenance,
    pub period: usize,
    pub schema_version: String,
    pub tau: Vec<[usize; 2]>,
    pub vertices: Vec<VertexRecord>,
}

/// Ids are assigned densely in vertex order (row, then column).
pub fn export_json(q: &TranslationQuiver) -> QuiverDocument {
    let ids: BTreeMap<VertexLabel, usize> = q.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    QuiverDocument {
        arrows: q.arrows().map(|(a, b)| [ids[&a], ids[&b]]).collect(),
        params: q.metadata().clone(),
        period: q.period(),
        schema_version: SCHEMA_VERSION.to_string(),
        tau: q.tau_map().iter().map(|(x, t)| [ids[x], ids[t]]).collect(),
        vertices: q
            .vertices()
            .map(|v| VertexRecord {
                col: v.col,
                id: ids[&v],
                row: v.row.to_string(),
            })
            .collect(),
    }
}

pub fn import_json(d: &QuiverDocument) -> Result<TranslationQuiver> {
    let major = d.schema_version.split('.').next().unwrap_or("");
    let ours = SCHEMA_VERSION.split('.').next().unwrap();
    if major != ours {
        return Err(Error::Parse(format!(
            "unsupported schema version {:?} (this build reads {ours}.x)",
            d.schema_version
        )));
    }
    if d.period == 0 {
        return Err(Error::Parse("period must be positive".into()));
    }
    let mut by_id = BTreeMap::new();
    for rec in &d.vertices {
        let row: RowLabel = rec.row.parse()?;
        if rec.col >= d.period {
            return Err(Error::Parse(format!(
                "vertex id {} has column {} outside period {}",
                rec.id, rec.col, d.period
            )));
        }
        if by_id
            .insert(rec.id, VertexLabel { col: rec.col, row })
            .is_some()
        {
            return Err(Error::Parse(format!("duplicate vertex id {}", rec.id)));
        }
    }
    let lookup = |what: &str, k: usize, id: usize| {
        by_id
            .get(&id)
            .copied()
            .ok_or_else(|| Error::Parse(format!("{what} {k} references missing vertex id {id}")))
    };
    let mut arrows = Vec::with_capacity(d.arrows.len());
    for (k, &[a, b]) in d.arrows.iter().enumerate() {
        arrows.push((lookup("arrow", k, a)?, lookup("arrow", k, b)?));
    }
    let mut tau = Vec::with_capacity(d.tau.len());
    for (k, &[x, t]) in d.tau.iter().enumerate() {
        tau.push((lookup("tau entry", k, x)?, lookup("tau entry", k, t)?));
    }
    TranslationQuiver::new(
        d.period,
        by_id.values().copied(),
        arrows,
        tau,
        d.params.clone(),
    )
    .map_err(|e| Error::Parse(format!("document does not describe a quiver: {e}")))
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string(q: &TranslationQuiver) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&export_json(q))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json_str(s: &str) -> Result<TranslationQuiver> {
    let doc: QuiverDocument =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("not a quiver document: {e}")))?;
    import_json(&doc)
}

pub fn write_json(q: &TranslationQuiver, path: &std::path::Path) -> Result<()> {
    std::fs::write(path, to_json_string(q)?)?;
    Ok(())
}

pub fn read_json(path: &std::path::Path) -> Result<TranslationQuiver> {
    from_json_str(&std::fs::read_to_string(path)?)
}

fn dot_name(v: VertexLabel) -> String {
    format!("v_{}_{}", v.col, v.row)
}

/// Graphviz digraph. Node positions follow the usual drawing, with every
/// arrow pointing one unit right and `0bar` nudged below `0`; render with
/// `neato -n` to keep them.
pub fn export_dot(q: &TranslationQuiver, show_tau: bool) -> String {
    let mut out = String::from("digraph quiver {\n  node [shape=plaintext, fontsize=10];\n");
    for v in q.vertices() {
        let y = match v.row {
            RowLabel::ZeroBar => -0.6,
            r => r.height() as f64,
        };
        let x = 2 * v.col as i64 - v.row.height() as i64;
        let _ = writeln!(
            out,
            "  {} [label=\"{}\", pos=\"{x},{y}!\"];",
            dot_name(v),
            v
        );
    }
    for (a, b) in q.arrows() {
        let _ = writeln!(out, "  {} -> {};", dot_name(a), dot_name(b));
    }
    if show_tau {
        for (&x, &t) in q.tau_map() {
            let _ = writeln!(
                out,
                "  {} -> {} [style=dashed, constraint=false];",
                dot_name(x),
                dot_name(t)
            );
        }
    }
    out.push_str("}\n");
    out
}

const CANVAS: f64 = 480.0;
const RADIUS: f64 = 200.0;

struct Layout {
    sides: usize,
}

impl Layout {
    fn angle(&self, i: f64) -> f64 {
        -PI / 2.0 + 2.0 * PI * (i - 1.0) / self.sides as f64
    }

    fn at(&self, i: f64, r: f64) -> (f64, f64) {
        let c = CANVAS / 2.0;
        let a = self.angle(i);
        (c + r * a.cos(), c + r * a.sin())
    }
}

fn arc_path(l: &Layout, p: &PuncturedPolygon, a: &TaggedArc) -> String {
    let (x0, y0) = l.at(a.from as f64, RADIUS);
    match a.tag {
        None => {
            // control points follow the boundary walk i -> j
            let span = p.steps(a.from, a.to) as f64;
            let depth = RADIUS * (0.85 - 0.45 * span / p.sides() as f64);
            let (c1x, c1y) = l.at(a.from as f64 + span / 3.0, depth);
            let (c2x, c2y) = l.at(a.from as f64 + 2.0 * span / 3.0, depth);
            let (x1, y1) = l.at(a.to as f64, RADIUS);
            format!("M {x0:.2} {y0:.2} C {c1x:.2} {c1y:.2} {c2x:.2} {c2y:.2} {x1:.2} {y1:.2}")
        }
        Some(tag) => {
            let off = if tag == Tag::Plus { -0.15 } else { 0.15 };
            let (cx, cy) = l.at(a.from as f64 + off, RADIUS * 0.5);
            let c = CANVAS / 2.0;
            format!("M {x0:.2} {y0:.2} Q {cx:.2} {cy:.2} {c:.2} {c:.2}")
        }
    }
}

/// Cross-stroke near the puncture end of a notched loop.
fn tag_stroke(l: &Layout, a: &TaggedArc) -> String {
    let c = CANVAS / 2.0;
    let ang = l.angle(a.from as f64 + 0.15);
    let (mx, my) = (c + 18.0 * ang.cos(), c + 18.0 * ang.sin());
    let (dx, dy) = (-ang.sin() * 6.0, ang.cos() * 6.0);
    format!(
        "<line class=\"tag\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" />",
        mx - dx,
        my - dy,
        mx + dx,
        my + dy
    )
}

/// SVG 1.1 drawing of the punctured `(nm-m+1)`-gon with every tagged m-arc,
/// or only `highlight` when given. Plain loops are drawn as spokes to the
/// puncture; notched (`-`) loops carry a cross-stroke.
pub fn export_arcs_svg(n: usize, m: usize, highlight: Option<&[TaggedArc]>) -> Result<String> {
    let p = PuncturedPolygon::for_m_cluster(n, m)?;
    let arcs = match highlight {
        None => enumerate_m_arcs(n, m)?,
        Some(hs) => {
            let bad: Vec<String> = hs
                .iter()
                .filter(|a| !matches!(is_m_arc(&p, m, a), Ok(true)))
                .map(|a| a.to_string())
                .collect();
            if !bad.is_empty() {
                return Err(Error::IllegalArc(format!(
                    "not {m}-arcs of the punctured {}-gon: {}",
                    p.sides(),
                    bad.join(", ")
                )));
            }
            hs.to_vec()
        }
    };
    let l = Layout { sides: p.sides() };
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"0 0 {CANVAS} {CANVAS}\">"
    );
    let _ = writeln!(
        out,
        "<title>{m}-arcs of the punctured {}-gon</title>",
        p.sides()
    );
    let _ = writeln!(
        out,
        "<style>.arc{{fill:none;stroke:#1f5fa8;stroke-width:1.5}} .tag{{stroke:#c0392b;stroke-width:2}} .edge{{fill:none;stroke:#000}}</style>"
    );
    let corners: Vec<String> = (1..=p.sides())
        .map(|i| {
            let (x, y) = l.at(i as f64, RADIUS);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        out,
        "<polygon class=\"edge\" points=\"{}\" />",
        corners.join(" ")
    );
    for a in &arcs {
        let _ = writeln!(
            out,
            "<path class=\"arc\" d=\"{}\"><title>{a}</title></path>",
            arc_path(&l, &p, a)
        );
        if a.tag == Some(Tag::Minus) {
            let _ = writeln!(out, "{}", tag_stroke(&l, a));
        }
    }
    for i in 1..=p.sides() {
        let (x, y) = l.at(i as f64, RADIUS);
        let (tx, ty) = l.at(i as f64, RADIUS + 16.0);
        let _ = writeln!(
            out,
            "<circle class=\"vertex\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" />"
        );
        let _ = writeln!(
            out,
            "<text x=\"{tx:.2}\" y=\"{ty:.2}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{i}</text>"
        );
    }
    let c = CANVAS / 2.0;
    let _ = writeln!(
        out,
        "<circle class=\"puncture\" cx=\"{c}\" cy=\"{c}\" r=\"4\" />"
    );
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_gamma_d, build_gamma_d_m};

    #[test]
    fn round_trip_gamma_d3() {
        let q = build_gamma_d(3).unwrap();
        let back = from_json_str(&to_json_string(&q).unwrap()).unwrap();
        assert_eq!(back, q);
        assert_eq!(back.metadata(), q.metadata());
    }

    #[test]
    fn gamma_d42_has_28_records() {
        let doc = export_json(&build_gamma_d_m(4, 2).unwrap());
        assert_eq!(doc.vertices.len(), 28);
        assert!(doc.vertices.iter().enumerate().all(|(i, r)| r.id == i));
        assert!(doc.vertices.iter().any(|r| r.row == "0bar"));
    }

    #[test]
    fn missing_id_is_named() {
        let mut doc = export_json(&build_gamma_d(3).unwrap());
        doc.arrows.push([0, 99]);
        let err = import_json(&doc).unwrap_err().to_string();
        assert!(err.contains("99"), "{err}");
    }

    #[test]
    fn unknown_major_rejected() {
        let mut doc = export_json(&build_gamma_d(3).unwrap());
        doc.schema_version = "2.0".into();
        assert!(import_json(&doc).is_err());
        doc.schema_version = "1.7".into();
        assert!(import_json(&doc).is_ok());
    }

    #[test]
    fn keys_are_sorted() {
        let s = to_json_string(&build_gamma_d(3).unwrap()).unwrap();
        let pos = |k: &str| s.find(&format!("\"{k}\"")).unwrap();
        let keys = [
            "arrows",
            "params",
            "period",
            "schema_version",
            "tau",
            "vertices",
        ];
        assert!(keys.windows(2).all(|w| pos(w[0]) < pos(w[1])));
    }

    #[test]
    fn dot_nodes_and_tau_flag() {
        let q = build_gamma_d(3).unwrap();
        let with = export_dot(&q, true);
        let without = export_dot(&q, false);
        assert_eq!(without.lines().filter(|l| l.contains("[label=")).count(), 9);
        assert!(!without.contains("dashed"));
        assert_eq!(with.matches("dashed").count(), 9);
        assert!(with.contains("v_0_0bar"));
        assert_eq!(export_dot(&q, true), with);
    }

    #[test]
    fn svg_counts_and_errors() {
        let all = export_arcs_svg(4, 2, None).unwrap();
        assert_eq!(all.matches("class=\"arc\"").count(), 28);
        let hl = [TaggedArc::plain(6, 2), TaggedArc::tagged(6, Tag::Minus)];
        let two = export_arcs_svg(4, 2, Some(&hl)).unwrap();
        assert_eq!(two.matches("class=\"arc\"").count(), 2);
        assert_eq!(two.matches("class=\"tag\"").count(), 1);
        let err = export_arcs_svg(4, 2, Some(&[TaggedArc::plain(1, 3)])).unwrap_err();
        assert!(err.to_string().contains("D[1,3]"));
    }
}
