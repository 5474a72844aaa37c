//! The underlying 2-complex of a translation quiver and its surface type.
//!
//! One triangle `{tau x, y, x}` per arrow `y -> x` with `tau x` defined. The
//! 1-cells are the arrows and one translation edge `tau x -> x` per vertex
//! with `tau x` defined. Cells are indexed, not identified by their vertex
//! sets: two translation edges joining the same pair of vertices (as happens
//! when `tau` has order two on an orbit) stay distinct, so this is a
//! Δ-complex rather than a simplicial complex.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::quiver::{validate, TranslationQuiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Arrow,
    Translation,
}

/// Oriented 1-cell `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub kind: EdgeKind,
    pub tail: VertexLabel,
    pub head: VertexLabel,
}

/// The 2-cell of the arrow `middle -> top`, with corners `tau(top)`,
/// `middle`, `top`. `edges` are the indices of `tau(top) -> middle`,
/// `middle -> top` and `tau(top) -> top`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triangle {
    pub corners: [VertexLabel; 3],
    pub edges: [usize; 3],
}

#[derive(Debug, Clone)]
pub struct MeshComplex {
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
}

impl MeshComplex {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// `(V, E, F)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.triangles.len())
    }
}

pub fn mesh_complex(q: &TranslationQuiver) -> Result<MeshComplex> {
    let report = validate(q);
    if !report.is_translation_quiver {
        return Err(Error::NotTranslationQuiver(format!(
            "mesh condition fails at {}",
            report.mesh_offenders[0]
        )));
    }
    let vertices: Vec<_> = q.vertices().collect();
    let mut edges: Vec<Edge> = q
        .arrows()
        .map(|(tail, head)| Edge {
            kind: EdgeKind::Arrow,
            tail,
            head,
        })
        .collect();
    edges.extend(q.tau_map().iter().map(|(&x, &tx)| Edge {
        kind: EdgeKind::Translation,
        tail: tx,
        head: x,
    }));
    edges.sort();
    let index: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let arrow = |tail, head| {
        index[&Edge {
            kind: EdgeKind::Arrow,
            tail,
            head,
        }]
    };

    let mut triangles = Vec::new();
    for (y, x) in q.arrows() {
        let Some(tx) = q.tau(x) else { continue };
        // mesh condition guarantees tau(x) -> y is an arrow
        triangles.push(Triangle {
            corners: [tx, y, x],
            edges: [
                arrow(tx, y),
                arrow(y, x),
                index[&Edge {
                    kind: EdgeKind::Translation,
                    tail: tx,
                    head: x,
                }],
            ],
        });
    }
    Ok(MeshComplex {
        vertices,
        edges,
        triangles,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceClass {
    Sphere,
    Torus,
    OrientableGenus(i64),
    NonOrientableGenus(i64),
    Disc,
    Annulus,
    Moebius,
    OtherWithBoundary,
    /// A surface with more than one connected piece.
    Disconnected(usize),
    NotASurface,
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceClass::Sphere => f.write_str("sphere"),
            SurfaceClass::Torus => f.write_str("torus"),
            SurfaceClass::OrientableGenus(g) => write!(f, "orientable genus {g}"),
            SurfaceClass::NonOrientableGenus(k) => write!(f, "non-orientable genus {k}"),
            SurfaceClass::Disc => f.write_str("disc"),
            SurfaceClass::Annulus => f.write_str("annulus"),
            SurfaceClass::Moebius => f.write_str("moebius band"),
            SurfaceClass::OtherWithBoundary => f.write_str("other surface with boundary"),
            SurfaceClass::Disconnected(k) => write!(f, "disconnected surface ({k} pieces)"),
            SurfaceClass::NotASurface => f.write_str("not a surface"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceReport {
    pub is_surface: bool,
    pub euler_characteristic: i64,
    /// `None` when the complex is not a surface.
    pub orientable: Option<bool>,
    pub boundary_components: usize,
    pub classification: SurfaceClass,
    /// First vertex or edge that stops the complex being a surface.
    pub offence: Option<String>,
}

/// Number of triangles on each edge.
fn edge_valence(c: &MeshComplex) -> Vec<usize> {
    let mut val = vec![0; c.edges.len()];
    for t in &c.triangles {
        for &e in &t.edges {
            val[e] += 1;
        }
    }
    val
}

/// Checks that the link of `v` is a single cycle or a single path. Nodes of
/// the link are the edges at `v`; each triangle corner at `v` joins two.
fn link_is_cycle_or_path(c: &MeshComplex, v: VertexLabel) -> bool {
    let at_v: Vec<usize> = (0..c.edges.len())
        .filter(|&e| c.edges[e].tail == v || c.edges[e].head == v)
        .collect();
    if at_v.is_empty() {
        return false;
    }
    let pos: BTreeMap<usize, usize> = at_v.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); at_v.len()];
    for t in &c.triangles {
        let touching: Vec<usize> = (0..3).filter(|&i| t.corners[i] == v).collect();
        if touching.len() != 1 {
            if !touching.is_empty() {
                return false;
            }
            continue;
        }
        // edges of the triangle incident to its corner at v
        let ends: Vec<usize> = t
            .edges
            .iter()
            .copied()
            .filter(|e| pos.contains_key(e))
            .collect();
        if ends.len() != 2 {
            return false;
        }
        let (a, b) = (pos[&ends[0]], pos[&ends[1]]);
        adj[a].push(b);
        adj[b].push(a);
    }
    if adj.iter().any(|n| n.is_empty() || n.len() > 2) {
        return false;
    }
    // connected?
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    let ends = adj.iter().filter(|n| n.len() == 1).count();
    ends == 0 || ends == 2
}

/// Direction in which a triangle, read `corner0 -> corner1 -> corner2`,
/// traverses its `slot`-th edge relative to the edge's own orientation.
fn traversal(slot: usize) -> i8 {
    // slots: tau(x)->y (forward), y->x (forward), tau(x)->x (read x->tau(x))
    if slot == 2 {
        -1
    } else {
        1
    }
}

/// Coherent orientation signs for the triangles reachable from `seed`, or
/// `None` when two triangles disagree along a shared edge. Unreached
/// triangles get sign 0.
pub fn orient_from(c: &MeshComplex, seed: usize) -> Option<Vec<i8>> {
    let mut on_edge: Vec<Vec<(usize, usize)>> = vec![Vec::new(); c.edges.len()];
    for (ti, t) in c.triangles.iter().enumerate() {
        for (slot, &e) in t.edges.iter().enumerate() {
            on_edge[e].push((ti, slot));
        }
    }
    let mut sign = vec![0i8; c.triangles.len()];
    if c.triangles.is_empty() {
        return Some(sign);
    }
    sign[seed] = 1;
    let mut queue = VecDeque::from([seed]);
    while let Some(ti) = queue.pop_front() {
        let t = &c.triangles[ti];
        for (slot, &e) in t.edges.iter().enumerate() {
            let induced = sign[ti] * traversal(slot);
            for &(other, oslot) in &on_edge[e] {
                if other == ti && oslot == slot {
                    continue;
                }
                // neighbour must traverse the shared edge the other way
                let want = -induced * traversal(oslot);
                match sign[other] {
                    0 => {
                        sign[other] = want;
                        queue.push_back(other);
                    }
                    s if s != want => return None,
                    _ => {}
                }
            }
        }
    }
    Some(sign)
}

fn count_pieces(nodes: usize, links: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut pieces = nodes;
    for (a, b) in links {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            pieces -= 1;
        }
    }
    pieces
}

/// Decides whether the complex is a surface (boundary allowed) and, if so,
/// its orientability, boundary count and type.
pub fn classify_surface(c: &MeshComplex) -> SurfaceReport {
    let chi = c.euler_characteristic();
    let not_surface = |offence: String| SurfaceReport {
        is_surface: false,
        euler_characteristic: chi,
        orientable: None,
        boundary_components: 0,
        classification: SurfaceClass::NotASurface,
        offence: Some(offence),
    };

    let valence = edge_valence(c);
    if let Some(e) = valence.iter().position(|&k| k > 2 || k == 0) {
        let edge = c.edges[e];
        return not_surface(format!(
            "edge {} -> {} lies on {} triangles",
            edge.tail, edge.head, valence[e]
        ));
    }
    if let Some(&v) = c.vertices.iter().find(|&&v| !link_is_cycle_or_path(c, v)) {
        return not_surface(format!("link of {v} is not a single cycle or path"));
    }

    let vindex: BTreeMap<VertexLabel, usize> = c
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let boundary: Vec<&Edge> = (0..c.edges.len())
        .filter(|&e| valence[e] == 1)
        .map(|e| &c.edges[e])
        .collect();
    let touched: std::collections::BTreeSet<usize> = boundary
        .iter()
        .flat_map(|e| [vindex[&e.tail], vindex[&e.head]])
        .collect();
    let boundary_components = count_pieces(
        c.vertices.len(),
        boundary.iter().map(|e| (vindex[&e.tail], vindex[&e.head])),
    ) - (c.vertices.len() - touched.len());

    let pieces = count_pieces(
        c.vertices.len(),
        c.edges.iter().map(|e| (vindex[&e.tail], vindex[&e.head])),
    );

    let mut orientable = true;
    let mut sign = vec![0i8; c.triangles.len()];
    for seed in 0..c.triangles.len() {
        if sign[seed] != 0 {
            continue;
        }
        match orient_from(c, seed) {
            Some(s) => {
                for (i, v) in s.into_iter().enumerate() {
                    if v != 0 {
                        sign[i] = v;
                    }
                }
            }
            None => {
                orientable = false;
                break;
            }
        }
    }

    let classification = if pieces > 1 {
        SurfaceClass::Disconnected(pieces)
    } else {
        match (boundary_components, orientable) {
            (0, true) if chi == 2 => SurfaceClass::Sphere,
            (0, true) if chi == 0 => SurfaceClass::Torus,
            (0, true) => SurfaceClass::OrientableGenus((2 - chi) / 2),
            (0, false) => SurfaceClass::NonOrientableGenus(2 - chi),
            (1, true) if chi == 1 => SurfaceClass::Disc,
            (2, true) if chi == 0 => SurfaceClass::Annulus,
            (1, false) if chi == 0 => SurfaceClass::Moebius,
            _ => SurfaceClass::OtherWithBoundary,
        }
    };
    SurfaceReport {
        is_surface: true,
        euler_characteristic: chi,
        orientable: Some(orientable),
        boundary_components,
        classification,
        offence: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::connected_components;
    use crate::families::{build_gamma_d, build_za_quotient};
    use crate::paths::power;

    fn torus_component() -> TranslationQuiver {
        let sq = power(&build_gamma_d(4).unwrap(), 2, false).unwrap();
        connected_components(&sq)
            .into_iter()
            .find(|c| c.len() == 12)
            .unwrap()
    }

    #[test]
    fn toral_component() {
        let c = mesh_complex(&torus_component()).unwrap();
        assert_eq!(c.counts(), (12, 36, 24));
        let r = classify_surface(&c);
        assert!(r.is_surface);
        assert_eq!(r.euler_characteristic, 0);
        assert_eq!(r.orientable, Some(true));
        assert_eq!(r.boundary_components, 0);
        assert_eq!(r.classification, SurfaceClass::Torus);
    }

    #[test]
    fn tube() {
        let c = mesh_complex(&build_za_quotient(2, 5).unwrap()).unwrap();
        assert_eq!(c.counts(), (10, 20, 10));
        let r = classify_surface(&c);
        assert_eq!(r.euler_characteristic, 0);
        assert_eq!(r.orientable, Some(true));
        assert_eq!(r.boundary_components, 2);
        assert_eq!(r.classification, SurfaceClass::Annulus);
    }

    #[test]
    fn single_row_has_no_triangles() {
        let c = mesh_complex(&build_za_quotient(1, 5).unwrap()).unwrap();
        assert_eq!(c.counts(), (5, 5, 0));
        assert!(!classify_surface(&c).is_surface);
    }

    #[test]
    fn fork_branching_is_not_a_surface() {
        let c = mesh_complex(&build_gamma_d(4).unwrap()).unwrap();
        let r = classify_surface(&c);
        assert!(!r.is_surface);
        assert_eq!(r.classification, SurfaceClass::NotASurface);
        assert!(r.offence.is_some());
    }

    #[test]
    fn every_arrow_edge_lies_on_two_triangles_in_stable_quivers() {
        for q in [
            build_gamma_d(5).unwrap(),
            build_za_quotient(3, 4).unwrap(),
            torus_component(),
        ] {
            let c = mesh_complex(&q).unwrap();
            let val = edge_valence(&c);
            for (e, edge) in c.edges.iter().enumerate() {
                if edge.kind == EdgeKind::Arrow {
                    assert_eq!(val[e], 2, "{edge:?}");
                }
            }
        }
    }

    #[test]
    fn orientation_does_not_depend_on_seed() {
        let c = mesh_complex(&torus_component()).unwrap();
        for seed in 0..c.triangles.len() {
            assert!(orient_from(&c, seed).is_some());
        }
        let c = mesh_complex(&build_za_quotient(4, 3).unwrap()).unwrap();
        for seed in 0..c.triangles.len() {
            assert!(orient_from(&c, seed).is_some());
        }
    }

    #[test]
    fn invalid_quiver_rejected() {
        let q = build_gamma_d(4).unwrap();
        let (a, b) = q.arrows().next().unwrap();
        assert!(mesh_complex(&q.without_arrow(a, b).unwrap()).is_err());
    }
}
