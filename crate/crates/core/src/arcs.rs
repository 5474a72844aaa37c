//! The punctured-polygon model: boundary paths, tagged m-arcs, m-moves, the
//! rotation `tau_m`, the quiver of m-arcs, and its identification `rho` with
//! the D-component of the restricted power.
//!
//! Polygon vertices are labelled `1..=N` clockwise. An arc `D_ij` with
//! `i != j` is the arc homotopic to the clockwise boundary path `B_ij`; the
//! tagged arcs `D_ii^+` and `D_ii^-` are attached at a single vertex.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::m_cluster_period;
use crate::iso::VertexMapping;
use crate::label::{RowLabel, VertexLabel};
use crate::quiver::{Provenance, TranslationQuiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PuncturedPolygon {
    sides: usize,
}

impl PuncturedPolygon {
    pub fn new(sides: usize) -> Result<Self> {
        if sides < 3 {
            return Err(Error::Parameter(format!(
                "a polygon needs at least 3 vertices, got {sides}"
            )));
        }
        Ok(PuncturedPolygon { sides })
    }

    /// The polygon with `nm - m + 1` vertices.
    pub fn for_m_cluster(n: usize, m: usize) -> Result<Self> {
        if n < 3 || m < 1 {
            return Err(Error::Parameter(format!(
                "need n >= 3 and m >= 1, got n={n}, m={m}"
            )));
        }
        Self::new(m_cluster_period(n, m))
    }

    pub fn sides(&self) -> usize {
        self.sides
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if (1..=self.sides).contains(&i) {
            Ok(())
        } else {
            Err(Error::Parameter(format!(
                "vertex {i} outside 1..={}",
                self.sides
            )))
        }
    }

    /// Reduces any integer to a label in `1..=N`.
    pub fn wrap(&self, i: i64) -> usize {
        ((i - 1).rem_euclid(self.sides as i64) + 1) as usize
    }

    /// Number of clockwise steps from `i` to `j`, in `0..N`.
    pub fn steps(&self, i: usize, j: usize) -> usize {
        (j + self.sides - i) % self.sides
    }

    pub fn check_arc(&self, a: &TaggedArc) -> Result<()> {
        self.check_vertex(a.from)?;
        self.check_vertex(a.to)?;
        let legal = match a.tag {
            None => a.from != a.to && self.steps(a.from, a.to) != 1,
            Some(_) => a.from == a.to,
        };
        if legal {
            Ok(())
        } else {
            Err(Error::IllegalArc(a.to_string()))
        }
    }
}

/// A clockwise boundary path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundarySpec {
    /// `B_ij`, `i != j`.
    Full(usize, usize),
    /// `B_ii`, once around.
    Whole(usize),
    /// `B_ii^•`, the trivial path.
    Trivial(usize),
}

/// Number of vertices a boundary path runs through.
pub fn boundary_length(p: &PuncturedPolygon, b: BoundarySpec) -> Result<usize> {
    match b {
        BoundarySpec::Full(i, j) => {
            p.check_vertex(i)?;
            p.check_vertex(j)?;
            if i == j {
                return Err(Error::Parameter(format!(
                    "B_{i}{j} needs distinct endpoints"
                )));
            }
            Ok(p.steps(i, j) + 1)
        }
        BoundarySpec::Whole(i) => p.check_vertex(i).map(|_| p.sides + 1),
        BoundarySpec::Trivial(i) => p.check_vertex(i).map(|_| 1),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Plus,
    Minus,
}

impl Tag {
    pub fn flip(self) -> Tag {
        match self {
            Tag::Plus => Tag::Minus,
            Tag::Minus => Tag::Plus,
        }
    }
}

/// `D_ij` (untagged, `i != j`) or `D_ii^±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaggedArc {
    pub from: usize,
    pub to: usize,
    pub tag: Option<Tag>,
}

impl TaggedArc {
    pub fn plain(from: usize, to: usize) -> Self {
        TaggedArc {
            from,
            to,
            tag: None,
        }
    }

    pub fn tagged(at: usize, tag: Tag) -> Self {
        TaggedArc {
            from: at,
            to: at,
            tag: Some(tag),
        }
    }

    pub fn is_tagged(&self) -> bool {
        self.tag.is_some()
    }
}

impl fmt::Display for TaggedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            None => write!(f, "D[{},{}]", self.from, self.to),
            Some(Tag::Plus) => write!(f, "D[{},{}]+", self.from, self.to),
            Some(Tag::Minus) => write!(f, "D[{},{}]-", self.from, self.to),
        }
    }
}

impl FromStr for TaggedArc {
    type Err = Error;

    /// Accepts `D[6,2]`, `6,2`, `D[6,6]+`, `6,6-`, `6+`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad arc {s:?}; expected e.g. 6,2 or 6+ or D[6,6]-"));
        let t = s.trim();
        let (body, tag) = match t.chars().last() {
            Some('+') => (&t[..t.len() - 1], Some(Tag::Plus)),
            Some('-') => (&t[..t.len() - 1], Some(Tag::Minus)),
            _ => (t, None),
        };
        let body = body
            .strip_prefix("D[")
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body);
        let ends: Vec<usize> = body
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (ends.as_slice(), tag) {
            ([i], Some(tag)) => Ok(TaggedArc::tagged(*i, tag)),
            ([i, j], Some(tag)) if i == j => Ok(TaggedArc::tagged(*i, tag)),
            ([i, j], None) if i != j => Ok(TaggedArc::plain(*i, *j)),
            _ => Err(bad()),
        }
    }
}

/// Whether `a` is a (tagged) m-arc of `p`.
///
/// For `i != j`: `D_ij` with `B_ij` bounds a `(km+2)`-gon and with `B_ji` an
/// `(lm+1)`-gon, `k, l >= 1`. For `D_ii^±`: with `B_ii` it bounds a degenerate
/// polygon with `N+1` sides, which must be a `(km+2)`-gon, i.e. `m | N-1`.
pub fn is_m_arc(p: &PuncturedPolygon, m: usize, a: &TaggedArc) -> Result<bool> {
    p.check_arc(a)?;
    if m < 1 {
        return Err(Error::Parameter("m must be at least 1".into()));
    }
    let of_form =
        |count: usize, offset: usize| count > offset && (count - offset).is_multiple_of(m);
    if a.is_tagged() {
        let sides = boundary_length(p, BoundarySpec::Whole(a.from))?;
        return Ok(of_form(sides, 2));
    }
    let inner = boundary_length(p, BoundarySpec::Full(a.from, a.to))?;
    let outer = boundary_length(p, BoundarySpec::Full(a.to, a.from))?;
    Ok(of_form(inner, 2) && of_form(outer, 1))
}

fn require_m_arc(p: &PuncturedPolygon, m: usize, a: &TaggedArc) -> Result<()> {
    if is_m_arc(p, m, a)? {
        Ok(())
    } else {
        Err(Error::NotAnMArc {
            arc: a.to_string(),
            m,
        })
    }
}

/// All tagged m-arcs of the punctured `(nm-m+1)`-gon: `D_{i,i+1+km}` for
/// `k = 1..=n-2`, then `D_ii^+` and `D_ii^-`, each family by starting vertex.
pub fn enumerate_m_arcs(n: usize, m: usize) -> Result<Vec<TaggedArc>> {
    let p = PuncturedPolygon::for_m_cluster(n, m)?;
    let mut arcs = Vec::with_capacity(n * p.sides());
    for i in 1..=p.sides() {
        for k in 1..=n - 2 {
            arcs.push(TaggedArc::plain(i, p.wrap((i + 1 + k * m) as i64)));
        }
        arcs.push(TaggedArc::tagged(i, Tag::Plus));
        arcs.push(TaggedArc::tagged(i, Tag::Minus));
    }
    arcs.sort();
    Ok(arcs)
}

/// Targets of the m-moves out of `a`, restricted to m-arcs.
///
/// The four moves: `D_ij -> D_ik` with `|B_jk| = m+1`; `D_ij -> D_kj` with
/// `|B_ik| = m+1`; `D_ij -> D_ii^±` with `|B_ji| = m+1`; and
/// `D_ii^± -> D_ji` with `|B_ij| = m+1`. The first two need `i, j, k`
/// distinct and in the clockwise order that keeps the enclosed polygon away
/// from the puncture.
pub fn m_moves(n: usize, m: usize, a: &TaggedArc) -> Result<Vec<TaggedArc>> {
    let p = PuncturedPolygon::for_m_cluster(n, m)?;
    require_m_arc(&p, m, a)?;
    let big = p.sides();
    let side_ok = m + 1 < big - 1;
    let mut out = Vec::new();
    if a.is_tagged() {
        let j = p.wrap((a.from + m) as i64);
        if j != a.from {
            out.push(TaggedArc::plain(j, a.from));
        }
    } else {
        let (i, j) = (a.from, a.to);
        // D_ij, B_jk, D_ik with i -> j -> k clockwise
        let k = p.wrap((j + m) as i64);
        if side_ok && k != i && p.steps(i, j) < p.steps(i, k) {
            out.push(TaggedArc::plain(i, k));
        }
        // D_ij, B_ik, D_kj with i -> k -> j clockwise
        let k = p.wrap((i + m) as i64);
        if side_ok && k != j && p.steps(i, k) < p.steps(i, j) {
            out.push(TaggedArc::plain(k, j));
        }
        if p.steps(j, i) + 1 == m + 1 {
            out.push(TaggedArc::tagged(i, Tag::Plus));
            out.push(TaggedArc::tagged(i, Tag::Minus));
        }
    }
    let mut moves = Vec::new();
    for t in out {
        if p.check_arc(&t).is_ok() && is_m_arc(&p, m, &t)? {
            moves.push(t);
        }
    }
    moves.sort();
    moves.dedup();
    Ok(moves)
}

/// Anticlockwise rotation by `m` steps; tagged arcs also change tag when `m`
/// is odd.
pub fn tau_m_arc(n: usize, m: usize, a: &TaggedArc) -> Result<TaggedArc> {
    let p = PuncturedPolygon::for_m_cluster(n, m)?;
    require_m_arc(&p, m, a)?;
    let back = |i: usize| p.wrap(i as i64 - m as i64);
    Ok(match a.tag {
        None => TaggedArc::plain(back(a.from), back(a.to)),
        Some(tag) => TaggedArc::tagged(back(a.from), if m % 2 == 1 { tag.flip() } else { tag }),
    })
}

/// Vertex label used for an arc inside the arc quiver: column `from - 1`;
/// row `to` for untagged arcs, `0` for `+` and `0bar` for `-`.
pub fn arc_label(p: &PuncturedPolygon, a: &TaggedArc) -> VertexLabel {
    let row = match a.tag {
        None => RowLabel::Numeric(a.to),
        Some(Tag::Plus) => RowLabel::ZERO,
        Some(Tag::Minus) => RowLabel::ZeroBar,
    };
    VertexLabel::new(a.from as i64 - 1, row, p.sides())
}

/// Inverse of [`arc_label`].
pub fn label_arc(p: &PuncturedPolygon, v: VertexLabel) -> Result<TaggedArc> {
    let from = v.col + 1;
    let a = match v.row {
        RowLabel::Numeric(0) => TaggedArc::tagged(from, Tag::Plus),
        RowLabel::ZeroBar => TaggedArc::tagged(from, Tag::Minus),
        RowLabel::Numeric(to) => TaggedArc::plain(from, to),
    };
    p.check_arc(&a)?;
    Ok(a)
}

/// The quiver whose vertices are the tagged m-arcs (labelled by
/// [`arc_label`]), with arrows the m-moves and translation [`tau_m_arc`].
pub fn build_gamma_odot(n: usize, m: usize) -> Result<TranslationQuiver> {
    let p = PuncturedPolygon::for_m_cluster(n, m)?;
    let arcs = enumerate_m_arcs(n, m)?;
    let mut arrows = Vec::new();
    let mut tau = Vec::new();
    for a in &arcs {
        for b in m_moves(n, m, a)? {
            arrows.push((arc_label(&p, a), arc_label(&p, &b)));
        }
        tau.push((arc_label(&p, a), arc_label(&p, &tau_m_arc(n, m, a)?)));
    }
    let meta = Provenance {
        n: Some(n),
        m: Some(m),
        ..Provenance::family("gamma_odot")
    };
    TranslationQuiver::new(
        p.sides(),
        arcs.iter().map(|a| arc_label(&p, a)),
        arrows,
        tau,
        meta,
    )
}

fn inverse_mod(a: usize, modulus: usize) -> Option<usize> {
    let (mut r0, mut r1) = (modulus as i64, (a % modulus) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(modulus as i64) as usize)
}

/// The vertex of `Gamma(D_N, 1)` corresponding to the m-arc `a`.
///
/// With `i = lm + 1 (mod N)`: `D_{i,i+1+km} |-> (lm, (n-1-k)m)`, and
/// `D_ii^+ |-> (lm, 0)` for odd `i`, `(lm, 0bar)` for even `i`, with `D_ii^-`
/// on the other fork row.
pub fn rho(n: usize, m: usize, a: &TaggedArc) -> Result<VertexLabel> {
    let p = PuncturedPolygon::for_m_cluster(n, m)?;
    require_m_arc(&p, m, a)?;
    let big = p.sides();
    // N = (n-1)m + 1, so m is invertible mod N
    let m_inv = inverse_mod(m, big).expect("m is a unit modulo nm-m+1");
    let l = ((a.from - 1) * m_inv) % big;
    let col = (l * m) as i64;
    let row = match a.tag {
        None => {
            let k = (p.steps(a.from, a.to) - 1) / m;
            RowLabel::Numeric((n - 1 - k) * m)
        }
        Some(tag) => {
            let odd = a.from % 2 == 1;
            if odd == (tag == Tag::Plus) {
                RowLabel::ZERO
            } else {
                RowLabel::ZeroBar
            }
        }
    };
    Ok(VertexLabel::new(col, row, big))
}

/// [`rho`] as a mapping from the labels of [`build_gamma_odot`].
pub fn rho_mapping(n: usize, m: usize) -> Result<VertexMapping> {
    let p = PuncturedPolygon::for_m_cluster(n, m)?;
    let pairs = enumerate_m_arcs(n, m)?
        .iter()
        .map(|a| Ok((arc_label(&p, a), rho(n, m, a)?)))
        .collect::<Result<Vec<_>>>()?;
    VertexMapping::from_pairs(pairs)
}
