//! Sectional and restricted sectional paths, and the (restricted) m-th power
//! of a translation quiver.

use std::fmt;

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::quiver::TranslationQuiver;

/// A directed path `x_0 -> x_1 -> ... -> x_len`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPath {
    vertices: Vec<VertexLabel>,
}

impl QPath {
    pub fn new(vertices: Vec<VertexLabel>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::NotAPath("a path has at least one vertex".into()));
        }
        Ok(QPath { vertices })
    }

    /// Number of arrows.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn start(&self) -> VertexLabel {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexLabel {
        *self.vertices.last().unwrap()
    }
}

impl fmt::Display for QPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn check_path(q: &TranslationQuiver, p: &QPath) -> Result<()> {
    if let Some(&v) = p.vertices.iter().find(|&&v| !q.contains(v)) {
        return Err(Error::NotAVertex(v));
    }
    if let Some(w) = p.vertices.windows(2).find(|w| !q.has_arrow(w[0], w[1])) {
        return Err(Error::NotAPath(format!(
            "no arrow {} -> {} in {p}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// `tau(x_{i+1}) != x_{i-1}` at the interior index where `next = x_{i+1}`.
/// Vacuous where the translation is undefined.
fn sectional_at(q: &TranslationQuiver, prev: VertexLabel, next: VertexLabel) -> bool {
    q.tau(next) != Some(prev)
}

/// True when `prev -> (row 1) -> next` crosses the fork, going from one fork
/// row up and back down into the *other* fork row one step further on.
///
/// "The other fork row one step further on" is read through the translation:
/// `next` is forbidden when `tau(next)` is the bar of `prev`. Away from the
/// seam this is the literal column test `prev = (r-1, 0bar)`, `next = (r, 0)`;
/// across the seam of an odd-rank quiver the translation swaps the fork rows,
/// and the forbidden pattern swaps with it.
fn crosses_fork(q: &TranslationQuiver, prev: VertexLabel, next: VertexLabel) -> bool {
    if !prev.row.is_fork() || !next.row.is_fork() {
        return false;
    }
    match q.tau(next) {
        Some(t) => t == prev.bar(),
        None => next.row == prev.row.bar() && next.col == (prev.col + 1) % q.period(),
    }
}

/// Whether a path in `q` is sectional. Paths of length at most one always are.
pub fn is_sectional(q: &TranslationQuiver, p: &QPath) -> Result<bool> {
    check_path(q, p)?;
    Ok(p.vertices.windows(3).all(|w| sectional_at(q, w[0], w[2])))
}

/// Whether a path avoids the fork-crossing pattern. Defined on every path, not
/// only sectional ones; compose with [`is_sectional`].
pub fn is_restricted(q: &TranslationQuiver, p: &QPath) -> Result<bool> {
    check_path(q, p)?;
    Ok(!p.vertices.windows(3).any(|w| crosses_fork(q, w[0], w[2])))
}

/// All (restricted) sectional paths of length `m` starting at `v`, in
/// lexicographic order of their vertex sequences.
pub fn enumerate_sectional_paths(
    q: &TranslationQuiver,
    v: VertexLabel,
    m: usize,
    restricted: bool,
) -> Result<Vec<QPath>> {
    if !q.contains(v) {
        return Err(Error::NotAVertex(v));
    }
    let mut out = Vec::new();
    let mut stack = vec![v];
    extend(q, m, restricted, &mut stack, &mut out);
    Ok(out)
}

fn extend(
    q: &TranslationQuiver,
    m: usize,
    restricted: bool,
    stack: &mut Vec<VertexLabel>,
    out: &mut Vec<QPath>,
) {
    if stack.len() == m + 1 {
        out.push(QPath {
            vertices: stack.clone(),
        });
        return;
    }
    let last = *stack.last().unwrap();
    let prev = stack.len().checked_sub(2).map(|i| stack[i]);
    for &next in q.successors(last) {
        if let Some(prev) = prev {
            if !sectional_at(q, prev, next) || (restricted && crosses_fork(q, prev, next)) {
                continue;
            }
        }
        stack.push(next);
        extend(q, m, restricted, stack, out);
        stack.pop();
    }
}

/// The m-th power of `q` (or its restricted variant): same vertices, one arrow
/// `x -> y` for each pair joined by at least one (restricted) sectional path of
/// length `m`, translation `tau^m`.
pub fn power(q: &TranslationQuiver, m: usize, restricted: bool) -> Result<TranslationQuiver> {
    if m < 1 {
        return Err(Error::Parameter(format!("power needs m >= 1, got {m}")));
    }
    let mut arrows = Vec::new();
    for v in q.vertices() {
        for p in enumerate_sectional_paths(q, v, m, restricted)? {
            arrows.push((p.start(), p.end()));
        }
    }
    let tau = q
        .vertices()
        .filter_map(|v| q.translate(v, m as i64).ok().map(|t| (v, t)));
    let kind = if restricted {
        "restricted power"
    } else {
        "power"
    };
    TranslationQuiver::new(
        q.period(),
        q.vertices(),
        arrows,
        tau,
        q.metadata().derived(format!("{kind} m={m}")),
    )
}
