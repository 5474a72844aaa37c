//! Finite translation quivers with vertices in `Z_period x rows`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::VertexLabel;

pub type Arrow = (VertexLabel, VertexLabel);

/// Where a quiver came from. Carried through exports so files are
/// self-describing; ignored by equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub derivation: Vec<String>,
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
}

impl Provenance {
    pub fn family(family: &str) -> Self {
        Provenance {
            family: family.to_string(),
            ..Default::default()
        }
    }

    pub fn derived(&self, step: impl Into<String>) -> Self {
        let mut p = self.clone();
        p.derivation.push(step.into());
        p
    }
}

/// A quiver together with a partial injective translation.
///
/// Construction only checks that arrows and the translation stay inside the
/// vertex set and that the translation is injective; the mesh condition is
/// checked by [`validate`]. Immutable once built.
#[derive(Clone)]
pub struct TranslationQuiver {
    period: usize,
    vertices: BTreeSet<VertexLabel>,
    arrows: BTreeSet<Arrow>,
    tau: BTreeMap<VertexLabel, VertexLabel>,
    tau_inv: BTreeMap<VertexLabel, VertexLabel>,
    succ: BTreeMap<VertexLabel, Vec<VertexLabel>>,
    pred: BTreeMap<VertexLabel, Vec<VertexLabel>>,
    meta: Provenance,
}

impl TranslationQuiver {
    pub fn new(
        period: usize,
        vertices: impl IntoIterator<Item = VertexLabel>,
        arrows: impl IntoIterator<Item = Arrow>,
        tau: impl IntoIterator<Item = (VertexLabel, VertexLabel)>,
        meta: Provenance,
    ) -> Result<Self> {
        if period == 0 {
            return Err(Error::Parameter("period must be positive".into()));
        }
        let vertices: BTreeSet<_> = vertices.into_iter().collect();
        if let Some(v) = vertices.iter().find(|v| v.col >= period) {
            return Err(Error::Malformed(format!(
                "vertex {v} has column outside 0..{period}"
            )));
        }
        let arrows: BTreeSet<_> = arrows.into_iter().collect();
        let mut succ: BTreeMap<_, Vec<_>> = vertices.iter().map(|&v| (v, Vec::new())).collect();
        let mut pred = succ.clone();
        for &(a, b) in &arrows {
            for end in [a, b] {
                if !vertices.contains(&end) {
                    return Err(Error::Malformed(format!(
                        "arrow {a} -> {b} leaves the vertex set"
                    )));
                }
            }
            succ.get_mut(&a).unwrap().push(b);
            pred.get_mut(&b).unwrap().push(a);
        }
        for list in pred.values_mut() {
            list.sort();
        }

        let mut tau_map = BTreeMap::new();
        let mut tau_inv = BTreeMap::new();
        for (x, y) in tau {
            if !vertices.contains(&x) || !vertices.contains(&y) {
                return Err(Error::Malformed(format!(
                    "translation {x} |-> {y} leaves the vertex set"
                )));
            }
            if tau_map.insert(x, y).is_some_and(|old| old != y) {
                return Err(Error::Malformed(format!(
                    "translation defined twice at {x}"
                )));
            }
            if let Some(other) = tau_inv.insert(y, x) {
                if other != x {
                    return Err(Error::Malformed(format!(
                        "translation is not injective: {other} and {x} both map to {y}"
                    )));
                }
            }
        }

        Ok(TranslationQuiver {
            period,
            vertices,
            arrows,
            tau: tau_map,
            tau_inv,
            succ,
            pred,
            meta,
        })
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexLabel> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexLabel> {
        &self.vertices
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows.iter().copied()
    }

    pub fn arrow_set(&self) -> &BTreeSet<Arrow> {
        &self.arrows
    }

    pub fn tau_map(&self) -> &BTreeMap<VertexLabel, VertexLabel> {
        &self.tau
    }

    pub fn contains(&self, v: VertexLabel) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_arrow(&self, from: VertexLabel, to: VertexLabel) -> bool {
        self.arrows.contains(&(from, to))
    }

    /// Heads of arrows leaving `v`, sorted. Empty for foreign vertices.
    pub fn successors(&self, v: VertexLabel) -> &[VertexLabel] {
        self.succ.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Tails of arrows entering `v`, sorted.
    pub fn predecessors(&self, v: VertexLabel) -> &[VertexLabel] {
        self.pred.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn tau(&self, v: VertexLabel) -> Option<VertexLabel> {
        self.tau.get(&v).copied()
    }

    pub fn tau_inv(&self, v: VertexLabel) -> Option<VertexLabel> {
        self.tau_inv.get(&v).copied()
    }

    /// Translation total and surjective.
    pub fn is_stable(&self) -> bool {
        self.tau.len() == self.vertices.len() && self.tau_inv.len() == self.vertices.len()
    }

    pub fn metadata(&self) -> &Provenance {
        &self.meta
    }

    pub fn with_metadata(mut self, meta: Provenance) -> Self {
        self.meta = meta;
        self
    }

    /// Copy of the quiver with one arrow removed.
    pub fn without_arrow(&self, from: VertexLabel, to: VertexLabel) -> Result<Self> {
        if !self.has_arrow(from, to) {
            return Err(Error::Parameter(format!("no arrow {from} -> {to}")));
        }
        TranslationQuiver::new(
            self.period,
            self.vertices.iter().copied(),
            self.arrows.iter().copied().filter(|&a| a != (from, to)),
            self.tau.iter().map(|(&a, &b)| (a, b)),
            self.meta.derived(format!("delete arrow {from} -> {to}")),
        )
    }

    /// `tau^k(v)`; negative `k` iterates the inverse.
    pub fn translate(&self, v: VertexLabel, k: i64) -> Result<VertexLabel> {
        if !self.contains(v) {
            return Err(Error::NotAVertex(v));
        }
        let step = if k >= 0 { &self.tau } else { &self.tau_inv };
        let mut cur = v;
        for _ in 0..k.unsigned_abs() {
            cur = *step.get(&cur).ok_or(Error::TauUndefined(cur))?;
        }
        Ok(cur)
    }

    /// Length of the translation orbit through `v` if it is a cycle.
    pub fn tau_orbit_len(&self, v: VertexLabel) -> Option<usize> {
        let mut cur = self.tau(v)?;
        let mut len = 1;
        while cur != v {
            cur = self.tau(cur)?;
            len += 1;
        }
        Some(len)
    }
}

impl PartialEq for TranslationQuiver {
    fn eq(&self, other: &Self) -> bool {
        self.period == other.period
            && self.vertices == other.vertices
            && self.arrows == other.arrows
            && self.tau == other.tau
    }
}

impl Eq for TranslationQuiver {}

impl fmt::Debug for TranslationQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TranslationQuiver")
            .field("family", &self.meta.family)
            .field("period", &self.period)
            .field("vertices", &self.vertices.len())
            .field("arrows", &self.arrows.len())
            .field("tau", &self.tau.len())
            .finish()
    }
}

/// Outcome of [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Mesh condition holds at every vertex where the translation is defined.
    pub is_translation_quiver: bool,
    /// Translation is total and bijective.
    pub is_stable: bool,
    /// Vertices `x` where arrows into `x` and arrows out of `tau x` disagree.
    pub mesh_offenders: Vec<VertexLabel>,
    /// Vertices where the translation or its inverse is undefined.
    pub unstable_vertices: Vec<VertexLabel>,
}

impl ValidationReport {
    pub fn is_stable_translation_quiver(&self) -> bool {
        self.is_translation_quiver && self.is_stable
    }
}

/// Checks the mesh condition and stability. Problems are reported, never
/// raised.
pub fn validate(q: &TranslationQuiver) -> ValidationReport {
    // Arrows are a set, so the mesh bijection y->x <-> tau(x)->y is equality
    // of predecessor and successor sets.
    let mesh_offenders: Vec<_> = q
        .tau
        .iter()
        .filter(|(&x, &tx)| q.predecessors(x) != sorted(q.successors(tx)).as_slice())
        .map(|(&x, _)| x)
        .collect();
    let unstable_vertices: Vec<_> = q
        .vertices()
        .filter(|&v| q.tau(v).is_none() || q.tau_inv(v).is_none())
        .collect();
    ValidationReport {
        is_translation_quiver: mesh_offenders.is_empty(),
        is_stable: unstable_vertices.is_empty(),
        mesh_offenders,
        unstable_vertices,
    }
}

fn sorted(vs: &[VertexLabel]) -> Vec<VertexLabel> {
    let mut v = vs.to_vec();
    v.sort();
    v
}
