//! Vertex mappings and translation-quiver isomorphism search.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::quiver::TranslationQuiver;

/// A map between vertex sets, kept sorted by source.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexMapping {
    pairs: BTreeMap<VertexLabel, VertexLabel>,
}

impl VertexMapping {
    /// Builds a mapping, rejecting repeated sources or targets.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexLabel, VertexLabel)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut targets = BTreeSet::new();
        for (s, t) in pairs {
            if map.insert(s, t).is_some() {
                return Err(Error::Parameter(format!("{s} mapped twice")));
            }
            if !targets.insert(t) {
                return Err(Error::Parameter(format!("{t} hit twice")));
            }
        }
        Ok(VertexMapping { pairs: map })
    }

    pub fn identity(vs: impl IntoIterator<Item = VertexLabel>) -> Self {
        VertexMapping {
            pairs: vs.into_iter().map(|v| (v, v)).collect(),
        }
    }

    pub fn get(&self, v: VertexLabel) -> Option<VertexLabel> {
        self.pairs.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexLabel, VertexLabel)> + '_ {
        self.pairs.iter().map(|(&a, &b)| (a, b))
    }

    pub fn domain(&self) -> BTreeSet<VertexLabel> {
        self.pairs.keys().copied().collect()
    }

    pub fn image(&self) -> BTreeSet<VertexLabel> {
        self.pairs.values().copied().collect()
    }

    pub fn inverse(&self) -> VertexMapping {
        VertexMapping {
            pairs: self.pairs.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    /// `then ∘ self`. Sources whose image `then` does not cover are dropped.
    pub fn then(&self, then: &VertexMapping) -> VertexMapping {
        VertexMapping {
            pairs: self
                .pairs
                .iter()
                .filter_map(|(&a, &b)| then.get(b).map(|c| (a, c)))
                .collect(),
        }
    }
}

impl fmt::Display for VertexMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        Ok(())
    }
}

/// Checks that `map` is an isomorphism of translation quivers `a -> b`:
/// a bijection on vertices carrying the arrow set onto the arrow set and
/// intertwining the translations (including where they are undefined).
/// Returns a description of the first failure.
pub fn check_isomorphism(
    a: &TranslationQuiver,
    b: &TranslationQuiver,
    map: &VertexMapping,
) -> std::result::Result<(), String> {
    if map.domain() != *a.vertex_set() {
        return Err("mapping domain is not the source vertex set".into());
    }
    let image = map.image();
    if image.len() != map.len() {
        return Err("mapping is not injective".into());
    }
    if image != *b.vertex_set() {
        return Err(format!(
            "mapping image is not the target vertex set ({} vs {} vertices)",
            image.len(),
            b.len()
        ));
    }
    if a.arrow_count() != b.arrow_count() {
        return Err(format!(
            "arrow counts differ ({} vs {})",
            a.arrow_count(),
            b.arrow_count()
        ));
    }
    for (x, y) in a.arrows() {
        let (fx, fy) = (map.get(x).unwrap(), map.get(y).unwrap());
        if !b.has_arrow(fx, fy) {
            return Err(format!("arrow {x} -> {y} maps to non-arrow {fx} -> {fy}"));
        }
    }
    for x in a.vertices() {
        let lhs = a.tau(x).map(|t| map.get(t).unwrap());
        let rhs = b.tau(map.get(x).unwrap());
        if lhs != rhs {
            return Err(format!("translation not intertwined at {x}"));
        }
    }
    Ok(())
}

pub fn is_isomorphism(a: &TranslationQuiver, b: &TranslationQuiver, map: &VertexMapping) -> bool {
    check_isomorphism(a, b, map).is_ok()
}

/// Copy of `q` with every vertex renamed through `map`, living on `period`.
pub fn relabel(
    q: &TranslationQuiver,
    map: &VertexMapping,
    period: usize,
) -> Result<TranslationQuiver> {
    let f = |v: VertexLabel| map.get(v).ok_or(Error::NotAVertex(v));
    let vertices = q.vertices().map(f).collect::<Result<Vec<_>>>()?;
    let arrows = q
        .arrows()
        .map(|(x, y)| Ok((f(x)?, f(y)?)))
        .collect::<Result<Vec<_>>>()?;
    let tau = q
        .tau_map()
        .iter()
        .map(|(&x, &t)| Ok((f(x)?, f(t)?)))
        .collect::<Result<Vec<_>>>()?;
    if vertices.iter().collect::<BTreeSet<_>>().len() != vertices.len() {
        return Err(Error::Parameter("relabelling is not injective".into()));
    }
    TranslationQuiver::new(
        period,
        vertices,
        arrows,
        tau,
        q.metadata().derived("relabel"),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum OrbitShape {
    Cycle(usize),
    /// Position along a finite translation chain: steps back to its start,
    /// steps forward to its end.
    Chain(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Signature {
    indeg: usize,
    outdeg: usize,
    orbit: OrbitShape,
}

struct Indexed {
    labels: Vec<VertexLabel>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    arrows: HashSet<(usize, usize)>,
    sig: Vec<Signature>,
}

impl Indexed {
    fn new(q: &TranslationQuiver) -> Self {
        let labels: Vec<_> = q.vertices().collect();
        let index: HashMap<_, _> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let ix = |v: &VertexLabel| index[v];
        let succ: Vec<Vec<usize>> = labels
            .iter()
            .map(|&v| q.successors(v).iter().map(ix).collect())
            .collect();
        let pred: Vec<Vec<usize>> = labels
            .iter()
            .map(|&v| q.predecessors(v).iter().map(ix).collect())
            .collect();
        let tau: Vec<_> = labels.iter().map(|&v| q.tau(v).map(|t| ix(&t))).collect();
        let tau_inv: Vec<_> = labels
            .iter()
            .map(|&v| q.tau_inv(v).map(|t| ix(&t)))
            .collect();
        let arrows = q.arrows().map(|(a, b)| (ix(&a), ix(&b))).collect();
        let sig = (0..labels.len())
            .map(|i| Signature {
                indeg: pred[i].len(),
                outdeg: succ[i].len(),
                orbit: orbit_shape(i, &tau, &tau_inv),
            })
            .collect();
        Indexed {
            labels,
            succ,
            pred,
            tau,
            tau_inv,
            arrows,
            sig,
        }
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.succ[v]
            .iter()
            .chain(&self.pred[v])
            .copied()
            .chain(self.tau[v])
            .chain(self.tau_inv[v])
    }
}

fn orbit_shape(v: usize, tau: &[Option<usize>], tau_inv: &[Option<usize>]) -> OrbitShape {
    let mut fwd = 0;
    let mut cur = v;
    while let Some(t) = tau[cur] {
        fwd += 1;
        if t == v {
            return OrbitShape::Cycle(fwd);
        }
        cur = t;
    }
    let mut back = 0;
    cur = v;
    while let Some(t) = tau_inv[cur] {
        back += 1;
        cur = t;
    }
    OrbitShape::Chain(back, fwd)
}

struct Search<'a> {
    a: &'a Indexed,
    b: &'a Indexed,
    order: Vec<usize>,
    ab: Vec<Option<usize>>,
    ba: Vec<Option<usize>>,
    by_sig: HashMap<Signature, Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) -> bool {
        let Some(offset) = self.order[pos..].iter().position(|&x| self.ab[x].is_none()) else {
            return true;
        };
        let pos = pos + offset;
        let x = self.order[pos];
        for y in self.candidates(x) {
            if self.ba[y].is_some() || self.a.sig[x] != self.b.sig[y] {
                continue;
            }
            if let Some(assigned) = self.assign_orbit(x, y) {
                if self.run(pos + 1) {
                    return true;
                }
                self.undo(&assigned);
            }
        }
        false
    }

    fn candidates(&self, x: usize) -> Vec<usize> {
        if let Some(y) = self.a.pred[x].iter().find_map(|&p| self.ab[p]) {
            return self.b.succ[y].clone();
        }
        if let Some(y) = self.a.succ[x].iter().find_map(|&s| self.ab[s]) {
            return self.b.pred[y].clone();
        }
        self.by_sig.get(&self.a.sig[x]).cloned().unwrap_or_default()
    }

    /// Assigns `x -> y` and, forced by the translation, the whole orbit.
    fn assign_orbit(&mut self, x: usize, y: usize) -> Option<Vec<usize>> {
        let mut assigned = Vec::new();
        let ok = self.walk(x, y, true, &mut assigned)
            && match (self.a.tau_inv[x], self.b.tau_inv[y]) {
                (None, None) => true,
                (Some(px), Some(py)) => self.walk(px, py, false, &mut assigned),
                _ => false,
            }
            && assigned.iter().all(|&u| self.arrows_consistent(u));
        if ok {
            Some(assigned)
        } else {
            self.undo(&assigned);
            None
        }
    }

    fn walk(
        &mut self,
        mut cx: usize,
        mut cy: usize,
        forward: bool,
        assigned: &mut Vec<usize>,
    ) -> bool {
        loop {
            match (self.ab[cx], self.ba[cy]) {
                (Some(z), _) => return z == cy,
                (None, Some(_)) => return false,
                (None, None) => {}
            }
            if self.a.sig[cx] != self.b.sig[cy] {
                return false;
            }
            self.ab[cx] = Some(cy);
            self.ba[cy] = Some(cx);
            assigned.push(cx);
            let (nx, ny) = if forward {
                (self.a.tau[cx], self.b.tau[cy])
            } else {
                (self.a.tau_inv[cx], self.b.tau_inv[cy])
            };
            match (nx, ny) {
                (None, None) => return true,
                (Some(nx), Some(ny)) => (cx, cy) = (nx, ny),
                _ => return false,
            }
        }
    }

    fn arrows_consistent(&self, u: usize) -> bool {
        let w = self.ab[u].unwrap();
        let mut out_a = 0;
        for &s in &self.a.succ[u] {
            if let Some(t) = self.ab[s] {
                if !self.b.arrows.contains(&(w, t)) {
                    return false;
                }
                out_a += 1;
            }
        }
        let mut in_a = 0;
        for &p in &self.a.pred[u] {
            if let Some(t) = self.ab[p] {
                if !self.b.arrows.contains(&(t, w)) {
                    return false;
                }
                in_a += 1;
            }
        }
        let out_b = self.b.succ[w]
            .iter()
            .filter(|&&t| self.ba[t].is_some())
            .count();
        let in_b = self.b.pred[w]
            .iter()
            .filter(|&&t| self.ba[t].is_some())
            .count();
        out_a == out_b && in_a == in_b
    }

    fn undo(&mut self, assigned: &[usize]) {
        for &u in assigned {
            if let Some(w) = self.ab[u].take() {
                self.ba[w] = None;
            }
        }
    }
}

/// Visit order for the search: breadth-first over arrows and translation
/// links, each fresh region seeded at a vertex of the rarest signature.
fn search_order(a: &Indexed) -> Vec<usize> {
    let mut freq: HashMap<Signature, usize> = HashMap::new();
    for s in &a.sig {
        *freq.entry(*s).or_default() += 1;
    }
    let mut seeds: Vec<usize> = (0..a.len()).collect();
    seeds.sort_by_key(|&i| (freq[&a.sig[i]], i));
    let mut seen = vec![false; a.len()];
    let mut order = Vec::with_capacity(a.len());
    for seed in seeds {
        if seen[seed] {
            continue;
        }
        seen[seed] = true;
        let mut queue = VecDeque::from([seed]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in a.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Searches for an isomorphism of translation quivers `a -> b`.
///
/// Backtracks over vertex assignments; fixing the image of one vertex fixes
/// its whole translation orbit, so choices are made per orbit. Returns the
/// first witness found in a deterministic order, or `None`.
pub fn find_isomorphism(a: &TranslationQuiver, b: &TranslationQuiver) -> Option<VertexMapping> {
    if a.len() != b.len()
        || a.arrow_count() != b.arrow_count()
        || a.tau_map().len() != b.tau_map().len()
    {
        return None;
    }
    let (ia, ib) = (Indexed::new(a), Indexed::new(b));
    let mut sa = ia.sig.clone();
    let mut sb = ib.sig.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let mut by_sig: HashMap<Signature, Vec<usize>> = HashMap::new();
    for (i, s) in ib.sig.iter().enumerate() {
        by_sig.entry(*s).or_default().push(i);
    }
    let mut search = Search {
        a: &ia,
        b: &ib,
        order: search_order(&ia),
        ab: vec![None; ia.len()],
        ba: vec![None; ib.len()],
        by_sig,
    };
    if !search.run(0) {
        return None;
    }
    let map = VertexMapping {
        pairs: search
            .ab
            .iter()
            .enumerate()
            .map(|(i, t)| (ia.labels[i], ib.labels[t.unwrap()]))
            .collect(),
    };
    debug_assert!(is_isomorphism(a, b, &map));
    Some(map)
}
