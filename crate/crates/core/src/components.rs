//! Connected components and full subquivers.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::quiver::TranslationQuiver;

/// Full subquiver on `keep`: every arrow with both ends in `keep`, and the
/// translation wherever both `x` and `tau x` lie in `keep`.
pub fn full_subquiver(
    q: &TranslationQuiver,
    keep: &BTreeSet<VertexLabel>,
) -> Result<TranslationQuiver> {
    if let Some(&v) = keep.iter().find(|&&v| !q.contains(v)) {
        return Err(Error::NotAVertex(v));
    }
    TranslationQuiver::new(
        q.period(),
        keep.iter().copied(),
        q.arrows()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b)),
        q.tau_map()
            .iter()
            .filter(|(x, t)| keep.contains(x) && keep.contains(t))
            .map(|(&x, &t)| (x, t)),
        q.metadata().derived("full subquiver"),
    )
}

/// True when `set` is closed under the translation of `q` (where defined).
pub fn is_tau_closed(q: &TranslationQuiver, set: &BTreeSet<VertexLabel>) -> bool {
    set.iter()
        .all(|&v| q.tau(v).is_none_or(|t| set.contains(&t)))
}

/// True when no arrow of `q` joins `set` to its complement, in either direction.
pub fn is_arrow_closed(q: &TranslationQuiver, set: &BTreeSet<VertexLabel>) -> bool {
    q.arrows()
        .all(|(a, b)| set.contains(&a) == set.contains(&b))
}

/// Vertex classes of the underlying undirected graph of arrows, ordered by
/// their smallest vertex.
pub fn component_vertex_sets(q: &TranslationQuiver) -> Vec<BTreeSet<VertexLabel>> {
    let mut seen: BTreeMap<VertexLabel, bool> = q.vertices().map(|v| (v, false)).collect();
    let mut classes = Vec::new();
    for start in q.vertices() {
        if seen[&start] {
            continue;
        }
        let mut class = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start, true);
        while let Some(v) = queue.pop_front() {
            class.insert(v);
            for &w in q.successors(v).iter().chain(q.predecessors(v)) {
                if !std::mem::replace(seen.get_mut(&w).unwrap(), true) {
                    queue.push_back(w);
                }
            }
        }
        classes.push(class);
    }
    classes
}

/// Full subquivers on the connected components of `q`, ordered by smallest
/// vertex. The translation is restricted to each component; where a
/// translation orbit leaves a component it becomes undefined there.
pub fn connected_components(q: &TranslationQuiver) -> Vec<TranslationQuiver> {
    component_vertex_sets(q)
        .iter()
        .enumerate()
        .map(|(i, set)| {
            let c = full_subquiver(q, set).expect("component vertices come from q");
            let meta = q.metadata().derived(format!("component {i}"));
            c.with_metadata(meta)
        })
        .collect()
}
