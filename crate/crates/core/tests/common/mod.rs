//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use quiverkit::components::connected_components;
use quiverkit::families::{build_gamma_d, build_gamma_d_m, build_za_quotient};
use quiverkit::iso::VertexMapping;
use quiverkit::paths::power;
use quiverkit::{Provenance, RowLabel, TranslationQuiver, VertexLabel};

/// Every walk of `len` arrows from `v`, by plain recursion over all arrows.
pub fn all_walks(q: &TranslationQuiver, v: VertexLabel, len: usize) -> Vec<Vec<VertexLabel>> {
    if len == 0 {
        return vec![vec![v]];
    }
    let mut out = Vec::new();
    for (a, b) in q.arrows() {
        if a != v {
            continue;
        }
        for mut tail in all_walks(q, b, len - 1) {
            tail.insert(0, v);
            out.push(tail);
        }
    }
    out
}

fn same_column_bar(x: VertexLabel, z: VertexLabel) -> bool {
    x.row.is_fork() && z.row.is_fork() && x.row != z.row && x.col == z.col
}

/// Sectional: `tau(x_{i+1}) != x_{i-1}`. Restricted additionally rejects a
/// passage between the two fork rows through row 1, where `tau(x_{i+1})` is
/// the other fork vertex of the column of `x_{i-1}`.
pub fn walk_ok(q: &TranslationQuiver, w: &[VertexLabel], restricted: bool) -> bool {
    w.windows(3).all(|t| {
        let (x, z) = (t[0], t[2]);
        let tz = q.tau(z);
        if tz == Some(x) {
            return false;
        }
        if !restricted {
            return true;
        }
        match tz {
            Some(tz) => !same_column_bar(x, tz),
            None => {
                !(x.row.is_fork()
                    && z.row.is_fork()
                    && x.row != z.row
                    && (x.col + 1) % q.period() == z.col)
            }
        }
    })
}

pub fn brute_sectional(
    q: &TranslationQuiver,
    v: VertexLabel,
    m: usize,
    restricted: bool,
) -> BTreeSet<Vec<VertexLabel>> {
    all_walks(q, v, m)
        .into_iter()
        .filter(|w| walk_ok(q, w, restricted))
        .collect()
}

/// Every quiver of the families with period at most `max_period`.
pub fn family_quivers(max_period: usize) -> Vec<TranslationQuiver> {
    let mut out = Vec::new();
    for n in 3..=max_period {
        out.push(build_gamma_d(n).unwrap());
    }
    for n in 3..=max_period {
        for m in 2..=max_period {
            if n * m - m < max_period {
                out.push(build_gamma_d_m(n, m).unwrap());
            }
        }
    }
    for rows in 1..=4 {
        for p in 1..=max_period {
            out.push(build_za_quotient(rows, p).unwrap());
        }
    }
    out
}

/// Tries every bijection in vertex order, pruning only on pairs already
/// assigned.
pub fn naive_isomorphism(a: &TranslationQuiver, b: &TranslationQuiver) -> Option<VertexMapping> {
    if a.len() != b.len()
        || a.arrow_count() != b.arrow_count()
        || a.tau_map().len() != b.tau_map().len()
    {
        return None;
    }
    let av: Vec<VertexLabel> = a.vertices().collect();
    let bv: Vec<VertexLabel> = b.vertices().collect();
    let mut image: Vec<usize> = Vec::new();
    let mut used = vec![false; bv.len()];
    fn go(
        a: &TranslationQuiver,
        b: &TranslationQuiver,
        av: &[VertexLabel],
        bv: &[VertexLabel],
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let k = image.len();
        if k == av.len() {
            return true;
        }
        for c in 0..bv.len() {
            if used[c] {
                continue;
            }
            let ok = (0..=k).all(|i| {
                let (x, fx) = if i == k {
                    (av[k], bv[c])
                } else {
                    (av[i], bv[image[i]])
                };
                let (y, fy) = (av[k], bv[c]);
                a.has_arrow(x, y) == b.has_arrow(fx, fy)
                    && a.has_arrow(y, x) == b.has_arrow(fy, fx)
                    && (a.tau(x) == Some(y)) == (b.tau(fx) == Some(fy))
                    && (a.tau(y) == Some(x)) == (b.tau(fy) == Some(fx))
                    && a.tau(y).is_some() == b.tau(fy).is_some()
            });
            if ok {
                used[c] = true;
                image.push(c);
                if go(a, b, av, bv, image, used) {
                    return true;
                }
                image.pop();
                used[c] = false;
            }
        }
        false
    }
    if !go(a, b, &av, &bv, &mut image, &mut used) {
        return None;
    }
    VertexMapping::from_pairs(av.iter().zip(&image).map(|(&x, &i)| (x, bv[i]))).ok()
}

/// Assorted translation quivers with at most 12 vertices.
pub fn small_quivers() -> Vec<TranslationQuiver> {
    let mut out = vec![
        build_gamma_d(3).unwrap(),
        build_gamma_d_m(3, 1).unwrap(),
        power(&build_gamma_d(3).unwrap(), 2, true).unwrap(),
        power(&build_gamma_d(3).unwrap(), 2, false).unwrap(),
    ];
    for rows in 1..=3 {
        for p in 1..=12 / rows {
            out.push(build_za_quotient(rows, p).unwrap());
        }
    }
    let sq = power(&build_gamma_d(4).unwrap(), 2, false).unwrap();
    out.extend(
        connected_components(&sq)
            .into_iter()
            .filter(|c| c.len() > 1),
    );
    let d3 = build_gamma_d(3).unwrap();
    let (x, y) = d3.arrows().next().unwrap();
    out.push(d3.without_arrow(x, y).unwrap());
    out
}

/// Pseudo-random relabelling of `q` onto row 1 of a fresh period.
pub fn shuffled(q: &TranslationQuiver, perm_seed: u64) -> (TranslationQuiver, VertexMapping) {
    let vs: Vec<VertexLabel> = q.vertices().collect();
    let mut targets: Vec<usize> = (0..vs.len()).collect();
    // small deterministic LCG shuffle
    let mut s = perm_seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    for i in (1..targets.len()).rev() {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        targets.swap(i, (s >> 33) as usize % (i + 1));
    }
    let period = vs.len().max(1);
    let map = VertexMapping::from_pairs(
        vs.iter()
            .zip(&targets)
            .map(|(&v, &t)| (v, VertexLabel::numeric(t as i64, 1, period))),
    )
    .unwrap();
    (quiverkit::iso::relabel(q, &map, period).unwrap(), map)
}

/// Builds an arbitrary quiver on `k` vertices from raw choices.
pub fn raw_quiver(k: usize, arrows: &[(usize, usize)], tau: &[Option<usize>]) -> TranslationQuiver {
    let v = |i: usize| VertexLabel::numeric(i as i64, 1, k);
    let mut seen = BTreeSet::new();
    let mut pairs = BTreeMap::new();
    for (i, t) in tau.iter().enumerate().take(k) {
        if let Some(t) = t {
            if seen.insert(t % k) {
                pairs.insert(v(i), v(t % k));
            }
        }
    }
    TranslationQuiver::new(
        k,
        (0..k).map(v),
        arrows.iter().map(|&(a, b)| (v(a % k), v(b % k))),
        pairs,
        Provenance::family("raw"),
    )
    .unwrap()
}

pub fn fork(col: usize, bar: bool, period: usize) -> VertexLabel {
    let row = if bar {
        RowLabel::ZeroBar
    } else {
        RowLabel::ZERO
    };
    VertexLabel::new(col as i64, row, period)
}
