use std::collections::BTreeSet;

use quiverkit::arcs::{
    build_gamma_odot, enumerate_m_arcs, is_m_arc, m_moves, rho, tau_m_arc, PuncturedPolygon, Tag,
    TaggedArc,
};
use quiverkit::decomposition::divisible_rows;
use quiverkit::families::m_cluster_period;
use quiverkit::validate;

fn grid() -> impl Iterator<Item = (usize, usize)> {
    (3..=7).flat_map(|n| (1..=5).map(move |m| (n, m)))
}

fn every_arc(sides: usize) -> Vec<TaggedArc> {
    let mut out = Vec::new();
    for i in 1..=sides {
        for j in 1..=sides {
            if i != j {
                out.push(TaggedArc::plain(i, j));
            }
        }
        out.push(TaggedArc::tagged(i, Tag::Plus));
        out.push(TaggedArc::tagged(i, Tag::Minus));
    }
    out
}

#[test]
fn enumeration_matches_filter() {
    for (n, m) in grid() {
        let p = PuncturedPolygon::for_m_cluster(n, m).unwrap();
        let filtered: BTreeSet<TaggedArc> = every_arc(p.sides())
            .into_iter()
            .filter(|a| matches!(is_m_arc(&p, m, a), Ok(true)))
            .collect();
        let listed = enumerate_m_arcs(n, m).unwrap();
        assert_eq!(listed.iter().copied().collect::<BTreeSet<_>>(), filtered);
        assert_eq!(listed.len(), n * p.sides(), "n={n} m={m}");
    }
}

/// Boundary-walk vertex counts on each side of a plain arc, counted by hand.
fn sides_of(n_gon: usize, i: usize, j: usize) -> (usize, usize) {
    let mut walk = 1;
    let mut k = i;
    while k != j {
        k = k % n_gon + 1;
        walk += 1;
    }
    (walk, n_gon + 2 - walk)
}

#[test]
fn the_two_m_arc_conditions_coincide() {
    for (n, m) in grid() {
        let big = m_cluster_period(n, m);
        let p = PuncturedPolygon::for_m_cluster(n, m).unwrap();
        for i in 1..=big {
            for j in (1..=big).filter(|&j| j != i) {
                let (bij, bji) = sides_of(big, i, j);
                if bij == 2 {
                    // boundary edge, not an arc
                    assert!(is_m_arc(&p, m, &TaggedArc::plain(i, j)).is_err());
                    continue;
                }
                let first = (bij - 2) % m == 0;
                let second = (bji - 1) % m == 0;
                assert_eq!(first, second, "n={n} m={m} D[{i},{j}]");
                assert_eq!(is_m_arc(&p, m, &TaggedArc::plain(i, j)).unwrap(), first);
            }
        }
    }
}

#[test]
fn tau_m_permutes_arcs_with_the_expected_period() {
    for (n, m) in grid() {
        let big = m_cluster_period(n, m);
        let arcs: BTreeSet<TaggedArc> = enumerate_m_arcs(n, m).unwrap().into_iter().collect();
        let image: BTreeSet<TaggedArc> = arcs.iter().map(|a| tau_m_arc(n, m, a).unwrap()).collect();
        assert_eq!(image, arcs);
        let period = if (m * big).is_multiple_of(2) {
            big
        } else {
            2 * big
        };
        for a in &arcs {
            let mut b = *a;
            for step in 1..=period {
                b = tau_m_arc(n, m, &b).unwrap();
                if step == big && period == 2 * big && a.is_tagged() {
                    assert_eq!(b.tag, a.tag.map(Tag::flip));
                    assert_eq!(b.from, a.from);
                }
                if step < period && a.is_tagged() {
                    assert_ne!(b, *a, "{a} returns early at step {step}");
                }
            }
            assert_eq!(b, *a);
        }
    }
}

#[test]
fn moves_stay_among_m_arcs_and_rho_hits_v() {
    for (n, m) in grid() {
        let arcs: BTreeSet<TaggedArc> = enumerate_m_arcs(n, m).unwrap().into_iter().collect();
        for a in &arcs {
            assert!(m_moves(n, m, a).unwrap().iter().all(|b| arcs.contains(b)));
        }
        let image: BTreeSet<_> = arcs.iter().map(|a| rho(n, m, a).unwrap()).collect();
        assert_eq!(image, divisible_rows(n, m).unwrap());
        assert!(validate(&build_gamma_odot(n, m).unwrap()).is_stable_translation_quiver());
    }
}
