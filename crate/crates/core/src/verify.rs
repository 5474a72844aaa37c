//! Verification suites run cell by cell over `(n, m)` grids.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::arcs::{build_gamma_odot, rho_mapping};
use crate::components::{component_vertex_sets, connected_components, full_subquiver};
use crate::decomposition::{d_component, decompose, divisible_rows, ComponentClass};
use crate::error::Result;
use crate::families::{build_gamma_d, build_gamma_d_m, m_cluster_period};
use crate::iso::{check_isomorphism, find_isomorphism};
use crate::label::{RowLabel, VertexLabel};
use crate::paths::{enumerate_sectional_paths, power};
use crate::quiver::{validate, Arrow, TranslationQuiver};
use crate::topology::{classify_surface, mesh_complex, SurfaceClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// `Gamma(D_n, m)` sits inside the restricted power as a component.
    DComponent,
    /// The restricted power splits into one D-component and `m - 1` ZA quotients.
    Decomposition,
    /// The quiver of tagged m-arcs is isomorphic to `Gamma(D_n, m)` via rho.
    ArcModel,
    /// Restricted and plain powers of `Gamma(D_n, 1)` differ only at the fork
    /// when `m = 2`; both are stable translation quivers. `n` is the rank.
    PowerRestriction,
    /// Endpoints of the length-m sectional paths in `Gamma(D_{nm-m+1}, 1)`.
    SectionalEndpoints,
    /// The unrestricted square of `Gamma(D_4, 1)` contains a torus. Ignores `n, m`.
    Torus,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::DComponent,
        Suite::Decomposition,
        Suite::ArcModel,
        Suite::PowerRestriction,
        Suite::SectionalEndpoints,
        Suite::Torus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DComponent => "d-component",
            Suite::Decomposition => "decomposition",
            Suite::ArcModel => "arc-model",
            Suite::PowerRestriction => "remark-1-2",
            Suite::SectionalEndpoints => "lemma-3-6",
            Suite::Torus => "torus",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub suite: Suite,
    pub n: usize,
    pub m: usize,
    pub ok: bool,
    pub summary: String,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok { "ok  " } else { "FAIL" };
        if self.suite == Suite::Torus {
            write!(f, "{status} {}: {}", self.suite, self.summary)
        } else {
            write!(
                f,
                "{status} {} n={} m={}: {}",
                self.suite, self.n, self.m, self.summary
            )
        }
    }
}

fn verdict(
    suite: Suite,
    n: usize,
    m: usize,
    r: Result<std::result::Result<String, String>>,
) -> Verdict {
    let (ok, summary) = match r {
        Ok(Ok(s)) => (true, s),
        Ok(Err(s)) => (false, s),
        Err(e) => (false, e.to_string()),
    };
    Verdict {
        suite,
        n,
        m,
        ok,
        summary,
    }
}

pub fn run_cell(suite: Suite, n: usize, m: usize) -> Verdict {
    let r = match suite {
        Suite::DComponent => check_d_component(n, m),
        Suite::Decomposition => check_decomposition(n, m),
        Suite::ArcModel => check_arc_model(n, m),
        Suite::PowerRestriction => check_power_restriction(n, m),
        Suite::SectionalEndpoints => check_sectional_endpoints(n, m),
        Suite::Torus => check_torus(),
    };
    verdict(suite, n, m, r)
}

/// Worker count from `QUIVERKIT_JOBS`, if set to a positive integer.
pub fn jobs_from_env() -> Option<usize> {
    std::env::var("QUIVERKIT_JOBS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&k| k > 0)
}

/// Runs every cell on a worker pool; verdicts come back in cell order.
pub fn run_grid(suite: Suite, cells: &[(usize, usize)], jobs: Option<usize>) -> Vec<Verdict> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = jobs {
        builder = builder.num_threads(k);
    }
    let work = || {
        cells
            .par_iter()
            .map(|&(n, m)| run_cell(suite, n, m))
            .collect()
    };
    match builder.build() {
        Ok(pool) => pool.install(work),
        Err(_) => cells.iter().map(|&(n, m)| run_cell(suite, n, m)).collect(),
    }
}

/// `n` in `3..=n_max`, `m` in `1..=m_max`, row-major.
pub fn grid(n_max: usize, m_max: usize) -> Vec<(usize, usize)> {
    (3..=n_max)
        .flat_map(|n| (1..=m_max).map(move |m| (n, m)))
        .collect()
}

fn preview(map: &crate::iso::VertexMapping, k: usize) -> String {
    let pairs: Vec<String> = map
        .iter()
        .take(k)
        .map(|(a, b)| format!("{a}->{b}"))
        .collect();
    let more = if map.len() > k { ", ..." } else { "" };
    format!("{}{more}", pairs.join(", "))
}

fn check_d_component(n: usize, m: usize) -> Result<std::result::Result<String, String>> {
    let big = m_cluster_period(n, m);
    let d = d_component(n, m)?;
    Ok(Ok(format!(
        "component of {} vertices in the restricted power of Gamma(D_{big},1) ({} vertices); sigma witness {}",
        d.quiver.len(),
        big * big,
        preview(&d.sigma, 4)
    )))
}

fn check_decomposition(n: usize, m: usize) -> Result<std::result::Result<String, String>> {
    let r = decompose(n, m)?;
    let kinds: Vec<String> = r
        .components
        .iter()
        .map(|c| match c.class {
            ComponentClass::D => format!("D:{}", c.quiver.len()),
            ComponentClass::A(k) => format!("A{k}:{}", c.quiver.len()),
            ComponentClass::Unidentified => format!("?:{}", c.quiver.len()),
        })
        .collect();
    Ok(Ok(format!(
        "{} components [{}]",
        r.components.len(),
        kinds.join(", ")
    )))
}

fn check_arc_model(n: usize, m: usize) -> Result<std::result::Result<String, String>> {
    let big = m_cluster_period(n, m);
    let odot = build_gamma_odot(n, m)?;
    if odot.len() != n * big {
        return Ok(Err(format!("{} arcs, expected {}", odot.len(), n * big)));
    }
    let report = validate(&odot);
    if !report.is_translation_quiver {
        return Ok(Err(format!(
            "arc quiver fails the mesh condition at {:?}",
            report.mesh_offenders
        )));
    }
    let target = build_gamma_d_m(n, m)?;
    let sigma = crate::decomposition::sigma(n, m)?;
    let sigma_inv = sigma.inverse();
    // rho lands in the sigma image; pull it back to Gamma(D_n, m)
    let rho = rho_mapping(n, m)?;
    let d = d_component(n, m)?;
    if let Err(e) = check_isomorphism(&odot, &d.quiver, &rho) {
        return Ok(Err(format!("rho is not an isomorphism: {e}")));
    }
    let composite = rho.then(&sigma_inv);
    if let Err(e) = check_isomorphism(&odot, &target, &composite) {
        return Ok(Err(format!("rho then sigma^-1 is not an isomorphism: {e}")));
    }
    Ok(Ok(format!(
        "{} tagged {m}-arcs, {} m-moves; rho is an isomorphism onto the D-component",
        odot.len(),
        odot.arrow_count()
    )))
}

/// Arrows the fork restriction removes from the square: each fork vertex to
/// the bar of its inverse translate.
pub fn fork_restriction_arrows(q: &TranslationQuiver) -> BTreeSet<Arrow> {
    q.vertices()
        .filter(|v| v.row.is_fork())
        .filter_map(|x| q.tau_inv(x).map(|y| (x, y.bar())))
        .collect()
}

fn check_power_restriction(rank: usize, m: usize) -> Result<std::result::Result<String, String>> {
    let q = build_gamma_d(rank)?;
    let plain = power(&q, m, false)?;
    let restricted = power(&q, m, true)?;
    let diff: BTreeSet<Arrow> = plain
        .arrow_set()
        .difference(restricted.arrow_set())
        .copied()
        .collect();
    if !restricted.arrow_set().is_subset(plain.arrow_set()) {
        return Ok(Err(
            "restricted power has arrows the plain power lacks".into()
        ));
    }
    let expected = if m == 2 {
        fork_restriction_arrows(&q)
    } else {
        BTreeSet::new()
    };
    if diff != expected {
        return Ok(Err(format!(
            "{} arrows differ, expected {}",
            diff.len(),
            expected.len()
        )));
    }
    if !validate(&restricted).is_stable_translation_quiver() {
        return Ok(Err(
            "restricted power is not a stable translation quiver".into()
        ));
    }
    Ok(Ok(format!(
        "{} arrows removed by the restriction; restricted power is a stable translation quiver",
        diff.len()
    )))
}

/// Expected endpoints of the length-m restricted sectional paths from `v` in
/// `Gamma(D_rank, 1)`: straight down `m` rows (forking at row `m`), and up
/// diagonally `m` steps when that row exists.
pub fn expected_sectional_endpoints(
    rank: usize,
    m: usize,
    v: VertexLabel,
) -> BTreeSet<VertexLabel> {
    let period = rank;
    let top = rank - 2;
    let mut out = BTreeSet::new();
    let up = |row: usize| VertexLabel::numeric(v.col as i64 + m as i64, row, period);
    match v.row {
        RowLabel::ZeroBar | RowLabel::Numeric(0) => {
            if m <= top {
                out.insert(up(m));
            }
        }
        RowLabel::Numeric(j) => {
            if j > m {
                out.insert(v.with_row(RowLabel::Numeric(j - m)));
            } else if j == m {
                out.insert(v.with_row(RowLabel::ZERO));
                out.insert(v.with_row(RowLabel::ZeroBar));
            }
            if j + m <= top {
                out.insert(up(j + m));
            }
        }
    }
    out
}

fn check_sectional_endpoints(n: usize, m: usize) -> Result<std::result::Result<String, String>> {
    let rank = m_cluster_period(n, m);
    let q = build_gamma_d(rank)?;
    let mut paths = 0;
    for v in q.vertices() {
        let found = enumerate_sectional_paths(&q, v, m, true)?;
        paths += found.len();
        let ends: BTreeSet<VertexLabel> = found.iter().map(|p| p.end()).collect();
        if ends.len() != found.len() {
            return Ok(Err(format!(
                "two sectional paths from {v} share an endpoint"
            )));
        }
        let want = expected_sectional_endpoints(rank, m, v);
        if ends != want {
            return Ok(Err(format!(
                "endpoints from {v}: found {:?}, expected {:?}",
                ends.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                want.iter().map(|x| x.to_string()).collect::<Vec<_>>()
            )));
        }
    }
    Ok(Ok(format!(
        "{} vertices of Gamma(D_{rank},1), {paths} paths, all endpoints as expected",
        q.len()
    )))
}

fn check_torus() -> Result<std::result::Result<String, String>> {
    let square = power(&build_gamma_d(4)?, 2, false)?;
    let comps = connected_components(&square);
    let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    let Some(big) = comps.iter().find(|c| c.len() == 12) else {
        return Ok(Err(format!("no 12-vertex component; sizes {sizes:?}")));
    };
    if comps.len() != 5 {
        return Ok(Err(format!("{} components, expected 5", comps.len())));
    }
    let complex = mesh_complex(big)?;
    let report = classify_surface(&complex);
    let (v, e, f) = complex.counts();
    if report.classification != SurfaceClass::Torus {
        return Ok(Err(format!(
            "12-vertex component is a {}",
            report.classification
        )));
    }
    // the same construction without the restriction does not give Gamma(D_4, 2)
    let unrestricted = power(&build_gamma_d(7)?, 2, false)?;
    let v_rows = full_subquiver(&unrestricted, &divisible_rows(4, 2)?)?;
    if find_isomorphism(&build_gamma_d_m(4, 2)?, &v_rows).is_some() {
        return Ok(Err("unrestricted square still realises Gamma(D_4,2)".into()));
    }
    let pieces = component_vertex_sets(&v_rows).len();
    Ok(Ok(format!(
        "square of Gamma(D_4,1): components {sizes:?}; (V,E,F) = ({v},{e},{f}), chi={}, orientable, {}; \
         unrestricted square of Gamma(D_7,1) on rows 0,0bar,2,4 ({pieces} piece(s)) is not Gamma(D_4,2)",
        report.euler_characteristic, report.classification
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_pass_at_small_size() {
        for s in Suite::ALL {
            let v = run_cell(s, 4, 2);
            assert!(v.ok, "{v}");
        }
    }

    #[test]
    fn grid_output_is_in_cell_order() {
        let cells = grid(4, 2);
        let out = run_grid(Suite::DComponent, &cells, Some(3));
        let got: Vec<_> = out.iter().map(|v| (v.n, v.m)).collect();
        assert_eq!(got, cells);
        assert!(out.iter().all(|v| v.ok));
    }

    #[test]
    fn fork_restriction_on_even_rank_is_the_literal_pattern() {
        let q = build_gamma_d(6).unwrap();
        let lit: BTreeSet<Arrow> = (0..6)
            .flat_map(|i| {
                let a = VertexLabel::new(i, RowLabel::ZERO, 6);
                let b = VertexLabel::new(i + 1, RowLabel::ZeroBar, 6);
                [(a, b), (a.bar(), b.bar())]
            })
            .collect();
        assert_eq!(fork_restriction_arrows(&q), lit);
    }
}
