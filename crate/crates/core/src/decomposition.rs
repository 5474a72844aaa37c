//! The embedding of the m-cluster quiver of type `D_n` into the restricted
//! m-th power of the cluster quiver of type `D_{nm-m+1}`, and the
//! classification of every component of that power.

use std::collections::BTreeSet;

use crate::components::{component_vertex_sets, full_subquiver, is_arrow_closed, is_tau_closed};
use crate::error::{Error, Result};
use crate::families::{
    build_gamma_d, build_gamma_d_m, build_za_quotient, d_rows, m_cluster_period,
};
use crate::iso::{check_isomorphism, find_isomorphism, VertexMapping};
use crate::label::{RowLabel, VertexLabel};
use crate::paths::power;
use crate::quiver::TranslationQuiver;

fn check(n: usize, m: usize) -> Result<()> {
    if n < 3 || m < 1 {
        return Err(Error::Parameter(format!(
            "need n >= 3 and m >= 1, got n={n}, m={m}"
        )));
    }
    Ok(())
}

/// The map from the vertices of the m-cluster quiver `Gamma(D_n, m)` to the
/// vertices of `Gamma(D_N, 1)`, `N = nm - m + 1`: `(i, j) |-> (im, jm)`, with
/// the fork rows barred when `floor(im / N)` is odd (unless `m` is odd and
/// `n` even, where no bar is ever applied). Columns use the representative
/// `i` in `0..N`.
pub fn sigma(n: usize, m: usize) -> Result<VertexMapping> {
    check(n, m)?;
    let period = m_cluster_period(n, m);
    let mut pairs = Vec::new();
    for i in 0..period {
        let im = i * m;
        let wraps_odd = (im / period) % 2 == 1;
        for row in d_rows(n) {
            let target_row = match row {
                RowLabel::Numeric(j) if j > 0 => RowLabel::Numeric(j * m),
                fork if m % 2 == 1 && n.is_multiple_of(2) => fork,
                fork if wraps_odd => fork.bar(),
                fork => fork,
            };
            pairs.push((
                VertexLabel { col: i, row },
                VertexLabel::new(im as i64, target_row, period),
            ));
        }
    }
    VertexMapping::from_pairs(pairs)
}

/// `{(r, s) : m | s}` in `Gamma(D_N, 1)`, both fork rows included.
pub fn divisible_rows(n: usize, m: usize) -> Result<BTreeSet<VertexLabel>> {
    check(n, m)?;
    let period = m_cluster_period(n, m);
    Ok(d_rows(period)
        .into_iter()
        .filter(|r| r.height() % m == 0)
        .flat_map(|row| (0..period).map(move |col| VertexLabel { col, row }))
        .collect())
}

/// `X_k`: the rows `j >= 1` with `j = k mod m` of `Gamma(D_N, 1)`.
pub fn residue_rows(n: usize, m: usize, k: usize) -> Result<BTreeSet<VertexLabel>> {
    check(n, m)?;
    let period = m_cluster_period(n, m);
    Ok((1..=period - 2)
        .filter(|j| j % m == k % m)
        .flat_map(|j| (0..period).map(move |col| VertexLabel::numeric(col as i64, j, period)))
        .collect())
}

/// The restricted m-th power of `Gamma(D_{nm-m+1}, 1)`.
pub fn restricted_ambient(n: usize, m: usize) -> Result<TranslationQuiver> {
    check(n, m)?;
    power(&build_gamma_d(m_cluster_period(n, m))?, m, true)
}

/// The copy of `Gamma(D_n, m)` inside the restricted power, with its witness.
#[derive(Debug, Clone)]
pub struct DComponent {
    pub quiver: TranslationQuiver,
    /// Isomorphism `Gamma(D_n, m) -> quiver`.
    pub sigma: VertexMapping,
}

/// Extracts the full subquiver on the image of [`sigma`] from the restricted
/// power and certifies it: arrow-closed, translation-closed, connected, and
/// isomorphic to `Gamma(D_n, m)` via `sigma`.
pub fn d_component(n: usize, m: usize) -> Result<DComponent> {
    d_component_in(&restricted_ambient(n, m)?, n, m)
}

/// As [`d_component`], reusing an already built restricted power.
pub fn d_component_in(ambient: &TranslationQuiver, n: usize, m: usize) -> Result<DComponent> {
    let sigma = sigma(n, m)?;
    let image = sigma.image();
    if image != divisible_rows(n, m)? {
        return Err(Error::Invariant(format!(
            "image of sigma is not the set of rows divisible by m (n={n}, m={m})"
        )));
    }
    if !is_arrow_closed(ambient, &image) {
        return Err(Error::Invariant(format!(
            "image of sigma is not arrow-closed (n={n}, m={m})"
        )));
    }
    if !is_tau_closed(ambient, &image) {
        return Err(Error::Invariant(format!(
            "image of sigma is not tau^m-closed (n={n}, m={m})"
        )));
    }
    let quiver = full_subquiver(ambient, &image)?;
    if component_vertex_sets(&quiver).len() != 1 {
        return Err(Error::Invariant(format!(
            "image of sigma is disconnected (n={n}, m={m})"
        )));
    }
    let source = build_gamma_d_m(n, m)?;
    check_isomorphism(&source, &quiver, &sigma).map_err(|e| {
        Error::Invariant(format!("sigma is not an isomorphism (n={n}, m={m}): {e}"))
    })?;
    let meta = ambient.metadata().derived("sigma image");
    Ok(DComponent {
        quiver: quiver.with_metadata(meta),
        sigma,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentClass {
    /// Isomorphic to `Gamma(D_n, m)`.
    D,
    /// Vertex set `X_k`, isomorphic to `ZA_{n-1} / tau^N`.
    A(usize),
    Unidentified,
}

#[derive(Debug, Clone)]
pub struct ClassifiedComponent {
    pub quiver: TranslationQuiver,
    pub class: ComponentClass,
    /// Isomorphism from the reference model (`Gamma(D_n, m)` or the ZA
    /// quotient) onto the component.
    pub witness: Option<VertexMapping>,
}

#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub n: usize,
    pub m: usize,
    pub components: Vec<ClassifiedComponent>,
}

impl DecompositionReport {
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.quiver.len()).collect()
    }

    /// Checks the expected shape: one D-component of size `nN`, and one
    /// A-component on `X_k` of size `(n-1)N` for each `k = 1..m-1`.
    pub fn check(&self) -> std::result::Result<(), String> {
        let (n, m) = (self.n, self.m);
        let period = m_cluster_period(n, m);
        if self.components.len() != m {
            return Err(format!(
                "{} components, expected {m}",
                self.components.len()
            ));
        }
        let mut seen_d = false;
        let mut seen_a = BTreeSet::new();
        for c in &self.components {
            match c.class {
                ComponentClass::D if !seen_d && c.quiver.len() == n * period => seen_d = true,
                ComponentClass::A(k)
                    if (1..m).contains(&k) && c.quiver.len() == (n - 1) * period =>
                {
                    if !seen_a.insert(k) {
                        return Err(format!("A-component {k} appears twice"));
                    }
                }
                _ => {
                    return Err(format!(
                        "unexpected component {:?} with {} vertices",
                        c.class,
                        c.quiver.len()
                    ))
                }
            }
            if c.witness.is_none() {
                return Err(format!("component {:?} has no witness", c.class));
            }
        }
        if !seen_d {
            return Err("no D-component".into());
        }
        Ok(())
    }
}

/// Classifies every component of the restricted power without asserting the
/// expected shape.
pub fn classify_components(n: usize, m: usize) -> Result<DecompositionReport> {
    let ambient = restricted_ambient(n, m)?;
    let period = m_cluster_period(n, m);
    let d = d_component_in(&ambient, n, m)?;
    let d_vertices = d.quiver.vertex_set().clone();
    let za = build_za_quotient(n - 1, period)?;
    let mut components = Vec::new();
    for set in component_vertex_sets(&ambient) {
        let quiver = full_subquiver(&ambient, &set)?;
        if set.len() == n * period && set == d_vertices {
            components.push(ClassifiedComponent {
                quiver: d.quiver.clone(),
                class: ComponentClass::D,
                witness: Some(d.sigma.clone()),
            });
            continue;
        }
        let residue = set.iter().next().map(|v| v.row.height() % m);
        let class_and_witness = match residue {
            Some(k) if k != 0 && set == residue_rows(n, m, k)? => {
                find_isomorphism(&za, &quiver).map(|w| (ComponentClass::A(k), w))
            }
            _ => None,
        };
        components.push(match class_and_witness {
            Some((class, w)) => ClassifiedComponent {
                quiver,
                class,
                witness: Some(w),
            },
            None => ClassifiedComponent {
                quiver,
                class: ComponentClass::Unidentified,
                witness: None,
            },
        });
    }
    Ok(DecompositionReport { n, m, components })
}

/// Splits the restricted m-th power of `Gamma(D_{nm-m+1}, 1)` into the copy
/// of `Gamma(D_n, m)` and `m - 1` copies of `ZA_{n-1} / tau^{nm-m+1}`.
pub fn decompose(n: usize, m: usize) -> Result<DecompositionReport> {
    let report = classify_components(n, m)?;
    report
        .check()
        .map_err(|e| Error::Invariant(format!("decomposition n={n}, m={m}: {e}")))?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: usize, r: usize) -> VertexLabel {
        VertexLabel::numeric(c as i64, r, 1000)
    }

    #[test]
    fn sigma_examples() {
        let s = sigma(4, 2).unwrap();
        assert_eq!(s.get(v(1, 1)), Some(v(2, 2)));
        assert_eq!(s.get(v(0, 0)), Some(v(0, 0)));
        assert_eq!(
            s.get(v(5, 0)),
            Some(VertexLabel {
                col: 3,
                row: RowLabel::ZeroBar
            })
        );
    }

    #[test]
    fn sigma_is_injective_onto_divisible_rows() {
        for n in 3..=7 {
            for m in 1..=5 {
                let s = sigma(n, m).unwrap();
                assert_eq!(s.len(), n * m_cluster_period(n, m));
                assert_eq!(s.image(), divisible_rows(n, m).unwrap());
            }
        }
    }

    #[test]
    fn sigma_intertwines_translations() {
        for n in 3..=7 {
            for m in 1..=5 {
                let source = build_gamma_d_m(n, m).unwrap();
                let target = build_gamma_d(m_cluster_period(n, m)).unwrap();
                let s = sigma(n, m).unwrap();
                for x in source.vertices() {
                    let lhs = s.get(source.tau(x).unwrap()).unwrap();
                    let rhs = target.translate(s.get(x).unwrap(), m as i64).unwrap();
                    assert_eq!(lhs, rhs, "n={n} m={m} x={x}");
                }
            }
        }
    }

    #[test]
    fn d_component_examples() {
        let d = d_component(4, 2).unwrap();
        assert_eq!(d.quiver.len(), 28);
        let d = d_component(3, 2).unwrap();
        assert_eq!(d.quiver.len(), 15);
        assert_eq!(restricted_ambient(3, 2).unwrap().len(), 25);
        let d = d_component(5, 1).unwrap();
        assert_eq!(d.quiver, build_gamma_d(5).unwrap());
        assert_eq!(d.sigma, VertexMapping::identity(d.quiver.vertices()));
    }

    #[test]
    fn decomposition_examples() {
        let r = decompose(4, 2).unwrap();
        assert_eq!(r.sizes(), vec![28, 21]);
        let r = decompose(4, 3).unwrap();
        let mut sizes = r.sizes();
        sizes.sort();
        assert_eq!(sizes, vec![30, 30, 40]);
        assert_eq!(sizes.iter().sum::<usize>(), 100);
        let r = decompose(5, 1).unwrap();
        assert_eq!(r.sizes(), vec![25]);
        assert_eq!(r.components[0].class, ComponentClass::D);
    }

    #[test]
    fn residue_rows_are_a_union_of_rows() {
        let x1 = residue_rows(4, 2, 1).unwrap();
        assert_eq!(x1.len(), 21);
        let rows: BTreeSet<_> = x1.iter().map(|v| v.row).collect();
        assert_eq!(rows.len(), 3);
    }

    #[test]
    fn bad_parameters() {
        assert!(sigma(2, 1).is_err());
        assert!(decompose(3, 0).is_err());
    }
}
