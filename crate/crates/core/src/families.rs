//! Constructors for the three quiver families: the cluster and m-cluster
//! Auslander-Reiten quivers of type D, and quotients of `ZA_r` by a power of
//! the translation.

use crate::error::{Error, Result};
use crate::label::{RowLabel, VertexLabel};
use crate::quiver::{Arrow, Provenance, TranslationQuiver};

/// Column count `nm - m + 1` of the m-cluster quiver of type `D_n`, which is
/// also the number of vertices of the punctured polygon.
pub fn m_cluster_period(n: usize, m: usize) -> usize {
    n * m - m + 1
}

/// Rows `0, 0bar, 1, ..., rank-2` of a type-D mesh.
pub fn d_rows(rank: usize) -> Vec<RowLabel> {
    let mut rows = vec![RowLabel::ZERO, RowLabel::ZeroBar];
    rows.extend((1..=rank - 2).map(RowLabel::Numeric));
    rows
}

fn check_d(n: usize, m: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::Parameter(format!("type D needs n >= 3, got {n}")));
    }
    if m < 1 {
        return Err(Error::Parameter(format!("m must be at least 1, got {m}")));
    }
    Ok(())
}

/// `Z_period x D_rank` mesh. The translation moves one column left; when
/// `twist` is set it also swaps `0` and `0bar` when leaving column 0.
fn d_mesh(rank: usize, period: usize, twist: bool, meta: Provenance) -> Result<TranslationQuiver> {
    let rows = d_rows(rank);
    let mut vertices = Vec::with_capacity(period * rows.len());
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut tau = Vec::new();
    for i in 0..period as i64 {
        let at = |row: RowLabel, col: i64| VertexLabel::new(col, row, period);
        for &row in &rows {
            let x = at(row, i);
            vertices.push(x);
            let t_row = if twist && i == 0 && row.is_fork() {
                row.bar()
            } else {
                row
            };
            tau.push((x, at(t_row, i - 1)));
        }
        for j in 1..=rank - 2 {
            let (hi, lo) = (RowLabel::Numeric(j), RowLabel::Numeric(j - 1));
            arrows.push((at(hi, i), at(lo, i)));
            arrows.push((at(lo, i), at(hi, i + 1)));
        }
        arrows.push((at(RowLabel::Numeric(1), i), at(RowLabel::ZeroBar, i)));
        arrows.push((at(RowLabel::ZeroBar, i), at(RowLabel::Numeric(1), i + 1)));
    }
    TranslationQuiver::new(period, vertices, arrows, tau, meta)
}

/// The Auslander-Reiten quiver of the cluster category of type `D_n`:
/// `n` columns, rows `0, 0bar, 1, ..., n-2`.
pub fn build_gamma_d(n: usize) -> Result<TranslationQuiver> {
    check_d(n, 1)?;
    let meta = Provenance {
        n: Some(n),
        m: Some(1),
        ..Provenance::family("gamma_d")
    };
    d_mesh(n, n, n % 2 == 1, meta)
}

/// The Auslander-Reiten quiver of the m-cluster category of type `D_n`:
/// `nm - m + 1` columns. The fork rows are swapped across the seam exactly
/// when `nm` is odd.
pub fn build_gamma_d_m(n: usize, m: usize) -> Result<TranslationQuiver> {
    check_d(n, m)?;
    let meta = Provenance {
        n: Some(n),
        m: Some(m),
        ..Provenance::family("gamma_d_m")
    };
    d_mesh(n, m_cluster_period(n, m), (n * m) % 2 == 1, meta)
}

/// `Z A_rows / tau^period`: rows `1..=rows`, down-arrows `(i,j)->(i,j-1)`,
/// up-arrows `(i,j)->(i+1,j+1)`, translation one column left.
pub fn build_za_quotient(rows: usize, period: usize) -> Result<TranslationQuiver> {
    if rows < 1 || period < 1 {
        return Err(Error::Parameter(format!(
            "ZA quotient needs rows >= 1 and period >= 1, got rows={rows}, period={period}"
        )));
    }
    let at = |col: i64, row: usize| VertexLabel::numeric(col, row, period);
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut tau = Vec::new();
    for i in 0..period as i64 {
        for j in 1..=rows {
            vertices.push(at(i, j));
            tau.push((at(i, j), at(i - 1, j)));
            if j > 1 {
                arrows.push((at(i, j), at(i, j - 1)));
            }
            if j < rows {
                arrows.push((at(i, j), at(i + 1, j + 1)));
            }
        }
    }
    let meta = Provenance {
        rows: Some(rows),
        ..Provenance::family("za_quotient")
    };
    TranslationQuiver::new(period, vertices, arrows, tau, meta)
}
