//! Vertex coordinates: a column in a cyclic group and a row of a type-D
//! (or type-A) mesh.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Row of a vertex. `ZeroBar` is the second fork row sitting next to row 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowLabel {
    Numeric(usize),
    ZeroBar,
}

impl RowLabel {
    pub const ZERO: RowLabel = RowLabel::Numeric(0);

    /// Swaps `0` and `0bar`, fixes every other row.
    pub fn bar(self) -> RowLabel {
        match self {
            RowLabel::Numeric(0) => RowLabel::ZeroBar,
            RowLabel::ZeroBar => RowLabel::Numeric(0),
            other => other,
        }
    }

    /// True for the two fork rows `0` and `0bar`.
    pub fn is_fork(self) -> bool {
        matches!(self, RowLabel::Numeric(0) | RowLabel::ZeroBar)
    }

    /// Height of the row, with both fork rows at height 0.
    pub fn height(self) -> usize {
        match self {
            RowLabel::Numeric(k) => k,
            RowLabel::ZeroBar => 0,
        }
    }

    // 0 < 0bar < 1 < 2 < ...
    fn sort_key(self) -> usize {
        match self {
            RowLabel::Numeric(0) => 0,
            RowLabel::ZeroBar => 1,
            RowLabel::Numeric(k) => k + 1,
        }
    }
}

impl Ord for RowLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for RowLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Numeric(k) => write!(f, "{k}"),
            RowLabel::ZeroBar => f.write_str("0bar"),
        }
    }
}

impl FromStr for RowLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "0bar" => Ok(RowLabel::ZeroBar),
            _ => s
                .parse::<usize>()
                .map(RowLabel::Numeric)
                .map_err(|_| Error::Parse(format!("bad row label {s:?}"))),
        }
    }
}

/// A vertex `(col, row)`. The column is a residue modulo the period of the
/// quiver that owns the vertex and is always stored in `0..period`.
///
/// Vertices order by row first (`0 < 0bar < 1 < ...`) and then by column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub col: usize,
    pub row: RowLabel,
}

impl VertexLabel {
    /// Builds a vertex from any integer column representative.
    pub fn new(col: i64, row: RowLabel, period: usize) -> Self {
        assert!(period > 0, "period must be positive");
        VertexLabel {
            col: col.rem_euclid(period as i64) as usize,
            row,
        }
    }

    pub fn numeric(col: i64, row: usize, period: usize) -> Self {
        Self::new(col, RowLabel::Numeric(row), period)
    }

    pub fn with_row(self, row: RowLabel) -> Self {
        VertexLabel { col: self.col, row }
    }

    /// Same column, row replaced by its bar.
    pub fn bar(self) -> Self {
        self.with_row(self.row.bar())
    }

    /// Column shifted by `delta` modulo `period`.
    pub fn shift(self, delta: i64, period: usize) -> Self {
        Self::new(self.col as i64 + delta, self.row, period)
    }
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.row.cmp(&other.row).then(self.col.cmp(&other.col))
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_is_an_involution_fixing_positive_rows() {
        assert_eq!(RowLabel::ZERO.bar(), RowLabel::ZeroBar);
        assert_eq!(RowLabel::ZeroBar.bar(), RowLabel::ZERO);
        assert_eq!(RowLabel::Numeric(3).bar(), RowLabel::Numeric(3));
        assert_ne!(RowLabel::ZERO, RowLabel::ZeroBar);
    }

    #[test]
    fn row_order() {
        let mut rows = vec![
            RowLabel::Numeric(2),
            RowLabel::ZeroBar,
            RowLabel::Numeric(1),
            RowLabel::ZERO,
        ];
        rows.sort();
        assert_eq!(
            rows,
            vec![
                RowLabel::ZERO,
                RowLabel::ZeroBar,
                RowLabel::Numeric(1),
                RowLabel::Numeric(2)
            ]
        );
    }

    #[test]
    fn columns_are_canonical() {
        assert_eq!(VertexLabel::numeric(-1, 2, 7).col, 6);
        assert_eq!(VertexLabel::numeric(10, 2, 7).col, 3);
        assert_eq!(VertexLabel::numeric(3, 2, 7).shift(-5, 7).col, 5);
    }

    #[test]
    fn row_parse_roundtrip() {
        for r in [RowLabel::ZERO, RowLabel::ZeroBar, RowLabel::Numeric(12)] {
            assert_eq!(r.to_string().parse::<RowLabel>().unwrap(), r);
        }
        assert!("1bar".parse::<RowLabel>().is_err());
    }
}
