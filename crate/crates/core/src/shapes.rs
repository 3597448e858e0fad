//! Integer partitions, skew shapes and the derived partitions used for
//! Newton polytope bounds.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ShapeError;

/// A cell `(row, column)`, both 1-indexed.
pub type Cell = (usize, usize);

/// Weakly decreasing list of positive parts. Trailing zeros are trimmed so
/// that equality of partitions is equality of part lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ShapeError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotDecreasing(parts));
        }
        if parts.contains(&0) {
            return Err(ShapeError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing;
    /// zeros are trimmed.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (1-indexed); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let cols = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(cols)
    }

    /// `true` iff `other_i ≤ self_i` for all `i`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// The largest strict partition contained in `self`.
    pub fn flat(&self) -> Partition {
        let mut out: Vec<usize> = Vec::with_capacity(self.len());
        for (i, &p) in self.0.iter().enumerate() {
            let v = if i == 0 {
                p
            } else {
                let prev = out[i - 1];
                prev.saturating_sub(1).min(p)
            };
            if v == 0 {
                break;
            }
            out.push(v);
        }
        Partition(out)
    }

    /// `λ̄^(n)`: the partition of length `n` bounding the highest weights of
    /// `n`-variable set-valued fillings of `λ`.
    pub fn bar(&self, n: usize) -> Partition {
        let flat = self.flat();
        let k = flat.len();
        let parts = (1..=n)
            .map(|i| if i <= k { flat.part(i) + i - 1 } else { k })
            .collect();
        Partition::from_sorted(parts)
    }

    /// The staircase `(n, n-1, …, 1)`.
    pub fn staircase(n: usize) -> Partition {
        Partition((1..=n).rev().collect())
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all_of_size(size: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions `ν` with `self ⊇ ν`, including the empty one and
    /// `self` itself.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in 0..=outer[i].min(max) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Partition with the given column lengths, or `None` if they are not
    /// weakly decreasing.
    pub(crate) fn from_columns(cols: &[usize]) -> Option<Partition> {
        if cols.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let mut trimmed = cols.to_vec();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        Some(Partition(trimmed).conjugate())
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ShapeError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    /// Accepts `3,2,1` and the displayed form `(3,2,1)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s).trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| ShapeError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    /// Number of rows of the outer shape (some may be empty).
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.part(1)
    }

    /// Column range `(first, last)` of row `i`; `None` when the row is empty.
    pub fn row_range(&self, i: usize) -> Option<(usize, usize)> {
        let lo = self.inner.part(i) + 1;
        let hi = self.outer.part(i);
        (lo <= hi).then_some((lo, hi))
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        i >= 1 && j > self.inner.part(i) && j <= self.outer.part(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .flat_map(|i| (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| (i, j)))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Row range `(first, last)` of column `j`; `None` when the column is empty.
    pub fn col_range(&self, j: usize) -> Option<(usize, usize)> {
        let lo = self.inner.conjugate().part(j) + 1;
        let hi = self.outer.conjugate().part(j);
        (lo <= hi).then_some((lo, hi))
    }

    /// The transposed skew shape `outer' / inner'`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Whether the cells form one edge-connected piece (the empty shape
    /// counts as connected).
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        let Some(&start) = cells.first() else { return true };
        let mut seen = std::collections::BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some((i, j)) = stack.pop() {
            for c in [(i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)] {
                if self.contains_cell(c) && seen.insert(c) {
                    stack.push(c);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// All skew shapes with between 1 and `max_cells` cells in which every
    /// row and every column of the outer shape meets the shape. Each
    /// translation class appears once, with no blank rows or columns.
    pub fn compact_shapes(max_cells: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        let bounding = Partition(vec![max_cells; max_cells]);
        for outer in bounding.subpartitions() {
            if outer.is_empty() {
                continue;
            }
            // every row must keep at least one cell
            let inner_box = Partition::from_sorted(outer.0.iter().map(|p| p - 1).collect());
            for inner in inner_box.subpartitions() {
                let shape = SkewShape { outer: outer.clone(), inner };
                let size = shape.size();
                if size > max_cells {
                    continue;
                }
                if (1..=shape.num_cols()).all(|j| shape.col_range(j).is_some()) {
                    out.push(shape);
                }
            }
        }
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        out
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4,2,1").parts(), &[4, 2, 1]);
        assert!(p("").is_empty());
        assert!(p("0").is_empty());
        assert!("1,2".parse::<Partition>().is_err());
        let s: SkewShape = "4,2,1/1".parse().unwrap();
        assert_eq!(s.to_string(), "(4,2,1)/(1)");
        assert!("2,2/3".parse::<SkewShape>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("1,1,1").conjugate(), p("3"));
    }

    #[test]
    fn containment() {
        assert!(p("2,2").contains(&p("1")));
        assert!(!p("2,2").contains(&p("3")));
        assert!(p("4,2,1").contains(&p("")));
    }

    #[test]
    fn flat_and_bar() {
        assert_eq!(p("7,5,4,4,1,1").flat(), p("7,5,4,3,1"));
        assert_eq!(p("4,2,1").flat(), p("4,2,1"));
        assert_eq!(p("3,3,3").flat(), p("3,2,1"));
        assert_eq!(p("7,5,4,4,1,1").bar(3), p("7,6,6"));
        assert_eq!(p("7,5,4,4,1,1").bar(7), p("7,6,6,6,5,5,5"));
        assert_eq!(p("4,2,1").bar(2), p("4,3"));
    }

    #[test]
    fn cells_row_major() {
        let s: SkewShape = "2,2/1".parse().unwrap();
        assert_eq!(s.cells(), vec![(1, 2), (2, 1), (2, 2)]);
        assert_eq!(s.col_range(1), Some((2, 2)));
        assert_eq!(s.col_range(2), Some((1, 2)));
    }
}
