//! Two-letter set-valued tables, descent resolution, the normalization map
//! and the involutions `Φ_i` on set-valued reverse plane partitions that
//! exchange the multiplicities of `i` and `i+1`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::TableError;
use crate::shapes::{Cell, SkewShape};
use crate::svrpp::{trimmed, EntrySet, Svrpp, WeakComposition};

/// Nonempty subset of `{1, 2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letters {
    One,
    Both,
    Two,
}

impl Letters {
    pub fn min(self) -> u8 {
        if self == Letters::Two {
            2
        } else {
            1
        }
    }

    pub fn max(self) -> u8 {
        if self == Letters::One {
            1
        } else {
            2
        }
    }

    pub fn has_one(self) -> bool {
        self != Letters::Two
    }

    pub fn has_two(self) -> bool {
        self != Letters::One
    }

    fn size(self) -> u32 {
        if self == Letters::Both {
            2
        } else {
            1
        }
    }

    fn from_flags(one: bool, two: bool) -> Option<Self> {
        match (one, two) {
            (true, false) => Some(Letters::One),
            (true, true) => Some(Letters::Both),
            (false, true) => Some(Letters::Two),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Letters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letters::One => "1",
            Letters::Both => "12",
            Letters::Two => "2",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ColumnKind {
    OnePure,
    TwoPure,
    Mixed,
    Empty,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DescentKind {
    /// Mixed column followed by a 1-pure column.
    M1,
    /// 2-pure column followed by a mixed column.
    TwoM,
    /// 2-pure column followed by a 1-pure column.
    TwoOne,
    /// Two mixed columns.
    MM,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Descent {
    pub column: usize,
    pub kind: DescentKind,
}

/// A contiguous run of cells in one column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct Column {
    top: usize,
    cells: Vec<Letters>,
}

impl Column {
    fn bottom(&self) -> usize {
        self.top + self.cells.len() - 1
    }

    fn get(&self, row: usize) -> Option<Letters> {
        row.checked_sub(self.top).and_then(|k| self.cells.get(k).copied())
    }

    fn rows(&self) -> std::ops::RangeInclusive<usize> {
        self.top..=self.bottom()
    }

    fn kind(&self) -> ColumnKind {
        let one = self.cells.iter().any(|c| c.has_one());
        let two = self.cells.iter().any(|c| c.has_two());
        match (one, two) {
            (true, true) => ColumnKind::Mixed,
            (true, false) => ColumnKind::OnePure,
            (false, true) => ColumnKind::TwoPure,
            (false, false) => ColumnKind::Empty,
        }
    }
}

/// A filling of a finite set of cells by nonempty subsets of `{1,2}` whose
/// columns weakly increase. Cells of one column form a contiguous run of
/// rows; rows may have gaps, so restrictions of larger fillings to two
/// letters are representable directly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoLetterTable {
    columns: BTreeMap<usize, Column>,
}

impl TwoLetterTable {
    /// Builds a table from a cell map, checking column contiguity and
    /// weak increase.
    pub fn from_cells(cells: &BTreeMap<Cell, Letters>) -> Result<Self, TableError> {
        let mut by_col: BTreeMap<usize, Vec<(usize, Letters)>> = BTreeMap::new();
        for (&(r, c), &l) in cells {
            by_col.entry(c).or_default().push((r, l));
        }
        let mut columns = BTreeMap::new();
        for (c, mut entries) in by_col {
            entries.sort();
            let top = entries[0].0;
            if entries.iter().enumerate().any(|(k, &(r, _))| r != top + k) {
                return Err(TableError::Invalid(format!("column {c} is not contiguous")));
            }
            if entries.windows(2).any(|w| w[0].1.max() > w[1].1.min()) {
                return Err(TableError::NotColumnWeak(c));
            }
            columns.insert(c, Column { top, cells: entries.into_iter().map(|(_, l)| l).collect() });
        }
        Ok(TwoLetterTable { columns })
    }

    /// Parses the compact notation used for fillings (`". 1/12 2"`); every
    /// set must lie in `{1,2}`.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let (shape, rows) = crate::svrpp::parse_compact(text).map_err(|e| TableError::Invalid(e.to_string()))?;
        let mut cells = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            let off = shape.inner.part(i + 1);
            for (q, s) in row.iter().enumerate() {
                if s.largest() > 2 {
                    return Err(TableError::Invalid(format!("entry {} is not a letter 1 or 2", s.largest())));
                }
                let l = Letters::from_flags(s.contains(1), s.contains(2)).expect("nonempty");
                cells.insert((i + 1, off + q + 1), l);
            }
        }
        Self::from_cells(&cells)
    }

    /// Every column-weak two-letter filling of `shape`.
    pub fn all_on_shape(shape: &SkewShape) -> Vec<TwoLetterTable> {
        let cols: Vec<(usize, usize, usize)> =
            (1..=shape.num_cols()).filter_map(|j| shape.col_range(j).map(|(lo, hi)| (j, lo, hi - lo + 1))).collect();
        // a column of height h is 1^a (12)^e 2^b with a + e + b = h, e ∈ {0,1}
        let column_fills = |h: usize| -> Vec<Vec<Letters>> {
            let mut out = Vec::new();
            for e in 0..=1usize.min(h) {
                for a in 0..=h - e {
                    let b = h - e - a;
                    let mut v = vec![Letters::One; a];
                    v.extend(std::iter::repeat_n(Letters::Both, e));
                    v.extend(std::iter::repeat_n(Letters::Two, b));
                    out.push(v);
                }
            }
            out
        };
        let mut tables = vec![BTreeMap::new()];
        for &(j, top, h) in &cols {
            let fills = column_fills(h);
            let mut next = Vec::with_capacity(tables.len() * fills.len());
            for t in &tables {
                for f in &fills {
                    let mut t2: BTreeMap<usize, Column> = t.clone();
                    t2.insert(j, Column { top, cells: f.clone() });
                    next.push(t2);
                }
            }
            tables = next;
        }
        tables.into_iter().map(|columns| TwoLetterTable { columns }).collect()
    }

    pub fn cell(&self, (r, c): Cell) -> Option<Letters> {
        self.columns.get(&c).and_then(|col| col.get(r))
    }

    /// All cells in column-major order.
    pub fn cells(&self) -> Vec<(Cell, Letters)> {
        self.columns
            .iter()
            .flat_map(|(&c, col)| col.cells.iter().enumerate().map(move |(k, &l)| ((col.top + k, c), l)))
            .collect()
    }

    pub fn column_kind(&self, c: usize) -> ColumnKind {
        self.columns.get(&c).map_or(ColumnKind::Empty, Column::kind)
    }

    /// Swaps the letter of every pure column; mixed columns are unchanged.
    pub fn flip(&self) -> TwoLetterTable {
        let mut out = self.clone();
        for col in out.columns.values_mut() {
            match col.kind() {
                ColumnKind::OnePure => col.cells.iter_mut().for_each(|c| *c = Letters::Two),
                ColumnKind::TwoPure => col.cells.iter_mut().for_each(|c| *c = Letters::One),
                _ => {}
            }
        }
        out
    }

    fn descent_kind(&self, k: usize) -> Option<DescentKind> {
        let left = self.columns.get(&k)?;
        let right = self.columns.get(&(k + 1))?;
        let lo = left.top.max(right.top);
        let hi = left.bottom().min(right.bottom());
        let found = (lo..=hi).any(|r| left.get(r).unwrap().max() == 2 && right.get(r).unwrap().min() == 1);
        if !found {
            return None;
        }
        Some(match (left.kind(), right.kind()) {
            (ColumnKind::Mixed, ColumnKind::OnePure) => DescentKind::M1,
            (ColumnKind::TwoPure, ColumnKind::Mixed) => DescentKind::TwoM,
            (ColumnKind::TwoPure, ColumnKind::OnePure) => DescentKind::TwoOne,
            (ColumnKind::Mixed, ColumnKind::Mixed) => DescentKind::MM,
            _ => unreachable!("a descent needs a 2 on the left and a 1 on the right"),
        })
    }

    /// All descents in increasing column order.
    pub fn descents(&self) -> Vec<Descent> {
        self.columns.keys().filter_map(|&k| self.descent_kind(k).map(|kind| Descent { column: k, kind })).collect()
    }

    pub fn is_descent_free(&self) -> bool {
        self.columns.keys().all(|&k| self.descent_kind(k).is_none())
    }

    /// Resolves the descent between columns `k` and `k+1`.
    pub fn resolve(&self, k: usize) -> Result<TwoLetterTable, TableError> {
        let kind = self.descent_kind(k).ok_or(TableError::NotADescent(k))?;
        let mut out = self.clone();
        let left = &self.columns[&k];
        let right = &self.columns[&(k + 1)];
        match kind {
            DescentKind::MM => return Err(TableError::UnresolvableMM(k)),
            DescentKind::TwoOne => {
                out.columns.get_mut(&k).unwrap().cells.iter_mut().for_each(|c| *c = Letters::One);
                out.columns.get_mut(&(k + 1)).unwrap().cells.iter_mut().for_each(|c| *c = Letters::Two);
            }
            DescentKind::M1 => {
                let r = left.rows().find(|&r| left.get(r).unwrap().has_two()).unwrap();
                let star = left.get(r).unwrap();
                if right.get(r).is_none() {
                    return Err(TableError::Invalid(format!("row {r} missing from column {}", k + 1)));
                }
                out.columns.get_mut(&k).unwrap().cells.iter_mut().for_each(|c| *c = Letters::One);
                let col = out.columns.get_mut(&(k + 1)).unwrap();
                let top = col.top;
                for (q, c) in col.cells.iter_mut().enumerate() {
                    *c = match (top + q).cmp(&r) {
                        std::cmp::Ordering::Less => Letters::One,
                        std::cmp::Ordering::Equal => star,
                        std::cmp::Ordering::Greater => Letters::Two,
                    };
                }
            }
            DescentKind::TwoM => {
                let r = right.rows().rev().find(|&r| right.get(r).unwrap().has_one()).unwrap();
                let star = right.get(r).unwrap();
                if left.get(r).is_none() {
                    return Err(TableError::Invalid(format!("row {r} missing from column {k}")));
                }
                let col = out.columns.get_mut(&k).unwrap();
                let top = col.top;
                for (q, c) in col.cells.iter_mut().enumerate() {
                    *c = match (top + q).cmp(&r) {
                        std::cmp::Ordering::Less => Letters::One,
                        std::cmp::Ordering::Equal => star,
                        std::cmp::Ordering::Greater => Letters::Two,
                    };
                }
                out.columns.get_mut(&(k + 1)).unwrap().cells.iter_mut().for_each(|c| *c = Letters::Two);
            }
        }
        Ok(out)
    }

    /// For each mixed column, in increasing column order, the smallest row
    /// containing a 2.
    pub fn seplist(&self) -> Vec<usize> {
        self.mixed_separators().into_iter().map(|(_, r)| r).collect()
    }

    fn mixed_separators(&self) -> Vec<(usize, usize)> {
        self.columns
            .iter()
            .filter(|(_, col)| col.kind() == ColumnKind::Mixed)
            .map(|(&c, col)| (c, col.rows().find(|&r| col.get(r).unwrap().has_two()).unwrap()))
            .collect()
    }

    /// Separators weakly decrease, strictly where the later column holds a
    /// `{1,2}` box.
    pub fn is_benign(&self) -> bool {
        self.mixed_separators().windows(2).all(|w| {
            let (_, s0) = w[0];
            let (c1, s1) = w[1];
            let strict = self.columns[&c1].cells.contains(&Letters::Both);
            if strict {
                s0 > s1
            } else {
                s0 >= s1
            }
        })
    }

    /// `Σ_j j · sig(column j)` with sig 2 for 1-pure, 1 for mixed, 0 otherwise.
    pub fn ell(&self) -> usize {
        self.columns
            .iter()
            .map(|(&c, col)| {
                c * match col.kind() {
                    ColumnKind::OnePure => 2,
                    ColumnKind::Mixed => 1,
                    _ => 0,
                }
            })
            .sum()
    }

    /// Number of columns containing 1 and containing 2.
    pub fn ircont(&self) -> (u32, u32) {
        self.columns.values().fold((0, 0), |(a, b), col| {
            (a + u32::from(col.cells.iter().any(|c| c.has_one())), b + u32::from(col.cells.iter().any(|c| c.has_two())))
        })
    }

    fn max_row(&self) -> usize {
        self.columns.values().map(Column::bottom).max().unwrap_or(0)
    }

    /// Redundant boxes per row: `(r,c)` with `(r+1,c)` present and
    /// `max T(r,c) = min T(r+1,c)`.
    pub fn ceq(&self) -> WeakComposition {
        let mut out = vec![0u32; self.max_row()];
        for col in self.columns.values() {
            for r in col.top..col.bottom() {
                if col.get(r).unwrap().max() == col.get(r + 1).unwrap().min() {
                    out[r - 1] += 1;
                }
            }
        }
        trimmed(out)
    }

    pub fn excess(&self) -> WeakComposition {
        let mut out = vec![0u32; self.max_row()];
        for col in self.columns.values() {
            for (q, c) in col.cells.iter().enumerate() {
                out[col.top + q - 1] += c.size() - 1;
            }
        }
        trimmed(out)
    }

    /// Resolves descents, always the leftmost first, until none remain.
    pub fn norm(&self) -> Result<TwoLetterTable, TableError> {
        self.norm_by(|_| 0)
    }

    /// Resolves descents in an order given by `choose`, which receives the
    /// current descent list and returns an index into it.
    pub fn norm_by(&self, mut choose: impl FnMut(&[Descent]) -> usize) -> Result<TwoLetterTable, TableError> {
        let mut t = self.clone();
        loop {
            let ds = t.descents();
            if ds.is_empty() {
                return Ok(t);
            }
            let d = ds[choose(&ds)];
            t = t.resolve(d.column)?;
        }
    }

    /// Resolves descents in a uniformly random order.
    pub fn norm_random<R: Rng>(&self, rng: &mut R) -> Result<TwoLetterTable, TableError> {
        self.norm_by(|ds| rng.gen_range(0..ds.len()))
    }

    /// The leftmost-first resolution chain: each resolved descent and the
    /// table it produced.
    pub fn norm_trace(&self) -> Result<Vec<(Descent, TwoLetterTable)>, TableError> {
        let mut t = self.clone();
        let mut out = Vec::new();
        while let Some(&d) = t.descents().first() {
            t = t.resolve(d.column)?;
            out.push((d, t.clone()));
        }
        Ok(out)
    }

    /// Applies a letter change to every pure column of the given kind;
    /// used by crystal operators.
    pub(crate) fn set_column(&mut self, c: usize, l: Letters) {
        if let Some(col) = self.columns.get_mut(&c) {
            col.cells.iter_mut().for_each(|x| *x = l);
        }
    }

    /// Pure columns in increasing order with their kinds.
    pub(crate) fn pure_columns(&self) -> Vec<(usize, ColumnKind)> {
        self.columns
            .iter()
            .map(|(&c, col)| (c, col.kind()))
            .filter(|(_, k)| matches!(k, ColumnKind::OnePure | ColumnKind::TwoPure))
            .collect()
    }
}

impl fmt::Display for TwoLetterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.max_row();
        let cols = self.columns.keys().next_back().copied().unwrap_or(0);
        for r in 1..=rows {
            if r > 1 {
                write!(f, "/")?;
            }
            let last = (1..=cols).rev().find(|&c| self.cell((r, c)).is_some()).unwrap_or(0);
            for c in 1..=last {
                if c > 1 {
                    write!(f, " ")?;
                }
                match self.cell((r, c)) {
                    Some(l) => write!(f, "{l}")?,
                    None => write!(f, ".")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TwoLetterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoLetterTable[{self}]")
    }
}

/// The cells of `t` meeting `{i, i+1}`, relabeled `i → 1`, `i+1 → 2`.
pub fn restrict(t: &Svrpp, i: u32) -> TwoLetterTable {
    let mut cells = BTreeMap::new();
    for c in t.shape().cells() {
        let s = t.cell(c);
        if let Some(l) = Letters::from_flags(s.contains(i), s.contains(i + 1)) {
            cells.insert(c, l);
        }
    }
    TwoLetterTable::from_cells(&cells).expect("restriction of an SVRPP is column-weak")
}

/// Writes a relabeled two-letter table back into the cells of `t`.
pub fn splice(t: &Svrpp, i: u32, table: &TwoLetterTable) -> Svrpp {
    let pair = EntrySet::singleton(i).with(i + 1);
    let mut out = t.clone();
    for (c, l) in table.cells() {
        let mut s = t.cell(c).difference(pair);
        if l.has_one() {
            s = s.with(i);
        }
        if l.has_two() {
            s = s.with(i + 1);
        }
        out.set_cell(c, s);
    }
    out
}

/// `Φ_i`: flips and normalizes the `{i, i+1}` part of `t`.
pub fn phi(t: &Svrpp, i: u32) -> Result<Svrpp, TableError> {
    let table = restrict(t, i).flip().norm()?;
    Ok(splice(t, i, &table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> TwoLetterTable {
        TwoLetterTable::parse(s).unwrap()
    }

    #[test]
    fn flip_basics() {
        assert_eq!(tab("1").flip(), tab("2"));
        let mixed = tab("1 12/2 2");
        assert_eq!(tab("1/2").flip(), tab("1/2"));
        assert_eq!(mixed.flip().flip(), mixed);
    }

    #[test]
    fn simple_descent() {
        let t = tab("2 1");
        assert_eq!(t.descents(), vec![Descent { column: 1, kind: DescentKind::TwoOne }]);
        assert_eq!(t.resolve(1).unwrap(), tab("1 2"));
        assert_eq!(t.resolve(2), Err(TableError::NotADescent(2)));
    }

    #[test]
    fn ell_values() {
        assert_eq!(tab("2 2/2 2").ell(), 0);
        assert_eq!(tab(". . 1").ell(), 6);
    }

    #[test]
    fn no_mixed_columns_is_benign() {
        let t = tab("1 2/1 2");
        assert!(t.seplist().is_empty());
        assert!(t.is_benign());
    }
}
