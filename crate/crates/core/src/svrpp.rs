//! Set-valued reverse plane partitions: fillings of a skew shape by nonempty
//! sets of positive integers whose rows and columns weakly increase in the
//! order `A ≤ B ⇔ max A ≤ min B`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::FillingError;
use crate::polyring::ExponentKey;
use crate::shapes::{Cell, Partition, SkewShape};
use crate::Poly;

/// Largest entry an [`EntrySet`] can hold.
pub const MAX_ENTRY: u32 = 64;

/// Finite set of integers in `1..=64`, stored as a bitmask (bit `k-1` for
/// entry `k`). Min and max are single instructions.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EntrySet(u64);

impl EntrySet {
    pub const EMPTY: EntrySet = EntrySet(0);

    pub fn from_bits(bits: u64) -> Self {
        EntrySet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(k: u32) -> Self {
        debug_assert!((1..=MAX_ENTRY).contains(&k));
        EntrySet(1u64 << (k - 1))
    }

    /// `{lo, lo+1, …, hi}`; empty when `lo > hi`.
    pub fn interval(lo: u32, hi: u32) -> Self {
        if lo > hi {
            return EntrySet::EMPTY;
        }
        let width = hi - lo + 1;
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        EntrySet(mask << (lo - 1))
    }

    pub fn from_entries(entries: &[u32]) -> Result<Self, FillingError> {
        let mut s = EntrySet::EMPTY;
        for &e in entries {
            if !(1..=MAX_ENTRY).contains(&e) {
                return Err(FillingError::EntryOutOfRange(e));
            }
            s = s.with(e);
        }
        Ok(s)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    /// Smallest entry (the pivot). Panics on the empty set.
    pub fn smallest(self) -> u32 {
        assert!(self.0 != 0, "min of empty set");
        self.0.trailing_zeros() + 1
    }

    /// Largest entry. Panics on the empty set.
    pub fn largest(self) -> u32 {
        assert!(self.0 != 0, "max of empty set");
        64 - self.0.leading_zeros()
    }

    pub fn contains(self, k: u32) -> bool {
        (1..=MAX_ENTRY).contains(&k) && self.0 & (1u64 << (k - 1)) != 0
    }

    pub fn with(self, k: u32) -> Self {
        EntrySet(self.0 | EntrySet::singleton(k).0)
    }

    pub fn without(self, k: u32) -> Self {
        if self.contains(k) {
            EntrySet(self.0 & !EntrySet::singleton(k).0)
        } else {
            self
        }
    }

    pub fn union(self, other: EntrySet) -> Self {
        EntrySet(self.0 | other.0)
    }

    pub fn intersection(self, other: EntrySet) -> Self {
        EntrySet(self.0 & other.0)
    }

    pub fn difference(self, other: EntrySet) -> Self {
        EntrySet(self.0 & !other.0)
    }

    /// Entries in increasing order.
    pub fn iter(self) -> impl DoubleEndedIterator<Item = u32> {
        (1..=MAX_ENTRY).filter(move |&k| self.contains(k))
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl fmt::Debug for EntrySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, k) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

/// Compact text: digits run together (`123`), or braces when an entry has
/// more than one digit (`{3,10}`).
impl fmt::Display for EntrySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.iter().all(|k| k < 10) {
            for k in self.iter() {
                write!(f, "{k}")?;
            }
            Ok(())
        } else {
            let v: Vec<String> = self.iter().map(|k| k.to_string()).collect();
            write!(f, "{{{}}}", v.join(","))
        }
    }
}

/// Weak composition with trailing zeros trimmed.
pub type WeakComposition = Vec<u32>;

pub(crate) fn trimmed(mut v: Vec<u32>) -> WeakComposition {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Parses one compact cell: `.` (outside the shape), digits, or `{a,b}`.
pub(crate) fn parse_cell(tok: &str) -> Result<Option<EntrySet>, FillingError> {
    if tok == "." || tok == "_" {
        return Ok(None);
    }
    let entries: Vec<u32> = if let Some(inner) = tok.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        inner
            .split(',')
            .map(|e| e.trim().parse::<u32>().map_err(|_| FillingError::Parse(tok.to_string())))
            .collect::<Result<_, _>>()?
    } else {
        tok.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| FillingError::Parse(tok.to_string())))
            .collect::<Result<_, _>>()?
    };
    let set = EntrySet::from_entries(&entries)?;
    if set.is_empty() || set.len() as usize != entries.len() {
        return Err(FillingError::Parse(tok.to_string()));
    }
    Ok(Some(set))
}

/// Parses `". 1/1 12"`-style text: rows separated by `/`, cells by spaces,
/// `.` for cells of the inner shape. Returns the shape and the row fillings.
pub(crate) fn parse_compact(text: &str) -> Result<(SkewShape, Vec<Vec<EntrySet>>), FillingError> {
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for row in text.split('/') {
        let mut skipped = 0;
        let mut cells = Vec::new();
        for tok in row.split_whitespace() {
            match parse_cell(tok)? {
                None if cells.is_empty() => skipped += 1,
                None => return Err(FillingError::Parse(text.to_string())),
                Some(s) => cells.push(s),
            }
        }
        outer.push(skipped + cells.len());
        inner.push(skipped);
        rows.push(cells);
    }
    let bad = |_| FillingError::Parse(text.to_string());
    let shape = SkewShape::new(Partition::new(outer).map_err(bad)?, Partition::new(inner).map_err(bad)?).map_err(bad)?;
    rows.truncate(shape.num_rows());
    Ok((shape, rows))
}

pub(crate) fn fmt_compact(f: &mut fmt::Formatter<'_>, shape: &SkewShape, rows: &[Vec<EntrySet>]) -> fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, "/")?;
        }
        let mut first = true;
        for _ in 0..shape.inner.part(i + 1) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, ".")?;
        }
        for c in row {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{c}")?;
        }
    }
    Ok(())
}

/// A set-valued reverse plane partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Svrpp {
    shape: SkewShape,
    /// `rows[i-1][j - inner_i - 1]` is the set in cell `(i, j)`.
    rows: Vec<Vec<EntrySet>>,
}

impl Svrpp {
    /// Validates and builds a filling from row lists of sets.
    pub fn new(shape: SkewShape, rows: Vec<Vec<EntrySet>>) -> Result<Self, FillingError> {
        if rows.len() != shape.num_rows() || (1..=shape.num_rows()).any(|i| rows[i - 1].len() != shape.row_len(i)) {
            return Err(FillingError::ShapeMismatch(shape.to_string()));
        }
        let t = Svrpp { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(shape: SkewShape, rows: Vec<Vec<EntrySet>>) -> Self {
        Svrpp { shape, rows }
    }

    /// Parses the compact notation, e.g. `". 1/1 12"` for a filling of
    /// `(2,2)/(1)`.
    pub fn parse(text: &str) -> Result<Self, FillingError> {
        let (shape, rows) = parse_compact(text)?;
        Svrpp::new(shape, rows)
    }

    pub fn from_lists(shape: SkewShape, rows: &[Vec<Vec<u32>>]) -> Result<Self, FillingError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| EntrySet::from_entries(c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Svrpp::new(shape, rows)
    }

    fn validate(&self) -> Result<(), FillingError> {
        for (i, j) in self.shape.cells() {
            let s = self.cell((i, j));
            if s.is_empty() {
                return Err(FillingError::EmptyCell(i, j));
            }
            if self.shape.contains_cell((i, j + 1)) && s.largest() > self.cell((i, j + 1)).smallest() {
                return Err(FillingError::NotIncreasing(i, j));
            }
            if self.shape.contains_cell((i + 1, j)) && s.largest() > self.cell((i + 1, j)).smallest() {
                return Err(FillingError::NotIncreasing(i, j));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<EntrySet>] {
        &self.rows
    }

    /// The set in cell `(i, j)`. Panics outside the shape.
    pub fn cell(&self, (i, j): Cell) -> EntrySet {
        self.rows[i - 1][j - self.shape.inner.part(i) - 1]
    }

    pub fn get(&self, c: Cell) -> Option<EntrySet> {
        self.shape.contains_cell(c).then(|| self.cell(c))
    }

    pub(crate) fn set_cell(&mut self, (i, j): Cell, s: EntrySet) {
        let off = self.shape.inner.part(i);
        self.rows[i - 1][j - off - 1] = s;
    }

    /// Largest entry anywhere, 0 for the empty filling.
    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().map(|s| s.largest()).max().unwrap_or(0)
    }

    /// Union of the sets in column `j`.
    pub fn column_union(&self, j: usize) -> EntrySet {
        match self.shape.col_range(j) {
            None => EntrySet::EMPTY,
            Some((lo, hi)) => (lo..=hi).fold(EntrySet::EMPTY, |acc, i| acc.union(self.cell((i, j)))),
        }
    }

    /// `ircont_i` = number of columns containing `i`.
    pub fn ircont(&self) -> WeakComposition {
        let mut out = vec![0u32; self.max_entry() as usize];
        for j in 1..=self.shape.num_cols() {
            for k in self.column_union(j).iter() {
                out[k as usize - 1] += 1;
            }
        }
        trimmed(out)
    }

    /// Number of redundant boxes per row: `(i,j)` with `(i+1,j)` in the
    /// shape and `max T(i,j) = min T(i+1,j)`.
    pub fn ceq(&self) -> WeakComposition {
        let out = (1..=self.shape.num_rows())
            .map(|i| {
                self.shape
                    .row_range(i)
                    .map(|(lo, hi)| {
                        (lo..=hi)
                            .filter(|&j| self.get((i + 1, j)).is_some_and(|below| self.cell((i, j)).largest() == below.smallest()))
                            .count() as u32
                    })
                    .unwrap_or(0)
            })
            .collect();
        trimmed(out)
    }

    /// Per-row excess `Σ_j (|T(i,j)| - 1)`.
    pub fn excess(&self) -> WeakComposition {
        trimmed(self.rows.iter().map(|r| r.iter().map(|s| s.len() - 1).sum()).collect())
    }

    /// Monomial `x^ircont t^ceq w^ex` in `n` x-variables.
    pub fn weight_key(&self, n: usize) -> ExponentKey {
        let mut x = self.ircont();
        assert!(x.len() <= n, "entries exceed the number of variables");
        x.resize(n, 0);
        ExponentKey::new(x, self.ceq(), self.excess(), 0, 0)
    }

    /// `true` when the pivot of `(i,j)` equals the maximum of the cell above.
    fn pivot_ignored(&self, (i, j): Cell) -> bool {
        i > 1 && self.get((i - 1, j)).is_some_and(|above| above.largest() == self.cell((i, j)).smallest())
    }

    /// Row reading word and its height vector.
    pub fn reading_word(&self) -> (Word, HeightVector) {
        let mut w = Vec::new();
        let mut h = Vec::new();
        for i in (1..=self.shape.num_rows()).rev() {
            let Some((lo, hi)) = self.shape.row_range(i) else { continue };
            for j in (lo..=hi).rev() {
                let s = self.cell((i, j));
                for k in s.iter().rev().take(s.len() as usize - 1) {
                    w.push(k);
                    h.push(i);
                }
            }
            for j in lo..=hi {
                if !self.pivot_ignored((i, j)) {
                    w.push(self.cell((i, j)).smallest());
                    h.push(i);
                }
            }
        }
        (Word(w), HeightVector(h))
    }

    /// Column reading word: columns left to right, each read in decreasing
    /// order after dropping ignored pivots.
    pub fn column_reading_word(&self) -> Word {
        let mut w = Vec::new();
        for j in 1..=self.shape.num_cols() {
            let Some((lo, hi)) = self.shape.col_range(j) else { continue };
            let mut col = Vec::new();
            for i in lo..=hi {
                let s = self.cell((i, j));
                let skip_pivot = self.pivot_ignored((i, j));
                col.extend(s.iter().skip(usize::from(skip_pivot)));
            }
            col.sort_unstable_by(|a, b| b.cmp(a));
            w.extend(col);
        }
        Word(w)
    }

    pub fn to_json(&self) -> SvrppJson {
        SvrppJson {
            shape: ShapeJson { outer: self.shape.outer.parts().to_vec(), inner: self.shape.inner.parts().to_vec() },
            rows: self.rows.iter().map(|r| r.iter().map(|s| s.to_vec()).collect()).collect(),
        }
    }

    pub fn from_json(j: &SvrppJson) -> Result<Self, FillingError> {
        let bad = |_| FillingError::Parse("shape".into());
        let shape = SkewShape::new(Partition::new(j.shape.outer.clone()).map_err(bad)?, Partition::new(j.shape.inner.clone()).map_err(bad)?)
            .map_err(bad)?;
        Svrpp::from_lists(shape, &j.rows)
    }
}

impl fmt::Display for Svrpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_compact(f, &self.shape, &self.rows)
    }
}

impl fmt::Debug for Svrpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Svrpp[{self}]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
}

/// JSON form `{shape: {outer, inner}, rows: [[[..]]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SvrppJson {
    pub shape: ShapeJson,
    pub rows: Vec<Vec<Vec<u32>>>,
}

/// A word in positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<u32>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&k| k > 9) { "," } else { "" };
        let v: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", v.join(sep))
    }
}

/// Row index of every letter of a reading word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeightVector(pub Vec<usize>);

/// Every suffix has at least as many `a`'s as `b`'s whenever `a < b`.
pub fn is_reverse_lattice(w: &Word) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &k in w.0.iter().rev() {
        let k = k as usize;
        if counts.len() < k + 1 {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
        if k > 1 && counts[k] > counts[k - 1] {
            return false;
        }
    }
    true
}

/// Lazily enumerates `SVRPP^n(shape)` in row-major backtracking order;
/// candidate sets in each cell are tried in increasing bitmask order.
pub struct SvrppIter {
    shape: SkewShape,
    n: u32,
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    cands: Vec<Vec<EntrySet>>,
    idx: Vec<usize>,
    fill: Vec<EntrySet>,
    depth: usize,
    started: bool,
    finished: bool,
}

/// All nonempty subsets of `{lo..=n}` in increasing bitmask order.
pub(crate) fn subsets_from(lo: u32, n: u32) -> Vec<EntrySet> {
    if lo > n {
        return Vec::new();
    }
    let width = n - lo + 1;
    (1u64..(1u64 << width)).map(|m| EntrySet::from_bits(m << (lo - 1))).collect()
}

impl SvrppIter {
    fn new(shape: &SkewShape, n: u32) -> Self {
        assert!(n <= MAX_ENTRY, "at most {MAX_ENTRY} letters are supported");
        let cells = shape.cells();
        let pos = |c: Cell| cells.iter().position(|&d| d == c);
        let left = cells.iter().map(|&(i, j)| if j > 1 { pos((i, j - 1)) } else { None }).collect();
        let up = cells.iter().map(|&(i, j)| if i > 1 { pos((i - 1, j)) } else { None }).collect();
        let len = cells.len();
        SvrppIter {
            shape: shape.clone(),
            n,
            cells,
            left,
            up,
            cands: vec![Vec::new(); len],
            idx: vec![0; len],
            fill: vec![EntrySet::EMPTY; len],
            depth: 0,
            started: false,
            finished: false,
        }
    }

    fn candidates(&self, p: usize) -> Vec<EntrySet> {
        let lo = [self.left[p], self.up[p]].iter().flatten().map(|&q| self.fill[q].largest()).max().unwrap_or(1);
        subsets_from(lo, self.n)
    }

    fn build(&self) -> Svrpp {
        let mut rows: Vec<Vec<EntrySet>> = (1..=self.shape.num_rows()).map(|i| Vec::with_capacity(self.shape.row_len(i))).collect();
        for (p, &(i, _)) in self.cells.iter().enumerate() {
            rows[i - 1].push(self.fill[p]);
        }
        Svrpp::new_unchecked(self.shape.clone(), rows)
    }
}

impl Iterator for SvrppIter {
    type Item = Svrpp;

    fn next(&mut self) -> Option<Svrpp> {
        if self.finished {
            return None;
        }
        let total = self.cells.len();
        if !self.started {
            self.started = true;
            if total == 0 {
                self.finished = true;
                return Some(self.build());
            }
            self.depth = 0;
            self.cands[0] = self.candidates(0);
            self.idx[0] = 0;
        } else {
            self.depth = total - 1;
            self.idx[self.depth] += 1;
        }
        loop {
            let d = self.depth;
            if self.idx[d] >= self.cands[d].len() {
                if d == 0 {
                    self.finished = true;
                    return None;
                }
                self.depth -= 1;
                self.idx[self.depth] += 1;
                continue;
            }
            self.fill[d] = self.cands[d][self.idx[d]];
            if d + 1 == total {
                return Some(self.build());
            }
            self.depth += 1;
            self.cands[self.depth] = self.candidates(self.depth);
            self.idx[self.depth] = 0;
        }
    }
}

/// All SVRPPs of `shape` with entries in `1..=n`.
pub fn enumerate(shape: &SkewShape, n: u32) -> SvrppIter {
    SvrppIter::new(shape, n)
}

/// `G_{shape}(x_1..x_n; t; w) = Σ x^ircont t^ceq w^ex`.
pub fn hybrid_polynomial(shape: &SkewShape, n: u32) -> Poly {
    let mut p = Poly::zero(n as usize);
    for t in enumerate(shape, n) {
        p.add_term(t.weight_key(n as usize), BigInt::one());
    }
    p
}

/// Inverts the reading map: the unique SVRPP of `shape` with reading word
/// `w`, height vector `h` and excess `ex`, or `None` if there is none.
pub fn reconstruct(shape: &SkewShape, w: &Word, h: &HeightVector, ex: &[u32]) -> Option<Svrpp> {
    if w.0.len() != h.0.len() || w.0.iter().any(|&k| k == 0 || k > MAX_ENTRY) {
        return None;
    }
    let rows_n = shape.num_rows();
    if h.0.iter().any(|&r| r == 0 || r > rows_n) || h.0.windows(2).any(|p| p[0] < p[1]) {
        return None;
    }
    let mut fill: Vec<Vec<EntrySet>> = (1..=rows_n).map(|i| vec![EntrySet::EMPTY; shape.row_len(i)]).collect();
    for i in 1..=rows_n {
        let letters: Vec<u32> = w.0.iter().zip(&h.0).filter(|(_, &r)| r == i).map(|(&k, _)| k).collect();
        let alpha = ex.get(i - 1).copied().unwrap_or(0) as usize;
        if alpha > letters.len() {
            return None;
        }
        let (u, v) = letters.split_at(alpha);
        let Some((lo, hi)) = shape.row_range(i) else {
            if letters.is_empty() {
                continue;
            }
            return None;
        };
        let above = |j: usize, fill: &Vec<Vec<EntrySet>>| -> u32 {
            if i > 1 && shape.contains_cell((i - 1, j)) {
                fill[i - 2][j - shape.inner.part(i - 1) - 1].largest()
            } else {
                0
            }
        };
        let off = shape.inner.part(i);
        let mut pivots = vec![0u32; hi - lo + 1];
        let mut remaining = v.len();
        for j in (lo..=hi).rev() {
            let a = above(j, &fill);
            if remaining > 0 && v[remaining - 1] > a {
                pivots[j - lo] = v[remaining - 1];
                remaining -= 1;
            } else {
                pivots[j - lo] = a;
            }
        }
        if remaining > 0 || pivots.iter().any(|&p| p == 0) {
            return None;
        }
        let mut cells: Vec<EntrySet> = pivots.iter().map(|&p| EntrySet::singleton(p)).collect();
        for &x in u {
            // box j takes the extras in (pivot_j, pivot_{j+1}]
            let slot = (0..pivots.len()).rev().find(|&q| pivots[q] < x)?;
            if slot + 1 < pivots.len() && x > pivots[slot + 1] {
                return None;
            }
            cells[slot] = cells[slot].with(x);
        }
        for (q, s) in cells.into_iter().enumerate() {
            fill[i - 1][lo + q - off - 1] = s;
        }
    }
    let t = Svrpp::new(shape.clone(), fill).ok()?;
    let (w2, h2) = t.reading_word();
    (w2 == *w && h2 == *h && t.excess() == trimmed(ex.to_vec())).then_some(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_sets() {
        let s = EntrySet::from_entries(&[3, 1, 5]).unwrap();
        assert_eq!((s.smallest(), s.largest(), s.len()), (1, 5, 3));
        assert_eq!(s.to_string(), "135");
        assert_eq!(EntrySet::from_entries(&[64]).unwrap().largest(), 64);
        assert_eq!(EntrySet::interval(2, 4).to_vec(), vec![2, 3, 4]);
        assert_eq!(EntrySet::from_entries(&[3, 10]).unwrap().to_string(), "{3,10}");
    }

    #[test]
    fn parse_roundtrip() {
        let t = Svrpp::parse(". 1/1 12").unwrap();
        assert_eq!(t.shape().to_string(), "(2,2)/(1)");
        assert_eq!(t.to_string(), ". 1/1 12");
        assert!(Svrpp::parse("2 1").is_err());
    }

    #[test]
    fn small_counts() {
        let one: SkewShape = "1".parse().unwrap();
        assert_eq!(enumerate(&one, 2).count(), 3);
        assert_eq!(enumerate(&one, 1).count(), 1);
        let empty: SkewShape = "".parse().unwrap();
        assert_eq!(enumerate(&empty, 3).count(), 1);
    }

    #[test]
    fn single_box_reading() {
        let t = Svrpp::parse("123").unwrap();
        let (w, h) = t.reading_word();
        assert_eq!(w.0, vec![3, 2, 1]);
        assert_eq!(h.0, vec![1, 1, 1]);
        let col = Svrpp::parse("1/1").unwrap();
        assert_eq!(col.reading_word().0 .0, vec![1]);
        assert_eq!(Svrpp::parse("12").unwrap().column_reading_word().0, vec![2, 1]);
        assert_eq!(Svrpp::parse("1/1/1").unwrap().column_reading_word().0, vec![1]);
    }

    #[test]
    fn lattice_words() {
        assert!(is_reverse_lattice(&Word(vec![3, 1, 2, 2, 1, 1])));
        assert!(!is_reverse_lattice(&Word(vec![3, 1, 2, 2, 1])));
        assert!(is_reverse_lattice(&Word(vec![])));
    }

    #[test]
    fn reconstruct_rejects_inconsistent() {
        let one: SkewShape = "1".parse().unwrap();
        assert!(reconstruct(&one, &Word(vec![2, 1]), &HeightVector(vec![1, 1]), &[]).is_none());
    }
}
