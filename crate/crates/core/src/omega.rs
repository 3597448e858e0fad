//! Marked multiset-valued tableaux and the omega image of the hybrid
//! polynomial in the scalar parameters `α`, `β`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::crystal::schur_expansion_via_lattice_words;
use crate::error::{FillingError, OmegaError};
use crate::polyring::{schur_polynomial, ExponentKey};
use crate::shapes::{Cell, SkewShape};
use crate::svrpp::{trimmed, WeakComposition};
use crate::Poly;

/// A filling by nonempty multisets, rows strict, columns weak, where the
/// minimum of a cell may carry a mark if the cell above ends in it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mmsvt {
    shape: SkewShape,
    /// Sorted multisets, one row per shape row.
    fill: Vec<Vec<Vec<u32>>>,
    marked: Vec<Vec<bool>>,
}

fn check_cell(m: &[u32], r: usize, c: usize) -> Result<(), FillingError> {
    if m.is_empty() {
        return Err(FillingError::EmptyCell(r, c));
    }
    if m.contains(&0) {
        return Err(FillingError::EntryOutOfRange(0));
    }
    if m.windows(2).any(|w| w[0] > w[1]) {
        return Err(FillingError::NotIncreasing(r, c));
    }
    Ok(())
}

impl Mmsvt {
    pub fn new(shape: SkewShape, fill: Vec<Vec<Vec<u32>>>, marked: Vec<Vec<bool>>) -> Result<Self, FillingError> {
        let fits = fill.len() == shape.num_rows()
            && marked.len() == shape.num_rows()
            && (1..=shape.num_rows())
                .all(|i| fill[i - 1].len() == shape.row_len(i) && marked[i - 1].len() == shape.row_len(i));
        if !fits {
            return Err(FillingError::ShapeMismatch(shape.to_string()));
        }
        let t = Mmsvt { shape, fill, marked };
        for (i, j) in t.shape.cells() {
            let m = t.cell((i, j));
            check_cell(m, i, j)?;
            if let Some(left) = t.get((i, j - 1)) {
                if left[left.len() - 1] >= m[0] {
                    return Err(FillingError::NotIncreasing(i, j));
                }
            }
            let above = t.get((i - 1, j));
            if let Some(up) = above {
                if up[up.len() - 1] > m[0] {
                    return Err(FillingError::NotIncreasing(i, j));
                }
            }
            if t.is_marked((i, j)) && above.map_or(true, |up| up[up.len() - 1] != m[0]) {
                return Err(FillingError::Parse(format!("cell ({i},{j}) is marked but the cell above does not end in {}", m[0])));
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn cell(&self, (i, j): Cell) -> &[u32] {
        &self.fill[i - 1][j - self.shape.inner.part(i) - 1]
    }

    pub fn get(&self, c: Cell) -> Option<&[u32]> {
        self.shape.contains_cell(c).then(|| self.cell(c))
    }

    pub fn is_marked(&self, (i, j): Cell) -> bool {
        self.marked[i - 1][j - self.shape.inner.part(i) - 1]
    }

    /// `(umcont, mark, ex)`.
    pub fn stats(&self) -> (WeakComposition, WeakComposition, WeakComposition) {
        let mut umcont = Vec::new();
        let mut mark = vec![0; self.shape.num_rows()];
        let mut ex = vec![0; self.shape.num_rows()];
        for c @ (i, _) in self.shape.cells() {
            let m = self.cell(c);
            let skip = usize::from(self.is_marked(c));
            mark[i - 1] += skip as u32;
            ex[i - 1] += m.len() as u32 - 1;
            for &e in &m[skip..] {
                if umcont.len() < e as usize {
                    umcont.resize(e as usize, 0);
                }
                umcont[e as usize - 1] += 1;
            }
        }
        (trimmed(umcont), trimmed(mark), trimmed(ex))
    }

    /// `|umcont|`.
    pub fn degree(&self) -> u32 {
        self.stats().0.iter().sum()
    }
}

impl fmt::Display for Mmsvt {
    /// Rows separated by `/`, cells by spaces; a marked minimum is written
    /// with a leading `~`, as in `~33`. Multi-digit entries use braces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.shape.num_rows() {
            if i > 1 {
                f.write_str("/")?;
            }
            let lo = self.shape.inner.part(i);
            let cells = (0..lo).map(|_| ".".to_string()).chain((lo + 1..=self.shape.outer.part(i)).map(|j| {
                let m = self.cell((i, j));
                let body: String = if m.iter().all(|&e| e < 10) {
                    m.iter().map(|e| e.to_string()).collect()
                } else {
                    format!("{{{}}}", m.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
                };
                if self.is_marked((i, j)) { format!("~{body}") } else { body }
            }));
            f.write_str(&cells.collect::<Vec<_>>().join(" "))?;
        }
        Ok(())
    }
}

/// Sorted multisets over `[lo, n]` of sizes `1..=max_len`.
fn multisets(lo: u32, n: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(from: u32, n: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        for e in from..=n {
            cur.push(e);
            rec(e, n, max_len, cur, out);
            cur.pop();
        }
    }
    rec(lo, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// Every MMSVT of `shape` with entries in `[n]` and `|umcont| ≤ max_degree`,
/// in a fixed order.
pub fn enumerate_mmsvt(shape: &SkewShape, n: u32, max_degree: u32) -> Vec<Mmsvt> {
    let cells = shape.cells();
    let mut fill: Vec<Vec<Vec<u32>>> = (1..=shape.num_rows()).map(|i| vec![Vec::new(); shape.row_len(i)]).collect();
    let mut marked: Vec<Vec<bool>> = (1..=shape.num_rows()).map(|i| vec![false; shape.row_len(i)]).collect();
    let mut out = Vec::new();

    struct Ctx<'a> {
        shape: &'a SkewShape,
        cells: &'a [Cell],
        n: u32,
    }
    fn at<'a, T>(v: &'a [Vec<T>], shape: &SkewShape, (i, j): Cell) -> Option<&'a T> {
        shape.contains_cell((i, j)).then(|| &v[i - 1][j - shape.inner.part(i) - 1])
    }
    fn rec(
        ctx: &Ctx,
        k: usize,
        budget: u32,
        fill: &mut Vec<Vec<Vec<u32>>>,
        marked: &mut Vec<Vec<bool>>,
        out: &mut Vec<Mmsvt>,
    ) {
        if k == ctx.cells.len() {
            out.push(Mmsvt { shape: ctx.shape.clone(), fill: fill.clone(), marked: marked.clone() });
            return;
        }
        let (i, j) = ctx.cells[k];
        let left_max = at(fill, ctx.shape, (i, j.wrapping_sub(1))).map(|m: &Vec<u32>| m[m.len() - 1]);
        let up_max = if i > 1 { at(fill, ctx.shape, (i - 1, j)).map(|m: &Vec<u32>| m[m.len() - 1]) } else { None };
        let lo = left_max.map_or(1, |e| e + 1).max(up_max.unwrap_or(1));
        if lo > ctx.n {
            return;
        }
        let q = j - ctx.shape.inner.part(i) - 1;
        for m in multisets(lo, ctx.n, budget as usize + 1) {
            let len = m.len() as u32;
            let can_mark = up_max == Some(m[0]);
            for mark in [false, true] {
                if mark && !can_mark {
                    continue;
                }
                let cost = len - u32::from(mark);
                if cost > budget {
                    continue;
                }
                fill[i - 1][q] = m.clone();
                marked[i - 1][q] = mark;
                rec(ctx, k + 1, budget - cost, fill, marked, out);
            }
        }
        fill[i - 1][q].clear();
        marked[i - 1][q] = false;
    }

    let ctx = Ctx { shape, cells: &cells, n };
    rec(&ctx, 0, max_degree, &mut fill, &mut marked, &mut out);
    out
}

fn weight(t: &Mmsvt, n: usize) -> ExponentKey {
    let (umcont, mark, ex) = t.stats();
    let mut x = umcont;
    x.resize(n, 0);
    ExponentKey::new(x, Vec::new(), Vec::new(), mark.iter().sum(), ex.iter().sum())
}

/// `Σ α^|mark| β^|ex| x^umcont` over MMSVT with entries in `[n]`,
/// truncated to x-degree `≤ max_degree`.
pub fn j_polynomial(shape: &SkewShape, n: u32, max_degree: u32) -> Poly {
    j_polynomial_filtered(shape, n, max_degree, |_| true)
}

/// The same sum restricted to tableaux accepted by `keep`.
pub fn j_polynomial_filtered(shape: &SkewShape, n: u32, max_degree: u32, keep: impl Fn(&Mmsvt) -> bool) -> Poly {
    let mut p = Poly::zero(n as usize);
    for t in enumerate_mmsvt(shape, n, max_degree).iter().filter(|t| keep(t)) {
        p.add_term(weight(t, n as usize), BigInt::one());
    }
    p
}

/// Applies `s_ν ↦ s_ν'` to the Schur expansion of the hybrid polynomial
/// (with `t_i ↦ α`, `w_i ↦ β`) and truncates to x-degree `≤ max_degree`.
pub fn omega_image_via_expansion(shape: &SkewShape, n: u32, max_degree: u32) -> Result<Poly, OmegaError> {
    if n < max_degree {
        return Err(OmegaError::InsufficientVariables { vars: n as usize, degree: max_degree as usize });
    }
    let counts = schur_expansion_via_lattice_words(shape, max_degree)
        .expect("highest weights of hybrid fillings are partitions");
    let mut out = Poly::zero(n as usize);
    for ((nu, gamma, theta), &c) in &counts {
        if nu.size() > max_degree as usize {
            continue;
        }
        let key = ExponentKey::new(vec![0; n as usize], Vec::new(), Vec::new(), gamma.iter().sum(), theta.iter().sum());
        let s = schur_polynomial::<BigInt>(&nu.conjugate(), n as usize);
        out = &out + &s.shift(&key).scale(&BigInt::from(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_box_listing() {
        let one: SkewShape = "1".parse().unwrap();
        let all = enumerate_mmsvt(&one, 1, 3);
        let fills: Vec<&[u32]> = all.iter().map(|t| t.cell((1, 1))).collect();
        assert_eq!(fills, vec![&[1][..], &[1, 1], &[1, 1, 1]]);
        assert!(all.iter().all(|t| !t.is_marked((1, 1))));
        assert!(enumerate_mmsvt(&one, 3, 0).is_empty());
    }

    #[test]
    fn marked_domino() {
        let col: SkewShape = "1,1".parse().unwrap();
        let t = Mmsvt::new(col.clone(), vec![vec![vec![1]], vec![vec![1, 1]]], vec![vec![false], vec![true]]).unwrap();
        assert_eq!(t.stats(), (vec![2], vec![0, 1], vec![0, 1]));
        assert_eq!(t.to_string(), "1/~11");
        assert!(Mmsvt::new(col, vec![vec![vec![1]], vec![vec![2]]], vec![vec![false], vec![true]]).is_err());
    }

    #[test]
    fn empty_shape() {
        let e: SkewShape = "".parse().unwrap();
        assert_eq!(j_polynomial(&e, 2, 2), Poly::one(2));
        assert_eq!(omega_image_via_expansion(&e, 2, 2).unwrap(), Poly::one(2));
        assert!(omega_image_via_expansion(&e, 1, 2).is_err());
    }
}
