//! Phase-one simplex for convex-combination feasibility, generic over an
//! ordered field. Bland's rule keeps it terminating; with an exact field
//! (`BigRational`) the answer is exact.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Ordered field usable by the simplex.
pub trait LpScalar:
    Clone
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<F> LpScalar for F where
    F: Clone
        + PartialOrd
        + Zero
        + One
        + Add<Output = F>
        + Sub<Output = F>
        + Mul<Output = F>
        + Div<Output = F>
        + Neg<Output = F>
{
}

/// Is there `λ ≥ 0` with `A λ = b`? Rows of `a` are constraints.
pub fn feasible<F: LpScalar>(a: &[Vec<F>], b: &[F]) -> bool {
    let rows = a.len();
    if rows == 0 {
        return true;
    }
    let cols = a[0].len();
    // tableau columns: original vars, artificials, rhs
    let width = cols + rows + 1;
    let mut tab: Vec<Vec<F>> = Vec::with_capacity(rows + 1);
    for (r, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = *rhs < F::zero();
        let mut line = vec![F::zero(); width];
        for (c, v) in row.iter().enumerate() {
            line[c] = if flip { -v.clone() } else { v.clone() };
        }
        line[cols + r] = F::one();
        line[width - 1] = if flip { -rhs.clone() } else { rhs.clone() };
        tab.push(line);
    }
    // objective: minimize the sum of artificials, kept as reduced costs
    let mut obj = vec![F::zero(); width];
    for line in &tab {
        for c in 0..cols {
            obj[c] = obj[c].clone() - line[c].clone();
        }
        obj[width - 1] = obj[width - 1].clone() - line[width - 1].clone();
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    loop {
        let Some(enter) = (0..width - 1).find(|&c| obj[c] < F::zero()) else { break };
        let mut leave: Option<(usize, F)> = None;
        for r in 0..rows {
            if tab[r][enter] > F::zero() {
                let ratio = tab[r][width - 1].clone() / tab[r][enter].clone();
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else { break };
        let piv = tab[pr][enter].clone();
        for v in tab[pr].iter_mut() {
            *v = v.clone() / piv.clone();
        }
        let pivot_row = tab[pr].clone();
        for (r, line) in tab.iter_mut().enumerate() {
            if r != pr && !line[enter].is_zero() {
                let f = line[enter].clone();
                for (v, p) in line.iter_mut().zip(&pivot_row) {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (v, p) in obj.iter_mut().zip(&pivot_row) {
                *v = v.clone() - f.clone() * p.clone();
            }
        }
        basis[pr] = enter;
    }
    obj[width - 1].is_zero()
}

/// Is `target` a convex combination of `points`?
pub fn in_convex_hull<F: LpScalar>(points: &[Vec<F>], target: &[F]) -> bool {
    if points.is_empty() {
        return false;
    }
    let d = target.len();
    let mut a: Vec<Vec<F>> = (0..d).map(|k| points.iter().map(|p| p[k].clone()).collect()).collect();
    a.push(vec![F::one(); points.len()]);
    let mut b: Vec<F> = target.to_vec();
    b.push(F::one());
    feasible(&a, &b)
}
