//! Newton polytopes of x-supports, the saturation (SNP) test, and the
//! extremal fillings that bound highest weights.

pub mod simplex;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::crystal::is_highest_weight;
use crate::error::NewtonError;
use crate::polyring::{Coefficient, SparsePoly};
use crate::shapes::{Partition, SkewShape};
use crate::svrpp::{enumerate, EntrySet, Svrpp};

pub use simplex::{in_convex_hull, LpScalar};

/// Half-space `normal · x ≤ offset` (or equation when listed as such).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePolytope {
    /// Number of coordinates.
    pub ambient_dim: usize,
    /// Dimension of the affine hull.
    pub dim: usize,
    pub vertices: Vec<Vec<u32>>,
    /// Equations `normal · x = offset` cutting out the affine hull.
    pub equations: Vec<Inequality>,
    pub facets: Vec<Inequality>,
}

fn rat(x: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn to_rat(p: &[u32]) -> Vec<BigRational> {
    p.iter().map(|&x| rat(x)).collect()
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Row-reduces `m` in place; returns pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = &*v / &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis of `{y : m y = 0}`.
fn nullspace(m: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -work[r][f].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to a primitive integer vector (same direction).
fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

fn int_dot(a: &[BigInt], p: &[u32]) -> BigInt {
    a.iter().zip(p).fold(BigInt::zero(), |acc, (x, &y)| acc + x * BigInt::from(y))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl LatticePolytope {
    /// Convex hull of a nonempty point set.
    pub fn hull(points: &[Vec<u32>]) -> Result<Self, NewtonError> {
        let mut pts: Vec<Vec<u32>> = points.to_vec();
        pts.sort();
        pts.dedup();
        let Some(first) = pts.first() else { return Err(NewtonError::ZeroPolynomial) };
        let n = first.len();
        let rats: Vec<Vec<BigRational>> = pts.iter().map(|p| to_rat(p)).collect();
        let vertices: Vec<Vec<u32>> = (0..pts.len())
            .filter(|&k| {
                let others: Vec<Vec<BigRational>> =
                    rats.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, p)| p.clone()).collect();
                !in_convex_hull(&others, &rats[k])
            })
            .map(|k| pts[k].clone())
            .collect();
        let vr: Vec<Vec<BigRational>> = vertices.iter().map(|v| to_rat(v)).collect();
        let base = vr[0].clone();
        let mut diffs: Vec<Vec<BigRational>> =
            vr.iter().skip(1).map(|v| v.iter().zip(&base).map(|(a, b)| a - b).collect()).collect();
        let pivots = if diffs.is_empty() { Vec::new() } else { rref(&mut diffs) };
        let dim = pivots.len();
        let directions: Vec<Vec<BigRational>> = diffs.into_iter().take(dim).collect();
        let equations: Vec<Inequality> = nullspace(&directions, n)
            .iter()
            .map(|a| {
                let normal = primitive(a);
                let offset = int_dot(&normal, &vertices[0]);
                Inequality { normal, offset }
            })
            .collect();
        let mut facets: Vec<Inequality> = Vec::new();
        if dim >= 1 {
            // normals inside the direction space, orthogonal to dim-1 edge vectors
            for subset in combinations(vertices.len(), dim) {
                let anchor = &vr[subset[0]];
                let m: Vec<Vec<BigRational>> = subset[1..]
                    .iter()
                    .map(|&s| {
                        let e: Vec<BigRational> = vr[s].iter().zip(anchor).map(|(a, b)| a - b).collect();
                        directions.iter().map(|d| dot(d, &e)).collect()
                    })
                    .collect();
                let ns = nullspace(&m, dim);
                if ns.len() != 1 {
                    continue;
                }
                let a: Vec<BigRational> = (0..n)
                    .map(|k| ns[0].iter().zip(&directions).fold(BigRational::zero(), |acc, (c, d)| acc + c * &d[k]))
                    .collect();
                let mut normal = primitive(&a);
                let mut offset = int_dot(&normal, &vertices[subset[0]]);
                let values: Vec<BigInt> = vertices.iter().map(|v| int_dot(&normal, v)).collect();
                let below = values.iter().all(|v| *v <= offset);
                let above = values.iter().all(|v| *v >= offset);
                if !below && !above {
                    continue;
                }
                if !below {
                    normal = normal.into_iter().map(|x| -x).collect();
                    offset = -offset;
                }
                let f = Inequality { normal, offset };
                if !facets.contains(&f) {
                    facets.push(f);
                }
            }
        }
        facets.sort_by(|a, b| a.normal.cmp(&b.normal).then_with(|| a.offset.cmp(&b.offset)));
        Ok(LatticePolytope { ambient_dim: n, dim, vertices, equations, facets })
    }

    /// Membership by the facet and equation description.
    pub fn contains_by_facets(&self, p: &[u32]) -> bool {
        self.equations.iter().all(|e| int_dot(&e.normal, p) == e.offset)
            && self.facets.iter().all(|f| int_dot(&f.normal, p) <= f.offset)
    }

    /// Membership as a convex combination of the vertices.
    pub fn contains(&self, p: &[u32]) -> bool {
        let vr: Vec<Vec<BigRational>> = self.vertices.iter().map(|v| to_rat(v)).collect();
        in_convex_hull(&vr, &to_rat(p))
    }

    /// Integer points of the hull, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<Vec<u32>> {
        let n = self.ambient_dim;
        let lo: Vec<u32> = (0..n).map(|k| self.vertices.iter().map(|v| v[k]).min().unwrap()).collect();
        let hi: Vec<u32> = (0..n).map(|k| self.vertices.iter().map(|v| v[k]).max().unwrap()).collect();
        let vr: Vec<Vec<BigRational>> = self.vertices.iter().map(|v| to_rat(v)).collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            if self.vertices.contains(&cur) || in_convex_hull(&vr, &to_rat(&cur)) {
                out.push(cur.clone());
            }
            // odometer over the bounding box
            let mut k = n;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    for j in k + 1..n {
                        cur[j] = lo[j];
                    }
                    break;
                }
            }
        }
    }
}

/// Newton polytope of the x-support of `p`.
pub fn newton_polytope<C: Coefficient>(p: &SparsePoly<C>) -> Result<LatticePolytope, NewtonError> {
    if p.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    LatticePolytope::hull(&p.x_support())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnpReport {
    pub holds: bool,
    pub support_size: usize,
    pub lattice_points: Vec<Vec<u32>>,
    /// A lattice point of the hull outside the support, if any.
    pub witness: Option<Vec<u32>>,
    pub polytope: LatticePolytope,
}

/// Checks that every lattice point of the Newton polytope is an exponent.
pub fn has_snp<C: Coefficient>(p: &SparsePoly<C>) -> Result<SnpReport, NewtonError> {
    let polytope = newton_polytope(p)?;
    let support: BTreeSet<Vec<u32>> = p.x_support().into_iter().collect();
    let lattice_points = polytope.lattice_points();
    let witness = lattice_points.iter().find(|q| !support.contains(*q)).cloned();
    Ok(SnpReport { holds: witness.is_none(), support_size: support.len(), lattice_points, witness, polytope })
}

/// The all-`{1}` filling of `λ`.
pub fn t_min(lambda: &Partition) -> Svrpp {
    let shape = SkewShape::straight(lambda.clone());
    let rows = lambda.parts().iter().map(|&l| vec![EntrySet::singleton(1); l]).collect();
    Svrpp::new(shape, rows).expect("constant filling is valid")
}

/// The filling whose weight is `λ̄^(n)`: `{i}` left of the staircase
/// boundary `λ^♭`, the interval `[i, n]` on it, `{n}` beyond.
pub fn t_max(lambda: &Partition, n: u32) -> Svrpp {
    let flat = lambda.flat();
    let shape = SkewShape::straight(lambda.clone());
    let rows = (1..=lambda.len())
        .map(|i| {
            (1..=lambda.part(i))
                .map(|j| {
                    let fi = flat.part(i);
                    if i as u32 <= n && j < fi {
                        EntrySet::singleton(i as u32)
                    } else if i as u32 <= n && j == fi {
                        EntrySet::interval(i as u32, n)
                    } else {
                        EntrySet::singleton(n)
                    }
                })
                .collect()
        })
        .collect();
    Svrpp::new(shape, rows).expect("t_max is a valid filling")
}

/// Deletes every `i` in the leftmost column containing `i`; emptied cells
/// become `{i-1}`. `None` if no column contains `i` or the result is
/// not a valid filling.
pub fn l_op(t: &Svrpp, i: u32) -> Option<Svrpp> {
    if i < 2 {
        return None;
    }
    let shape = t.shape();
    let col = (1..=shape.num_cols()).find(|&j| t.column_union(j).contains(i))?;
    let (lo, hi) = shape.col_range(col)?;
    let mut rows: Vec<Vec<EntrySet>> = t.rows().to_vec();
    for r in lo..=hi {
        let q = col - shape.inner.part(r) - 1;
        let mut s = rows[r - 1][q].without(i);
        if s.is_empty() {
            s = EntrySet::singleton(i - 1);
        }
        rows[r - 1][q] = s;
    }
    Svrpp::new(shape.clone(), rows).ok()
}

/// `L_2^{d_2} ⋯ L_n^{d_n}(T_max)` with `d_i = λ̄_i − ρ_i`.
pub fn t_star(lambda: &Partition, n: u32, rho: &Partition) -> Option<Svrpp> {
    let bar = lambda.bar(n as usize);
    let mut t = t_max(lambda, n);
    for i in (2..=n).rev() {
        let d = bar.part(i as usize).checked_sub(rho.part(i as usize))?;
        for _ in 0..d {
            t = l_op(&t, i)?;
        }
    }
    Some(t)
}

/// Partitions `ρ` with `(λ_1) ⊆ ρ ⊆ λ̄^(n)`.
pub fn weight_interval(lambda: &Partition, n: u32) -> Vec<Partition> {
    let l1 = lambda.part(1);
    lambda.bar(n as usize).subpartitions().into_iter().filter(|r| r.part(1) == l1).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct IntervalReport {
    pub interval: Vec<Partition>,
    /// Interval members whose constructed `T*` is not a highest weight
    /// filling of that weight.
    pub construction_failures: Vec<Partition>,
    /// Weights of all highest weight fillings.
    pub realized: Vec<Partition>,
    /// Realized weights outside the interval.
    pub outside: Vec<Partition>,
}

impl IntervalReport {
    pub fn ok(&self) -> bool {
        self.construction_failures.is_empty() && self.outside.is_empty() && self.realized == self.interval
    }
}

pub fn hw_weight_interval_check(lambda: &Partition, n: u32) -> IntervalReport {
    let interval = weight_interval(lambda, n);
    let construction_failures = interval
        .iter()
        .filter(|rho| {
            let Some(t) = t_star(lambda, n, rho) else { return true };
            let w: Vec<usize> = t.ircont().iter().map(|&e| e as usize).collect();
            !(is_highest_weight(&t) && w == rho.parts())
        })
        .cloned()
        .collect();
    let shape = SkewShape::straight(lambda.clone());
    let realized: BTreeSet<Partition> = enumerate(&shape, n)
        .filter(is_highest_weight)
        .map(|t| Partition::new(t.ircont().iter().map(|&e| e as usize).collect()).expect("highest weights are partitions"))
        .collect();
    let set: BTreeSet<Partition> = interval.iter().cloned().collect();
    let outside = realized.iter().filter(|r| !set.contains(*r)).cloned().collect();
    IntervalReport { interval: set.into_iter().collect(), construction_failures, realized: realized.into_iter().collect(), outside }
}

/// All fillings of one column segment of height `h` by nonempty subsets of
/// `[n]`, weakly increasing downward.
fn column_fillings(h: usize, n: u32) -> Vec<Vec<EntrySet>> {
    let mut out = vec![Vec::new()];
    for _ in 0..h {
        let mut next = Vec::new();
        for col in &out {
            let lo = col.last().map_or(1, |s: &EntrySet| s.largest());
            for s in crate::svrpp::subsets_from(lo, n) {
                let mut c = col.clone();
                c.push(s);
                next.push(c);
            }
        }
        out = next;
    }
    out
}

/// Largest `|ircont(T)|` over `SVRPP^n(shape)`, by dynamic programming over
/// columns. This is the degree of the hybrid polynomial at `t = w = 1`.
pub fn max_ircont_degree(shape: &SkewShape, n: u32) -> u32 {
    let mut prev: Vec<(usize, Vec<EntrySet>, u32)> = Vec::new();
    let mut prev_col: Option<(usize, usize)> = None;
    for j in 1..=shape.num_cols() {
        let Some((lo, hi)) = shape.col_range(j) else {
            prev_col = None;
            prev = vec![(0, Vec::new(), prev.iter().map(|p| p.2).max().unwrap_or(0))];
            continue;
        };
        let best_before = prev.iter().map(|p| p.2).max().unwrap_or(0);
        let mut cur = Vec::new();
        for col in column_fillings(hi - lo + 1, n) {
            let gain = col.iter().fold(EntrySet::EMPTY, |a, s| a.union(*s)).len();
            let best = match prev_col {
                None => Some(best_before),
                Some((plo, phi)) => prev
                    .iter()
                    .filter(|(_, left, _)| {
                        (lo.max(plo)..=hi.min(phi)).all(|r| left[r - plo].largest() <= col[r - lo].smallest())
                    })
                    .map(|p| p.2)
                    .max(),
            };
            if let Some(b) = best {
                cur.push((j, col, b + gain));
            }
        }
        prev = cur;
        prev_col = Some((lo, hi));
    }
    prev.iter().map(|p| p.2).max().unwrap_or(0)
}

/// `(degree of G_λ(x_n;1;1), |λ̄^(n)|)`.
pub fn degree_check(lambda: &Partition, n: u32) -> (u32, usize) {
    (max_ircont_degree(&SkewShape::straight(lambda.clone()), n), lambda.bar(n as usize).size())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    #[test]
    fn segment_and_point() {
        let seg = &Poly::x(2, 1) + &Poly::x(2, 2);
        let p = newton_polytope(&seg).unwrap();
        assert_eq!(p.vertices, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(p.dim, 1);
        let m = &(&Poly::x(2, 1) * &Poly::x(2, 1)) * &Poly::x(2, 2);
        let p = newton_polytope(&m).unwrap();
        assert_eq!(p.vertices, vec![vec![2, 1]]);
        assert!(has_snp(&m).unwrap().holds);
        assert_eq!(newton_polytope(&Poly::zero(2)), Err(NewtonError::ZeroPolynomial));
    }

    #[test]
    fn missing_midpoint() {
        let p = &(&Poly::x(2, 1) * &Poly::x(2, 1)) + &(&Poly::x(2, 2) * &Poly::x(2, 2));
        let r = has_snp(&p).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec![1, 1]));
    }

    #[test]
    fn t_min_t_max_small() {
        let l: Partition = "2".parse().unwrap();
        assert_eq!(t_min(&l), t_max(&l, 1));
        assert_eq!(degree_check(&"1".parse().unwrap(), 1), (1, 1));
    }
}
