//! Derived values checked against naive reference implementations written
//! independently of the library: brute-force fillings, brute-force semistandard
//! tableaux, a planar convex hull, and unpruned column operators.

mod common;

use std::collections::BTreeMap;

use common::{part, shape};
use hybrid_groth::fomin_greene::{ModuleElement, Op, OperatorContext};
use hybrid_groth::newton::{degree_check, has_snp};
use hybrid_groth::polyring::{schur_expand, schur_polynomial, ExponentKey, Specialization};
use hybrid_groth::svrpp::{enumerate, hybrid_polynomial};
use hybrid_groth::{Partition, Poly, SkewShape};
use num_bigint::BigInt;

type Cell = (usize, usize);

/// Every assignment of values from `choices` to the cells of `shape` that
/// satisfies `ok(left_or_above, right_or_below, same_row)`.
fn brute_fillings<T: Clone>(shape: &SkewShape, choices: &[T], ok: impl Fn(&T, &T, bool) -> bool) -> Vec<BTreeMap<Cell, T>> {
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut idx = vec![0usize; cells.len()];
    if choices.is_empty() {
        return out;
    }
    loop {
        let fill: BTreeMap<Cell, T> = cells.iter().zip(&idx).map(|(&c, &k)| (c, choices[k].clone())).collect();
        let valid = cells.iter().all(|&(i, j)| {
            let here = &fill[&(i, j)];
            fill.get(&(i, j + 1)).is_none_or(|r| ok(here, r, true)) && fill.get(&(i + 1, j)).is_none_or(|b| ok(here, b, false))
        });
        if valid {
            out.push(fill);
        }
        let mut p = 0;
        loop {
            if p == idx.len() {
                return out;
            }
            idx[p] += 1;
            if idx[p] < choices.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

fn subsets(n: u32) -> Vec<Vec<u32>> {
    (1u32..1 << n).map(|m| (1..=n).filter(|k| m >> (k - 1) & 1 == 1).collect()).collect()
}

fn key(x: Vec<u32>, t: Vec<u32>, w: Vec<u32>) -> ExponentKey {
    ExponentKey::new(x, t, w, 0, 0)
}

/// The hybrid polynomial summed directly from its definition over
/// brute-force set-valued reverse plane partitions.
fn brute_hybrid(shape: &SkewShape, n: u32) -> (usize, Poly) {
    let fills = brute_fillings(shape, &subsets(n), |a, b, _| a.last() <= b.first());
    let mut p = Poly::zero(n as usize);
    for f in &fills {
        let mut x = vec![0u32; n as usize];
        for k in 1..=n {
            let cols: std::collections::BTreeSet<usize> = f.iter().filter(|(_, s)| s.contains(&k)).map(|(c, _)| c.1).collect();
            x[k as usize - 1] = cols.len() as u32;
        }
        let rows = shape.num_rows();
        let mut t = vec![0u32; rows];
        let mut w = vec![0u32; rows];
        for (&(i, j), s) in f {
            w[i - 1] += s.len() as u32 - 1;
            if let Some(below) = f.get(&(i + 1, j)) {
                if s.last() == below.first() {
                    t[i - 1] += 1;
                }
            }
        }
        p.add_term(key(x, t, w), BigInt::from(1));
    }
    (fills.len(), p)
}

/// Skew Schur polynomial from brute-force semistandard tableaux.
fn brute_skew_schur(shape: &SkewShape, n: u32) -> Poly {
    let letters: Vec<u32> = (1..=n).collect();
    let mut p = Poly::zero(n as usize);
    for f in brute_fillings(shape, &letters, |a, b, row| if row { a <= b } else { a < b }) {
        let mut x = vec![0u32; n as usize];
        for v in f.values() {
            x[*v as usize - 1] += 1;
        }
        p.add_term(key(x, vec![], vec![]), BigInt::from(1));
    }
    p
}

#[test]
fn enumeration_matches_brute_force() {
    for s in SkewShape::compact_shapes(4) {
        for n in 1..=3 {
            let (count, p) = brute_hybrid(&s, n);
            assert_eq!(enumerate(&s, n).count(), count, "{s} n={n}");
            assert_eq!(hybrid_polynomial(&s, n), p, "{s} n={n}");
        }
    }
}

#[test]
fn enumeration_matches_brute_force_on_larger_shapes() {
    for s in ["3,2", "2,2,1/1", "3,3/1", "2,2,2/1,1"] {
        let s = shape(s);
        let (count, p) = brute_hybrid(&s, 3);
        assert_eq!(enumerate(&s, 3).count(), count, "{s}");
        assert_eq!(hybrid_polynomial(&s, 3), p, "{s}");
    }
}

#[test]
fn schur_polynomials_match_tableaux() {
    for size in 0..=5 {
        for nu in Partition::all_of_size(size) {
            for n in 1..=4 {
                let brute = brute_skew_schur(&SkewShape::straight(nu.clone()), n);
                assert_eq!(schur_polynomial::<BigInt>(&nu, n as usize), brute, "{nu} n={n}");
            }
        }
    }
}

#[test]
fn zero_parameters_give_skew_schur() {
    for s in SkewShape::compact_shapes(5) {
        for n in 1..=3 {
            let g = hybrid_polynomial(&s, n).specialize(&Specialization::values(0, 0));
            assert_eq!(g, brute_skew_schur(&s, n), "{s} n={n}");
        }
    }
}

#[test]
fn expansions_are_positive_and_exact() {
    for s in SkewShape::compact_shapes(4) {
        for n in 1..=3 {
            let g = hybrid_polynomial(&s, n);
            let e = schur_expand(&g).unwrap();
            assert_eq!(e.to_polynomial(n as usize), g, "{s} n={n}");
            for (nu, c) in &e.terms {
                assert!(nu.len() <= n as usize);
                assert!(c.terms().all(|(_, k)| *k > BigInt::from(0)), "{s} n={n} {nu}: {c}");
            }
        }
    }
}

fn cross(o: &[i64], a: &[i64], b: &[i64]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Lattice points of the convex hull of planar points via a monotone chain.
fn planar_hull_points(points: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut p: Vec<Vec<i64>> = points.iter().map(|q| q.iter().map(|&v| v as i64).collect()).collect();
    p.sort();
    p.dedup();
    let mut hull: Vec<Vec<i64>> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Vec<i64>>> = if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for q in iter {
            while hull.len() >= start + 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], q) <= 0 {
                hull.pop();
            }
            hull.push(q.clone());
        }
        hull.pop();
    }
    let max = p.iter().flatten().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            let q = [a, b];
            let inside = if hull.len() <= 2 {
                p.iter().any(|r| r[..] == q)
                    || (hull.len() == 2 && cross(&hull[0], &hull[1], &q) == 0 && (0..2).all(|k| q[k] >= hull[0][k].min(hull[1][k]) && q[k] <= hull[0][k].max(hull[1][k])))
            } else {
                (0..hull.len()).all(|k| cross(&hull[k], &hull[(k + 1) % hull.len()], &q) >= 0)
            };
            if inside {
                out.push(vec![a as u32, b as u32]);
            }
        }
    }
    out
}

#[test]
fn planar_newton_polytopes_match_monotone_chain() {
    for size in 1..=6 {
        for lambda in Partition::all_of_size(size) {
            let g = hybrid_polynomial(&SkewShape::straight(lambda.clone()), 2).specialize(&Specialization::values(1, 1));
            let r = has_snp(&g).unwrap();
            let mut expected = planar_hull_points(&g.x_support());
            expected.sort();
            assert_eq!(r.lattice_points, expected, "{lambda}");
            assert!(r.holds, "{lambda}");
        }
    }
    for s in ["2,1/1", "3,2/1", "3,3/2"] {
        let g = hybrid_polynomial(&shape(s), 2).specialize(&Specialization::values(1, 1));
        let mut expected = planar_hull_points(&g.x_support());
        expected.sort();
        assert_eq!(has_snp(&g).unwrap().lattice_points, expected, "{s}");
    }
}

#[test]
fn degree_matches_brute_force_maximum() {
    for size in 1..=5 {
        for lambda in Partition::all_of_size(size) {
            for n in 1..=3 {
                let (_, p) = brute_hybrid(&SkewShape::straight(lambda.clone()), n);
                let deg = p.max_x_degree().unwrap();
                assert_eq!(deg as usize, lambda.bar(n as usize).size(), "{lambda} n={n}");
                assert_eq!(degree_check(&lambda, n), (deg, lambda.bar(n as usize).size()));
            }
        }
    }
}

#[test]
fn flat_partition_is_largest_strict_subpartition() {
    for size in 0..=9 {
        for lambda in Partition::all_of_size(size) {
            let strict: Vec<Partition> = lambda.subpartitions().into_iter().filter(|q| q.is_strict()).collect();
            let best = strict.iter().max_by_key(|q| q.size()).unwrap();
            assert_eq!(&lambda.flat(), best, "{lambda}");
            assert!(strict.iter().all(|q| lambda.flat().contains(q)), "{lambda}");
        }
    }
}

/// Column heights, keyed by column, with an unbounded first column.
type Cols = Vec<usize>;
type Naive = BTreeMap<Cols, Poly>;

fn col(c: &Cols, i: usize) -> usize {
    c.get(i - 1).copied().unwrap_or(0)
}

fn set(c: &Cols, i: usize, h: usize) -> Cols {
    let mut c = c.clone();
    if c.len() < i {
        c.resize(i, 0);
    }
    c[i - 1] = h;
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

fn naive_add(out: &mut Naive, k: Cols, c: Poly) {
    let e = out.entry(k.clone()).or_insert_with(|| Poly::zero(0));
    *e = e.try_add(&c).unwrap();
    if e.is_zero() {
        out.remove(&k);
    }
}

/// Applies a word with every column of height at most `cap`, rightmost
/// letter first.
fn naive_apply(word: &[Op], start: &Cols, mu: &Cols, cap: usize) -> Naive {
    let mut v: Naive = BTreeMap::from([(start.clone(), Poly::one(0))]);
    for op in word.iter().rev() {
        let mut out = Naive::new();
        for (l, c) in &v {
            let up = |out: &mut Naive, i: usize, base: &Poly| {
                let h = col(l, i);
                let top = if i == 1 { cap } else { col(l, i - 1).min(cap) };
                let mut coeff = base.clone();
                for new in h + 1..=top {
                    naive_add(out, set(l, i, new), coeff.clone());
                    coeff = coeff.try_mul(&Poly::alpha(0)).unwrap();
                }
            };
            let down = |i: usize| -> Option<Cols> {
                let h = col(l, i);
                (h > 0 && h - 1 >= col(l, i + 1) && h - 1 >= col(mu, i)).then(|| set(l, i, h - 1))
            };
            match *op {
                Op::U(i) => up(&mut out, i, c),
                Op::D(i) => {
                    if let Some(m) = down(i) {
                        naive_add(&mut out, m, c.try_mul(&Poly::beta(0)).unwrap());
                    }
                }
                Op::UTilde(i) => {
                    up(&mut out, i, c);
                    if let Some(m) = down(i) {
                        let mut tmp = Naive::new();
                        let mc = c.try_mul(&Poly::beta(0)).unwrap();
                        let h = col(&m, i);
                        let top = if i == 1 { cap } else { col(&m, i - 1).min(cap) };
                        let mut coeff = mc;
                        for new in h + 1..=top {
                            naive_add(&mut tmp, set(&m, i, new), coeff.clone());
                            coeff = coeff.try_mul(&Poly::alpha(0)).unwrap();
                        }
                        for (k, x) in tmp {
                            naive_add(&mut out, k, x);
                        }
                    }
                }
            }
        }
        v = out;
    }
    v
}

#[test]
fn boxed_operators_match_unpruned_evaluation() {
    let bound = part("3,3,3");
    let letters: Vec<Op> = (1..=3).flat_map(|i| [Op::U(i), Op::D(i), Op::UTilde(i)]).collect();
    let mut words: Vec<Vec<Op>> = vec![vec![]];
    let mut layer = words.clone();
    for _ in 0..3 {
        layer = layer.iter().flat_map(|w| letters.iter().map(move |&l| [w.as_slice(), &[l]].concat())).collect();
        words.extend(layer.iter().cloned());
    }
    for mu in [part(""), part("1")] {
        let ctx = OperatorContext::new(mu.clone(), bound.clone());
        let mu_cols = mu.conjugate().parts().to_vec();
        for lambda in ctx.basis() {
            let start = lambda.conjugate().parts().to_vec();
            for w in &words {
                let got = ctx.apply_word(w, &ModuleElement::basis(0, lambda.clone()));
                let reference = naive_apply(w, &start, &mu_cols, 3 + w.len());
                for nu in bound.subpartitions() {
                    let cols = nu.conjugate().parts().to_vec();
                    let want = reference.get(&cols).cloned().unwrap_or_else(|| Poly::zero(0));
                    assert_eq!(got.coefficient(&nu), want, "mu={mu} {lambda} word {w:?} at {nu}");
                }
            }
        }
    }
}
