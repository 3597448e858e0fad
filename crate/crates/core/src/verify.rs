//! Exhaustive desk-scale property suites. Each suite walks every compact
//! skew shape up to a cell bound, in parallel over shapes, and collects
//! failures in shape order so reports are reproducible.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{
    counts_to_expansion, is_highest_weight, raise, schur_expansion_via_crystal,
    schur_expansion_via_lattice_words, string_lengths, word_lower, word_raise, CrystalGraph,
};
use crate::fomin_greene::{a_product, b_product, check_relations, commutator_relation, fomin_greene_relations, ud_relations, OperatorContext};
use crate::involution::{phi, DescentKind, TwoLetterTable};
use crate::newton::{degree_check, has_snp, hw_weight_interval_check};
use crate::omega::{j_polynomial, j_polynomial_filtered, omega_image_via_expansion};
use crate::polyring::{schur_expand, schur_polynomial, ExponentKey, Specialization};
use crate::shapes::{Partition, SkewShape};
use crate::svrpp::{enumerate, hybrid_polynomial, reconstruct};
use crate::Poly;

/// Failures beyond this many are counted but not kept.
const KEEP_FAILURES: usize = 20;

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub failure_count: usize,
    /// The first failures, each with a witness.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.into(), ..Default::default() }
    }

    pub fn ok(&self) -> bool {
        self.failure_count == 0
    }

    fn check(&mut self, cond: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !cond {
            self.fail(witness());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < KEEP_FAILURES {
            self.failures.push(msg);
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < KEEP_FAILURES {
                self.failures.push(f);
            }
        }
    }

    fn merged(suite: &str, parts: Vec<SuiteReport>) -> Self {
        let mut out = SuiteReport::new(suite);
        for p in parts {
            out.absorb(p);
        }
        out
    }
}

/// Bounds shared by the suites.
///
/// Fillings of disconnected shapes grow as a product over the pieces, so
/// above `disconnected_max_n` a disconnected shape is only included when it
/// has at most `max_cells - 2` cells.
#[derive(Clone, Debug, Serialize)]
pub struct Bounds {
    /// Largest number of cells in a skew shape.
    pub max_cells: usize,
    /// Largest alphabet size.
    pub max_n: u32,
    pub disconnected_max_n: u32,
    /// Random resolution orders tried per table.
    pub orders: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_cells: 6, max_n: 4, disconnected_max_n: 3, orders: 50, seed: 0 }
    }
}

impl Bounds {
    /// The `(shape, n)` pairs the filling-level suites run over.
    pub fn fixtures(&self) -> Vec<(SkewShape, u32)> {
        let mut out = Vec::new();
        for shape in SkewShape::compact_shapes(self.max_cells) {
            let full = shape.is_connected() || shape.size() + 2 <= self.max_cells;
            for n in 1..=self.max_n {
                if full || n <= self.disconnected_max_n {
                    out.push((shape.clone(), n));
                }
            }
        }
        out
    }
}

fn per_fixture(suite: &str, b: &Bounds, f: impl Fn(&SkewShape, u32) -> SuiteReport + Sync + Send) -> SuiteReport {
    let parts: Vec<SuiteReport> = b.fixtures().par_iter().map(|(s, n)| f(s, *n)).collect();
    SuiteReport::merged(suite, parts)
}

fn per_shape(suite: &str, max_cells: usize, f: impl Fn(&SkewShape) -> SuiteReport + Sync + Send) -> SuiteReport {
    let shapes = SkewShape::compact_shapes(max_cells);
    let parts: Vec<SuiteReport> = shapes.par_iter().map(f).collect();
    SuiteReport::merged(suite, parts)
}

/// `Φ_i` is an involution on `SVRPP^n` that keeps `ceq`, `ex` and swaps
/// the `i`-th and `(i+1)`-th entries of `ircont`; the hybrid polynomial is
/// symmetric.
pub fn involution_suite(b: &Bounds) -> SuiteReport {
    per_fixture("involution", b, |shape, n| {
        let mut r = SuiteReport::new("involution");
        for t in enumerate(shape, n) {
            for i in 1..n {
                let u = match phi(&t, i) {
                    Ok(u) => u,
                    Err(e) => {
                        r.fail(format!("Φ_{i}({t}) failed: {e}"));
                        continue;
                    }
                };
                r.check(u.max_entry() <= n, || format!("Φ_{i}({t}) = {u} leaves [{n}]"));
                r.check(phi(&u, i).as_ref() == Ok(&t), || format!("Φ_{i} is not involutive at {t}"));
                r.check(u.ceq() == t.ceq() && u.excess() == t.excess(), || format!("Φ_{i}({t}) = {u} changes ceq or ex"));
                let mut w = t.ircont();
                w.resize(n as usize, 0);
                w.swap(i as usize - 1, i as usize);
                let mut wu = u.ircont();
                wu.resize(n as usize, 0);
                r.check(w == wu, || format!("Φ_{i}({t}) = {u} does not swap ircont"));
            }
        }
        let p = hybrid_polynomial(shape, n);
        r.check(p.is_symmetric_in_x(), || format!("G_{shape} in {n} variables is not symmetric"));
        r
    })
}

/// Resolutions on benign two-letter tables: statistics kept, the
/// flip-exchange property, strict decrease of `ℓ`, and order independence
/// of `norm` over random resolution orders.
pub fn tables_suite(b: &Bounds) -> SuiteReport {
    let shapes = SkewShape::compact_shapes(b.max_cells);
    let parts: Vec<SuiteReport> = shapes
        .par_iter()
        .enumerate()
        .map(|(si, shape)| {
            let mut r = SuiteReport::new("tables");
            for (ti, t) in TwoLetterTable::all_on_shape(shape).into_iter().enumerate().filter(|(_, t)| t.is_benign()) {
                for d in t.descents() {
                    let k = d.column;
                    if d.kind == DescentKind::MM {
                        r.fail(format!("benign table {t} has an MM descent at {k}"));
                        continue;
                    }
                    let Ok(s) = t.resolve(k) else {
                        r.fail(format!("resolve({t}, {k}) failed"));
                        continue;
                    };
                    r.check(s.ceq() == t.ceq() && s.excess() == t.excess() && s.ircont() == t.ircont(), || {
                        format!("resolve({t}, {k}) = {s} changes statistics")
                    });
                    r.check(s.ell() < t.ell(), || format!("ℓ does not drop: {t} → {s}"));
                    let fs = s.flip();
                    let again = fs.descents().iter().any(|e| e.column == k);
                    r.check(again && fs.resolve(k).as_ref() == Ok(&t.flip()), || {
                        format!("resolve_{k}(flip(resolve_{k}({t}))) ≠ flip({t})")
                    });
                }
                let Ok(canon) = t.norm() else {
                    r.fail(format!("norm({t}) failed"));
                    continue;
                };
                r.check(canon.is_descent_free(), || format!("norm({t}) = {canon} has descents"));
                let mut rng = ChaCha8Rng::seed_from_u64(b.seed ^ ((si as u64) << 32) ^ ti as u64);
                for _ in 0..b.orders {
                    let other = t.norm_random(&mut rng);
                    r.check(other.as_ref() == Ok(&canon), || format!("norm of {t} depends on order: {canon} vs {other:?}"));
                }
            }
            r
        })
        .collect();
    SuiteReport::merged("tables", parts)
}

/// Crystal axioms, seminormality, string lengths, highest weights versus
/// lattice words, intertwining with the word crystal, and the shape of each
/// component.
pub fn crystal_suite(b: &Bounds) -> SuiteReport {
    per_fixture("crystal", b, |shape, n| {
        let mut r = SuiteReport::new("crystal");
        let g = match CrystalGraph::build(shape, n) {
            Ok(g) => g,
            Err(e) => {
                r.fail(format!("crystal graph of {shape}, n={n}: {e}"));
                return r;
            }
        };
        check_operators(&mut r, &g);
        let sources = g.sources();
        for comp in g.components() {
            let tops: Vec<usize> = comp.iter().copied().filter(|k| sources.binary_search(k).is_ok()).collect();
            if tops.len() != 1 {
                r.fail(format!("component of {} in {shape}, n={n} has {} sources", g.nodes[comp[0]], tops.len()));
                continue;
            }
            r.checks += 1;
            let top = g.weight(tops[0]);
            let Ok(nu) = Partition::new(top.iter().map(|&e| e as usize).collect()) else {
                r.fail(format!("source {} has non-partition weight", g.nodes[tops[0]]));
                continue;
            };
            let mut char_poly = Poly::zero(n as usize);
            for &k in &comp {
                let x = g.nodes[k].weight_key(n as usize).x;
                char_poly.add_term(ExponentKey::new(x, Vec::new(), Vec::new(), 0, 0), 1.into());
            }
            r.check(char_poly == schur_polynomial(&nu, n as usize), || {
                format!("component of {} in {shape}, n={n} is not B({nu})", g.nodes[tops[0]])
            });
        }
        r
    })
}

/// Node-level checks. `f_i` comes from the graph edges, `e_i` is computed
/// afresh, and both are compared with the word operators on reading words.
fn check_operators(r: &mut SuiteReport, g: &CrystalGraph) {
    let n = g.n;
    let len = g.nodes.len();
    let reads: Vec<_> = g.nodes.iter().map(|t| t.reading_word()).collect();
    let weights: Vec<Vec<u32>> = (0..len)
        .map(|k| {
            let mut w = g.weight(k);
            w.resize(n as usize, 0);
            w
        })
        .collect();
    for i in 1..n {
        let iu = i as usize;
        let mut down = vec![None; len];
        for &(a, j, b) in &g.edges {
            if j == i {
                down[a] = Some(b);
            }
        }
        let mut up = vec![None; len];
        for (k, t) in g.nodes.iter().enumerate() {
            match raise(t, i) {
                Ok(Some(u)) => match g.index_of(&u) {
                    Some(a) => up[k] = Some(a),
                    None => r.fail(format!("e_{i}({t}) = {u} leaves the crystal")),
                },
                Ok(None) => {}
                Err(e) => r.fail(format!("e_{i}({t}) failed: {e}")),
            }
        }
        for k in 0..len {
            let t = &g.nodes[k];
            if let Some(a) = up[k] {
                r.check(down[a] == Some(k), || format!("f_{i}(e_{i}({t})) ≠ {t}"));
            }
            if let Some(b) = down[k] {
                let u = &g.nodes[b];
                r.check(up[b] == Some(k), || format!("e_{i}(f_{i}({t})) ≠ {t}"));
                let (a, bw) = (&weights[k], &weights[b]);
                let shifted = bw[iu - 1] + 1 == a[iu - 1]
                    && bw[iu] == a[iu] + 1
                    && (0..n as usize).all(|q| q == iu - 1 || q == iu || a[q] == bw[q]);
                r.check(shifted, || format!("weight shift wrong: {t} → {u}"));
                r.check(u.ceq() == t.ceq() && u.excess() == t.excess(), || format!("ceq/ex changed: {t} → {u}"));
                r.check(reads[b].1 == reads[k].1, || format!("height vector changed: {t} → {u}"));
            }
            let word = &reads[k].0;
            r.check(word_raise(word, i) == up[k].map(|a| reads[a].0.clone()), || format!("E_{i} read ≠ read e_{i} at {t}"));
            r.check(word_lower(word, i) == down[k].map(|b| reads[b].0.clone()), || format!("F_{i} read ≠ read f_{i} at {t}"));
            let (eps, ph) = string_lengths(t, i);
            let wt = &weights[k];
            r.check(ph as i64 - eps as i64 == wt[iu - 1] as i64 - wt[iu] as i64, || format!("not seminormal at {t}, i={i}"));
            let walk = |steps: &[Option<usize>]| {
                let (mut cur, mut count) = (k, 0);
                while let Some(next) = steps[cur] {
                    cur = next;
                    count += 1;
                }
                count
            };
            r.check(walk(&up) == eps && walk(&down) == ph, || format!("string lengths wrong at {t}, i={i}"));
        }
    }
    let mut is_top = vec![true; len];
    for &(_, _, b) in &g.edges {
        is_top[b] = false;
    }
    for (k, t) in g.nodes.iter().enumerate() {
        r.check(is_highest_weight(t) == is_top[k], || format!("lattice-word test disagrees with e_i at {t}"));
    }
}

/// Every filling is recovered from its reading word, height vector and
/// excess.
pub fn reconstruction_suite(b: &Bounds) -> SuiteReport {
    per_fixture("reconstruction", b, |shape, n| {
        let mut r = SuiteReport::new("reconstruction");
        for t in enumerate(shape, n) {
            let (w, h) = t.reading_word();
            let back = reconstruct(shape, &w, &h, &t.excess());
            r.check(back.as_ref() == Some(&t), || format!("reconstruct({w}, {h:?}) = {back:?}, expected {t}"));
        }
        r
    })
}

/// The three Schur expansions agree: crystal sources, lattice words, and
/// elimination on the polynomial.
pub fn expansion_suite(b: &Bounds) -> SuiteReport {
    per_fixture("expansion", b, |shape, n| {
        let mut r = SuiteReport::new("expansion");
        let via_crystal = schur_expansion_via_crystal(shape, n);
        let via_words = schur_expansion_via_lattice_words(shape, n);
        let (Ok(c), Ok(w)) = (via_crystal, via_words) else {
            r.fail(format!("expansion of {shape}, n={n} failed"));
            return r;
        };
        r.check(c == w, || format!("crystal and lattice-word counts differ for {shape}, n={n}"));
        let direct = schur_expand(&hybrid_polynomial(shape, n));
        r.check(direct.as_ref() == Ok(&counts_to_expansion(&c)), || format!("elimination disagrees for {shape}, n={n}"));
        r
    })
}

/// Flat/bar bounds on highest weights, SNP at `t = w = 1`, and the degree
/// of `G_λ(x_n; 1; 1)`, for straight shapes.
pub fn newton_suite(max_size: usize, max_n: u32) -> SuiteReport {
    let shapes: Vec<(Partition, u32)> = (1..=max_size)
        .flat_map(Partition::all_of_size)
        .flat_map(|l| (1..=max_n).map(move |n| (l.clone(), n)))
        .collect();
    let parts: Vec<SuiteReport> = shapes
        .par_iter()
        .map(|(l, n)| {
            let mut r = SuiteReport::new("newton");
            let rep = hw_weight_interval_check(l, *n);
            r.check(rep.ok(), || format!("highest weights of {l}, n={n} are not the interval: {rep:?}"));
            let p = hybrid_polynomial(&SkewShape::straight(l.clone()), *n).specialize(&Specialization::values(1, 1));
            match has_snp(&p) {
                Ok(s) => r.check(s.holds, || format!("SNP fails for {l}, n={n}: {:?}", s.witness)),
                Err(e) => r.fail(format!("Newton polytope of {l}, n={n}: {e}")),
            }
            let (deg, bar) = degree_check(l, *n);
            r.check(deg as usize == bar && p.max_x_degree() == Some(deg), || {
                format!("degree of {l}, n={n}: dp {deg}, |λ̄| {bar}, polynomial {:?}", p.max_x_degree())
            });
            r
        })
        .collect();
    SuiteReport::merged("newton", parts)
}

/// Operator relations inside `bound` for each `μ`, and the `Ã` product
/// against the hybrid polynomial.
pub fn operators_suite(mus: &[Partition], bound: &Partition, max_cells: usize, max_m: usize) -> SuiteReport {
    let mut r = SuiteReport::new("operators");
    let cols = bound.part(1);
    for mu in mus {
        let ctx = OperatorContext::new(mu.clone(), bound.clone());
        for rep in [check_relations(&ctx, &ud_relations(cols)), check_relations(&ctx, &fomin_greene_relations(cols))] {
            r.checks += rep.checked;
            for f in rep.failures {
                r.fail(format!("{} {:?} at {} (μ = {mu}): {} vs {}", f.relation, f.indices, f.lambda, f.lhs, f.rhs));
            }
        }
        let comm = check_relations(&ctx, &[commutator_relation(1, 2, cols)]);
        r.checks += comm.checked;
        for f in comm.failures {
            r.fail(format!("{} at {} (μ = {mu})", f.relation, f.lambda));
        }
    }
    r.absorb(per_shape("operators", max_cells, |shape| {
        let mut r = SuiteReport::new("operators");
        for m in 1..=max_m {
            let expected = hybrid_polynomial(shape, m as u32).specialize(&Specialization::to_alpha_beta());
            r.check(a_product(shape, m) == expected, || format!("Ã product differs for {shape}, m={m}"));
        }
        r
    }));
    r
}

/// The MMSVT sum, the conjugated Schur expansion and the `B̃` product agree,
/// and the two scalar specializations match the mark-free and excess-free
/// sub-sums.
pub fn omega_suite(max_cells: usize, max_degree: u32) -> SuiteReport {
    per_shape("omega", max_cells, |shape| {
        let mut r = SuiteReport::new("omega");
        for d in 0..=max_degree {
            let n = d.max(1);
            let j = j_polynomial(shape, n, d);
            let via_expansion = omega_image_via_expansion(shape, n, d);
            r.check(via_expansion.as_ref() == Ok(&j), || format!("omega image via expansion differs for {shape}, D={d}"));
            r.check(b_product(shape, n as usize, d) == j, || format!("B̃ product differs for {shape}, D={d}"));
            let no_marks = j_polynomial_filtered(shape, n, d, |t| t.stats().1.is_empty());
            let no_excess = j_polynomial_filtered(shape, n, d, |t| t.stats().2.is_empty());
            r.check(j.specialize(&Specialization::scalars(0, -1)) == no_marks.specialize(&Specialization::scalars(0, -1)), || {
                format!("α = 0 part is not the mark-free sum for {shape}, D={d}")
            });
            r.check(j.specialize(&Specialization::scalars(1, 0)) == no_excess.specialize(&Specialization::scalars(1, 0)), || {
                format!("β = 0 part is not the excess-free sum for {shape}, D={d}")
            });
        }
        r
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StaircaseReport {
    pub n: usize,
    pub vars: u32,
    /// `(ρ, ρ', equal)` for every `ρ ⊆ δ_n`.
    pub cases: Vec<(Partition, Partition, bool)>,
}

impl StaircaseReport {
    pub fn ok(&self) -> bool {
        self.cases.iter().all(|c| c.2)
    }
}

/// Compares `G_{δ_n/ρ}` and `G_{δ_n/ρ'}` at `t_i = α`, `w_i = β` for every
/// `ρ ⊆ δ_n = (n-1, …, 1)`.
pub fn staircase_check(n: usize, vars: u32) -> StaircaseReport {
    let delta = Partition::staircase(n);
    let rhos = delta.subpartitions();
    let cases = rhos
        .par_iter()
        .map(|rho| {
            let conj = rho.conjugate();
            let g = |inner: &Partition| {
                let shape = SkewShape::new(delta.clone(), inner.clone()).expect("ρ ⊆ δ_n");
                hybrid_polynomial(&shape, vars).specialize(&Specialization::to_alpha_beta())
            };
            let equal = g(rho) == g(&conj);
            (rho.clone(), conj, equal)
        })
        .collect();
    StaircaseReport { n, vars, cases }
}

pub const SUITES: [&str; 8] = ["involution", "tables", "crystal", "reconstruction", "expansion", "newton", "operators", "omega"];

/// Runs a named suite at its standard bounds.
pub fn run_suite(name: &str, b: &Bounds) -> Option<SuiteReport> {
    let std_bound: Partition = Partition::new(vec![4; 4]).expect("box");
    let mus: Vec<Partition> = ["", "1", "2,1"].iter().map(|s| s.parse().expect("partition")).collect();
    Some(match name {
        "involution" => involution_suite(b),
        "tables" => tables_suite(b),
        "crystal" => crystal_suite(b),
        "reconstruction" => reconstruction_suite(b),
        "expansion" => expansion_suite(b),
        "newton" => newton_suite(b.max_cells, b.max_n.min(3)),
        "operators" => operators_suite(&mus, &std_bound, b.max_cells.min(5), 3),
        "omega" => omega_suite(b.max_cells.min(4), 4),
        _ => return None,
    })
}
