//! Column adding operators `u_i`, Schur operators `d_{μ,i}` and
//! `ũ_i = u_i(1 + d_{μ,i})` on the free module spanned by partitions
//! containing `μ`, with the `Ã`/`B̃` products and boxed relation checks.
//!
//! Every computation runs inside a bounding partition. Terms whose columns
//! outgrow the bound are dropped; since only `d_i` ever shortens column
//! `i`, and by one box, allowing each column a slack equal to the number
//! of `d_i` still to be applied makes the truncation exact on the bound.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::polyring::ExponentKey;
use crate::shapes::{Partition, SkewShape};
use crate::Poly;

/// Finite linear combination of partitions with polynomial coefficients
/// in `x_1..x_n`, `α`, `β`.
#[derive(Clone, PartialEq)]
pub struct ModuleElement {
    n: usize,
    terms: BTreeMap<Partition, Poly>,
}

impl ModuleElement {
    pub fn zero(n: usize) -> Self {
        ModuleElement { n, terms: BTreeMap::new() }
    }

    pub fn basis(n: usize, lambda: Partition) -> Self {
        let mut e = Self::zero(n);
        e.add_term(lambda, Poly::one(n));
        e
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Poly {
        self.terms.get(lambda).cloned().unwrap_or_else(|| Poly::zero(self.n))
    }

    pub fn add_term(&mut self, lambda: Partition, c: Poly) {
        let slot = self.terms.entry(lambda.clone()).or_insert_with(|| Poly::zero(c.ambient()));
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> ModuleElement {
        let mut out = ModuleElement::zero(self.n);
        for (l, v) in &self.terms {
            out.add_term(l.clone(), v * c);
        }
        out
    }

    pub fn truncate_x_degree(&self, d: u32) -> ModuleElement {
        let mut out = ModuleElement::zero(self.n);
        for (l, v) in &self.terms {
            out.add_term(l.clone(), v.truncate_x_degree(d));
        }
        out
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({c}){l}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleElement[n={}]({self})", self.n)
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    shape: &'a Partition,
    coeff: &'a Poly,
}

impl Serialize for ModuleElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self.terms.iter().map(|(shape, coeff)| TermJson { shape, coeff }).collect();
        v.serialize(serializer)
    }
}

/// A letter of an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Op {
    U(usize),
    D(usize),
    UTilde(usize),
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::U(i) => write!(f, "u{i}"),
            Op::D(i) => write!(f, "d{i}"),
            Op::UTilde(i) => write!(f, "ũ{i}"),
        }
    }
}

/// `Σ coeff · word`, words written left to right as operator products
/// (the rightmost letter acts first).
#[derive(Clone, Debug)]
pub struct OpExpr(pub Vec<(Poly, Vec<Op>)>);

impl OpExpr {
    pub fn word(w: Vec<Op>) -> Self {
        OpExpr(vec![(Poly::one(0), w)])
    }

    pub fn plus(mut self, c: Poly, w: Vec<Op>) -> Self {
        self.0.push((c, w));
        self
    }

    pub fn minus(self, w: Vec<Op>) -> Self {
        self.plus(Poly::from_int(0, -1), w)
    }
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(c, w)| {
                let word: String = w.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" ");
                if *c == Poly::one(0) { word } else { format!("({c}) {word}") }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Fixes `μ` and the bounding partition.
#[derive(Clone, Debug)]
pub struct OperatorContext {
    mu: Partition,
    mu_cols: Vec<usize>,
    bound: Partition,
    caps: Vec<usize>,
}

fn col(cols: &[usize], i: usize) -> usize {
    if i == 0 { usize::MAX } else { cols.get(i - 1).copied().unwrap_or(0) }
}

fn set_col(lambda: &Partition, i: usize, h: usize) -> Partition {
    let mut cols = lambda.conjugate().parts().to_vec();
    if cols.len() < i {
        cols.resize(i, 0);
    }
    cols[i - 1] = h;
    Partition::from_columns(&cols).expect("column change keeps the shape a partition")
}

impl OperatorContext {
    pub fn new(mu: Partition, bound: Partition) -> Self {
        let mu_cols = mu.conjugate().parts().to_vec();
        let caps = bound.conjugate().parts().to_vec();
        OperatorContext { mu, mu_cols, bound, caps }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn bound(&self) -> &Partition {
        &self.bound
    }

    /// Partitions `λ` with `μ ⊆ λ ⊆ bound`.
    pub fn basis(&self) -> Vec<Partition> {
        self.bound.subpartitions().into_iter().filter(|l| l.contains(&self.mu)).collect()
    }

    /// Number of columns an operator index can usefully address.
    pub fn columns(&self) -> usize {
        self.bound.part(1)
    }

    fn u_slack(&self, i: usize, e: &ModuleElement, slack: usize) -> ModuleElement {
        let mut out = ModuleElement::zero(e.n);
        let cap = col(&self.caps, i) + slack;
        for (lambda, c) in &e.terms {
            let cols = lambda.conjugate().parts().to_vec();
            let h = col(&cols, i);
            let top = col(&cols, i - 1).min(cap);
            let mut coeff = c.clone();
            for new in h + 1..=top {
                out.add_term(set_col(lambda, i, new), coeff.clone());
                coeff = &coeff * &Poly::alpha(e.n);
            }
        }
        out
    }

    /// `u_i`: adds `a ≥ 1` boxes to column `i` with weight `α^{a-1}`.
    pub fn apply_u(&self, i: usize, e: &ModuleElement) -> ModuleElement {
        self.u_slack(i, e, 0)
    }

    /// `d_{μ,i}`: removes the bottom box of column `i` with weight `β`
    /// when the result is a partition containing `μ`.
    pub fn apply_d(&self, i: usize, e: &ModuleElement) -> ModuleElement {
        let mut out = ModuleElement::zero(e.n);
        for (lambda, c) in &e.terms {
            let cols = lambda.conjugate().parts().to_vec();
            let h = col(&cols, i);
            if h == 0 || h - 1 < col(&cols, i + 1) || h - 1 < col(&self.mu_cols, i) {
                continue;
            }
            out.add_term(set_col(lambda, i, h - 1), c * &Poly::beta(e.n));
        }
        out
    }

    /// `ũ_i = u_i (1 + d_{μ,i})`.
    pub fn apply_u_tilde(&self, i: usize, e: &ModuleElement) -> ModuleElement {
        let with_d = e.add(&self.apply_d(i, e));
        self.apply_u(i, &with_d)
    }

    /// Applies a word, rightmost letter first.
    pub fn apply_word(&self, word: &[Op], e: &ModuleElement) -> ModuleElement {
        let mut v = e.clone();
        for (pos, op) in word.iter().enumerate().rev() {
            let later_d = |i: usize| word[..pos].iter().filter(|o| **o == Op::D(i)).count();
            v = match *op {
                Op::U(i) => self.u_slack(i, &v, later_d(i)),
                Op::D(i) => self.apply_d(i, &v),
                Op::UTilde(i) => {
                    let with_d = v.add(&self.apply_d(i, &v));
                    self.u_slack(i, &with_d, later_d(i))
                }
            };
            if v.is_zero() {
                break;
            }
        }
        v
    }

    pub fn apply_expr(&self, expr: &OpExpr, e: &ModuleElement) -> ModuleElement {
        let mut out = ModuleElement::zero(e.n);
        for (c, w) in &expr.0 {
            let lifted = c.lift(e.n.max(c.ambient()));
            out = out.add(&self.apply_word(w, e).scale(&lifted));
        }
        out
    }
}

fn x_power(n: usize, j: usize, k: u32) -> Poly {
    let mut x = vec![0; n];
    x[j - 1] = k;
    Poly::monomial(n, ExponentKey::new(x, Vec::new(), Vec::new(), 0, 0), BigInt::one())
}

/// Coefficient of `λ` in `⋯Ã(x_2)Ã(x_1)·μ` with
/// `Ã(x) = ⋯(1 + xũ_2)(1 + xũ_1)`.
pub fn a_product(shape: &SkewShape, m: usize) -> Poly {
    let ctx = OperatorContext::new(shape.inner.clone(), shape.outer.clone());
    let mut v = ModuleElement::basis(m, shape.inner.clone());
    for j in 1..=m {
        for i in 1..=ctx.columns() {
            let step = ctx.apply_u_tilde(i, &v).scale(&x_power(m, j, 1));
            v = v.add(&step);
        }
    }
    v.coefficient(&shape.outer)
}

/// Coefficient of `λ` in `⋯B̃(x_2)B̃(x_1)·μ` with
/// `B̃(x) = (1 − xũ_1)^{-1}(1 − xũ_2)^{-1}⋯`, truncated to x-degree
/// `≤ max_degree`.
pub fn b_product(shape: &SkewShape, m: usize, max_degree: u32) -> Poly {
    let ctx = OperatorContext::new(shape.inner.clone(), shape.outer.clone());
    let mut v = ModuleElement::basis(m, shape.inner.clone());
    for j in 1..=m {
        for i in (1..=ctx.columns()).rev() {
            let mut acc = v.clone();
            let mut power = v;
            loop {
                power = ctx.apply_u_tilde(i, &power).scale(&x_power(m, j, 1)).truncate_x_degree(max_degree);
                if power.is_zero() {
                    break;
                }
                acc = acc.add(&power);
            }
            v = acc;
        }
    }
    v.coefficient(&shape.outer)
}

/// A named identity between operator expressions.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub indices: Vec<usize>,
    pub lhs: OpExpr,
    pub rhs: OpExpr,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationFailure {
    pub relation: String,
    pub indices: Vec<usize>,
    pub lambda: Partition,
    pub lhs: ModuleElement,
    pub rhs: ModuleElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub mu: Partition,
    pub bound: Partition,
    /// `(relation, index tuple, basis partition)` evaluations.
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates both sides of every relation on every basis partition.
pub fn check_relations(ctx: &OperatorContext, relations: &[Relation]) -> RelationReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for lambda in ctx.basis() {
        let e = ModuleElement::basis(0, lambda.clone());
        for r in relations {
            checked += 1;
            let lhs = ctx.apply_expr(&r.lhs, &e);
            let rhs = ctx.apply_expr(&r.rhs, &e);
            if lhs != rhs {
                failures.push(RelationFailure {
                    relation: r.name.clone(),
                    indices: r.indices.clone(),
                    lambda: lambda.clone(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    RelationReport { mu: ctx.mu.clone(), bound: ctx.bound.clone(), checked, failures }
}

fn ab() -> Poly {
    &Poly::alpha(0) * &Poly::beta(0)
}

/// The five `u`/`d` identities, for every index (pair) addressing the bound.
pub fn ud_relations(columns: usize) -> Vec<Relation> {
    use Op::{D, U};
    let mut out = Vec::new();
    let rel = |name: &str, indices: Vec<usize>, lhs: OpExpr, rhs: OpExpr| Relation { name: name.into(), indices, lhs, rhs };
    for i in 1..=columns {
        out.push(rel(
            "u_i d_i u_i = αβ u_i² + β u_i",
            vec![i],
            OpExpr::word(vec![U(i), D(i), U(i)]),
            OpExpr(vec![(ab(), vec![U(i), U(i)]), (Poly::beta(0), vec![U(i)])]),
        ));
        for j in 1..=columns {
            if i != j {
                out.push(rel("u_i d_j = d_j u_i", vec![i, j], OpExpr::word(vec![U(i), D(j)]), OpExpr::word(vec![D(j), U(i)])));
            }
        }
    }
    for i in 1..columns {
        let k = i + 1;
        out.push(rel(
            "u_{i+1} d_i d_{i+1} = u_{i+1} d_{i+1} d_i",
            vec![i],
            OpExpr::word(vec![U(k), D(i), D(k)]),
            OpExpr::word(vec![U(k), D(k), D(i)]),
        ));
        out.push(rel(
            "u_i u_{i+1} d_i u_i = αβ u_i u_{i+1} u_i + β u_i u_{i+1}",
            vec![i],
            OpExpr::word(vec![U(i), U(k), D(i), U(i)]),
            OpExpr(vec![(ab(), vec![U(i), U(k), U(i)]), (Poly::beta(0), vec![U(i), U(k)])]),
        ));
        out.push(rel(
            "u_{i+1} d_{i+1} u_i u_{i+1} = αβ u_{i+1} u_i u_{i+1} + β u_i u_{i+1}",
            vec![i],
            OpExpr::word(vec![U(k), D(k), U(i), U(k)]),
            OpExpr(vec![(ab(), vec![U(k), U(i), U(k)]), (Poly::beta(0), vec![U(i), U(k)])]),
        ));
    }
    out
}

/// The three Fomin–Greene relations for the `ũ_i`.
pub fn fomin_greene_relations(columns: usize) -> Vec<Relation> {
    use Op::UTilde as V;
    let mut out = Vec::new();
    for i in 1..=columns {
        for j in i + 1..=columns {
            for k in j + 1..=columns {
                out.push(Relation {
                    name: "v_i v_k v_j = v_k v_i v_j".into(),
                    indices: vec![i, j, k],
                    lhs: OpExpr::word(vec![V(i), V(k), V(j)]),
                    rhs: OpExpr::word(vec![V(k), V(i), V(j)]),
                });
                out.push(Relation {
                    name: "v_j v_k v_i = v_j v_i v_k".into(),
                    indices: vec![i, j, k],
                    lhs: OpExpr::word(vec![V(j), V(k), V(i)]),
                    rhs: OpExpr::word(vec![V(j), V(i), V(k)]),
                });
            }
            out.push(Relation {
                name: "v_j (v_i v_j − v_j v_i) = (v_i v_j − v_j v_i) v_i".into(),
                indices: vec![i, j],
                lhs: OpExpr::word(vec![V(j), V(i), V(j)]).minus(vec![V(j), V(j), V(i)]),
                rhs: OpExpr::word(vec![V(i), V(j), V(i)]).minus(vec![V(j), V(i), V(i)]),
            });
        }
    }
    out
}

/// `e_k(ũ) = Σ_{a_1 > ⋯ > a_k} ũ_{a_1}⋯ũ_{a_k}` over the given columns.
pub fn elementary(k: usize, columns: usize) -> OpExpr {
    fn rec(k: usize, below: usize, cur: &mut Vec<Op>, out: &mut Vec<(Poly, Vec<Op>)>) {
        if k == 0 {
            out.push((Poly::one(0), cur.clone()));
            return;
        }
        for a in (1..below).rev() {
            cur.push(Op::UTilde(a));
            rec(k - 1, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, columns + 1, &mut Vec::new(), &mut out);
    OpExpr(out)
}

fn compose(a: &OpExpr, b: &OpExpr) -> OpExpr {
    let mut out = Vec::new();
    for (ca, wa) in &a.0 {
        for (cb, wb) in &b.0 {
            out.push((ca * cb, wa.iter().chain(wb).copied().collect()));
        }
    }
    OpExpr(out)
}

/// `e_k(ũ) e_l(ũ) = e_l(ũ) e_k(ũ)`.
pub fn commutator_relation(k: usize, l: usize, columns: usize) -> Relation {
    let (ek, el) = (elementary(k, columns), elementary(l, columns));
    Relation {
        name: format!("e_{k} e_{l} = e_{l} e_{k}"),
        indices: vec![k, l],
        lhs: compose(&ek, &el),
        rhs: compose(&el, &ek),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn single_box_geometric_series() {
        let one: SkewShape = "1".parse().unwrap();
        let expected = &(&x_power(1, 1, 1) + &(&x_power(1, 1, 2) * &Poly::beta(1))) + &(&x_power(1, 1, 3) * &(&Poly::beta(1) * &Poly::beta(1)));
        assert_eq!(b_product(&one, 1, 3), expected);
    }

    #[test]
    fn empty_products() {
        let s: SkewShape = "2,1/2,1".parse().unwrap();
        assert_eq!(a_product(&s, 0), Poly::one(0));
        assert_eq!(b_product(&s, 2, 0), Poly::one(2));
        let t: SkewShape = "2,1/1".parse().unwrap();
        assert!(a_product(&t, 0).is_zero());
    }

    #[test]
    fn elementary_words() {
        assert_eq!(elementary(2, 3).0.len(), 3);
        assert_eq!(elementary(0, 3).0.len(), 1);
        assert_eq!(elementary(1, 2).0[0].1, vec![Op::UTilde(2)]);
        let ctx = OperatorContext::new(p(""), p("1"));
        assert!(ctx.apply_u(5, &ModuleElement::basis(0, p("1"))).is_zero());
    }
}
