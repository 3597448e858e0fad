//! Exact sparse polynomials in `x_1..x_n`, the row-indexed families
//! `t_1, t_2, …` and `w_1, w_2, …`, and two scalar parameters `α`, `β`.
//!
//! Coefficients are generic over [`Coefficient`]; the crate root fixes the
//! usual big-integer instance as [`crate::Poly`].

mod schur;

pub use schur::{schur_expand, schur_polynomial, SchurExpansion};

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::PolyError;

/// Ring of coefficients. Blanket-implemented for every signed numeric type
/// with exact arithmetic, e.g. `BigInt`, `i64`, `i128`, `BigRational`.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Signed
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
}

impl<C> Coefficient for C where
    C: Clone
        + PartialEq
        + Debug
        + Display
        + Zero
        + One
        + Signed
        + FromPrimitive
        + Neg<Output = C>
        + Add<Output = C>
        + Sub<Output = C>
        + Mul<Output = C>
        + Send
        + Sync
        + 'static
{
}

/// Exponents of one monomial. `x` has the ambient length; `t` and `w` are
/// trimmed of trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentKey {
    pub x: Vec<u32>,
    pub t: Vec<u32>,
    pub w: Vec<u32>,
    pub a: u32,
    pub b: u32,
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn add_vec(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, e) in a.iter().enumerate() {
        out[i] += e;
    }
    for (i, e) in b.iter().enumerate() {
        out[i] += e;
    }
    out
}

impl ExponentKey {
    pub fn new(x: Vec<u32>, mut t: Vec<u32>, mut w: Vec<u32>, a: u32, b: u32) -> Self {
        trim(&mut t);
        trim(&mut w);
        ExponentKey { x, t, w, a, b }
    }

    pub fn constant(n: usize) -> Self {
        ExponentKey { x: vec![0; n], ..Default::default() }
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.x_degree() + self.t.iter().sum::<u32>() + self.w.iter().sum::<u32>() + self.a + self.b
    }

    fn product(&self, other: &ExponentKey) -> ExponentKey {
        ExponentKey {
            x: add_vec(&self.x, &other.x),
            t: add_vec(&self.t, &other.t),
            w: add_vec(&self.w, &other.w),
            a: self.a + other.a,
            b: self.b + other.b,
        }
    }

    /// The same key with the x part removed.
    pub fn parameters(&self) -> ExponentKey {
        ExponentKey { x: Vec::new(), t: self.t.clone(), w: self.w.clone(), a: self.a, b: self.b }
    }

    fn lifted(&self, n: usize) -> ExponentKey {
        let mut k = self.clone();
        k.x.resize(n, 0);
        k
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, first: &mut bool, name: &str, e: u32) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

impl Display for ExponentKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.x.iter().enumerate() {
            fmt_power(f, &mut first, &format!("x{}", i + 1), e)?;
        }
        for (i, &e) in self.t.iter().enumerate() {
            fmt_power(f, &mut first, &format!("t{}", i + 1), e)?;
        }
        for (i, &e) in self.w.iter().enumerate() {
            fmt_power(f, &mut first, &format!("w{}", i + 1), e)?;
        }
        fmt_power(f, &mut first, "alpha", self.a)?;
        fmt_power(f, &mut first, "beta", self.b)?;
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial with nonzero coefficients only. Ambient `n = 0` marks
/// an x-free polynomial; such operands combine with any ambient size.
#[derive(Clone, PartialEq)]
pub struct SparsePoly<C> {
    n: usize,
    terms: BTreeMap<ExponentKey, C>,
}

impl<C: Coefficient> SparsePoly<C> {
    pub fn zero(n: usize) -> Self {
        SparsePoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(n, ExponentKey::constant(n), c)
    }

    pub fn from_int(n: usize, c: i64) -> Self {
        Self::constant(n, C::from_i64(c).expect("integer fits the coefficient type"))
    }

    /// `c * key`. Panics if `key.x` has the wrong length.
    pub fn monomial(n: usize, key: ExponentKey, c: C) -> Self {
        assert_eq!(key.x.len(), n, "exponent key has the wrong ambient size");
        let mut p = Self::zero(n);
        p.add_term(key, c);
        p
    }

    /// The variable `x_i` (1-indexed).
    pub fn x(n: usize, i: usize) -> Self {
        let mut key = ExponentKey::constant(n);
        key.x[i - 1] = 1;
        Self::monomial(n, key, C::one())
    }

    pub fn t(n: usize, i: usize) -> Self {
        let mut t = vec![0; i];
        t[i - 1] = 1;
        Self::monomial(n, ExponentKey::new(vec![0; n], t, vec![], 0, 0), C::one())
    }

    pub fn w(n: usize, i: usize) -> Self {
        let mut w = vec![0; i];
        w[i - 1] = 1;
        Self::monomial(n, ExponentKey::new(vec![0; n], vec![], w, 0, 0), C::one())
    }

    pub fn alpha(n: usize) -> Self {
        Self::monomial(n, ExponentKey::new(vec![0; n], vec![], vec![], 1, 0), C::one())
    }

    pub fn beta(n: usize) -> Self {
        Self::monomial(n, ExponentKey::new(vec![0; n], vec![], vec![], 0, 1), C::one())
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(k, c)| *k == ExponentKey::constant(self.n) && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentKey, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &ExponentKey) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c * key` in place.
    pub fn add_term(&mut self, key: ExponentKey, c: C) {
        debug_assert_eq!(key.x.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Same polynomial viewed in `n` x-variables (`n` at least the current
    /// ambient size).
    pub fn lift(&self, n: usize) -> Self {
        assert!(n >= self.n, "cannot shrink the ambient size");
        if n == self.n {
            return self.clone();
        }
        SparsePoly { n, terms: self.terms.iter().map(|(k, c)| (k.lifted(n), c.clone())).collect() }
    }

    fn common_ambient(&self, other: &Self) -> Result<usize, PolyError> {
        match (self.n, other.n) {
            (a, b) if a == b => Ok(a),
            (0, b) if self.terms.keys().all(|k| k.x.is_empty()) => Ok(b),
            (a, 0) if other.terms.keys().all(|k| k.x.is_empty()) => Ok(a),
            (a, b) => Err(PolyError::AmbientMismatch(a, b)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        let n = self.common_ambient(other)?;
        let mut out = self.lift(n);
        for (k, c) in &other.terms {
            out.add_term(k.lifted(n), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let n = self.common_ambient(other)?;
        let mut out = Self::zero(n);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_term(k1.product(k2).lifted(n), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    fn neg_ref(&self) -> Self {
        SparsePoly { n: self.n, terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect() }
    }

    /// Multiplies by the single monomial `key` (no coefficient).
    pub fn shift(&self, key: &ExponentKey) -> Self {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(k.product(key).lifted(self.n), c.clone());
        }
        out
    }

    /// Drops every term of x-degree above `d`.
    pub fn truncate_x_degree(&self, d: u32) -> Self {
        SparsePoly {
            n: self.n,
            terms: self.terms.iter().filter(|(k, _)| k.x_degree() <= d).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentKey::x_degree).max()
    }

    /// Distinct x-exponent vectors occurring in the polynomial.
    pub fn x_support(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.terms.keys().map(|k| k.x.clone()).collect();
        v.dedup();
        v
    }

    /// Collects the coefficient (a polynomial without x) of every x-monomial.
    pub fn x_coefficients(&self) -> BTreeMap<Vec<u32>, SparsePoly<C>> {
        let mut out: BTreeMap<Vec<u32>, SparsePoly<C>> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k.x.clone()).or_insert_with(|| SparsePoly::zero(0)).add_term(k.parameters(), c.clone());
        }
        out
    }

    /// True iff the polynomial is unchanged by swapping any two adjacent
    /// x-variables.
    pub fn is_symmetric_in_x(&self) -> bool {
        (1..self.n).all(|i| {
            self.terms.iter().all(|(k, c)| {
                let mut swapped = k.clone();
                swapped.x.swap(i - 1, i);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    pub fn specialize(&self, s: &Specialization) -> Self {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.terms {
            let mut key = ExponentKey { x: k.x.clone(), ..Default::default() };
            let mut coeff = c.clone();
            let mut apply = |target: &Subst, e: u32, idx: Option<(usize, bool)>, key: &mut ExponentKey| match target {
                Subst::Keep => match idx {
                    Some((i, true)) => {
                        if key.t.len() <= i {
                            key.t.resize(i + 1, 0);
                        }
                        key.t[i] += e;
                    }
                    Some((i, false)) => {
                        if key.w.len() <= i {
                            key.w.resize(i + 1, 0);
                        }
                        key.w[i] += e;
                    }
                    None => unreachable!("parameters are handled separately"),
                },
                Subst::Value(v) => {
                    let base = C::from_i64(*v).expect("integer fits the coefficient type");
                    coeff = coeff.clone() * num_traits::pow(base, e as usize);
                }
                Subst::Alpha => key.a += e,
                Subst::Beta => key.b += e,
            };
            for (i, &e) in k.t.iter().enumerate() {
                apply(&s.t, e, Some((i, true)), &mut key);
            }
            for (i, &e) in k.w.iter().enumerate() {
                apply(&s.w, e, Some((i, false)), &mut key);
            }
            for (target, keep, e) in [(&s.alpha, Subst::Alpha, k.a), (&s.beta, Subst::Beta, k.b)] {
                let target = if *target == Subst::Keep { &keep } else { target };
                apply(target, e, None, &mut key);
            }
            trim(&mut key.t);
            trim(&mut key.w);
            out.add_term(key, coeff);
        }
        out
    }

    /// Records for JSON output, in key order.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(k, c)| TermRecord { coeff: c.to_string(), x: k.x.clone(), t: k.t.clone(), w: k.w.clone(), a: k.a, b: k.b })
            .collect()
    }

    /// Terms ordered by total degree, then key; used for display.
    fn display_order(&self) -> Vec<(&ExponentKey, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.total_degree().cmp(&b.0.total_degree()).then_with(|| a.0.cmp(b.0)));
        v
    }
}

impl<C: Coefficient + std::str::FromStr> SparsePoly<C> {
    pub fn from_records(n: usize, records: &[TermRecord]) -> Option<Self> {
        let mut p = Self::zero(n);
        for r in records {
            if r.x.len() != n {
                return None;
            }
            let c: C = r.coeff.parse().ok()?;
            p.add_term(ExponentKey::new(r.x.clone(), r.t.clone(), r.w.clone(), r.a, r.b), c);
        }
        Some(p)
    }
}

/// One term in the JSON form of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub x: Vec<u32>,
    pub t: Vec<u32>,
    pub w: Vec<u32>,
    pub a: u32,
    pub b: u32,
}

impl<C: Coefficient> Serialize for SparsePoly<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_records().serialize(serializer)
    }
}

/// Target of a substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subst {
    Keep,
    Value(i64),
    Alpha,
    Beta,
}

/// Uniform substitution for every `t_i`, every `w_i`, and for `α`, `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub t: Subst,
    pub w: Subst,
    pub alpha: Subst,
    pub beta: Subst,
}

impl Specialization {
    pub fn identity() -> Self {
        Specialization { t: Subst::Keep, w: Subst::Keep, alpha: Subst::Alpha, beta: Subst::Beta }
    }

    /// All `t_i ↦ t`, `w_i ↦ w` for integers `t`, `w`.
    pub fn values(t: i64, w: i64) -> Self {
        Specialization { t: Subst::Value(t), w: Subst::Value(w), ..Self::identity() }
    }

    /// `t_i ↦ α`, `w_i ↦ β`.
    pub fn to_alpha_beta() -> Self {
        Specialization { t: Subst::Alpha, w: Subst::Beta, ..Self::identity() }
    }

    /// Integer values for the two scalar parameters.
    pub fn scalars(alpha: i64, beta: i64) -> Self {
        Specialization { alpha: Subst::Value(alpha), beta: Subst::Value(beta), ..Self::identity() }
    }
}

impl<C: Coefficient> Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly[n={}]({})", self.n, self)
    }
}

impl<C: Coefficient> Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = k.total_degree() == 0;
            if constant {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{abs}*{k}")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<C: Coefficient> $tr<&SparsePoly<C>> for &SparsePoly<C> {
            type Output = SparsePoly<C>;
            fn $method(self, rhs: &SparsePoly<C>) -> SparsePoly<C> {
                self.$try(rhs).expect("polynomials share an ambient ring")
            }
        }
        impl<C: Coefficient> $tr for SparsePoly<C> {
            type Output = SparsePoly<C>;
            fn $method(self, rhs: SparsePoly<C>) -> SparsePoly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<C: Coefficient> Neg for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn neg(self) -> SparsePoly<C> {
        self.neg_ref()
    }
}

impl<C: Coefficient> Neg for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn neg(self) -> SparsePoly<C> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = SparsePoly<BigInt>;

    #[test]
    fn basic_arithmetic() {
        let p = &P::x(2, 1) * &P::x(2, 2);
        let mut key = ExponentKey::constant(2);
        key.x = vec![1, 1];
        assert_eq!(p, P::monomial(2, key, BigInt::from(1)));
        let q = &p + &(-&p);
        assert!(q.is_zero());
        let r = &P::one(0) + &(&P::t(0, 1) * &P::w(0, 2));
        assert_eq!(&r * &P::one(0), r);
        assert_eq!(r.to_string(), "1 + t1*w2");
    }

    #[test]
    fn mismatch_is_an_error() {
        assert_eq!(P::x(2, 1).try_add(&P::x(3, 1)), Err(PolyError::AmbientMismatch(2, 3)));
        // x-free operands combine with any ambient size
        assert!(P::t(0, 1).try_mul(&P::x(3, 1)).is_ok());
    }

    #[test]
    fn specialization() {
        let p = &(&P::t(1, 2) * &P::w(1, 1)) * &P::x(1, 1);
        let s = p.specialize(&Specialization::to_alpha_beta());
        assert_eq!(s, &(&P::alpha(1) * &P::beta(1)) * &P::x(1, 1));
        let z = p.specialize(&Specialization::values(0, 1));
        assert!(z.is_zero());
        let m = p.specialize(&Specialization::values(2, -1));
        assert_eq!(m, P::x(1, 1).scale(&BigInt::from(-2)));
        assert_eq!(p.specialize(&Specialization::identity()), p);
    }

    #[test]
    fn symmetry() {
        let p = &P::x(2, 1) * &P::x(2, 2);
        assert!(p.is_symmetric_in_x());
        let q = &p * &P::x(2, 1);
        assert!(!q.is_symmetric_in_x());
    }
}
