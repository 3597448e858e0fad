use std::collections::{BTreeMap, HashMap};

use crate::error::PolyError;
use crate::shapes::Partition;

use super::{Coefficient, ExponentKey, SparsePoly};

/// Weight counts of semistandard tableaux of shape `nu` in entries `1..=n`,
/// built by peeling off the horizontal strip of entries equal to `n`.
fn ssyt_weights(nu: &Partition, n: usize, memo: &mut HashMap<(Partition, usize), BTreeMap<Vec<u32>, u64>>) -> BTreeMap<Vec<u32>, u64> {
    if nu.len() > n {
        return BTreeMap::new();
    }
    if n == 0 {
        let mut m = BTreeMap::new();
        m.insert(Vec::new(), 1);
        return m;
    }
    if let Some(hit) = memo.get(&(nu.clone(), n)) {
        return hit.clone();
    }
    let mut out: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    // mu ⊆ nu with nu/mu a horizontal strip: nu_{i+1} ≤ mu_i ≤ nu_i
    let parts = nu.parts();
    let mut mu = vec![0usize; parts.len()];
    fn strips(parts: &[usize], i: usize, mu: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>) {
        if i == parts.len() {
            acc.push(mu.clone());
            return;
        }
        let lo = parts.get(i + 1).copied().unwrap_or(0);
        for m in lo..=parts[i] {
            mu[i] = m;
            strips(parts, i + 1, mu, acc);
        }
    }
    let mut all = Vec::new();
    strips(parts, 0, &mut mu, &mut all);
    for mu in all {
        let strip = (nu.size() - mu.iter().sum::<usize>()) as u32;
        let mu = Partition::from_sorted(mu);
        for (w, c) in ssyt_weights(&mu, n - 1, memo) {
            let mut w = w;
            w.push(strip);
            *out.entry(w).or_insert(0) += c;
        }
    }
    memo.insert((nu.clone(), n), out.clone());
    out
}

/// `s_ν(x_1, …, x_n)` as a sum over semistandard tableaux.
pub fn schur_polynomial<C: Coefficient>(nu: &Partition, n: usize) -> SparsePoly<C> {
    let mut memo = HashMap::new();
    let mut p = SparsePoly::zero(n);
    for (w, c) in ssyt_weights(nu, n, &mut memo) {
        let key = ExponentKey { x: w, ..Default::default() };
        p.add_term(key, C::from_u64(c).expect("count fits the coefficient type"));
    }
    p
}

/// Schur expansion `Σ_ν c_ν s_ν` with coefficients free of x.
#[derive(Clone, PartialEq)]
pub struct SchurExpansion<C> {
    pub terms: BTreeMap<Partition, SparsePoly<C>>,
}

impl<C: Coefficient> Default for SchurExpansion<C> {
    fn default() -> Self {
        SchurExpansion { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> SchurExpansion<C> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c * s_ν`, dropping the entry if it cancels.
    pub fn add(&mut self, nu: Partition, c: &SparsePoly<C>) {
        let entry = self.terms.entry(nu.clone()).or_insert_with(|| SparsePoly::zero(0));
        *entry = entry.try_add(c).expect("x-free coefficients");
        if entry.is_zero() {
            self.terms.remove(&nu);
        }
    }

    pub fn coefficient(&self, nu: &Partition) -> SparsePoly<C> {
        self.terms.get(nu).cloned().unwrap_or_else(|| SparsePoly::zero(0))
    }

    /// Evaluates `Σ c_ν s_ν(x_1..x_n)`.
    pub fn to_polynomial(&self, n: usize) -> SparsePoly<C> {
        let mut out = SparsePoly::zero(n);
        for (nu, c) in &self.terms {
            let s = schur_polynomial::<C>(nu, n);
            out = out.try_add(&c.try_mul(&s).expect("x-free coefficient")).expect("same ambient");
        }
        out
    }
}

impl<C: Coefficient> std::fmt::Display for SchurExpansion<C> {
    /// `s(4) + (5) s(4,1) + (1 + t1*w2) s(2,1)`, in partition order; the
    /// empty partition prints as its bare coefficient.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(nu, c)| match (nu.is_empty(), c.is_one()) {
                (true, _) if c.len() == 1 => format!("{c}"),
                (true, _) => format!("({c})"),
                (false, true) => format!("s{nu}"),
                (false, false) => format!("({c}) s{nu}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(serde::Serialize)]
#[serde(bound = "")]
struct ExpansionTerm<'a, C: Coefficient> {
    nu: &'a Partition,
    coeff: &'a SparsePoly<C>,
}

impl<C: Coefficient> serde::Serialize for SchurExpansion<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v: Vec<ExpansionTerm<C>> = self.terms.iter().map(|(nu, coeff)| ExpansionTerm { nu, coeff }).collect();
        v.serialize(serializer)
    }
}

impl<C: Coefficient> std::fmt::Debug for SchurExpansion<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, v)| (k.to_string(), v.to_string()))).finish()
    }
}

/// Triangular elimination against Schur polynomials, leading x-exponent
/// taken lexicographically.
pub fn schur_expand<C: Coefficient>(p: &SparsePoly<C>) -> Result<SchurExpansion<C>, PolyError> {
    let n = p.ambient();
    let mut rem = p.clone();
    let mut out = SchurExpansion::new();
    let mut memo = HashMap::new();
    while let Some(lead) = rem.terms.keys().next_back().map(|k| k.x.clone()) {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(PolyError::NonSymmetric(lead));
        }
        let mut coeff = SparsePoly::zero(0);
        for (k, c) in rem.terms.iter().rev() {
            if k.x != lead {
                break;
            }
            coeff.add_term(k.parameters(), c.clone());
        }
        let nu = Partition::from_sorted(lead.iter().map(|&e| e as usize).collect());
        let mut s = SparsePoly::zero(n);
        for (w, c) in ssyt_weights(&nu, n, &mut memo) {
            s.add_term(ExponentKey { x: w, ..Default::default() }, C::from_u64(c).expect("count fits"));
        }
        rem = rem.try_sub(&coeff.try_mul(&s)?)?;
        out.add(nu, &coeff);
    }
    Ok(out)
}
