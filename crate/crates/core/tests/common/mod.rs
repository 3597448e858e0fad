#![allow(dead_code)]

use std::collections::BTreeSet;

use hybrid_groth::{Partition, Poly, SkewShape, Svrpp};

pub fn shape(s: &str) -> SkewShape {
    s.parse().unwrap()
}

pub fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn svrpp(s: &str) -> Svrpp {
    Svrpp::parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Parses sums of monomials such as `w1 + 2*t1*w1^2 - x1*alpha` into a
/// polynomial over `n` x-variables.
pub fn poly(n: usize, text: &str) -> Poly {
    let mut out = Poly::zero(n);
    let text = text.replace(' ', "").replace('-', "+-");
    for term in text.split('+').filter(|t| !t.is_empty()) {
        let (sign, term) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term),
        };
        let mut m = Poly::from_int(n, sign);
        for factor in term.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().unwrap()),
                None => (factor, 1),
            };
            let f = if let Ok(c) = base.parse::<i64>() {
                Poly::from_int(n, c)
            } else if base == "alpha" {
                Poly::alpha(n)
            } else if base == "beta" {
                Poly::beta(n)
            } else {
                let (name, idx) = base.split_at(1);
                let idx: usize = idx.parse().unwrap_or_else(|_| panic!("bad factor {base}"));
                match name {
                    "x" => Poly::x(n, idx),
                    "t" => Poly::t(n, idx),
                    "w" => Poly::w(n, idx),
                    _ => panic!("bad factor {base}"),
                }
            };
            for _ in 0..exp {
                m = m.try_mul(&f).unwrap();
            }
        }
        out = out.try_add(&m).unwrap();
    }
    out
}

/// A crystal picture: nodes and `(source, i, target)` edges.
pub struct CrystalFixture {
    pub nodes: BTreeSet<String>,
    pub edges: BTreeSet<(String, u32, String)>,
}

impl CrystalFixture {
    pub fn load(text: &str) -> Self {
        let mut nodes = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for line in text.lines() {
            if let Some(n) = line.strip_prefix("node ") {
                nodes.insert(n.to_string());
            } else if let Some(e) = line.strip_prefix("edge ") {
                let f: Vec<&str> = e.split(" | ").collect();
                edges.insert((f[0].to_string(), f[1].parse().unwrap(), f[2].to_string()));
            }
        }
        CrystalFixture { nodes, edges }
    }

    /// Weakly connected components as node sets.
    pub fn components(&self) -> Vec<BTreeSet<String>> {
        let mut comps: Vec<BTreeSet<String>> = self.nodes.iter().map(|n| BTreeSet::from([n.clone()])).collect();
        for (a, _, b) in &self.edges {
            let ia = comps.iter().position(|c| c.contains(a)).unwrap();
            let ib = comps.iter().position(|c| c.contains(b)).unwrap();
            if ia != ib {
                let merged = comps.remove(ia.max(ib));
                comps[ia.min(ib)].extend(merged);
            }
        }
        comps
    }
}
