//! Crystal operators on words and on set-valued reverse plane partitions,
//! crystal graphs, and the two combinatorial Schur expansions.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{CrystalError, TableError};
use crate::involution::{restrict, splice, ColumnKind, Letters};
use crate::polyring::ExponentKey;
use crate::shapes::{Partition, SkewShape};
use crate::svrpp::{enumerate, is_reverse_lattice, Svrpp, WeakComposition, Word};
use crate::{Expansion, Poly};

/// `E_i` on words: letters `i` read as `+`, `i+1` as `-`; every `-` is
/// matched with the nearest unmatched `+` to its right. The leftmost
/// unmatched `-` becomes `i`.
pub fn word_raise(s: &Word, i: u32) -> Option<Word> {
    let mut open_minus: Vec<usize> = Vec::new();
    for (p, &k) in s.0.iter().enumerate() {
        if k == i + 1 {
            open_minus.push(p);
        } else if k == i {
            open_minus.pop();
        }
    }
    let p = *open_minus.first()?;
    let mut out = s.clone();
    out.0[p] = i;
    Some(out)
}

/// `F_i` on words: the rightmost unmatched `+` becomes `i+1`.
pub fn word_lower(s: &Word, i: u32) -> Option<Word> {
    let mut open_minus = 0usize;
    let mut last_free_plus = None;
    for (p, &k) in s.0.iter().enumerate() {
        if k == i + 1 {
            open_minus += 1;
        } else if k == i {
            if open_minus > 0 {
                open_minus -= 1;
            } else {
                last_free_plus = Some(p);
            }
        }
    }
    let p = last_free_plus?;
    let mut out = s.clone();
    out.0[p] = i + 1;
    Some(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// Signs of the pure columns of the `{i, i+1}` restriction, left to right,
/// and what remains after cancelling adjacent `(-, +)` pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature {
    pub entries: Vec<(usize, Sign)>,
    pub reduced: Vec<(usize, Sign)>,
}

impl Signature {
    pub fn epsilon(&self) -> usize {
        self.reduced.iter().filter(|(_, s)| *s == Sign::Minus).count()
    }

    pub fn phi(&self) -> usize {
        self.reduced.iter().filter(|(_, s)| *s == Sign::Plus).count()
    }
}

pub fn signature(t: &Svrpp, i: u32) -> Signature {
    let entries: Vec<(usize, Sign)> = restrict(t, i)
        .pure_columns()
        .into_iter()
        .map(|(c, k)| (c, if k == ColumnKind::OnePure { Sign::Plus } else { Sign::Minus }))
        .collect();
    let mut reduced = entries.clone();
    while let Some(p) = reduced.windows(2).position(|w| w[0].1 == Sign::Minus && w[1].1 == Sign::Plus) {
        reduced.drain(p..p + 2);
    }
    Signature { entries, reduced }
}

/// `e_i`: the leftmost unpaired `(i+1)`-pure column becomes `i`-pure, then
/// the `{i, i+1}` part is normalized.
pub fn raise(t: &Svrpp, i: u32) -> Result<Option<Svrpp>, TableError> {
    let sig = signature(t, i);
    let Some(&(c, _)) = sig.reduced.iter().find(|(_, s)| *s == Sign::Minus) else { return Ok(None) };
    let mut table = restrict(t, i);
    table.set_column(c, Letters::One);
    Ok(Some(splice(t, i, &table.norm()?)))
}

/// `f_i`: the rightmost unpaired `i`-pure column becomes `(i+1)`-pure,
/// then the `{i, i+1}` part is normalized.
pub fn lower(t: &Svrpp, i: u32) -> Result<Option<Svrpp>, TableError> {
    let sig = signature(t, i);
    let Some(&(c, _)) = sig.reduced.iter().rev().find(|(_, s)| *s == Sign::Plus) else { return Ok(None) };
    let mut table = restrict(t, i);
    table.set_column(c, Letters::Two);
    Ok(Some(splice(t, i, &table.norm()?)))
}

/// `(ε_i, φ_i)` read off the reduced signature.
pub fn string_lengths(t: &Svrpp, i: u32) -> (usize, usize) {
    let sig = signature(t, i);
    (sig.epsilon(), sig.phi())
}

/// Highest weight test through the reading word.
pub fn is_highest_weight(t: &Svrpp) -> bool {
    is_reverse_lattice(&t.reading_word().0)
}

/// Labeled graph of the `f_i` on `SVRPP^n(shape)`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub n: u32,
    /// Nodes in enumeration order.
    pub nodes: Vec<Svrpp>,
    index: HashMap<Svrpp, usize>,
    /// `(source, i, target)` with `f_i(source) = target`, sorted.
    pub edges: Vec<(usize, u32, usize)>,
}

impl CrystalGraph {
    pub fn build(shape: &SkewShape, n: u32) -> Result<Self, TableError> {
        let nodes: Vec<Svrpp> = enumerate(shape, n).collect();
        let index: HashMap<Svrpp, usize> = nodes.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        let mut edges = Vec::new();
        for (k, t) in nodes.iter().enumerate() {
            for i in 1..n {
                if let Some(u) = lower(t, i)? {
                    let target = *index.get(&u).expect("f_i stays inside SVRPP^n");
                    edges.push((k, i, target));
                }
            }
        }
        edges.sort_unstable();
        Ok(CrystalGraph { n, nodes, index, edges })
    }

    pub fn index_of(&self, t: &Svrpp) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn weight(&self, k: usize) -> WeakComposition {
        self.nodes[k].ircont()
    }

    /// Weakly connected components, each sorted, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, _, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..self.nodes.len() {
            let r = find(&mut parent, k);
            groups.entry(r).or_default().push(k);
        }
        groups.into_values().collect()
    }

    /// Nodes without incoming edges.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.nodes.len()];
        for &(_, _, b) in &self.edges {
            has_in[b] = true;
        }
        (0..self.nodes.len()).filter(|&k| !has_in[k]).collect()
    }

    /// Graphviz text; node labels use the compact filling notation.
    pub fn to_dot(&self, cluster_components: bool) -> String {
        let mut s = String::from("digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n");
        let write_node = |s: &mut String, k: usize, indent: &str| {
            let _ = writeln!(s, "{indent}n{k} [label=\"{}\"];", self.nodes[k]);
        };
        if cluster_components {
            for (c, comp) in self.components().iter().enumerate() {
                let _ = writeln!(s, "  subgraph cluster_{c} {{");
                for &k in comp {
                    write_node(&mut s, k, "    ");
                }
                s.push_str("  }\n");
            }
        } else {
            for k in 0..self.nodes.len() {
                write_node(&mut s, k, "  ");
            }
        }
        for &(a, i, b) in &self.edges {
            let _ = writeln!(s, "  n{a} -> n{b} [label=\"{i}\"];");
        }
        s.push_str("}\n");
        s
    }
}

/// Multiplicities `(ν, ceq, ex) ↦ count`.
pub type ExpansionCounts = BTreeMap<(Partition, WeakComposition, WeakComposition), u64>;

fn weight_partition(t: &Svrpp) -> Result<Partition, CrystalError> {
    let w = t.ircont();
    Partition::new(w.iter().map(|&e| e as usize).collect()).map_err(|_| CrystalError::NonPartitionWeight(w))
}

/// Counts highest-weight nodes per component of the crystal graph; fails if
/// a component has other than one source or mixes statistics.
pub fn schur_expansion_via_crystal(shape: &SkewShape, n: u32) -> Result<ExpansionCounts, CrystalError> {
    let g = CrystalGraph::build(shape, n)?;
    let sources = g.sources();
    let mut out = ExpansionCounts::new();
    for comp in g.components() {
        let tops: Vec<usize> = comp.iter().copied().filter(|k| sources.binary_search(k).is_ok()).collect();
        let first = &g.nodes[comp[0]];
        if tops.len() != 1 {
            return Err(CrystalError::SourceCount { node: first.to_string(), count: tops.len() });
        }
        let (ceq, ex) = (first.ceq(), first.excess());
        if comp.iter().any(|&k| g.nodes[k].ceq() != ceq || g.nodes[k].excess() != ex) {
            return Err(CrystalError::StatisticMismatch(first.to_string()));
        }
        let nu = weight_partition(&g.nodes[tops[0]])?;
        *out.entry((nu, ceq, ex)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Counts fillings whose reading word is a reverse lattice word.
pub fn schur_expansion_via_lattice_words(shape: &SkewShape, n: u32) -> Result<ExpansionCounts, CrystalError> {
    let mut out = ExpansionCounts::new();
    for t in enumerate(shape, n).filter(is_highest_weight) {
        let nu = weight_partition(&t)?;
        *out.entry((nu, t.ceq(), t.excess())).or_insert(0) += 1;
    }
    Ok(out)
}

/// Collapses counts into `Σ count · t^γ w^θ s_ν`.
pub fn counts_to_expansion(counts: &ExpansionCounts) -> Expansion {
    let mut e = Expansion::new();
    for ((nu, gamma, theta), &c) in counts {
        let key = ExponentKey::new(Vec::new(), gamma.clone(), theta.clone(), 0, 0);
        e.add(nu.clone(), &Poly::monomial(0, key, BigInt::from(c)));
    }
    e
}
