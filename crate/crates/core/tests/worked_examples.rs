//! Worked examples with known values: tableau statistics, the involution
//! and crystal traces, reading words, the small Schur expansions, the Newton
//! polytope of G_(4,2,1), T_max, the operator examples and the marked
//! multiset-valued tableau.

mod common;

use common::{part, poly, shape, svrpp, CrystalFixture};
use hybrid_groth::crystal::{lower, raise, schur_expansion_via_crystal, signature, CrystalGraph};
use hybrid_groth::fomin_greene::{ModuleElement, OperatorContext};
use hybrid_groth::involution::{phi, restrict, DescentKind, TwoLetterTable};
use hybrid_groth::newton::{has_snp, t_max};
use hybrid_groth::omega::Mmsvt;
use hybrid_groth::polyring::{schur_expand, Specialization};
use hybrid_groth::svrpp::{enumerate, hybrid_polynomial, reconstruct, HeightVector};
use hybrid_groth::{Expansion, Poly};

fn padded(mut v: Vec<u32>, len: usize) -> Vec<u32> {
    v.resize(len, 0);
    v
}

#[test]
fn tableau_statistics() {
    let t1 = svrpp(". . . 2/. 1 12 23/12 23 3 34/23 345 5/35");
    let t2 = svrpp(". . . 2/. 1 12 3/12 23 3 4/3 45 5/5");
    let t3 = svrpp(". . . 2/. 1 1 2/1 1 1 2/1 1 2/1");
    assert_eq!(padded(t1.ircont(), 5), [3, 4, 4, 2, 3]);
    assert_eq!(padded(t1.ceq(), 4), [1, 1, 2, 1]);
    assert_eq!(padded(t1.excess(), 5), [0, 2, 3, 3, 1]);
    assert_eq!(padded(t2.ircont(), 5), [3, 4, 4, 2, 3]);
    assert_eq!(padded(t2.ceq(), 4), [0, 0, 0, 0]);
    assert_eq!(padded(t2.excess(), 5), [0, 1, 2, 1, 0]);
    assert_eq!(padded(t3.ircont(), 5), [3, 2, 0, 0, 0]);
    assert_eq!(padded(t3.ceq(), 4), [1, 3, 2, 1]);
    assert_eq!(padded(t3.excess(), 5), [0, 0, 0, 0, 0]);
}

#[test]
fn statistics_trim_trailing_zeros() {
    let t3 = svrpp(". . . 2/. 1 1 2/1 1 1 2/1 1 2/1");
    assert_eq!(t3.ircont(), [3, 2]);
    assert!(t3.excess().is_empty());
}

#[test]
fn resolution_examples() {
    let cases = [
        (". 1/1 1/2 1/2 1/2", DescentKind::M1, ". 1/1 1/1 2/1 2/1"),
        (". 1/1 1/12 1/2 1/2", DescentKind::M1, ". 1/1 1/1 12/1 2/1"),
        (". 1/2 1/2 1/2 2/2", DescentKind::TwoM, ". 2/1 2/1 2/2 2/2"),
        (". 1/2 1/2 12/2 2/2", DescentKind::TwoM, ". 2/1 2/12 2/2 2/2"),
        (". 1/2 1/2 1/2 1/2", DescentKind::TwoOne, ". 2/1 2/1 2/1 2/1"),
    ];
    for (before, kind, after) in cases {
        let t = TwoLetterTable::parse(before).unwrap();
        let d = t.descents();
        assert_eq!(d.len(), 1, "{before}");
        assert_eq!((d[0].column, d[0].kind), (1, kind), "{before}");
        let r = t.resolve(1).unwrap();
        assert_eq!(r, TwoLetterTable::parse(after).unwrap(), "{before}");
        assert!(r.ell() < t.ell());
    }
}

#[test]
fn benign_examples() {
    let t1 = TwoLetterTable::parse(". . . 1 2/. 1 1 12 2/12 1 2 2 2/2 1 2 2 2/2 1 2/2").unwrap();
    let t2 = TwoLetterTable::parse(". . . 1 2/. 1 1 2 2/12 1 12 2 2/2 1 2 2 2/2 1 2/2").unwrap();
    assert_eq!(t1.seplist(), [3, 3, 2]);
    assert_eq!(t2.seplist(), [3, 3, 2]);
    assert!(t1.is_benign());
    assert!(!t2.is_benign());
}

#[test]
fn involution_trace() {
    let t = svrpp(". . . 2/. 1 1 2/1 1 12 2/1 1 2 2/1 1/1");
    let chain = [
        ". . . 1/. 2 1 1/2 2 12 1/2 2 2 1/2 2/2",
        ". . . 1/. 1 2 1/2 12 2 1/2 2 2 1/2 2/2",
        ". . . 1/. 2 2 1/12 2 2 1/2 2 2 1/2 2/2",
        ". . . 2/. 2 1 2/12 2 1 2/2 2 1 2/2 2/2",
        ". . . 2/. 1 2 2/12 1 2 2/2 1 2 2/2 1/2",
        ". . . 2/. 1 2 2/1 12 2 2/1 2 2 2/1 2/1",
    ];
    let steps = [(2, DescentKind::TwoM), (1, DescentKind::TwoM), (3, DescentKind::TwoOne), (2, DescentKind::TwoOne), (1, DescentKind::M1)];
    let mut cur = restrict(&t, 1).flip();
    assert_eq!(cur, TwoLetterTable::parse(chain[0]).unwrap());
    for (k, &(col, kind)) in steps.iter().enumerate() {
        let d = cur.descents();
        assert!(d.iter().any(|d| d.column == col && d.kind == kind), "step {k}: {d:?}");
        let next = cur.resolve(col).unwrap();
        assert!(next.ell() < cur.ell());
        assert_eq!(next, TwoLetterTable::parse(chain[k + 1]).unwrap(), "step {k}");
        cur = next;
    }
    assert!(cur.is_descent_free());
    let image = phi(&t, 1).unwrap();
    assert_eq!(image, svrpp(chain[5]));
    assert_eq!(phi(&image, 1).unwrap(), t);
}

#[test]
fn raising_example() {
    let t = svrpp(". . . 1 2/. . 1 1 2/. 1 12 2 23/. 1 23 3/2 3 35/23 34");
    let e1 = raise(&t, 1).unwrap().unwrap();
    assert_eq!(e1, svrpp(". . . 1 1/. . 1 1 1/. 1 1 12 23/. 1 13 3/2 3 35/23 34"));
    assert_eq!(lower(&e1, 1).unwrap().unwrap(), t);
    assert!(signature(&t, 1).epsilon() >= 1);
}

#[test]
fn lowering_example() {
    let t = svrpp(". . 1 1 12/. 1 1 1 2/1 12 2 3 45/12 2 23 3/2 3 35/2 34");
    let f2 = lower(&t, 2).unwrap().unwrap();
    assert_eq!(f2, svrpp(". . 1 1 12/. 1 1 1 2/1 12 3 3 45/12 23 3 3/3 3 35/3 34"));
    assert_eq!(raise(&f2, 2).unwrap().unwrap(), t);
}

#[test]
fn reading_words() {
    let t = svrpp(". 12 3 4 567/123 3 34 4/3 3 45 67/34 56");
    let (w, h) = t.reading_word();
    assert_eq!(w.to_string(), ["645", "756", "43213", "7621345"].concat());
    assert_eq!(h, HeightVector(vec![4, 4, 4, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1]));
    assert_eq!(t.column_reading_word().to_string(), ["4321", "65321", "543", "764", "765"].concat());
    assert_eq!(reconstruct(t.shape(), &w, &h, &t.excess()), Some(t));
}

fn skew_expansion() -> Expansion {
    let mut e = Expansion::new();
    e.add(part("2"), &poly(0, "t1"));
    e.add(part("2,1"), &poly(0, "1 + t1*w2 + t1*w1"));
    e.add(part("2,2"), &poly(0, "w2 + t1*w1*w2"));
    e.add(part("2,1,1"), &poly(0, "w1 + w2 + t1*w1^2 + t1*w1*w2 + t1*w2^2"));
    e.add(part("2,2,1"), &poly(0, "w1*w2 + w2^2 + t1*w1^2*w2 + t1*w1*w2^2"));
    e.add(part("2,2,2"), &poly(0, "w1*w2^2 + t1*w1^2*w2^2"));
    e
}

fn node_count(e: &Expansion, n: usize) -> i64 {
    let p = e.to_polynomial(n).specialize(&Specialization::values(1, 1));
    p.terms().map(|(_, c)| i64::try_from(c.clone()).unwrap()).sum()
}

#[test]
fn skew_expansion_in_three_variables() {
    let s = shape("2,2/1");
    let g = hybrid_polynomial(&s, 3);
    assert_eq!(schur_expand(&g).unwrap(), skew_expansion());
    assert_eq!(node_count(&skew_expansion(), 3), 71);
    assert_eq!(enumerate(&s, 3).count(), 71);
}

#[test]
fn misplaced_monomial_breaks_the_node_count() {
    // With t1*w1 moved into the s_(2,2) coefficient the expansion accounts for
    // only 69 of the 71 fillings.
    let mut moved = skew_expansion();
    moved.add(part("2,1"), &poly(0, "-t1*w1"));
    moved.add(part("2,2"), &poly(0, "t1*w1"));
    assert_eq!(node_count(&moved, 3), 69);
    assert_ne!(schur_expand(&hybrid_polynomial(&shape("2,2/1"), 3)).unwrap(), moved);
}

#[test]
fn straight_expansion_at_unit_parameters() {
    let g = hybrid_polynomial(&shape("4,2,1"), 2).specialize(&Specialization::values(1, 1));
    let mut expected = Expansion::new();
    for (nu, c) in [("4", 1), ("4,1", 5), ("4,2", 10), ("4,3", 6)] {
        expected.add(part(nu), &Poly::from_int(0, c));
    }
    assert_eq!(schur_expand(&g).unwrap(), expected);
}

#[test]
fn newton_polytope_of_g421() {
    let g = hybrid_polynomial(&shape("4,2,1"), 2).specialize(&Specialization::values(1, 1));
    let r = has_snp(&g).unwrap();
    let mut pts: Vec<Vec<u32>> = [
        [4, 0], [3, 1], [2, 2], [1, 3], [0, 4],
        [4, 1], [3, 2], [2, 3], [1, 4],
        [4, 2], [3, 3], [2, 4],
        [4, 3], [3, 4],
    ]
    .iter()
    .map(|p| p.to_vec())
    .collect();
    pts.sort();
    assert!(r.holds);
    assert_eq!(r.support_size, 14);
    assert_eq!(r.lattice_points, pts);
    let mut support = g.x_support();
    support.sort();
    assert_eq!(support, pts);
    assert_eq!(r.polytope.vertices, vec![vec![0, 4], vec![3, 4], vec![4, 0], vec![4, 3]]);
}

#[test]
fn crystal_of_skew_22_over_1() {
    let fixture = CrystalFixture::load(include_str!("fixtures/crystal_2_2_over_1_n3.txt"));
    let g = CrystalGraph::build(&shape("2,2/1"), 3).unwrap();
    let nodes: std::collections::BTreeSet<String> = g.nodes.iter().map(|t| t.to_string()).collect();
    let edges: std::collections::BTreeSet<(String, u32, String)> =
        g.edges.iter().map(|&(a, i, b)| (g.nodes[a].to_string(), i, g.nodes[b].to_string())).collect();
    assert_eq!(fixture.nodes.len(), 71);
    assert_eq!(nodes, fixture.nodes);
    assert_eq!(edges, fixture.edges);
    assert_eq!(fixture.components().len(), 17);
    assert_eq!(g.components().len(), 17);
}

#[test]
fn crystal_components_match_expansion() {
    let counts = schur_expansion_via_crystal(&shape("2,2/1"), 3).unwrap();
    let mut e = Expansion::new();
    for ((nu, ceq, ex), k) in &counts {
        let mut m = Poly::from_int(0, *k as i64);
        for (i, &a) in ceq.iter().enumerate() {
            for _ in 0..a {
                m = m.try_mul(&Poly::t(0, i + 1)).unwrap();
            }
        }
        for (i, &a) in ex.iter().enumerate() {
            for _ in 0..a {
                m = m.try_mul(&Poly::w(0, i + 1)).unwrap();
            }
        }
        e.add(nu.clone(), &m);
    }
    assert_eq!(counts.values().sum::<u64>(), 17);
    assert_eq!(e, skew_expansion());
}

#[test]
fn two_components_of_skew_32_over_1() {
    let fixture = CrystalFixture::load(include_str!("fixtures/crystal_3_2_over_1_n3_partial.txt"));
    let g = CrystalGraph::build(&shape("3,2/1"), 3).unwrap();
    let edges: std::collections::BTreeSet<(String, u32, String)> =
        g.edges.iter().map(|&(a, i, b)| (g.nodes[a].to_string(), i, g.nodes[b].to_string())).collect();
    let comps = fixture.components();
    let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    sizes.sort();
    assert_eq!(sizes, [10, 15]);
    for comp in &comps {
        let idx: Vec<usize> = comp.iter().map(|n| g.index_of(&svrpp(n)).unwrap()).collect();
        let full = g.components().into_iter().find(|c| c.contains(&idx[0])).unwrap();
        assert_eq!(full.len(), comp.len());
        let tops: Vec<&usize> = idx.iter().filter(|&&k| !g.edges.iter().any(|e| e.2 == k)).collect();
        assert_eq!(tops.len(), 1);
        assert!(hybrid_groth::crystal::is_highest_weight(&g.nodes[*tops[0]]));
    }
    for e in &fixture.edges {
        assert!(edges.contains(e), "{e:?}");
    }
}

#[test]
fn flat_and_bar_partitions() {
    let l = part("7,5,4,4,1,1");
    assert_eq!(l.flat(), part("7,5,4,3,1"));
    assert_eq!(l.bar(3), part("7,6,6"));
    assert_eq!(l.bar(7), part("7,6,6,6,5,5,5"));
}

#[test]
fn t_max_examples() {
    let l = part("7,5,4,4,1,1");
    assert_eq!(t_max(&l, 3), svrpp("1 1 1 1 1 1 123/2 2 2 2 23/3 3 3 3/3 3 3 3/3/3"));
    assert_eq!(t_max(&l, 7), svrpp("1 1 1 1 1 1 1234567/2 2 2 2 234567/3 3 3 34567/4 4 4567 7/567/7"));
    assert_eq!(t_max(&l, 3).ircont(), [7, 6, 6]);
}

#[test]
fn operator_examples() {
    let one = Poly::one(0);
    let ctx = OperatorContext::new(part(""), part("4,4,4,4"));
    let got = ctx.apply_u(2, &ModuleElement::basis(0, part("3,1,1")));
    let mut want = ModuleElement::zero(0);
    want.add_term(part("3,2,1"), one.clone());
    want.add_term(part("3,2,2"), Poly::alpha(0));
    assert_eq!(got, want);

    let ctx = OperatorContext::new(part("2,1,1"), part("4,4,4,4"));
    let got = ctx.apply_d(1, &ModuleElement::basis(0, part("2,1,1,1")));
    let mut want = ModuleElement::zero(0);
    want.add_term(part("2,1,1"), Poly::beta(0));
    assert_eq!(got, want);

    let ctx = OperatorContext::new(part("3,1,1"), part("4,4,4,4"));
    assert!(ctx.apply_d(1, &ModuleElement::basis(0, part("3,1,1"))).is_zero());
}

#[test]
fn marked_multiset_tableau() {
    let t = Mmsvt::new(
        shape("4,3,1"),
        vec![vec![vec![1, 1, 1], vec![2], vec![3], vec![4, 5]], vec![vec![1], vec![2], vec![3, 3]], vec![vec![1, 4]]],
        vec![vec![false; 4], vec![true, false, true], vec![true]],
    )
    .unwrap();
    let (umcont, mark, ex) = t.stats();
    assert_eq!(padded(umcont, 5), [3, 2, 2, 2, 1]);
    assert_eq!(padded(mark, 3), [0, 2, 1]);
    assert_eq!(padded(ex, 3), [3, 1, 1]);
    assert_eq!(t.to_string(), "111 2 3 45/~1 2 ~33/~14");
}
