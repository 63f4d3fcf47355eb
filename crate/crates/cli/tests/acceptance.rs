//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use svtcrystal::crystal::{CrystalGraph, EdgeKind};
use svtcrystal::expand::uncrowd;
use svtcrystal::hecke::{hecke_insert, hecke_reverse, TwoLineArray};
use svtcrystal::kjdt::two_box_rule;
use svtcrystal::poly::{
    apply_word, grothendieck_from_tableaux, BetaPolynomial, OperatorKind, ReducedWord,
};
use svtcrystal::shape::Partition;
use svtcrystal::tableaux::enumerate_svt;
use svtcrystal::verify;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Compares one connected component against golden node/edge data given by
/// tableau display strings.
fn assert_component(graph: &CrystalGraph, nodes: &[&str], edges: &[(&str, &str, u8)]) {
    let comps = graph.components().unwrap();
    let want: BTreeSet<String> = nodes.iter().map(|s| s.to_string()).collect();
    let comp = comps
        .iter()
        .find(|c| {
            let got: BTreeSet<String> =
                c.nodes.iter().map(|&v| graph.nodes()[v].to_string()).collect();
            got == want
        })
        .unwrap_or_else(|| panic!("no component with nodes {want:?}"));
    let members: BTreeSet<usize> = comp.nodes.iter().copied().collect();
    let got_edges: BTreeSet<(String, String, u8)> = graph
        .ordinary_edges()
        .filter(|e| members.contains(&e.from))
        .map(|e| {
            (graph.nodes()[e.from].to_string(), graph.nodes()[e.to].to_string(), e.index)
        })
        .collect();
    let want_edges: BTreeSet<(String, String, u8)> =
        edges.iter().map(|&(a, b, i)| (a.to_string(), b.to_string(), i)).collect();
    assert_eq!(got_edges, want_edges, "edges of component {want:?}");
}

#[test]
fn criterion_1_component_count_and_figure_1() {
    let start = std::time::Instant::now();
    let graph = CrystalGraph::build(&p(&[2, 1]), 3, false).unwrap();
    let comps = graph.components().unwrap();
    assert_eq!(comps.len(), 7, "svssyt^3(2,1) has seven components");

    // The excess-0 component: eight semistandard tableaux.
    assert_component(
        &graph,
        &["1,1/2", "1,2/2", "1,1/3", "1,3/2", "1,2/3", "1,3/3", "2,2/3", "2,3/3"],
        &[
            ("1,1/2", "1,2/2", 1),
            ("1,1/3", "1,2/3", 1),
            ("1,2/3", "2,2/3", 1),
            ("1,3/3", "2,3/3", 1),
            ("1,1/2", "1,1/3", 2),
            ("1,2/2", "1,3/2", 2),
            ("1,3/2", "1,3/3", 2),
            ("2,2/3", "2,3/3", 2),
        ],
    );

    // The six excess-positive components.
    assert_component(
        &graph,
        &["1,{1,2}/3", "{1,2},2/3", "{1,2},3/3"],
        &[("1,{1,2}/3", "{1,2},2/3", 1), ("{1,2},2/3", "{1,2},3/3", 2)],
    );
    assert_component(
        &graph,
        &["1,1/{2,3}", "1,2/{2,3}", "1,3/{2,3}"],
        &[("1,1/{2,3}", "1,2/{2,3}", 1), ("1,2/{2,3}", "1,3/{2,3}", 2)],
    );
    assert_component(
        &graph,
        &["1,{1,2}/2", "1,{1,3}/2", "1,{2,3}/2", "1,{1,3}/3", "1,{2,3}/3", "2,{2,3}/3"],
        &[
            ("1,{1,2}/2", "1,{1,3}/2", 2),
            ("1,{1,3}/2", "1,{1,3}/3", 2),
            ("1,{2,3}/2", "1,{2,3}/3", 2),
            ("1,{1,3}/2", "1,{2,3}/2", 1),
            ("1,{1,3}/3", "1,{2,3}/3", 1),
            ("1,{2,3}/3", "2,{2,3}/3", 1),
        ],
    );
    assert_component(
        &graph,
        &["1,{1,2}/{2,3}", "1,{1,3}/{2,3}", "1,{2,3}/{2,3}"],
        &[
            ("1,{1,2}/{2,3}", "1,{1,3}/{2,3}", 2),
            ("1,{1,3}/{2,3}", "1,{2,3}/{2,3}", 1),
        ],
    );
    assert_component(
        &graph,
        &["1,{1,2,3}/2", "1,{1,2,3}/3", "{1,2},{2,3}/3"],
        &[
            ("1,{1,2,3}/2", "1,{1,2,3}/3", 2),
            ("1,{1,2,3}/3", "{1,2},{2,3}/3", 1),
        ],
    );
    assert_component(&graph, &["1,{1,2,3}/{2,3}"], &[]);

    println!("criterion 1 PASS: 7 components, figure data edge-for-edge ({:?})", start.elapsed());
}

#[test]
fn criterion_2_golden_polynomials() {
    let start = std::time::Instant::now();
    let x31 = BetaPolynomial::monomial(4, 0, &[3, 1, 0, 0], 1.into());
    let x21 = BetaPolynomial::monomial(4, 0, &[2, 1, 0, 0], 1.into());
    let dl = |f: &BetaPolynomial, w: &[usize]| {
        apply_word(f, &ReducedWord(w.to_vec()), OperatorKind::DemazureLascoux).unwrap()
    };
    assert_eq!(
        dl(&x31, &[1]).render_sage(),
        "q*x1^3*x2^2 + q*x1^2*x2^3 + x1^3*x2 + x1^2*x2^2 + x1*x2^3"
    );
    assert_eq!(dl(&x31, &[2]).render_sage(), "q*x1^3*x2*x3 + x1^3*x2 + x1^3*x3");
    assert_eq!(dl(&x31, &[3]).render_sage(), "x1^3*x2");
    assert_eq!(
        dl(&x21, &[2, 1]).render_sage(),
        "q^2*x1^2*x2^2*x3 + q^2*x1^2*x2*x3^2 + q*x1^2*x2^2 + 2*q*x1^2*x2*x3 + q*x1*x2^2*x3 + \
         q*x1^2*x3^2 + q*x1*x2*x3^2 + x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x2*x3 + x1*x3^2"
    );
    assert_eq!(
        dl(&x21, &[1, 2]).render_sage(),
        "q^2*x1^2*x2^2*x3 + q*x1^2*x2^2 + 2*q*x1^2*x2*x3 + 2*q*x1*x2^2*x3 + x1^2*x2 + x1*x2^2 + \
         x1^2*x3 + x1*x2*x3 + x2^2*x3"
    );

    // The 17-term expansion of G_{(2,1)}(x1, x2, x3; β).
    let mut expect = BetaPolynomial::zero(3);
    let terms: &[(u32, [u32; 3], i64)] = &[
        (3, [2, 2, 2], 1),
        (2, [2, 2, 1], 2),
        (2, [2, 1, 2], 2),
        (2, [1, 2, 2], 2),
        (1, [2, 2, 0], 1),
        (1, [2, 1, 1], 3),
        (1, [1, 2, 1], 3),
        (1, [2, 0, 2], 1),
        (1, [1, 1, 2], 3),
        (1, [0, 2, 2], 1),
        (0, [2, 1, 0], 1),
        (0, [1, 2, 0], 1),
        (0, [2, 0, 1], 1),
        (0, [1, 1, 1], 2),
        (0, [0, 2, 1], 1),
        (0, [1, 0, 2], 1),
        (0, [0, 1, 2], 1),
    ];
    for &(beta, exps, c) in terms {
        expect = &expect + &BetaPolynomial::monomial(3, beta, &exps, c.into());
    }
    assert_eq!(expect.num_terms(), 17);
    assert_eq!(grothendieck_from_tableaux(&p(&[2, 1]), 3), expect);
    println!("criterion 2 PASS: Appendix values and 17-term polynomial exact ({:?})", start.elapsed());
}

#[test]
fn criterion_3_expansion_identity_and_lenart() {
    let start = std::time::Instant::now();
    verify::schur_expansion_suite(3, &[3, 4]).unwrap();
    println!(
        "criterion 3 PASS: Schur expansion and flagged-tableau counts agree for λ ⊆ (3,3), n ∈ {{3,4}} ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_4_cross_model_equality() {
    let start = std::time::Instant::now();
    verify::cross_model_suite(3, &[3, 4]).unwrap();
    println!(
        "criterion 4 PASS: tableaux, excited diagrams and marked GT patterns agree for λ ⊆ (3,3), n ∈ {{3,4}} ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_5_hecke_round_trip() {
    let start = std::time::Instant::now();
    verify::hecke_suite(3, 5).unwrap();

    // Worked insertion examples with their displayed (P, Q).
    type Case = (&'static str, Vec<Vec<u8>>, Vec<Vec<Vec<u8>>>);
    let cases: Vec<Case> = vec![
        (
            "1 2 2 2 3 3 4 / 1 4 3 2 4 3 4",
            vec![vec![1, 3, 4], vec![2, 4], vec![3], vec![4]],
            vec![
                vec![vec![1], vec![2], vec![2]],
                vec![vec![2], vec![3]],
                vec![vec![3]],
                vec![vec![4]],
            ],
        ),
        ("1 1 2 / 2 1 1", vec![vec![1, 2]], vec![vec![vec![1], vec![1, 2]]]),
        ("1 2 2 / 2 2 1", vec![vec![1, 2]], vec![vec![vec![1, 2], vec![2]]]),
        (
            "1 1 2 2 / 2 1 2 1",
            vec![vec![1, 2], vec![2]],
            vec![vec![vec![1], vec![1, 2]], vec![vec![2]]],
        ),
        (
            "1 1 1 2 2 2 / 3 2 1 3 2 1",
            vec![vec![1, 2, 3], vec![2, 3]],
            vec![vec![vec![1], vec![1], vec![1, 2]], vec![vec![2], vec![2]]],
        ),
    ];
    for (array_str, p_cells, q_cells) in cases {
        let array = TwoLineArray::parse(array_str).unwrap();
        let (pt, qt) = hecke_insert(&array);
        assert_eq!(pt.cells, p_cells, "P of {array_str}");
        assert_eq!(qt.rows(), &q_cells[..], "Q of {array_str}");
        assert_eq!(hecke_reverse(&pt, &qt).unwrap(), array);
    }
    println!(
        "criterion 5 PASS: round trip on all arrays (letters ≤ 3, length ≤ 5) and worked examples ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_6_kjdt_table_and_examples() {
    let start = std::time::Instant::now();
    verify::kjdt_suite().unwrap();

    // All 49 entries of the two-box table for n = 3: rows indexed by T,
    // columns by S.
    let labels: Vec<Vec<u8>> =
        vec![vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]];
    let table: [[&str; 7]; 7] = [
        ["1,1", "1,2", "1,3", "1,{1,2}", "1,{1,3}", "1,{2,3}", "1,{1,2,3}"],
        ["1/2", "2,2", "2,3", "1,2/2", "1,3/2", "2,{2,3}", "1,{2,3}/2"],
        ["1/3", "2/3", "3,3", "{1,2}/3", "1,3/3", "2,3/3", "{1,2},3/3"],
        ["1,1/2", "{1,2},2", "{1,2},3", "1,{1,2}/2", "1,{1,3}/2", "{1,2},{2,3}", "1,{1,2,3}/2"],
        ["1,1/3", "1,2/3", "{1,3},3", "1,{1,2}/3", "1,{1,3}/3", "1,{2,3}/3", "1,{1,2,3}/3"],
        ["1/{2,3}", "2,2/3", "{2,3},3", "1,2/{2,3}", "1,3/{2,3}", "2,{2,3}/3", "1,{2,3}/{2,3}"],
        [
            "1,1/{2,3}",
            "{1,2},2/3",
            "{1,2,3},3",
            "1,{1,2}/{2,3}",
            "1,{1,3}/{2,3}",
            "{1,2},{2,3}/3",
            "1,{1,2,3}/{2,3}",
        ],
    ];
    for (ti, t) in labels.iter().enumerate() {
        for (si, s) in labels.iter().enumerate() {
            let got = two_box_rule(t, s, 3).unwrap().to_string();
            assert_eq!(got, table[ti][si], "T = {t:?}, S = {s:?}");
        }
    }
    println!(
        "criterion 6 PASS (table and examples): 49 table entries, worked rectification, both non-confluence examples ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_6_kjdt_signature_invariance() {
    // Stated criterion: fixed-U rectification preserves reduced i-signatures
    // after every elementary step on an exhaustive small corpus. The claimed
    // invariance is genuinely false for certain set-valued rectification
    // orders — including the worked infusion example itself, whose final
    // step drops (φ_1, ε_1) from (1,2) to (0,1) — so this faithful check is
    // expected to fail; the report below carries the analysis.
    let (violations, total, samples) = verify::kjdt_signature_report();
    println!(
        "criterion 6 signature invariance: {}/{} infusions preserve all reduced signatures",
        total - violations,
        total
    );
    for s in &samples {
        println!("  violation: {s}");
    }
    assert_eq!(
        violations, 0,
        "reduced-signature invariance fails on {violations}/{total} corpus infusions \
         (set-valued rectification orders); the attainable parts of criterion 6 are \
         covered by criterion_6_kjdt_table_and_examples"
    );
}

#[test]
fn criterion_7_kcrystal() {
    let start = std::time::Instant::now();
    verify::kcrystal_suite().unwrap();

    // Figure data: the K-crystal on svssyt^3(2Λ1), edge for edge.
    let graph = CrystalGraph::build(&p(&[2]), 3, true).unwrap();
    let solid: &[(&str, &str, u8)] = &[
        ("1,1", "1,2", 1),
        ("1,2", "2,2", 1),
        ("1,2", "1,3", 2),
        ("1,3", "2,3", 1),
        ("2,2", "2,3", 2),
        ("2,3", "3,3", 2),
        ("1,{1,2}", "{1,2},2", 1),
        ("1,{1,3}", "1,{2,3}", 1),
        ("1,{2,3}", "2,{2,3}", 1),
        ("1,{1,2}", "1,{1,3}", 2),
        ("{1,2},2", "{1,2},3", 2),
        ("{1,2},3", "{1,3},3", 2),
        ("{1,3},3", "{2,3},3", 1),
        ("2,{2,3}", "{2,3},3", 2),
        ("1,{1,2,3}", "{1,2},{2,3}", 1),
        ("{1,2},{2,3}", "{1,2,3},3", 2),
    ];
    let dashed: &[(&str, &str, u8)] = &[
        ("1,1", "1,{1,2}", 1),
        ("1,{1,2}", "1,{1,2,3}", 2),
        ("1,2", "1,{2,3}", 2),
        ("{1,2},2", "{1,2},{2,3}", 2),
        ("2,2", "2,{2,3}", 2),
        ("1,3", "{1,2},3", 1),
        ("1,{1,3}", "1,{1,2,3}", 1),
        ("{1,3},3", "{1,2,3},3", 1),
    ];
    assert_graph_edges(&graph, solid, dashed);

    // The K-crystal on svssyt^4(Λ2).
    let graph = CrystalGraph::build(&p(&[1, 1]), 4, true).unwrap();
    let solid: &[(&str, &str, u8)] = &[
        ("1/2", "1/3", 2),
        ("1/3", "1/4", 3),
        ("1/3", "2/3", 1),
        ("1/4", "2/4", 1),
        ("2/3", "2/4", 3),
        ("2/4", "3/4", 2),
        ("1/{2,3}", "1/{2,4}", 3),
        ("1/{2,4}", "1/{3,4}", 2),
        ("1/{3,4}", "2/{3,4}", 1),
        ("{1,2}/3", "{1,2}/4", 3),
        ("{1,2}/4", "{1,3}/4", 2),
        ("{1,3}/4", "{2,3}/4", 1),
    ];
    let dashed: &[(&str, &str, u8)] = &[
        ("1/2", "1/{2,3}", 2),
        ("1/3", "{1,2}/3", 1),
        ("1/3", "1/{3,4}", 3),
        ("1/{2,3}", "1/{2,3,4}", 3),
        ("1/4", "{1,2}/4", 1),
        ("{1,2}/4", "{1,2,3}/4", 2),
        ("2/3", "2/{3,4}", 3),
        ("2/4", "{2,3}/4", 2),
        ("{1,3}/4", "{1,2,3}/4", 1),
        ("1/{2,4}", "1/{2,3,4}", 2),
        ("{1,2}/3", "{1,2}/{3,4}", 3),
        ("1/{3,4}", "{1,2}/{3,4}", 1),
    ];
    assert_graph_edges(&graph, solid, dashed);

    println!(
        "criterion 7 PASS: (K.1)-(K.3) on rows (k ≤ 3, n ≤ 4) and columns (k < n ≤ 5); figure data edge-for-edge ({:?})",
        start.elapsed()
    );
}

fn assert_graph_edges(graph: &CrystalGraph, solid: &[(&str, &str, u8)], dashed: &[(&str, &str, u8)]) {
    let collect = |kind: EdgeKind| -> BTreeSet<(String, String, u8)> {
        graph
            .edges
            .iter()
            .filter(|e| e.kind == kind)
            .map(|e| (graph.nodes()[e.from].to_string(), graph.nodes()[e.to].to_string(), e.index))
            .collect()
    };
    let to_set = |edges: &[(&str, &str, u8)]| -> BTreeSet<(String, String, u8)> {
        edges.iter().map(|&(a, b, i)| (a.to_string(), b.to_string(), i)).collect()
    };
    assert_eq!(collect(EdgeKind::Ordinary), to_set(solid), "solid edges");
    assert_eq!(collect(EdgeKind::K), to_set(dashed), "dashed edges");
}

#[test]
fn criterion_8_property_suites() {
    let start = std::time::Instant::now();
    verify::crystal_axioms_suite(3, &[2, 3, 4]).unwrap();
    verify::reading_word_suite(3, &[2, 3, 4]).unwrap();
    verify::involution_suite(3, &[3]).unwrap();
    verify::operator_suite(3, &[3, 4]).unwrap();

    // Uncrowding equivariance, exhaustively and on the displayed pair.
    for shape in [p(&[2, 1]), p(&[2, 2])] {
        for t in enumerate_svt(&shape, 3, None) {
            let (s, f) = uncrowd(&t).unwrap();
            for i in 1..3u8 {
                match (svtcrystal::crystal::f_svt(&t, i), svtcrystal::crystal::f_svt(&s, i)) {
                    (None, None) => {}
                    (Some(ft), Some(fs)) => {
                        let (s2, f2) = uncrowd(&ft).unwrap();
                        assert_eq!(s2, fs, "uncrowding not equivariant at {t}");
                        assert_eq!(f2, f, "recording tableau moved at {t}");
                    }
                    _ => panic!("f_{i} defined on one side only at {t}"),
                }
            }
        }
    }
    println!(
        "criterion 8 PASS: axioms, involutions, braid relations, reading words, uncrowding equivariance ({:?})",
        start.elapsed()
    );
}
