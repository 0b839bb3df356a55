mod common;

use argmeter::deductive::{classify_attack, is_reflective};
use argmeter::instantiated::{i_attack, i_cu, i_support, measure_instantiated, BaseMeasure};
use argmeter::io::{parse_tgf, parse_instantiated};
use argmeter::properties::{instantiated_corpus, support_freeness_pair};
use argmeter::tree::{build_argument_tree, i_arg};
use argmeter::{id, AttackKind, Error, Formula, MeasureId, MeasureValue};
use common::*;

fn v(n: i64, d: i64) -> MeasureValue {
    MeasureValue::new(n, d)
}

#[test]
fn corrected_support_freeness_witness() {
    let (small, big) = support_freeness_pair();
    assert_eq!(small.graph().arcs(), big.graph().arcs());
    assert_eq!(big.graph().node_count(), small.graph().node_count() + 1);
    assert_eq!(i_support(&small, BaseMeasure::M).unwrap(), v(1, 1));
    assert_eq!(i_support(&big, BaseMeasure::M).unwrap(), v(2, 1));
    assert_eq!(i_attack(&small, BaseMeasure::M).unwrap(), i_attack(&big, BaseMeasure::M).unwrap());
    assert!(is_reflective(&big).unwrap());
}

#[test]
fn flight_attack_is_a_plain_undercut() {
    let ig = inst_fixture("flight.inst");
    let kinds = classify_attack(ig.argument(&id("A2")).unwrap(), ig.argument(&id("A1")).unwrap()).unwrap();
    assert!(kinds.contains(&AttackKind::Undercut));
    assert!(!kinds.contains(&AttackKind::DirectUndercut));
    assert!(!kinds.contains(&AttackKind::CanonicalUndercut));
    assert!(!kinds.contains(&AttackKind::Rebuttal));
}

#[test]
fn hypertension_fixture() {
    let ig = inst_fixture("hypertension.inst");
    assert_eq!(ig.graph(), &graph_fixture("treatment.tgf"));
    assert!(is_reflective(&ig).unwrap());
    let a1 = ig.argument(&id("A1")).unwrap();
    let a2 = ig.argument(&id("A2")).unwrap();
    assert!(classify_attack(a1, a2).unwrap().contains(&AttackKind::DefeatingRebuttal));
    assert!(classify_attack(a2, a1).unwrap().contains(&AttackKind::DefeatingRebuttal));
    assert!(i_cu(&ig).unwrap() > MeasureValue::ZERO);
    assert_eq!(measure_instantiated(&ig, MeasureId::In).unwrap(), v(3, 1));
}

#[test]
fn logic_measures_are_monotone_on_induced_subgraphs() {
    for ig in instantiated_corpus(5, 80).unwrap() {
        let nodes: Vec<_> = ig.graph().nodes().iter().cloned().collect();
        for mask in 0u32..1 << nodes.len() {
            let keep: Vec<_> = (0..nodes.len()).filter(|i| mask >> i & 1 == 1).map(|i| nodes[i].clone()).collect();
            let sub = ig.induced(keep.iter()).unwrap();
            for m in MeasureId::INSTANTIATED {
                assert!(measure_instantiated(&sub, m).unwrap() <= measure_instantiated(&ig, m).unwrap(), "{m} on {}", ig.graph());
            }
        }
    }
}

#[test]
fn attack_measures_vanish_without_arcs() {
    for ig in instantiated_corpus(9, 40).unwrap() {
        let silent = ig.induced(ig.graph().nodes().iter().take(1)).unwrap();
        for m in [MeasureId::Cu, MeasureId::CM, MeasureId::CSharp] {
            assert!(measure_instantiated(&silent, m).unwrap().is_zero());
        }
    }
}

#[test]
fn argument_trees() {
    let kb = kb_fixture("tree.kb");
    let t = build_argument_tree(&kb, &Formula::atom("alpha")).unwrap();
    assert_eq!(t.nodes()[0].depth, 1);
    assert!(t.root_undercuts() > 0);
    for (i, n) in t.nodes().iter().enumerate().skip(1) {
        let p = n.parent.unwrap();
        assert!(p < i);
        assert_eq!(n.depth, t.nodes()[p].depth + 1);
        let claim = Formula::not(t.nodes()[p].argument.support().conjunction());
        assert!(argmeter::logic::equivalent(n.argument.claim(), &claim).unwrap());
    }
    let depths: Vec<i64> = t.nodes().iter().map(|n| n.depth as i64).collect();
    let u = t.root_undercuts() as i64;
    let height = *depths.iter().max().unwrap();
    assert_eq!(i_arg(&t, 1).unwrap(), v(u, height));
    assert_eq!(i_arg(&t, 2).unwrap(), v(u, depths.iter().sum()));
    let inv: MeasureValue = depths.iter().map(|&d| v(1, d)).sum();
    assert_eq!(i_arg(&t, 3).unwrap(), MeasureValue::integer(u) * inv);
}

#[test]
fn parse_errors_carry_positions() {
    match parse_tgf("A1\n#\nA1 B7\n") {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 4)),
        other => panic!("{other:?}"),
    }
    let bad = fixture_text("flight.inst").replace("claim goodFly", "claim luxFly & goodFly & !luxFly");
    assert!(matches!(parse_instantiated(&bad), Err(Error::Parse { line: 3, .. })));
}

#[test]
fn documents_are_sniffed() {
    use argmeter::io::{parse_document, Document, DocumentFormat};
    for (name, want) in [("flight.inst", DocumentFormat::Inst), ("cycle5.apx", DocumentFormat::Apx), ("treatment.tgf", DocumentFormat::Tgf)] {
        assert_eq!(DocumentFormat::sniff(&fixture_text(name)), want, "{name}");
        assert_eq!(DocumentFormat::from_path(&fixture_path(name)), Some(want));
    }
    match parse_document(&fixture_text("hypertension.inst"), None).unwrap() {
        Document::Instantiated(ig) => assert_eq!(ig, inst_fixture("hypertension.inst")),
        other => panic!("{other:?}"),
    }
    let doc = parse_document(&fixture_text("cycle5.apx"), None).unwrap();
    assert_eq!(doc.graph(), &graph_fixture("cycle5.apx"));
    assert!(doc.into_state().binding().is_none());
}
