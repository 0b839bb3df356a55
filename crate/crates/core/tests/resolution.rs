mod common;

use argmeter::resolution::{is_strict, new_graph};
use argmeter::semantics::labellings;
use argmeter::{Answer, ArgumentGraph, CommitmentState, Error, Label, Labelling, MeasureId, SemanticsKind};
use proptest::prelude::*;

fn arb_graph(max_nodes: usize) -> impl Strategy<Value = ArgumentGraph> {
    (1..=max_nodes).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=n * 2).prop_map(move |arcs| {
            let names: Vec<String> = (1..=n).map(|i| format!("A{i}")).collect();
            let arcs: Vec<(&str, &str)> = arcs.iter().map(|&(a, b)| (names[a].as_str(), names[b].as_str())).collect();
            ArgumentGraph::from_names(names.iter().map(String::as_str), arcs).unwrap()
        })
    })
}

/// A graph plus a script of (node index, answer) picks; infeasible picks are skipped.
fn arb_script() -> impl Strategy<Value = (ArgumentGraph, Vec<(usize, bool)>)> {
    arb_graph(7).prop_flat_map(|g| {
        let n = g.node_count();
        (Just(g), proptest::collection::vec((0..n, any::<bool>()), 0..=n))
    })
}

fn run_script(g: &ArgumentGraph, script: &[(usize, bool)]) -> Vec<CommitmentState> {
    let nodes: Vec<_> = g.nodes().iter().cloned().collect();
    let mut states = vec![CommitmentState::new(g.clone())];
    for &(i, yes) in script {
        let answer = if yes { Answer::In } else { Answer::Out };
        match states.last().unwrap().apply_answer(&nodes[i], answer) {
            Ok(next) => states.push(next),
            Err(Error::AlreadyCommitted(_) | Error::CommitmentConflict { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }
    states
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn undecided_start_keeps_the_graph(g in arb_graph(8)) {
        let s = CommitmentState::new(g.clone());
        prop_assert_eq!(new_graph(&g, &Labelling::uniform(g.nodes(), Label::Undec)), g.clone());
        prop_assert_eq!(s.reduced(), g);
        prop_assert!(s.is_strict());
    }

    #[test]
    fn complete_labellings_are_strict(g in arb_graph(7)) {
        for l in labellings(&g, SemanticsKind::Complete).unwrap() {
            prop_assert!(is_strict(&g, &l));
        }
    }

    #[test]
    fn reachable_states_are_strict_and_shrink((g, script) in arb_script()) {
        let states = run_script(&g, &script);
        for w in states.windows(2) {
            let (before, after) = (&w[0], &w[1]);
            prop_assert!(after.is_strict());
            prop_assert!(after.reduced().nodes().is_subset(before.reduced().nodes()));
            for m in [MeasureId::Dr, MeasureId::In, MeasureId::Cc] {
                prop_assert!(after.measure(m).unwrap() <= before.measure(m).unwrap(), "{}", m);
            }
        }
    }

    #[test]
    fn replay_and_undo_agree((g, script) in arb_script()) {
        let states = run_script(&g, &script);
        let last = states.last().unwrap();
        let steps: Vec<_> = last.history().iter().map(|s| (&s.query, s.answer)).collect();
        prop_assert_eq!(&last.replay(steps).unwrap(), last);
        let mut cur = last.clone();
        for prev in states.iter().rev().skip(1) {
            cur = cur.undo().unwrap();
            prop_assert_eq!(&cur, prev);
        }
        prop_assert!(matches!(cur.undo(), Err(Error::EmptyHistory)));
    }

    #[test]
    fn recommendation_is_a_best_candidate((g, script) in arb_script()) {
        let state = run_script(&g, &script).pop().unwrap();
        match state.recommend_query(MeasureId::In) {
            Ok(rec) => {
                prop_assert!(rec.candidates.iter().all(|c| c.expected_reduction <= rec.best.expected_reduction));
                prop_assert_eq!(rec.candidates.len(), state.undecided().count());
                let first_best = rec.candidates.iter().find(|c| c.expected_reduction == rec.best.expected_reduction).unwrap();
                prop_assert_eq!(&first_best.argument, &rec.best.argument);
            }
            Err(e) => {
                prop_assert_eq!(e, Error::NoUndecided);
                prop_assert!(state.is_committed());
            }
        }
    }
}

#[test]
fn answering_in_commits_neighbours_out() {
    let g = common::graph_fixture("walkthrough.tgf");
    let s = CommitmentState::new(g).apply_answer(&argmeter::id("A3"), Answer::In).unwrap();
    assert_eq!(s.labelling().in_set(), common::set(&["A3"]));
    assert_eq!(s.labelling().out_set(), common::set(&["A1", "A2", "A4", "A5"]));
}
