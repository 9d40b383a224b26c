use std::collections::BTreeSet;

use proptest::prelude::*;
use urep::represent::length_bound;
use urep::search::{classify_labelings, find_representation, SearchConfig};
use urep::{complete_graph, construct, verify, LabeledGraph, Pattern, Word};

fn graph_strategy(max_n: u32) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs as usize).prop_map(move |bits| {
            let mask = bits
                .iter()
                .enumerate()
                .fold(0u64, |m, (i, &b)| m | (b as u64) << i);
            LabeledGraph::from_mask(n, mask).unwrap()
        })
    })
}

fn pattern_strategy(min: usize, max: usize) -> impl Strategy<Value = Pattern> {
    prop::collection::vec(1u32..=2, min..=max)
        .prop_filter_map("not reduced", |v| Pattern::new(v).ok())
}

/// A word over exactly `[n]`: a shuffled permutation with extra random letters.
fn word_over(n: u32) -> impl Strategy<Value = Word> {
    (
        Just((1..=n).collect::<Vec<u32>>()).prop_shuffle(),
        prop::collection::vec((1..=n, any::<prop::sample::Index>()), 0..12),
    )
        .prop_map(|(mut letters, extra)| {
            for (l, at) in extra {
                let pos = at.index(letters.len() + 1);
                letters.insert(pos, l);
            }
            Word::new(letters).unwrap()
        })
}

fn triple() -> impl Strategy<Value = (Word, LabeledGraph, Pattern)> {
    graph_strategy(5).prop_flat_map(|g| {
        let n = g.n();
        (word_over(n), Just(g), pattern_strategy(2, 5))
    })
}

/// Restriction of `w` to `keep`, relabeled to `1..=|keep|` in order.
fn relabeled_restriction(w: &Word, keep: &BTreeSet<u32>) -> Word {
    let originals: Vec<u32> = keep.iter().copied().collect();
    let letters = w
        .restrict(keep)
        .letters()
        .iter()
        .map(|l| originals.iter().position(|o| o == l).unwrap() as u32 + 1)
        .collect();
    Word::new(letters).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn constructed_words_represent(g in graph_strategy(7), u in pattern_strategy(3, 5)) {
        let (word, trace) = construct(&g, &u).unwrap();
        let report = verify(&word, &g, &u).unwrap();
        prop_assert!(report.ok, "{:?}", report.violations);
        prop_assert_eq!(trace.steps.len(), trace.core_graph.non_edges().len());
        prop_assert!(word.len() <= length_bound(g.n(), trace.steps.len(), u.len()));
        for step in &trace.steps {
            prop_assert!(step.prefix.len() <= u.len() + g.n() as usize * u.len());
        }
    }

    #[test]
    fn every_step_represents_its_graph(g in graph_strategy(5), u in pattern_strategy(3, 5)) {
        let (_, trace) = construct(&g, &u).unwrap();
        for t in 0..=trace.steps.len() {
            let ok = verify(&trace.word_after(t), &trace.graph_after(t), &trace.plan.effective_pattern)
                .unwrap()
                .ok;
            prop_assert!(ok, "step {}", t);
        }
        prop_assert_eq!(trace.graph_after(trace.steps.len()), trace.core_graph.clone());
    }

    #[test]
    fn complement_symmetry((w, g, u) in triple()) {
        let direct = verify(&w, &g, &u).unwrap().ok;
        let mirrored = verify(&w.complement(g.n()).unwrap(), &g.supplement(), &u.complement()).unwrap().ok;
        prop_assert_eq!(direct, mirrored);
    }

    #[test]
    fn reverse_symmetry((w, g, u) in triple()) {
        let direct = verify(&w, &g, &u).unwrap().ok;
        prop_assert_eq!(direct, verify(&w.reverse(), &g, &u.reverse()).unwrap().ok);
    }

    #[test]
    fn representations_are_hereditary(g in graph_strategy(5), u in pattern_strategy(3, 4), subset in any::<u32>()) {
        let (w, _) = construct(&g, &u).unwrap();
        let keep: BTreeSet<u32> = (1..=g.n()).filter(|v| subset >> (v - 1) & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        let (sub, _) = g.induced_subgraph(&keep).unwrap();
        prop_assert!(verify(&relabeled_restriction(&w, &keep), &sub, &u).unwrap().ok);
    }
}

#[test]
fn complete_graphs_need_no_steps() {
    for n in 1..=7 {
        let kn = complete_graph(n).unwrap();
        for k in 3..=5 {
            for u in Pattern::all_of_length(k) {
                let (w, trace) = construct(&kn, &u).unwrap();
                // post-transforms may permute 1..n, but no prefix is ever added
                assert!(trace.steps.is_empty());
                assert_eq!(trace.core_word, Word::identity(n));
                if trace.plan.post_transforms.is_empty() {
                    assert_eq!(w, Word::identity(n));
                }
                assert!(verify(&w, &kn, &u).unwrap().ok);
            }
        }
    }
}

#[test]
fn search_never_exhausts_below_constructed_length() {
    for k in 3..=4 {
        for u in Pattern::all_of_length(k) {
            for n in 1..=3u32 {
                for mask in 0..1u64 << (n * (n - 1) / 2) {
                    let g = LabeledGraph::from_mask(n, mask).unwrap();
                    let (built, _) = construct(&g, &u).unwrap();
                    let outcome =
                        find_representation(&g, &u, &SearchConfig::new(built.len())).unwrap();
                    let found = outcome.found.expect("a representing word exists");
                    assert!(found.len() <= built.len());
                    assert!(verify(&found, &g, &u).unwrap().ok);
                }
            }
        }
    }
}

#[test]
fn labeling_sweeps_respect_supplement_symmetry() {
    // labeling l of H under u corresponds to labeling x -> n+1-l(x) under u^c
    let shapes = [
        LabeledGraph::new(3, [(1, 2), (2, 3)]).unwrap(),
        LabeledGraph::new(3, [(1, 2)]).unwrap(),
        LabeledGraph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap(),
        LabeledGraph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap(),
    ];
    for h in &shapes {
        let n = h.n();
        let cfg = SearchConfig::new(2 * n as usize);
        for u in ["12", "11", "21"] {
            let u: Pattern = u.parse().unwrap();
            let sweep = classify_labelings(h, &u, &cfg).unwrap();
            let mirror = classify_labelings(h, &u.complement(), &cfg).unwrap();
            for (labeling, outcome) in &sweep {
                let flipped: Vec<u32> = labeling.iter().map(|&l| n + 1 - l).collect();
                let (_, partner) = mirror.iter().find(|(l, _)| *l == flipped).unwrap();
                assert_eq!(
                    outcome.found.is_some(),
                    partner.found.is_some(),
                    "{u} {labeling:?}"
                );
                if let Some(w) = &outcome.found {
                    let relabeled = h.relabel(&flipped);
                    assert!(
                        verify(&w.complement(n).unwrap(), &relabeled, &u.complement())
                            .unwrap()
                            .ok
                    );
                }
            }
        }
    }
}
