mod common;

use std::collections::BTreeSet;

use automata::algorithms::is_in_lang;
use automata::formats::{
    mintermize, parse_mata, serialize_mata, to_dot, to_nfa_bits, to_nfa_bits_many, to_nfa_explicit, AutomatonKind,
    Label, SymbolFormula,
};
use automata::{Alphabet, Error, Nfa, EPSILON};
use common::{random_nfa, validate_dot, Shape};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_formula(rng: &mut impl Rng, atoms: u32, depth: u32) -> SymbolFormula {
    if depth == 0 || rng.gen_bool(0.35) {
        return match rng.gen_range(0..10) {
            0 => SymbolFormula::True,
            1 => SymbolFormula::False,
            _ => SymbolFormula::Atom(rng.gen_range(0..atoms)),
        };
    }
    let op = rng.gen_range(0..3);
    let mut sub = || random_formula(rng, atoms, depth - 1);
    match op {
        0 => SymbolFormula::not(sub()),
        1 => SymbolFormula::and(sub(), sub()),
        _ => SymbolFormula::or(sub(), sub()),
    }
}

/// Symbolic acceptance straight from the formula-labelled transitions.
fn symbolic_accepts(
    transitions: &[(usize, SymbolFormula, usize)],
    initial: &BTreeSet<usize>,
    finals: &BTreeSet<usize>,
    word: &[usize],
) -> bool {
    let mut current = initial.clone();
    for &v in word {
        current = transitions
            .iter()
            .filter(|(s, f, _)| current.contains(s) && f.eval(&|a| (v >> a) & 1 == 1))
            .map(|&(_, _, t)| t)
            .collect();
    }
    current.iter().any(|q| finals.contains(q))
}

fn assignment_words(max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..8).map(move |v| {
                    let mut w = w.clone();
                    w.push(v);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn bits_automata_preserve_assignment_languages() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let words = assignment_words(4);
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let transitions: Vec<(usize, SymbolFormula, usize)> = (0..rng.gen_range(1..=6))
            .map(|_| (rng.gen_range(0..n), random_formula(&mut rng, 3, 3), rng.gen_range(0..n)))
            .collect();
        let initial: BTreeSet<usize> = [0].into();
        let finals: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();

        let mut text = String::from("@NFA-bits\n%States");
        for q in 0..n {
            text += &format!(" s{q}");
        }
        text += "\n%Initial s0\n%Final";
        for q in &finals {
            text += &format!(" s{q}");
        }
        text += "\n";
        for (s, f, t) in &transitions {
            text += &format!("s{s} ({f}) s{t}\n");
        }
        let doc = parse_mata(&text).unwrap();
        let (nfa, m) = to_nfa_bits(&doc.automata[0]).unwrap();
        for w in &words {
            let minterm_word: Vec<_> = w
                .iter()
                .map(|&v| {
                    let idx = m.assignment_index(|a| (v >> a) & 1 == 1);
                    m.minterm_of_assignment(idx).expect("minterms cover every assignment")
                })
                .collect();
            assert_eq!(
                is_in_lang(&nfa, &minterm_word),
                symbolic_accepts(&transitions, &initial, &finals, w),
                "{text}\nword {w:?}"
            );
        }
    }
}

#[test]
fn shared_minterms_across_automata() {
    let doc = parse_mata("@NFA-bits\n%Initial p\n%Final q\np a0 q\n@NFA-bits\n%Initial p\n%Final q\np (a0 & a1) q\n").unwrap();
    let refs: Vec<_> = doc.automata.iter().collect();
    let (nfas, m) = to_nfa_bits_many(&refs).unwrap();
    assert_eq!(m.minterms.len(), 3);
    assert!(automata::is_included(&nfas[1], &nfas[0]).unwrap().0);
    assert!(!automata::is_included(&nfas[0], &nfas[1]).unwrap().0);
}

#[test]
fn figure_explicit_with_traits() {
    let text = "@NFA-explicit\nq0 a48 q1\nq0 a52 q1\nq1 a48 q1\n%Initial q0\n%Final q1\n";
    let doc = parse_mata(text).unwrap();
    let mut alphabet = Alphabet::new();
    let nfa = to_nfa_explicit(&doc.automata[0], &mut alphabet).unwrap();
    assert_eq!(alphabet.len(), 2);
    let a48 = alphabet.symbol("a48").unwrap();
    assert_eq!(automata::emptiness_witness(&nfa), Some(vec![a48]));
    assert_eq!(nfa.symbol_post(0, a48), &[1]);
}

#[test]
fn traits_accumulate_and_declare_states() {
    let doc = parse_mata("@NFA-explicit\n%Initial a\n%Initial b\n%Final z\na x b\n%Tag ignored\n").unwrap();
    let aut = &doc.automata[0];
    assert!(aut.has_trait("Tag"));
    let nfa = to_nfa_explicit(aut, &mut Alphabet::new()).unwrap();
    assert_eq!(nfa.num_states(), 3);
    assert_eq!(nfa.initial_sorted().as_slice(), &[0, 1]);
    assert_eq!(nfa.final_sorted().as_slice(), &[2]);
    assert!(automata::is_lang_empty(&nfa));
}

#[test]
fn no_final_trait_means_empty_language() {
    let doc = parse_mata("@NFA-explicit\n%Initial q\nq a q\n").unwrap();
    let nfa = to_nfa_explicit(&doc.automata[0], &mut Alphabet::new()).unwrap();
    assert!(nfa.final_states().is_empty());
    assert!(automata::is_lang_empty(&nfa));
}

#[test]
fn comments_blank_lines_and_several_automata() {
    let text = "# leading comment\n\n@NFA-explicit # trailing\nq0 a q1 # edge\n\n@NFA-bits\nq0 (a0 | !a0) q0\n";
    let doc = parse_mata(text).unwrap();
    assert_eq!(doc.automata.len(), 2);
    assert_eq!(doc.automata[0].transitions.len(), 1);
    assert_eq!(doc.automata[1].kind, AutomatonKind::NfaBits);
    assert!(matches!(doc.automata[1].transitions[0].label, Label::Formula(_)));
}

#[test]
fn wrong_kind_is_reported() {
    let doc = parse_mata("@NFA-bits\nq0 a0 q1\n").unwrap();
    assert!(matches!(
        to_nfa_explicit(&doc.automata[0], &mut Alphabet::new()),
        Err(Error::WrongKind { .. })
    ));
}

#[test]
fn epsilon_token_round_trips() {
    let nfa = Nfa::from_parts(2, [(0, EPSILON, 1)], [0], [1]);
    let text = serialize_mata(&nfa, None);
    assert!(text.contains("q0 <eps> q1"));
    let back = to_nfa_explicit(&parse_mata(&text).unwrap().automata[0], &mut Alphabet::new()).unwrap();
    assert_eq!(back, nfa);
}

#[test]
fn serialization_is_sorted_and_stable() {
    let nfa = Nfa::from_parts(3, [(2, 1, 0), (0, 1, 2), (0, 0, 1)], [0], [2]);
    let text = serialize_mata(&nfa, None);
    let edges: Vec<&str> = text.lines().filter(|l| !l.starts_with(['@', '%'])).collect();
    assert_eq!(edges, vec!["q0 0 q1", "q0 1 q2", "q2 1 q0"]);
    assert_eq!(serialize_mata(&nfa, None), text);
}

#[test]
fn dot_is_well_formed_on_random_automata() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let alphabet = Alphabet::from_symbol_map([("quote\"d", 0u32), ("back\\slash", 1), ("plain", 2)]).unwrap();
    for i in 0..300 {
        let (_, nfa) = random_nfa(
            &mut rng,
            &Shape {
                max_states: 9,
                epsilon_probability: 0.5,
                ..Shape::default()
            },
        );
        let dot = to_dot(&nfa, (i % 2 == 0).then_some(&alphabet));
        validate_dot(&dot).unwrap_or_else(|e| panic!("{e}\n{dot}"));
        let final_nodes = dot.lines().filter(|l| l.contains("doublecircle")).count();
        assert_eq!(final_nodes, nfa.final_states().len());
        let entry_arrows = dot.lines().filter(|l| l.trim_start().starts_with('i') && l.contains("->")).count();
        assert_eq!(entry_arrows, nfa.initial().len());
    }
}

#[test]
fn dot_of_one_transition() {
    let dot = to_dot(&Nfa::from_parts(2, [(0, 5, 1)], [], []), None);
    assert_eq!(dot.lines().filter(|l| l.contains("label=")).collect::<Vec<_>>(), vec!["  0 -> 1 [label=\"5\"];"]);
    validate_dot(&dot).unwrap();
}

#[test]
fn validator_rejects_broken_dot() {
    assert!(validate_dot("digraph nfa {\n  0 -> 1;\n}\n").is_err());
    assert!(validate_dot("digraph nfa {\n  0 [shape=circle];\n").is_err());
    assert!(validate_dot("digraph nfa {\n  0 [label=\"a\"b\"];\n}\n").is_err());
}

#[test]
fn too_many_atoms_is_an_error() {
    let wide = (0..30).map(SymbolFormula::Atom).reduce(SymbolFormula::and).unwrap();
    assert!(matches!(mintermize(&[wide]), Err(Error::TooManyAtoms { count: 30, max: 24 })));
}

proptest! {
    #[test]
    fn formula_display_reparses(seed in any::<u64>()) {
        let f = random_formula(&mut ChaCha8Rng::seed_from_u64(seed), 5, 5);
        prop_assert_eq!(SymbolFormula::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn serialize_parse_is_identity_up_to_symbol_names(seed in any::<u64>()) {
        let (raw, nfa) = random_nfa(&mut ChaCha8Rng::seed_from_u64(seed), &Shape { max_states: 7, epsilon_probability: 0.5, ..Shape::default() });
        let mut parsed = Alphabet::new();
        let back = to_nfa_explicit(&parse_mata(&serialize_mata(&nfa, None)).unwrap().automata[0], &mut parsed).unwrap();
        let mut restored = common::RawNfa::from_nfa(&back);
        restored.transitions = restored.transitions.iter().map(|&(s, a, t)| {
            (s, parsed.name(a).map_or(a, |n| n.parse().unwrap()), t)
        }).collect();
        prop_assert!(common::isomorphic(&restored, &raw));
    }
}
