mod common;

use automata::algorithms::{concatenate, is_in_lang, trim, union};
use automata::inclusion::is_included;
use automata::{from_regex, parse_regex, Error, Nfa, Symbol};
use common::all_words;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LETTERS: [u8; 3] = [b'a', b'b', b'c'];

fn to_bytes(word: &[Symbol]) -> Vec<u8> {
    word.iter().map(|&i| LETTERS[i as usize]).collect()
}

fn accepts(nfa: &Nfa, text: &[u8]) -> bool {
    let word: Vec<Symbol> = text.iter().map(|&b| b as Symbol).collect();
    is_in_lang(nfa, &word)
}

/// Random pattern text in the supported grammar, biased towards the
/// letters used for enumeration.
fn random_pattern(rng: &mut impl Rng, depth: u32) -> String {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            0 => ".".into(),
            1 => "[ab]".into(),
            2 => "[^a]".into(),
            3 => "[a-b]".into(),
            4 => "\\w".into(),
            5 => String::new(),
            _ => (LETTERS[rng.gen_range(0..3)] as char).to_string(),
        };
    }
    let op = rng.gen_range(0..9);
    let mut sub = || random_pattern(rng, depth - 1);
    match op {
        0 | 1 => format!("{}{}", sub(), sub()),
        2 => format!("{}|{}", sub(), sub()),
        3 => format!("({})*", sub()),
        4 => format!("({})+", sub()),
        5 => format!("({})?", sub()),
        6 => format!("({}){{1,2}}", sub()),
        7 => format!("({}){{2}}", sub()),
        _ => format!("({}){{0,}}", sub()),
    }
}

#[test]
fn random_patterns_match_the_reference_engine() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let words: Vec<Vec<u8>> = all_words(3, 6).iter().map(|w| to_bytes(w)).collect();
    for _ in 0..500 {
        let pattern = random_pattern(&mut rng, 4);
        let nfa = from_regex(&pattern).unwrap_or_else(|e| panic!("{pattern:?}: {e}"));
        assert!(!nfa.has_epsilon_transitions());
        let reference = regex::bytes::Regex::new(&format!("(?-u)^(?:{pattern})$")).unwrap();
        for w in &words {
            assert_eq!(
                accepts(&nfa, w),
                reference.is_match(w),
                "pattern {pattern:?} on {:?}",
                String::from_utf8_lossy(w)
            );
        }
    }
}

#[test]
fn bounded_repeat_is_a_union_of_powers() {
    for (m, n) in [(0, 0), (0, 2), (1, 3), (2, 2), (3, 5)] {
        let rep = from_regex(&format!("(ab|c){{{m},{n}}}")).unwrap();
        let base = from_regex("ab|c").unwrap();
        let mut expected = from_regex("").unwrap();
        let mut power = from_regex("").unwrap();
        for k in 0..=n {
            if k >= m {
                expected = union(&expected, &power);
            }
            power = concatenate(&power, &base);
        }
        if m > 0 {
            // drop the ε seeded above when it is not part of the range
            expected = automata::intersection(&expected, &from_regex(".+").unwrap()).unwrap().0;
        }
        assert!(is_included(&rep, &expected).unwrap().0, "{m},{n}");
        assert!(is_included(&expected, &rep).unwrap().0, "{m},{n}");
    }
}

#[test]
fn negated_class_over_all_bytes() {
    let nfa = from_regex("[^a]").unwrap();
    for b in 0..=255u8 {
        assert_eq!(accepts(&nfa, &[b]), b != b'a', "byte {b}");
    }
    assert!(!accepts(&nfa, b""));
    let dot = from_regex(".").unwrap();
    assert!(!accepts(&dot, b"\n") && accepts(&dot, b"\r") && accepts(&dot, &[0xff]));
}

#[test]
fn concatenated_and_trimmed_pipeline() {
    let a = from_regex("aab*").unwrap();
    let b = from_regex("((a+b)*a)*").unwrap();
    for w in ["aa", "aab", "aabb"] {
        assert!(accepts(&a, w.as_bytes()));
    }
    assert!(!accepts(&a, b"ab"));
    assert!(accepts(&b, b"") && accepts(&b, b"aba"));
    let (ab, _) = trim(&concatenate(&a, &b));
    let reference = regex::bytes::Regex::new("^(?:aab*((a+b)*a)*)$").unwrap();
    for w in all_words(2, 7) {
        let text = to_bytes(&w);
        assert_eq!(accepts(&ab, &text), reference.is_match(&text));
    }
    assert_eq!(automata::useful_states(&ab).len(), ab.num_states());
}

#[test]
fn empty_pattern_accepts_only_the_empty_word() {
    let nfa = from_regex("").unwrap();
    assert!(accepts(&nfa, b""));
    assert!(!accepts(&nfa, b"a"));
    assert_eq!(parse_regex("()").unwrap(), automata::RegexAst::Empty);
}

#[test]
fn escapes() {
    let nfa = from_regex(r"\.\*\+\?\(\)\[\]\{\}\|\\\-\^").unwrap();
    assert!(accepts(&nfa, br".*+?()[]{}|\-^"));
    let ws = from_regex(r"\d\s\w\n\t").unwrap();
    assert!(accepts(&ws, b"7 _\n\t"));
    assert!(!accepts(&ws, b"a _\n\t"));
}

#[test]
fn malformed_patterns_are_positioned_errors() {
    for (pattern, position) in [("a(b", 1), ("[ab", 0), ("a)", 1), ("+", 0), ("a{2,1}", 1), ("\\z", 0), ("a{70}", 2), ("a{", 1)] {
        match parse_regex(pattern) {
            Err(Error::Regex { position: p, .. }) => assert_eq!(p, position, "{pattern}"),
            other => panic!("{pattern}: {other:?}"),
        }
    }
}
