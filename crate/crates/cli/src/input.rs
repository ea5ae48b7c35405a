//! Loading command-line inputs into automata over one shared alphabet.

use std::fs;

use automata::formats::{minterm_alphabet, parse_mata, to_nfa_bits_many, to_nfa_explicit, AutomatonKind, MataAutomaton};
use automata::regex::byte_name;
use automata::{from_regex, Alphabet, Nfa, Symbol, EPSILON};

pub const REGEX_PREFIX: &str = "regex:";

/// Rebuilds `nfa` with every non-epsilon symbol passed through `map`.
pub fn remap(nfa: &Nfa, mut map: impl FnMut(Symbol) -> Symbol) -> Nfa {
    let mut out = Nfa::with_states(nfa.num_states());
    out.set_epsilon_symbols(nfa.epsilon_symbols());
    for t in nfa.transitions() {
        let symbol = if nfa.is_epsilon(t.symbol) { t.symbol } else { map(t.symbol) };
        out.add_transition(t.source, symbol, t.target);
    }
    for q in nfa.initial().iter() {
        out.add_initial(q);
    }
    for q in nfa.final_states().iter() {
        out.add_final(q);
    }
    out
}

enum Pending {
    Ready(Nfa),
    Bits(usize),
}

/// Reads every argument: `.mata` paths contribute all their automata in file
/// order, `regex:` arguments one automaton each. `@NFA-bits` automata from
/// all files are mintermized together so their symbols agree.
pub fn load_inputs(args: &[String], alphabet: &mut Alphabet) -> Result<Vec<Nfa>, String> {
    let mut pending = Vec::new();
    let mut bits: Vec<MataAutomaton> = Vec::new();
    for arg in args {
        if let Some(pattern) = arg.strip_prefix(REGEX_PREFIX) {
            let nfa = from_regex(pattern).map_err(|e| format!("{arg}: {e}"))?;
            pending.push(Pending::Ready(remap(&nfa, |b| alphabet.intern(&byte_name(b as u8)))));
            continue;
        }
        let text = fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
        let doc = parse_mata(&text).map_err(|e| format!("{arg}: {e}"))?;
        if doc.automata.is_empty() {
            return Err(format!("{arg}: no automaton definitions"));
        }
        for aut in doc.automata {
            match aut.kind {
                AutomatonKind::NfaExplicit => {
                    let nfa = to_nfa_explicit(&aut, alphabet).map_err(|e| format!("{arg}: {e}"))?;
                    pending.push(Pending::Ready(nfa));
                }
                AutomatonKind::NfaBits => {
                    pending.push(Pending::Bits(bits.len()));
                    bits.push(aut);
                }
            }
        }
    }

    let mut converted = Vec::new();
    if !bits.is_empty() {
        let refs: Vec<&MataAutomaton> = bits.iter().collect();
        let (nfas, minterms) = to_nfa_bits_many(&refs).map_err(|e| e.to_string())?;
        let names = minterm_alphabet(&minterms);
        converted = nfas
            .iter()
            .map(|nfa| remap(nfa, |m| alphabet.intern(names.name(m).expect("minterm is named"))))
            .collect();
    }
    Ok(pending
        .into_iter()
        .map(|p| match p {
            Pending::Ready(nfa) => nfa,
            Pending::Bits(i) => converted[i].clone(),
        })
        .collect())
}

/// Splits a list of symbol names on commas and whitespace.
pub fn symbol_names(list: &str) -> impl Iterator<Item = &str> {
    list.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty())
}

pub fn format_word(word: &[Symbol], alphabet: &Alphabet) -> String {
    if word.is_empty() {
        return "ε".to_owned();
    }
    word.iter()
        .map(|&a| match alphabet.name(a) {
            Some(name) => name.to_owned(),
            None if a == EPSILON => "<eps>".to_owned(),
            None => a.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}
