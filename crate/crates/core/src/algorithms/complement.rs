use crate::delta::{StatePost, SymbolPost};
use crate::error::{Error, Result};
use crate::nfa::{Nfa, State, Symbol};
use crate::ord_vector::OrdVector;

use super::{determinize, require_epsilon_free};

/// Adds the missing moves over `alphabet`, sending them to `sink`.
///
/// When `sink` is `None` a fresh sink is created, but only if some state
/// lacks a move. The sink gets self-loops on every symbol. Returns whether
/// any transition was added.
pub fn make_complete_inplace(nfa: &mut Nfa, alphabet: &OrdVector<Symbol>, sink: Option<State>) -> bool {
    let mut sink = sink;
    let mut changed = false;
    let mut q = 0;
    while q < nfa.num_states() {
        let present: OrdVector<Symbol> = nfa.state_post(q).symbols().collect();
        let missing = alphabet.difference(&present);
        if !missing.is_empty() {
            let s = *sink.get_or_insert_with(|| nfa.add_state());
            let mut fill = StatePost::new();
            for &a in missing.iter() {
                fill.push_back(SymbolPost::new(a, OrdVector::singleton(s)));
            }
            nfa.delta.state_post_mut(q).merge(&fill);
            changed = true;
        }
        q += 1;
    }
    changed
}

pub fn make_complete(nfa: &Nfa, alphabet: &OrdVector<Symbol>, sink: Option<State>) -> Nfa {
    let mut out = nfa.clone();
    make_complete_inplace(&mut out, alphabet, sink);
    out
}

/// Complete DFA for `alphabet* \ L(nfa)`.
pub fn complement(nfa: &Nfa, alphabet: &OrdVector<Symbol>) -> Result<Nfa> {
    require_epsilon_free(nfa)?;
    if let Some(&symbol) = nfa.used_symbols().difference(alphabet).first() {
        return Err(Error::SymbolOutsideAlphabet { symbol });
    }
    let (mut dfa, _) = determinize(nfa)?;
    make_complete_inplace(&mut dfa, alphabet, None);
    let finals: Vec<State> = (0..dfa.num_states()).filter(|&q| !dfa.is_final(q)).collect();
    dfa.clear_final();
    for q in finals {
        dfa.add_final(q);
    }
    dfa.alphabet = nfa.alphabet.clone();
    Ok(dfa)
}
