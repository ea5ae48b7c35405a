use crate::delta::{StatePost, SymbolPost};
use crate::nfa::{Nfa, State, Symbol};
use crate::ord_vector::OrdVector;

/// Reverses every transition and swaps initial with final states.
pub fn revert(nfa: &Nfa) -> Nfa {
    let n = nfa.num_states();
    let mut incoming: Vec<Vec<(Symbol, State)>> = vec![Vec::new(); n];
    for t in nfa.transitions() {
        incoming[t.target].push((t.symbol, t.source));
    }
    let posts = incoming
        .into_iter()
        .map(|mut moves| {
            // sources arrive ascending per symbol; a stable sort by symbol keeps that
            moves.sort_by_key(|&(a, _)| a);
            let mut sp = StatePost::new();
            let mut i = 0;
            while i < moves.len() {
                let symbol = moves[i].0;
                let mut targets = Vec::new();
                while i < moves.len() && moves[i].0 == symbol {
                    targets.push(moves[i].1);
                    i += 1;
                }
                sp.push_back(SymbolPost::new(symbol, OrdVector::from_sorted_unchecked(targets)));
            }
            sp
        })
        .collect();

    let mut out = Nfa::new();
    out.delta = crate::delta::Delta::from_posts(posts);
    out.set_epsilon_symbols(nfa.epsilon_symbols());
    out.alphabet = nfa.alphabet.clone();
    for q in nfa.final_states().iter() {
        out.add_initial(q);
    }
    for q in nfa.initial().iter() {
        out.add_final(q);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::is_in_lang;

    #[test]
    fn reverses_word() {
        let r = revert(&Nfa::from_word(&[0, 1]));
        assert!(is_in_lang(&r, &[1, 0]));
        assert!(!is_in_lang(&r, &[0, 1]));
    }

    #[test]
    fn involution() {
        let nfa = Nfa::from_parts(4, [(0, 1, 1), (0, 1, 2), (2, 0, 0), (3, 2, 1), (1, 1, 1)], [0, 3], [1]);
        assert_eq!(revert(&revert(&nfa)), nfa);
    }
}
