use crate::delta::StatePost;
use crate::nfa::{Nfa, EPSILON};

/// Disjoint union; `b`'s states are shifted past `a`'s.
pub fn union(a: &Nfa, b: &Nfa) -> Nfa {
    let mut out = a.clone();
    union_inplace(&mut out, b);
    out
}

/// Appends `b`'s posts to `a` without touching `a`'s existing posts.
pub fn union_inplace(a: &mut Nfa, b: &Nfa) {
    let offset = a.delta.append_shifted(&b.delta);
    for q in b.initial().iter() {
        a.add_initial(q + offset);
    }
    for q in b.final_states().iter() {
        a.add_final(q + offset);
    }
    a.set_epsilon_symbols(a.epsilon_symbols().max(b.epsilon_symbols()));
}

pub fn concatenate(a: &Nfa, b: &Nfa) -> Nfa {
    let mut out = a.clone();
    concatenate_inplace(&mut out, b);
    out
}

/// In-place `L(a)·L(b)` without introducing epsilon transitions.
///
/// Every final state of `a` receives the post of `b`'s initial states.
/// The initial states of `b` stay initial only when `a` accepts the empty
/// word, and `a`'s final states stay final only when `b` does. Inputs that
/// already contain epsilon-like moves are joined with epsilon transitions
/// instead, since the empty-word tests above do not see epsilon paths.
pub fn concatenate_inplace(a: &mut Nfa, b: &Nfa) {
    let a_initial = a.initial_sorted();
    let a_final = a.final_sorted();
    let eps_in_a = a_initial.intersects(&a_final);
    let eps_in_b = b.initial().iter().any(|q| b.is_final(q));
    let with_epsilon = a.has_epsilon_transitions() || b.has_epsilon_transitions();

    let offset = a.delta.append_shifted(&b.delta);
    a.set_epsilon_symbols(a.epsilon_symbols().max(b.epsilon_symbols()));
    let b_initial: Vec<_> = b.initial_sorted().iter().map(|&q| q + offset).collect();
    let b_final: Vec<_> = b.final_states().iter().map(|q| q + offset).collect();

    if with_epsilon {
        for &f in a_final.iter() {
            for &s in &b_initial {
                a.add_transition(f, EPSILON, s);
            }
        }
        a.clear_final();
        for q in b_final {
            a.add_final(q);
        }
        return;
    }

    let mut connecting = StatePost::new();
    for &s in &b_initial {
        connecting.merge(a.delta.state_post(s));
    }
    for &f in a_final.iter() {
        a.delta.state_post_mut(f).merge(&connecting);
    }
    if eps_in_a {
        for &s in &b_initial {
            a.add_initial(s);
        }
    }
    if !eps_in_b {
        a.clear_final();
    }
    for q in b_final {
        a.add_final(q);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::is_in_lang;

    #[test]
    fn union_of_two_words() {
        let u = union(&Nfa::from_word(&[0]), &Nfa::from_word(&[1]));
        assert!(is_in_lang(&u, &[0]) && is_in_lang(&u, &[1]));
        assert!(!is_in_lang(&u, &[]) && !is_in_lang(&u, &[0, 1]));
        assert_eq!(u.num_states(), 4);
    }

    #[test]
    fn union_inplace_keeps_left_posts() {
        let mut a = Nfa::from_parts(2, [(0, 1, 1), (1, 0, 0)], [0], [1]);
        let before = a.delta.posts().to_vec();
        union_inplace(&mut a, &Nfa::from_word(&[3, 4]));
        assert_eq!(&a.delta.posts()[..2], &before[..]);
        assert!(a.has_transition(2, 3, 3));
    }

    #[test]
    fn concat_two_words_uses_second_finals() {
        let c = concatenate(&Nfa::from_word(&[0]), &Nfa::from_word(&[1]));
        assert!(is_in_lang(&c, &[0, 1]));
        assert!(!is_in_lang(&c, &[0]) && !is_in_lang(&c, &[1]));
        assert_eq!(c.final_sorted().as_slice(), &[3]);
        assert!(!c.has_epsilon_transitions());
    }

    #[test]
    fn concat_with_empty_word_is_neutral() {
        let a = Nfa::from_parts(2, [(0, 0, 1), (1, 1, 1)], [0], [1]);
        let c = concatenate(&a, &Nfa::from_word(&[]));
        for w in [&[][..], &[0], &[0, 1], &[0, 1, 1], &[1]] {
            assert_eq!(is_in_lang(&c, w), is_in_lang(&a, w), "{w:?}");
        }
        let c = concatenate(&Nfa::from_word(&[]), &a);
        for w in [&[][..], &[0], &[0, 1], &[1]] {
            assert_eq!(is_in_lang(&c, w), is_in_lang(&a, w), "{w:?}");
        }
    }

    #[test]
    fn concat_with_epsilon_inputs() {
        let a = Nfa::from_parts(2, [(0, EPSILON, 1)], [0], [1]);
        let b = Nfa::from_parts(3, [(0, EPSILON, 1), (1, 5, 2)], [0], [2]);
        let c = concatenate(&a, &b);
        assert!(is_in_lang(&c, &[5]));
        assert!(!is_in_lang(&c, &[]));
    }
}
