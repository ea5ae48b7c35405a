//! Classical constructions over [`Nfa`](crate::Nfa).

mod complement;
mod determinize;
mod emptiness;
mod epsilon;
mod product;
mod revert;
mod trim;
mod union_concat;

pub use complement::{complement, make_complete, make_complete_inplace};
pub use determinize::{determinize, Macrostate, SubsetMap};
pub use emptiness::{emptiness_witness, is_in_lang, is_lang_empty};
pub use epsilon::{epsilon_closure, remove_epsilon};
pub use product::{intersection, intersection_preserving_epsilon, ProductMap, DENSE_PRODUCT_LIMIT};
pub use revert::revert;
pub use trim::{trim, trim_inplace, useful_mask, useful_states, DfsStats, Renaming};
pub use union_concat::{concatenate, concatenate_inplace, union, union_inplace};

use crate::error::{Error, Result};
use crate::nfa::Nfa;

pub(crate) fn require_epsilon_free(nfa: &Nfa) -> Result<()> {
    if nfa.has_epsilon_transitions() {
        Err(Error::EpsilonNotSupported)
    } else {
        Ok(())
    }
}
