use automata::algorithms::{
    complement, concatenate, determinize, emptiness_witness, intersection, is_in_lang, revert, trim, union,
};
use automata::inclusion::{is_included_naive, is_included_with, WorklistPolicy};
use automata::simulation::reduce_simulation;
use automata::{Nfa, OrdVector, Symbol, Word};
use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Operation {
    Complement,
    Intersection,
    Union,
    Concat,
    Trim,
    Emptiness,
    Membership,
    Inclusion,
    Universality,
    Determinize,
    ReduceSim,
    Minterm,
    Revert,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    #[default]
    MinSize,
    Fifo,
    /// Complement, product and emptiness check instead of antichains.
    Naive,
}

impl Operation {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_owned()
    }

    /// Inclusive bounds on the number of input automata.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Self::Intersection | Self::Union | Self::Concat => (2, usize::MAX),
            Self::Inclusion => (2, 2),
            Self::Minterm => (1, usize::MAX),
            _ => (1, 1),
        }
    }

    pub fn needs_alphabet(self) -> bool {
        matches!(self, Self::Complement | Self::Universality)
    }
}

pub enum Outcome {
    Automata(Vec<Nfa>),
    /// A yes/no answer with an optional word backing a "no" (or, for
    /// emptiness, a "not empty").
    Verdict { holds: bool, witness: Option<Word> },
}

pub struct Request<'a> {
    pub op: Operation,
    pub inputs: &'a [Nfa],
    pub sigma: &'a OrdVector<Symbol>,
    pub policy: Policy,
    pub word: &'a [Symbol],
}

pub fn execute(req: &Request<'_>) -> Result<Outcome, String> {
    let err = |e: automata::Error| e.to_string();
    let inputs = req.inputs;
    let automaton = |nfa: Nfa| Ok(Outcome::Automata(vec![nfa]));
    match req.op {
        Operation::Complement => automaton(complement(&inputs[0], req.sigma).map_err(err)?),
        Operation::Intersection => {
            let mut acc = inputs[0].clone();
            for next in &inputs[1..] {
                acc = intersection(&acc, next).map_err(err)?.0;
            }
            automaton(acc)
        }
        Operation::Union => automaton(inputs[1..].iter().fold(inputs[0].clone(), |acc, n| union(&acc, n))),
        Operation::Concat => automaton(inputs[1..].iter().fold(inputs[0].clone(), |acc, n| concatenate(&acc, n))),
        Operation::Trim => automaton(trim(&inputs[0]).0),
        Operation::Revert => automaton(revert(&inputs[0])),
        Operation::Determinize => automaton(determinize(&inputs[0]).map_err(err)?.0),
        Operation::ReduceSim => automaton(reduce_simulation(&inputs[0]).map_err(err)?.0),
        Operation::Minterm => Ok(Outcome::Automata(inputs.to_vec())),
        Operation::Emptiness => {
            let witness = emptiness_witness(&inputs[0]);
            Ok(Outcome::Verdict {
                holds: witness.is_none(),
                witness,
            })
        }
        Operation::Membership => Ok(Outcome::Verdict {
            holds: is_in_lang(&inputs[0], req.word),
            witness: None,
        }),
        Operation::Inclusion => inclusion(&inputs[0], &inputs[1], req.policy),
        Operation::Universality => {
            let universal = Nfa::universal(req.sigma);
            inclusion(&universal, &inputs[0], req.policy)
        }
    }
}

fn inclusion(a: &Nfa, b: &Nfa, policy: Policy) -> Result<Outcome, String> {
    let (holds, witness) = match policy {
        Policy::Naive => is_included_naive(a, b),
        Policy::MinSize => is_included_with(a, b, WorklistPolicy::MinSize).map(|r| (r.included, r.counterexample)),
        Policy::Fifo => is_included_with(a, b, WorklistPolicy::Fifo).map(|r| (r.included, r.counterexample)),
    }
    .map_err(|e| e.to_string())?;
    Ok(Outcome::Verdict { holds, witness })
}
