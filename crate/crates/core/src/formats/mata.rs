//! The line-oriented `.mata` text format.
//!
//! ```text
//! # comment
//! @NFA-explicit
//! %Initial q0
//! %Final q1
//! q0 a48 q1
//! ```
//!
//! Recognised traits are `%Initial`, `%Final`, `%States` (declares state
//! names and fixes their numbering), `%Alphabet` (declares symbol names in
//! order) and `%EpsilonSymbols` (count of epsilon-like symbols). Other
//! traits are kept in the document and ignored by the converters. The token
//! `<eps>` names [`EPSILON`].

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::nfa::{Nfa, State, Symbol, EPSILON};

use super::formula::SymbolFormula;
use super::minterm::{mintermize, Mintermization};

pub const EPSILON_TOKEN: &str = "<eps>";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutomatonKind {
    NfaExplicit,
    NfaBits,
}

impl AutomatonKind {
    pub fn header(self) -> &'static str {
        match self {
            Self::NfaExplicit => "NFA-explicit",
            Self::NfaBits => "NFA-bits",
        }
    }

    fn from_header(name: &str) -> Option<Self> {
        match name {
            "NFA-explicit" => Some(Self::NfaExplicit),
            "NFA-bits" => Some(Self::NfaBits),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    Symbol(String),
    Formula(SymbolFormula),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTransition {
    pub source: String,
    pub label: Label,
    pub target: String,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MataAutomaton {
    pub kind: AutomatonKind,
    /// Trait lines in file order; repeated keys accumulate.
    pub traits: Vec<(String, Vec<String>)>,
    pub transitions: Vec<RawTransition>,
}

impl MataAutomaton {
    fn new(kind: AutomatonKind) -> Self {
        Self {
            kind,
            traits: Vec::new(),
            transitions: Vec::new(),
        }
    }

    /// All values given to trait `key`, across every line that sets it.
    pub fn trait_values<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.traits
            .iter()
            .filter(move |(k, _)| k == key)
            .flat_map(|(_, vs)| vs.iter().map(String::as_str))
    }

    pub fn has_trait(&self, key: &str) -> bool {
        self.traits.iter().any(|(k, _)| k == key)
    }

    /// Symbol formulas labelling the transitions, in order of first use.
    pub fn formulas(&self) -> Vec<SymbolFormula> {
        let mut out: Vec<SymbolFormula> = Vec::new();
        for t in &self.transitions {
            if let Label::Formula(f) = &t.label {
                if !out.contains(f) {
                    out.push(f.clone());
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MataDocument {
    pub automata: Vec<MataAutomaton>,
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

pub fn parse_mata(text: &str) -> Result<MataDocument> {
    let mut doc = MataDocument::default();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(_, first)) = toks.first() else {
            continue;
        };
        let parse_err = |message: String| Error::Parse { line: line_no, message };

        if let Some(name) = first.strip_prefix('@') {
            if toks.len() != 1 {
                return Err(parse_err("header takes no arguments".into()));
            }
            let kind = AutomatonKind::from_header(name).ok_or_else(|| parse_err(format!("unknown automaton kind '@{name}'")))?;
            doc.automata.push(MataAutomaton::new(kind));
            continue;
        }

        let Some(current) = doc.automata.last_mut() else {
            return Err(parse_err("definition before the first '@' header".into()));
        };

        if let Some(key) = first.strip_prefix('%') {
            if key.is_empty() {
                return Err(parse_err("empty trait name".into()));
            }
            let values = toks[1..].iter().map(|&(_, t)| t.to_owned()).collect();
            current.traits.push((key.to_owned(), values));
            continue;
        }

        if toks.len() < 3 {
            return Err(parse_err("transition needs a source, a label and a target".into()));
        }
        let (label_start, _) = toks[1];
        let (last_start, target) = toks[toks.len() - 1];
        let label_text = line[label_start..last_start].trim_end();
        let label = match current.kind {
            AutomatonKind::NfaExplicit => {
                if toks.len() != 3 {
                    return Err(parse_err(format!("explicit transition label '{label_text}' is not a single token")));
                }
                Label::Symbol(label_text.to_owned())
            }
            AutomatonKind::NfaBits => Label::Formula(SymbolFormula::parse(label_text).map_err(|e| Error::Formula {
                line: line_no,
                column: label_start + e.offset + 1,
                message: e.message,
            })?),
        };
        current.transitions.push(RawTransition {
            source: first.to_owned(),
            label,
            target: target.to_owned(),
            line: line_no,
        });
    }
    Ok(doc)
}

#[derive(Default)]
struct StateNames {
    ids: HashMap<String, State>,
}

impl StateNames {
    fn intern(&mut self, nfa: &mut Nfa, name: &str) -> State {
        if let Some(&q) = self.ids.get(name) {
            return q;
        }
        let q = nfa.add_state();
        self.ids.insert(name.to_owned(), q);
        q
    }
}

fn require_kind(aut: &MataAutomaton, expected: AutomatonKind) -> Result<()> {
    if aut.kind == expected {
        Ok(())
    } else {
        Err(Error::WrongKind {
            expected: expected.header(),
            found: aut.kind.header(),
        })
    }
}

/// Builds the states, traits and (via `add_label`) transitions shared by
/// both automaton kinds.
fn build(aut: &MataAutomaton, mut add_label: impl FnMut(&mut Nfa, State, &Label, State) -> Result<()>) -> Result<Nfa> {
    let mut nfa = Nfa::new();
    let mut names = StateNames::default();
    for name in aut.trait_values("States") {
        names.intern(&mut nfa, name);
    }
    if let Some(count) = aut.trait_values("EpsilonSymbols").last() {
        let k: u32 = count.parse().ok().filter(|&k| k >= 1).ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("invalid %EpsilonSymbols value '{count}'"),
        })?;
        nfa.set_epsilon_symbols(k);
    }
    for t in &aut.transitions {
        let s = names.intern(&mut nfa, &t.source);
        let d = names.intern(&mut nfa, &t.target);
        add_label(&mut nfa, s, &t.label, d)?;
    }
    for name in aut.trait_values("Initial") {
        let q = names.intern(&mut nfa, name);
        nfa.add_initial(q);
    }
    for name in aut.trait_values("Final") {
        let q = names.intern(&mut nfa, name);
        nfa.add_final(q);
    }
    Ok(nfa)
}

/// Converts an `@NFA-explicit` automaton. States are numbered in order of
/// first appearance (after any `%States` declaration); symbol names are
/// interned in `alphabet`.
pub fn to_nfa_explicit(aut: &MataAutomaton, alphabet: &mut Alphabet) -> Result<Nfa> {
    require_kind(aut, AutomatonKind::NfaExplicit)?;
    for name in aut.trait_values("Alphabet") {
        if name != EPSILON_TOKEN {
            alphabet.intern(name);
        }
    }
    build(aut, |nfa, s, label, d| {
        let Label::Symbol(name) = label else {
            unreachable!("explicit automata carry symbol labels")
        };
        let a = if name == EPSILON_TOKEN { EPSILON } else { alphabet.intern(name) };
        nfa.add_transition(s, a, d);
        Ok(())
    })
}

/// Converts one `@NFA-bits` automaton over its own minterms.
pub fn to_nfa_bits(aut: &MataAutomaton) -> Result<(Nfa, Mintermization)> {
    let (mut nfas, m) = to_nfa_bits_many(&[aut])?;
    Ok((nfas.pop().expect("one automaton in, one out"), m))
}

/// Converts several `@NFA-bits` automata over one shared mintermization,
/// so that their symbols are comparable.
pub fn to_nfa_bits_many(automata: &[&MataAutomaton]) -> Result<(Vec<Nfa>, Mintermization)> {
    let mut formulas = Vec::new();
    for aut in automata {
        require_kind(aut, AutomatonKind::NfaBits)?;
        for f in aut.formulas() {
            if !formulas.contains(&f) {
                formulas.push(f);
            }
        }
    }
    let m = mintermize(&formulas)?;
    let alphabet = minterm_alphabet(&m);
    let nfas = automata
        .iter()
        .map(|aut| {
            let mut nfa = build(aut, |nfa, s, label, d| {
                let Label::Formula(f) = label else {
                    unreachable!("bit-vector automata carry formula labels")
                };
                let ids = m.minterms_of(f).expect("formula was mintermized");
                for &a in ids.iter() {
                    nfa.add_transition(s, a, d);
                }
                Ok(())
            })?;
            nfa.alphabet = Some(alphabet.clone());
            Ok(nfa)
        })
        .collect::<Result<_>>()?;
    Ok((nfas, m))
}

/// Names minterm `i` as `m{i}`.
pub fn minterm_alphabet(m: &Mintermization) -> Alphabet {
    Alphabet::from_symbol_map(m.minterms.iter().map(|t| (format!("m{}", t.id), t.id))).expect("minterm ids are distinct")
}

/// Name under which `symbol` is written: the alphabet's name, `<eps>` for
/// [`EPSILON`], or its decimal value.
pub fn symbol_token(symbol: Symbol, alphabet: Option<&Alphabet>) -> String {
    match alphabet.and_then(|a| a.name(symbol)) {
        Some(name) => name.to_owned(),
        None if symbol == EPSILON => EPSILON_TOKEN.to_owned(),
        None => symbol.to_string(),
    }
}

/// Writes `nfa` as a single `@NFA-explicit` automaton with states `q0, q1, …`.
pub fn serialize_mata(nfa: &Nfa, alphabet: Option<&Alphabet>) -> String {
    let mut out = String::from("@NFA-explicit\n");
    let n = nfa.num_states();
    if n > 0 {
        out.push_str("%States");
        for q in 0..n {
            let _ = write!(out, " q{q}");
        }
        out.push('\n');
    }
    if nfa.epsilon_symbols() != 1 {
        let _ = writeln!(out, "%EpsilonSymbols {}", nfa.epsilon_symbols());
    }

    let mut symbols = nfa.used_symbols();
    if let Some(a) = alphabet {
        symbols = symbols.union(&a.symbols());
    }
    if !symbols.is_empty() {
        out.push_str("%Alphabet");
        for &a in symbols.iter() {
            let _ = write!(out, " {}", symbol_token(a, alphabet));
        }
        out.push('\n');
    }
    for (key, states) in [("Initial", nfa.initial_sorted()), ("Final", nfa.final_sorted())] {
        if !states.is_empty() {
            let _ = write!(out, "%{key}");
            for &q in states.iter() {
                let _ = write!(out, " q{q}");
            }
            out.push('\n');
        }
    }
    for t in nfa.transitions() {
        let _ = writeln!(out, "q{} {} q{}", t.source, symbol_token(t.symbol, alphabet), t.target);
    }
    out
}
