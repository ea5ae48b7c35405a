//! Browser bindings for a few automata operations. Every export takes and
//! returns plain strings so the page needs no glue beyond the generated
//! module; errors are thrown as string messages.

mod svg;

use automata::formats::{minterm_alphabet, mintermize, parse_mata, to_nfa_bits, to_nfa_explicit, AutomatonKind};
use automata::regex::byte_name;
use automata::{
    from_regex, is_included_with, reduce_simulation, serialize_mata, trim, Alphabet, Nfa, SymbolFormula, Symbol,
    WorklistPolicy,
};
use wasm_bindgen::prelude::*;

pub use svg::MAX_DRAWN_STATES;

fn text_of(bytes: &[u8]) -> String {
    bytes.iter().map(|&b| byte_name(b)).collect()
}

/// Names a set of byte symbols compactly: runs become ranges and sets
/// covering most bytes are shown by their complement.
pub fn byte_set_label(symbols: &[Symbol]) -> String {
    let bytes: Vec<u8> = symbols.iter().filter_map(|&s| u8::try_from(s).ok()).collect();
    if bytes.len() > 128 {
        let missing: Vec<u8> = (0..=255u8).filter(|b| !bytes.contains(b)).collect();
        return if missing.is_empty() { "any".into() } else { format!("[^{}]", ranges(&missing)) };
    }
    if bytes.len() == 1 {
        return byte_name(bytes[0]);
    }
    format!("[{}]", ranges(&bytes))
}

fn ranges(sorted: &[u8]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[j] + 1 {
            j += 1;
        }
        if j - i >= 2 {
            out += &format!("{}-{}", byte_name(sorted[i]), byte_name(sorted[j]));
        } else {
            out += &text_of(&sorted[i..=j]);
        }
        i = j + 1;
    }
    out
}

fn compile(pattern: &str, reduce: bool) -> Result<Nfa, String> {
    let nfa = from_regex(pattern).map_err(|e| e.to_string())?;
    if !reduce {
        return Ok(nfa);
    }
    let (reduced, _) = reduce_simulation(&nfa).map_err(|e| e.to_string())?;
    Ok(trim(&reduced).0)
}

/// SVG picture of the automaton for `pattern`, optionally reduced by
/// simulation first.
#[wasm_bindgen]
pub fn regex_to_svg(pattern: &str, reduce: bool) -> Result<String, String> {
    let nfa = compile(pattern, reduce)?;
    svg::render(&nfa, byte_set_label)
}

/// The automaton for `pattern` in `.mata` text.
#[wasm_bindgen]
pub fn regex_to_mata(pattern: &str, reduce: bool) -> Result<String, String> {
    let nfa = compile(pattern, reduce)?;
    let names = Alphabet::from_symbol_map(nfa.used_symbols().iter().map(|&s| (byte_name(s as u8), s)))
        .map_err(|e| e.to_string())?;
    Ok(serialize_mata(&nfa, Some(&names)))
}

/// Outcome of comparing two patterns.
#[wasm_bindgen(getter_with_clone)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    pub included: bool,
    /// A word matched by the left pattern only, escaped like `.mata` symbols.
    pub witness: Option<String>,
    pub pairs_explored: usize,
    pub pairs_stored: usize,
}

/// Checks whether every word matched by `left` is matched by `right`.
#[wasm_bindgen]
pub fn check_inclusion(left: &str, right: &str) -> Result<InclusionReport, String> {
    let a = from_regex(left).map_err(|e| format!("left: {e}"))?;
    let b = from_regex(right).map_err(|e| format!("right: {e}"))?;
    let r = is_included_with(&a, &b, WorklistPolicy::MinSize).map_err(|e| e.to_string())?;
    Ok(InclusionReport {
        included: r.included,
        witness: r
            .counterexample
            .map(|w| w.iter().map(|&s| byte_name(s as u8)).collect::<String>()),
        pairs_explored: r.stats.pairs_explored,
        pairs_stored: r.stats.pairs_stored,
    })
}

/// One formula per line in, a table of minterms out: each minterm with the
/// conjunction defining it, then each formula with the minterms it splits into.
#[wasm_bindgen]
pub fn mintermize_formulas(text: &str) -> Result<String, String> {
    let mut formulas = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        formulas.push(SymbolFormula::parse(line).map_err(|e| format!("line {}, column {}: {}", i + 1, e.offset + 1, e.message))?);
    }
    let m = mintermize(&formulas).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for mt in &m.minterms {
        out += &format!("m{} = {}  ({} assignments)\n", mt.id, mt.as_formula(&m.formulas), mt.valuations.count());
    }
    out.push('\n');
    for (f, ms) in m.formulas.iter().zip(&m.formula_minterms) {
        let names: Vec<String> = ms.iter().map(|id| format!("m{id}")).collect();
        out += &format!("{f}  ->  {}\n", if names.is_empty() { "(none)".into() } else { names.join(" ") });
    }
    Ok(out)
}

/// SVG picture of the first automaton in a `.mata` document. Formula labels
/// are mintermized and drawn as minterm names.
#[wasm_bindgen]
pub fn mata_to_svg(text: &str) -> Result<String, String> {
    let doc = parse_mata(text).map_err(|e| e.to_string())?;
    let aut = doc.automata.first().ok_or("no automaton in the document")?;
    let (nfa, names) = match aut.kind {
        AutomatonKind::NfaExplicit => {
            let mut alphabet = Alphabet::new();
            let nfa = to_nfa_explicit(aut, &mut alphabet).map_err(|e| e.to_string())?;
            (nfa, alphabet)
        }
        AutomatonKind::NfaBits => {
            let (nfa, m) = to_nfa_bits(aut).map_err(|e| e.to_string())?;
            (nfa, minterm_alphabet(&m))
        }
    };
    svg::render(&nfa, |symbols| {
        symbols
            .iter()
            .map(|&s| match names.name(s) {
                Some(name) => name.to_owned(),
                None if nfa.is_epsilon(s) => "ε".to_owned(),
                None => s.to_string(),
            })
            .collect::<Vec<_>>()
            .join(",")
    })
}
