use automata_web::{byte_set_label, check_inclusion, mata_to_svg, mintermize_formulas, regex_to_mata, regex_to_svg};

fn parse_svg(text: &str) -> roxmltree::Document<'_> {
    let doc = roxmltree::Document::parse(text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    doc
}

fn count(doc: &roxmltree::Document<'_>, tag: &str) -> usize {
    doc.descendants().filter(|n| n.tag_name().name() == tag).count()
}

#[test]
fn regex_pictures_are_well_formed() {
    for pattern in ["", "a", "ab*c", "(a|b)*abb", "[^<&>\"]x", ".", "a{3,5}", "\\n\\t"] {
        for reduce in [false, true] {
            let svg = regex_to_svg(pattern, reduce).unwrap();
            let doc = parse_svg(&svg);
            assert!(!svg.contains("NaN"), "{pattern}");
            assert!(count(&doc, "circle") >= 1, "{pattern}");
        }
    }
}

#[test]
fn picture_shows_states_edges_and_finals() {
    let svg = regex_to_svg("ab", true).unwrap();
    let doc = parse_svg(&svg);
    // three states, one final drawn with an inner ring
    assert_eq!(count(&doc, "circle"), 4);
    // two transitions plus the marker path in <defs>
    assert_eq!(count(&doc, "path"), 3);
    assert_eq!(count(&doc, "line"), 1);
    let labels: Vec<&str> = doc.descendants().filter(|n| n.tag_name().name() == "text").filter_map(|n| n.text()).collect();
    assert!(labels.contains(&"a") && labels.contains(&"b"), "{labels:?}");
}

#[test]
fn invalid_patterns_are_reported() {
    let err = regex_to_svg("a(b", false).unwrap_err();
    assert!(err.contains("position"), "{err}");
    assert!(regex_to_svg(&"a".repeat(200), false).is_err());
}

#[test]
fn byte_labels_are_compact() {
    let lower: Vec<u32> = (b'a'..=b'z').map(u32::from).collect();
    assert_eq!(byte_set_label(&lower), "[a-z]");
    assert_eq!(byte_set_label(&[u32::from(b'x')]), "x");
    assert_eq!(byte_set_label(&[97, 98, 100]), "[abd]");
    let not_newline: Vec<u32> = (0..=255u32).filter(|&b| b != 10).collect();
    assert_eq!(byte_set_label(&not_newline), "[^\\x0a]");
    let all: Vec<u32> = (0..=255u32).collect();
    assert_eq!(byte_set_label(&all), "any");
}

#[test]
fn inclusion_with_and_without_counterexample() {
    let yes = check_inclusion("a(ba)*", "(a|b)*").unwrap();
    assert!(yes.included && yes.witness.is_none());
    let no = check_inclusion("(a|b)*", "a(ba)*").unwrap();
    assert!(!no.included);
    // the shortest words first: ε is in the left language only
    assert_eq!(no.witness.as_deref(), Some(""));
    let no = check_inclusion("a+b", "a*c|ab").unwrap();
    assert_eq!(no.witness.as_deref(), Some("aab"));
    assert!(no.pairs_explored >= 1);
    assert!(check_inclusion("(", "a").unwrap_err().starts_with("left"));
    assert!(check_inclusion("a", "[").unwrap_err().starts_with("right"));
}

#[test]
fn mata_text_of_a_regex() {
    let text = regex_to_mata("ab|ac", true).unwrap();
    assert!(text.starts_with("@NFA-explicit"));
    assert!(text.contains("%Alphabet a b c"), "{text}");
    let svg = mata_to_svg(&text).unwrap();
    parse_svg(&svg);
}

#[test]
fn minterm_table() {
    let out = mintermize_formulas("a0 & a1\na0\n\n").unwrap();
    let (minterms, formulas) = out.split_once("\n\n").unwrap();
    assert_eq!(minterms.lines().count(), 3, "{out}");
    let rows: Vec<&str> = formulas.lines().collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].split("->").nth(1).unwrap().split_whitespace().count(), 1);
    assert_eq!(rows[1].split("->").nth(1).unwrap().split_whitespace().count(), 2);
    let err = mintermize_formulas("a0\na0 &").unwrap_err();
    assert!(err.starts_with("line 2"), "{err}");
}

#[test]
fn bits_document_pictures_use_minterm_names() {
    let doc = "@NFA-bits\n%Initial q0\n%Final q1\nq0 a0 & !a1 q1\nq0 a1 q0\n";
    let svg = mata_to_svg(doc).unwrap();
    let parsed = parse_svg(&svg);
    let labels: Vec<&str> = parsed.descendants().filter(|n| n.tag_name().name() == "text").filter_map(|n| n.text()).collect();
    assert!(labels.iter().any(|l| l.starts_with('m')), "{labels:?}");
    assert!(mata_to_svg("# nothing\n").is_err());
}
