mod support;

use cpn_core::{parse, parse_schema, ChainError, Formula, ParseError};
use proptest::prelude::*;

const ATOMS: &[&str] = &["p", "q", "r", "x1", "long_name"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_then_parse_is_identity(
        (n, f) in (1u8..=4).prop_flat_map(|n| (Just(n), support::formula_strategy(n, ATOMS, 5)))
    ) {
        let text = f.to_string();
        let back = parse(&text, n).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(back, f);
    }

    #[test]
    fn whitespace_is_insignificant(
        f in support::formula_strategy(3, ATOMS, 4)
    ) {
        let text = f.to_string();
        let spaced = text.replace('(', " ( ").replace(')', " ) ").replace(' ', "  ");
        prop_assert_eq!(parse(&spaced, 3).unwrap(), f);
    }
}

#[test]
fn canonical_corpus_is_a_fixed_point() {
    let corpus = [
        "p",
        "bot",
        "top",
        "bot{1}",
        "~p",
        "~{1} p",
        "~{} p",
        "~{1} ~{2} p",
        "~(p -> q)",
        "p -> q -> r",
        "(p -> q) -> r",
        "p & q | r",
        "p & (q | r)",
        "p <-> q <-> r",
        "p <-> (q <-> r)",
        "~{1} p & ~{2} q -> ~(p & q)",
        "(~{1} p -> ~{1} q) -> q -> p",
        "bot{1} -> ~{2} (p & ~{2} p)",
    ];
    for text in corpus {
        let f = parse(text, 2).unwrap();
        assert_eq!(f.to_string(), text);
    }
}

#[test]
fn surface_variants_normalise() {
    let cases = [
        ("~{2,1} p", "~p"),
        ("~{2} ~{1} p", "~{2} ~{1} p"),
        ("~ {1} p", "~{1} p"),
        ("((p))", "p"),
        ("bot{1,2}", "bot"),
        ("bot{}", "top"),
        ("p->q->r", "p -> q -> r"),
        ("~~p", "~~p"),
    ];
    for (input, shown) in cases {
        assert_eq!(parse(input, 2).unwrap().to_string(), shown, "{input}");
    }
}

#[test]
fn errors_report_spans() {
    let err = parse("p -> ", 2).unwrap_err();
    assert!(matches!(err, ParseError::Syntax { .. }));
    assert_eq!(err.span().start, 5);

    let err = parse("~{1,1} p", 2).unwrap_err();
    assert!(matches!(err, ParseError::Chain { error: ChainError::DuplicateSymbol(1), .. }));

    for bad in ["", "p q", "(p", "p)", "~{1 p", "p $ q", "bot{0}"] {
        assert!(parse(bad, 2).is_err(), "{bad:?} should not parse");
    }
}

#[test]
fn schema_round_trip() {
    for text in [
        "~[k] ~[r] phi <-> ~[k ^ r] phi",
        "~[k] phi -> ~[s] psi -> ~[s ^ (k & s)] (phi -> psi)",
        "~ ~[k'] phi <-> ~[k] phi",
        "bot[k . r] -> bot[k]",
    ] {
        let s = parse_schema(text).unwrap();
        assert_eq!(parse_schema(&s.to_string()).unwrap(), s, "{text}");
    }
}

#[test]
fn builders_match_parser() {
    let n = 2;
    let p = Formula::atom("p");
    assert_eq!(parse("~p", n).unwrap(), Formula::strong_neg(n, p.clone()));
    assert_eq!(parse("top", n).unwrap(), Formula::top(n));
}
