//! Minimal-parentheses printer. The output parses back to the same AST.

use core::fmt;

use super::Formula;

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Iff(..) => 1,
        Formula::Imp(..) => 2,
        Formula::Or(..) => 3,
        Formula::And(..) => 4,
        _ => 5,
    }
}

fn child(out: &mut fmt::Formatter<'_>, f: &Formula, paren: bool) -> fmt::Result {
    if paren {
        write!(out, "({f})")
    } else {
        write!(out, "{f}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(name) => out.write_str(name),
            Formula::Bottom(c) if c.is_empty() => out.write_str("top"),
            Formula::Bottom(c) if c.is_full() => out.write_str("bot"),
            Formula::Bottom(c) => write!(out, "bot{c}"),
            Formula::Neg(c, body) => {
                if c.is_full() {
                    out.write_str("~")?;
                } else {
                    write!(out, "~{c} ")?;
                }
                child(out, body, level(body) < 5)
            }
            Formula::Imp(a, b) => {
                child(out, a, level(a) <= 2)?;
                out.write_str(" -> ")?;
                child(out, b, level(b) < 2)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                let lvl = level(self);
                let op = match self {
                    Formula::And(..) => " & ",
                    Formula::Or(..) => " | ",
                    _ => " <-> ",
                };
                child(out, a, level(a) < lvl)?;
                out.write_str(op)?;
                child(out, b, level(b) <= lvl)
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "`{self}`")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;
    use crate::formula::parse;
    use alloc::string::ToString;

    #[test]
    fn spec_examples() {
        let p = Formula::atom("p");
        let q = Formula::atom("q");
        assert_eq!(Formula::neg(Chain::singleton(1, 2), p.clone()).to_string(), "~{1} p");
        assert_eq!(
            Formula::imp(p.clone(), Formula::imp(q.clone(), p.clone())).to_string(),
            "p -> q -> p"
        );
        assert_eq!(Formula::top(2).to_string(), "top");
    }

    #[test]
    fn canonical_strings_are_fixed_points() {
        for text in [
            "(p -> q) -> p",
            "~(p -> q)",
            "~{1} ~p",
            "~{} p",
            "p & q & r",
            "p & (q & r)",
            "p <-> q <-> r",
            "p <-> (q <-> r)",
            "p | q -> r",
            "(p | q) & r",
            "bot{1} -> bot -> top",
            "~{1,2} (p & ~{2} q)",
        ] {
            let f = parse(text, 3).unwrap();
            assert_eq!(f.to_string(), text);
            assert_eq!(parse(&f.to_string(), 3).unwrap(), f);
        }
    }
}
