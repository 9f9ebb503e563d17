//! Schemas: formulas with formula and chain metavariables.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use super::Formula;
use crate::chain::{Chain, ChainError};

/// A chain position inside a schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainExpr {
    /// The full chain `(n)`.
    Full,
    /// A literal symbol list, validated at instantiation.
    Lit(Vec<u32>),
    Var(Arc<str>),
    Complement(Box<ChainExpr>),
    Coconcat(Box<ChainExpr>, Box<ChainExpr>),
    Concat(Box<ChainExpr>, Box<ChainExpr>),
    Common(Box<ChainExpr>, Box<ChainExpr>),
}

/// A formula shape whose atoms are formula metavariables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Schema {
    Var(Arc<str>),
    Bottom(ChainExpr),
    Neg(ChainExpr, Box<Schema>),
    Imp(Box<Schema>, Box<Schema>),
    And(Box<Schema>, Box<Schema>),
    Or(Box<Schema>, Box<Schema>),
    Iff(Box<Schema>, Box<Schema>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("metavariable `{0}` is not bound")]
    UnboundMetavariable(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

impl ChainExpr {
    pub fn eval(&self, cmap: &BTreeMap<Arc<str>, Chain>, n: u8) -> Result<Chain, SubstError> {
        Ok(match self {
            ChainExpr::Full => Chain::full(n),
            ChainExpr::Lit(symbols) => Chain::canonical(symbols, n as u32)?,
            ChainExpr::Var(name) => {
                let c = *cmap
                    .get(name)
                    .ok_or_else(|| SubstError::UnboundMetavariable(name.to_string()))?;
                if c.alphabet() != n {
                    return Err(ChainError::AlphabetMismatch {
                        left: c.alphabet(),
                        right: n,
                    }
                    .into());
                }
                c
            }
            ChainExpr::Complement(inner) => inner.eval(cmap, n)?.complement(),
            ChainExpr::Coconcat(a, b) => a.eval(cmap, n)?.coconcat(&b.eval(cmap, n)?)?,
            ChainExpr::Concat(a, b) => a.eval(cmap, n)?.concat(&b.eval(cmap, n)?)?,
            ChainExpr::Common(a, b) => a.eval(cmap, n)?.common(&b.eval(cmap, n)?)?,
        })
    }

    fn collect_vars(&self, out: &mut Vec<Arc<str>>) {
        match self {
            ChainExpr::Full | ChainExpr::Lit(_) => {}
            ChainExpr::Var(name) => {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
            ChainExpr::Complement(inner) => inner.collect_vars(out),
            ChainExpr::Coconcat(a, b) | ChainExpr::Concat(a, b) | ChainExpr::Common(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

impl Schema {
    /// Formula metavariables in order of first occurrence.
    pub fn formula_vars(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.walk(&mut |s| {
            if let Schema::Var(name) = s {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
        });
        out
    }

    /// Chain metavariables in order of first occurrence.
    pub fn chain_vars(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.walk(&mut |s| match s {
            Schema::Bottom(c) | Schema::Neg(c, _) => c.collect_vars(&mut out),
            _ => {}
        });
        out
    }

    fn walk(&self, f: &mut impl FnMut(&Schema)) {
        f(self);
        match self {
            Schema::Var(_) | Schema::Bottom(_) => {}
            Schema::Neg(_, body) => body.walk(f),
            Schema::Imp(a, b) | Schema::And(a, b) | Schema::Or(a, b) | Schema::Iff(a, b) => {
                a.walk(f);
                b.walk(f);
            }
        }
    }

    /// Instantiates the schema. With `fmap = None` metavariables become
    /// atoms of the same name.
    pub(crate) fn instantiate(
        &self,
        fmap: Option<&BTreeMap<Arc<str>, Formula>>,
        cmap: &BTreeMap<Arc<str>, Chain>,
        n: u8,
    ) -> Result<Formula, SubstError> {
        let go = |s: &Schema| s.instantiate(fmap, cmap, n);
        Ok(match self {
            Schema::Var(name) => match fmap {
                None => Formula::Atom(name.clone()),
                Some(map) => map
                    .get(name)
                    .cloned()
                    .ok_or_else(|| SubstError::UnboundMetavariable(name.to_string()))?,
            },
            Schema::Bottom(c) => Formula::Bottom(c.eval(cmap, n)?),
            Schema::Neg(c, body) => Formula::neg(c.eval(cmap, n)?, go(body)?),
            Schema::Imp(a, b) => Formula::imp(go(a)?, go(b)?),
            Schema::And(a, b) => Formula::and(go(a)?, go(b)?),
            Schema::Or(a, b) => Formula::or(go(a)?, go(b)?),
            Schema::Iff(a, b) => Formula::iff(go(a)?, go(b)?),
        })
    }
}

/// Simultaneous substitution of formula and chain metavariables over `[n]`.
pub fn substitute(
    schema: &Schema,
    fmap: &BTreeMap<Arc<str>, Formula>,
    cmap: &BTreeMap<Arc<str>, Chain>,
    n: u8,
) -> Result<Formula, SubstError> {
    schema.instantiate(Some(fmap), cmap, n)
}

impl fmt::Display for ChainExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainExpr::Full => f.write_str("~"),
            ChainExpr::Lit(symbols) => {
                f.write_str("{")?;
                for (i, s) in symbols.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str("}")
            }
            ChainExpr::Var(name) => f.write_str(name),
            ChainExpr::Complement(inner) => match **inner {
                ChainExpr::Var(_) | ChainExpr::Lit(_) | ChainExpr::Complement(_) => {
                    write!(f, "{inner}'")
                }
                _ => write!(f, "({inner})'"),
            },
            ChainExpr::Coconcat(a, b) => write_chain_op(f, a, " ^ ", b),
            ChainExpr::Concat(a, b) => write_chain_op(f, a, ".", b),
            ChainExpr::Common(a, b) => write_chain_op(f, a, " & ", b),
        }
    }
}

fn write_chain_op(f: &mut fmt::Formatter<'_>, a: &ChainExpr, op: &str, b: &ChainExpr) -> fmt::Result {
    // Chain operators share one precedence level and associate left.
    let compound = |e: &ChainExpr| {
        matches!(
            e,
            ChainExpr::Coconcat(..) | ChainExpr::Concat(..) | ChainExpr::Common(..)
        )
    };
    write!(f, "{a}{op}")?;
    if compound(b) {
        write!(f, "({b})")
    } else {
        write!(f, "{b}")
    }
}

fn write_slot(f: &mut fmt::Formatter<'_>, c: &ChainExpr) -> fmt::Result {
    match c {
        ChainExpr::Full => Ok(()),
        ChainExpr::Lit(_) => write!(f, "{c}"),
        _ => write!(f, "[{c}]"),
    }
}

impl Schema {
    fn level(&self) -> u8 {
        match self {
            Schema::Iff(..) => 1,
            Schema::Imp(..) => 2,
            Schema::Or(..) => 3,
            Schema::And(..) => 4,
            _ => 5,
        }
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let paren = |f: &mut fmt::Formatter<'_>, s: &Schema, yes: bool| {
            if yes {
                write!(f, "({s})")
            } else {
                write!(f, "{s}")
            }
        };
        match self {
            Schema::Var(name) => f.write_str(name),
            Schema::Bottom(ChainExpr::Lit(symbols)) if symbols.is_empty() => f.write_str("top"),
            Schema::Bottom(c) => {
                f.write_str("bot")?;
                write_slot(f, c)
            }
            Schema::Neg(c, body) => {
                f.write_str("~")?;
                if !matches!(c, ChainExpr::Full) {
                    write_slot(f, c)?;
                    f.write_str(" ")?;
                }
                paren(f, body, body.level() < 5)
            }
            Schema::Imp(a, b) => {
                paren(f, a, a.level() <= 2)?;
                f.write_str(" -> ")?;
                paren(f, b, b.level() < 2)
            }
            Schema::And(a, b) | Schema::Or(a, b) | Schema::Iff(a, b) => {
                let lvl = self.level();
                let op = match self {
                    Schema::And(..) => " & ",
                    Schema::Or(..) => " | ",
                    _ => " <-> ",
                };
                paren(f, a, a.level() < lvl)?;
                f.write_str(op)?;
                paren(f, b, b.level() <= lvl)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, parse_schema};

    fn cm(pairs: &[(&str, Chain)]) -> BTreeMap<Arc<str>, Chain> {
        pairs.iter().map(|(k, c)| (Arc::from(*k), *c)).collect()
    }

    fn fm(pairs: &[(&str, &str)], n: u8) -> BTreeMap<Arc<str>, Formula> {
        pairs
            .iter()
            .map(|(k, f)| (Arc::from(*k), parse(f, n).unwrap()))
            .collect()
    }

    #[test]
    fn substitute_examples() {
        let a1 = parse_schema("phi -> psi -> phi").unwrap();
        let f = substitute(&a1, &fm(&[("phi", "p"), ("psi", "q")], 2), &BTreeMap::new(), 2).unwrap();
        assert_eq!(f, parse("p -> (q -> p)", 2).unwrap());

        let a7 = parse_schema("bot[k] -> bot[r]").unwrap();
        let c = |raw: &[u32]| Chain::canonical(raw, 2).unwrap();
        let f = substitute(&a7, &BTreeMap::new(), &cm(&[("k", c(&[1, 2])), ("r", c(&[1]))]), 2).unwrap();
        assert_eq!(f, parse("bot{1,2} -> bot{1}", 2).unwrap());

        let a5 = parse_schema("~[k] ~[r] phi <-> ~[k ^ r] phi").unwrap();
        let f = substitute(&a5, &fm(&[("phi", "p")], 2), &cm(&[("k", c(&[1])), ("r", c(&[2]))]), 2)
            .unwrap();
        assert_eq!(f, parse("~{1} ~{2} p <-> ~{1,2} p", 2).unwrap());
    }

    #[test]
    fn unbound() {
        let s = parse_schema("~[k] phi").unwrap();
        assert_eq!(
            substitute(&s, &BTreeMap::new(), &BTreeMap::new(), 2),
            Err(SubstError::UnboundMetavariable("k".into()))
        );
        let cmap = cm(&[("k", Chain::full(2))]);
        assert_eq!(
            substitute(&s, &BTreeMap::new(), &cmap, 2),
            Err(SubstError::UnboundMetavariable("phi".into()))
        );
    }

    #[test]
    fn display_round_trip() {
        for text in [
            "~[k] phi -> ~[s] psi -> ~[s ^ (k & s)] (phi -> psi)",
            "~ ~[k] phi <-> ~[k'] phi",
            "bot[k] -> bot -> top",
            "(phi -> psi) -> phi & ~{1} psi",
        ] {
            let s = parse_schema(text).unwrap();
            assert_eq!(parse_schema(&s.to_string()).unwrap(), s, "{text}");
        }
    }
}
