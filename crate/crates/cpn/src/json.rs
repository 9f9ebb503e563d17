//! JSON forms of valuations and verdicts.
//!
//! A valuation is a list with one record per world,
//! `[{"assign": {"p": true, ...}, "world": 1}, ...]`. Object keys come out
//! sorted.

use cpn_core::{Valuation, Verdict, VerdictKind, Witness};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JsonError {
    #[error("expected {0}")]
    Shape(&'static str),
    #[error("world {0} is missing or repeated")]
    Worlds(usize),
    #[error("atom `{0}` is not assigned in every world")]
    Ragged(String),
}

pub fn valuation_to_json(v: &Valuation) -> Value {
    let worlds = (1..=v.worlds())
        .map(|w| {
            let assign: Map<String, Value> = v
                .entries()
                .map(|(a, m)| (a.to_string(), Value::Bool(m & (1 << (w - 1)) != 0)))
                .collect();
            json!({ "world": w, "assign": assign })
        })
        .collect();
    Value::Array(worlds)
}

/// Inverse of [`valuation_to_json`]. Atoms are added in sorted order.
pub fn valuation_from_json(value: &Value) -> Result<Valuation, JsonError> {
    let records = value.as_array().ok_or(JsonError::Shape("a list of world records"))?;
    let n = records.len();
    if n == 0 || n > cpn_core::MAX_WORLDS as usize {
        return Err(JsonError::Shape("between 1 and 16 world records"));
    }
    let mut slots: Vec<Option<&Map<String, Value>>> = vec![None; n];
    for r in records {
        let world = r
            .get("world")
            .and_then(Value::as_u64)
            .ok_or(JsonError::Shape("an integer `world` field"))? as usize;
        let assign = r
            .get("assign")
            .and_then(Value::as_object)
            .ok_or(JsonError::Shape("an `assign` object"))?;
        match slots.get_mut(world.wrapping_sub(1)) {
            Some(slot @ None) => *slot = Some(assign),
            _ => return Err(JsonError::Worlds(world)),
        }
    }
    let slots: Vec<&Map<String, Value>> = slots.into_iter().map(|s| s.expect("all worlds seen")).collect();
    let mut v = Valuation::new(n as u8);
    for atom in slots[0].keys() {
        let mut mask = 0u16;
        for (i, assign) in slots.iter().enumerate() {
            match assign.get(atom).map(Value::as_bool) {
                Some(Some(true)) => mask |= 1 << i,
                Some(Some(false)) => {}
                Some(None) => return Err(JsonError::Shape("boolean truth values")),
                None => return Err(JsonError::Ragged(atom.clone())),
            }
        }
        v.set_mask(atom, mask);
    }
    if slots.iter().any(|a| a.len() != slots[0].len()) {
        let extra = slots
            .iter()
            .flat_map(|a| a.keys())
            .find(|k| !slots[0].contains_key(*k))
            .cloned()
            .unwrap_or_default();
        return Err(JsonError::Ragged(extra));
    }
    Ok(v)
}

pub fn witness_to_json(w: &Witness) -> Value {
    json!({ "world": w.world, "valuation": valuation_to_json(&w.valuation) })
}

pub fn kind_name(kind: VerdictKind) -> &'static str {
    match kind {
        VerdictKind::Tautology => "tautology",
        VerdictKind::Contradiction => "contradiction",
        VerdictKind::Neither => "neither",
    }
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    json!({
        "verdict": kind_name(v.kind),
        "witness_false": v.witness_false.as_ref().map(witness_to_json),
        "witness_true": v.witness_true.as_ref().map(witness_to_json),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_key_order() {
        let mut v = Valuation::new(2);
        v.set_mask("q", 0b01);
        v.set_mask("p", 0b10);
        let text = valuation_to_json(&v).to_string();
        assert_eq!(
            text,
            r#"[{"assign":{"p":false,"q":true},"world":1},{"assign":{"p":true,"q":false},"world":2}]"#
        );
    }

    #[test]
    fn rejects_malformed_records() {
        let bad = [
            json!({}),
            json!([]),
            json!([{"world": 2, "assign": {}}]),
            json!([{"world": 1, "assign": {"p": 1}}]),
            json!([{"world": 1, "assign": {"p": true}}, {"world": 2, "assign": {}}]),
            json!([{"world": 1, "assign": {}}, {"world": 2, "assign": {"q": true}}]),
            json!([{"world": 1, "assign": {}}, {"world": 1, "assign": {}}]),
        ];
        for b in bad {
            assert!(valuation_from_json(&b).is_err(), "{b}");
        }
    }
}
