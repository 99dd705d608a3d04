//! Single-constant mutations of serialized structures.
//!
//! A mutation edits one rational in a structure file, or adds one missing
//! bracket constant. Mutants are expressed on the JSON form so every kind is
//! handled uniformly.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactlin::{format_rational, parse_rational, q};
use crate::format::{structure_from_value, structure_to_value, Structure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Edit {
    /// Replace the rational string at a JSON pointer.
    Replace { pointer: String, value: String },
    /// Push a row onto the array at a JSON pointer.
    Append { pointer: String, item: Value },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutation {
    pub entry: String,
    pub edit: Edit,
}

/// The committed set: mutants an independent oracle rejects, plus the count
/// of enumerated mutants the oracle accepted (equivalent mutants).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationSet {
    pub version: u32,
    pub mutations: Vec<Mutation>,
    pub equivalent: usize,
}

fn walk(v: &Value, pointer: &mut String, out: &mut Vec<Edit>) {
    match v {
        Value::String(s) => {
            if pointer.contains("/names") {
                return;
            }
            if let Ok(r) = parse_rational(s) {
                out.push(Edit::Replace { pointer: pointer.clone(), value: format_rational(&(r + q(1))) });
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                let len = pointer.len();
                pointer.push_str(&format!("/{i}"));
                walk(x, pointer, out);
                pointer.truncate(len);
            }
        }
        Value::Object(map) => {
            if let (Some(Value::Number(dim)), Some(Value::Array(rows))) = (map.get("dim"), map.get("brackets")) {
                if map.get("encoding").is_none() {
                    let n = dim.as_u64().unwrap_or(0) as usize;
                    append_missing_brackets(n, rows, &format!("{pointer}/brackets"), out);
                }
            }
            for (k, x) in map {
                let len = pointer.len();
                pointer.push('/');
                pointer.push_str(k);
                walk(x, pointer, out);
                pointer.truncate(len);
            }
        }
        _ => {}
    }
}

fn append_missing_brackets(n: usize, rows: &[Value], pointer: &str, out: &mut Vec<Edit>) {
    let present: Vec<(u64, u64, u64)> = rows
        .iter()
        .filter_map(|r| {
            let r = r.as_array()?;
            Some((r.first()?.as_u64()?, r.get(1)?.as_u64()?, r.get(2)?.as_u64()?))
        })
        .collect();
    for i in 0..n as u64 {
        for j in i + 1..n as u64 {
            for k in 0..n as u64 {
                if !present.contains(&(i, j, k)) {
                    out.push(Edit::Append { pointer: pointer.to_string(), item: serde_json::json!([i, j, k, "1"]) });
                }
            }
        }
    }
}

/// Every single-constant mutant of `s`: each stored rational plus one, and
/// each absent antisymmetric bracket constant set to one.
pub fn enumerate_mutations(entry: &str, s: &Structure) -> Vec<Mutation> {
    let value = structure_to_value(s);
    let mut edits = Vec::new();
    let mut pointer = String::from("/payload");
    walk(&value["payload"], &mut pointer, &mut edits);
    edits.into_iter().map(|edit| Mutation { entry: entry.to_string(), edit }).collect()
}

pub fn apply_edit(base: &Value, edit: &Edit) -> Result<Value> {
    let mut v = base.clone();
    match edit {
        Edit::Replace { pointer, value } => {
            let slot = v.pointer_mut(pointer).ok_or_else(|| Error::Schema(format!("no value at {pointer}")))?;
            *slot = Value::String(value.clone());
        }
        Edit::Append { pointer, item } => {
            let slot = v
                .pointer_mut(pointer)
                .and_then(Value::as_array_mut)
                .ok_or_else(|| Error::Schema(format!("no array at {pointer}")))?;
            slot.push(item.clone());
        }
    }
    Ok(v)
}

/// The mutant as a structure. Mutants that no longer decode (an asymmetric
/// form, say) come back as the decoding error.
pub fn mutate(s: &Structure, edit: &Edit) -> Result<Structure> {
    structure_from_value(apply_edit(&structure_to_value(s), edit)?)
}
