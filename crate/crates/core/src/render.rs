//! JSON and text forms of the public objects.
//!
//! Wire formats:
//!
//! * multipartition: nested arrays, `[[2,1],[3]]`; the empty partition is
//!   `[]`;
//! * content multiset: ascending array with repetitions, `[0,1,1,2,3,3,7]`;
//! * hyperplane: `{"type":"pair","k":-1,"s":0,"t":1}` or `{"type":"N"}`;
//! * factored Schur element: `{"sign":-1,"x":0,"u":[0,-1],"xminus1":{},
//!   "binomials":{"(0,0,1)":1}}`; specialized data `{"a":0,"A":1}`;
//! * set partition: `{"blocks":[[...multipartitions...],...]}`, blocks
//!   sorted by least member index.
//!
//! Rendering is deterministic: object keys come out of ordered maps, so
//! identical inputs produce byte-identical output.

use serde_json::{json, Map, Value};

use crate::blocks::SetPartition;
use crate::combinatorics::{ChargedSymbol, ContentMultiset, MultiPartition, Partition};
use crate::hyperplanes::EssentialHyperplane;
use crate::schur::{FactoredSchurElement, SpecializedSchurData};
use crate::{Error, Result};

pub fn partition_to_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&part| json!(part)).collect())
}

pub fn multipartition_to_json(m: &MultiPartition) -> Value {
    Value::Array(m.components().iter().map(partition_to_json).collect())
}

/// Parses `[[2,1],[3]]` into a multipartition.
pub fn multipartition_from_json(value: &Value) -> Result<MultiPartition> {
    let components = value
        .as_array()
        .ok_or_else(|| Error::InvalidPartition("expected a JSON array of arrays".into()))?;
    let parsed = components
        .iter()
        .map(|component| {
            let parts = component
                .as_array()
                .ok_or_else(|| Error::InvalidPartition("component is not an array".into()))?
                .iter()
                .map(|entry| {
                    entry
                        .as_u64()
                        .and_then(|p| u32::try_from(p).ok())
                        .ok_or_else(|| {
                            Error::InvalidPartition(format!("bad part {entry}"))
                        })
                })
                .collect::<Result<Vec<u32>>>()?;
            Partition::new(parts)
        })
        .collect::<Result<Vec<Partition>>>()?;
    MultiPartition::new(parsed)
}

pub fn multipartition_from_str(text: &str) -> Result<MultiPartition> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidPartition(format!("not valid JSON: {e}")))?;
    multipartition_from_json(&value)
}

pub fn content_to_json(content: &ContentMultiset) -> Value {
    Value::Array(content.to_sorted_vec().into_iter().map(|v| json!(v)).collect())
}

pub fn symbol_to_json(symbol: &ChargedSymbol) -> Value {
    Value::Array(
        symbol
            .rows()
            .iter()
            .map(|row| Value::Array(row.entries().iter().map(|&e| json!(e)).collect()))
            .collect(),
    )
}

pub fn hyperplane_to_json(h: &EssentialHyperplane) -> Value {
    match *h {
        EssentialHyperplane::N => json!({"type": "N"}),
        EssentialHyperplane::Pair { k, s, t } => json!({"type": "pair", "k": k, "s": s, "t": t}),
    }
}

pub fn hyperplane_to_text(h: &EssentialHyperplane) -> String {
    match *h {
        EssentialHyperplane::N => "N = 0".into(),
        EssentialHyperplane::Pair { k, s, t } => format!("{k}N + M{s} - M{t} = 0"),
    }
}

pub fn factored_to_json(f: &FactoredSchurElement) -> Value {
    let mut xminus1 = Map::new();
    for (&c, &e) in f.xminus1() {
        xminus1.insert(c.to_string(), json!(e));
    }
    let mut binomials = Map::new();
    for (&(k, s, t), &e) in f.binomials() {
        binomials.insert(format!("({k},{s},{t})"), json!(e));
    }
    json!({
        "sign": f.sign(),
        "x": f.x_exponent(),
        "u": f.u_exponents(),
        "xminus1": xminus1,
        "binomials": binomials,
    })
}

pub fn specialized_to_json(data: &SpecializedSchurData) -> Value {
    json!({"a": data.q_valuation(), "A": data.q_degree()})
}

pub fn set_partition_to_json(partition: &SetPartition, universe: &[MultiPartition]) -> Value {
    debug_assert_eq!(partition.universe(), universe.len());
    let blocks = partition
        .blocks()
        .iter()
        .map(|block| {
            Value::Array(block.iter().map(|&i| multipartition_to_json(&universe[i])).collect())
        })
        .collect();
    json!({ "blocks": Value::Array(blocks) })
}

/// One block per line, each multipartition in its JSON text form.
pub fn set_partition_to_text(partition: &SetPartition, universe: &[MultiPartition]) -> String {
    let mut out = String::new();
    for (idx, block) in partition.blocks().iter().enumerate() {
        out.push_str(&format!("block {}:", idx + 1));
        for &i in block {
            out.push(' ');
            out.push_str(&universe[i].to_string());
        }
        out.push('\n');
    }
    out
}
