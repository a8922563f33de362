//! JSON and plain-text rendering of a classification.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::classify::Classification;
use crate::pauli::{format_pauli, Style};
use crate::shape::Family;

fn big(n: &BigUint) -> Value {
    serde_json::from_str(&n.to_string()).expect("decimal digits form a JSON number")
}

pub fn to_json(c: &Classification) -> Value {
    let ranges = c.trace_ranges();
    let components: Vec<Value> = c
        .components
        .iter()
        .zip(ranges)
        .map(|(comp, (a, b))| {
            let mut m = Map::new();
            match comp.form {
                Some(f) => {
                    m.insert("family".into(), json!(f.shape.family.to_string()));
                    m.insert("dependent".into(), json!(f.dependent));
                    if f.shape.family == Family::A {
                        m.insert("n_L".into(), json!(f.shape.n_l));
                    } else {
                        m.insert("n_2".into(), json!(f.shape.n_2));
                    }
                }
                None => {
                    m.insert("family".into(), json!("isolated"));
                    m.insert("dependent".into(), json!(false));
                }
            }
            m.insert("n_c".into(), json!(comp.n_c));
            let alg = &comp.algebra;
            m.insert(
                "algebra".into(),
                json!({
                    "name": alg.name,
                    "rank": big(&alg.rank),
                    "block_count": big(&alg.block_count),
                    "block_dim": big(&alg.block_dim),
                    "total_dim": big(&alg.total_dim),
                }),
            );
            m.insert("min_qubits".into(), json!(comp.min_qubits));
            let labels: Vec<String> = comp.labels.iter().map(|p| format_pauli(p, Style::Sparse)).collect();
            m.insert("canonical_labels".into(), json!(labels));
            m.insert("trace_ref".into(), json!(format!("{a}..{b}")));
            Value::Object(m)
        })
        .collect();
    let z = &c.center;
    let per: Vec<Value> = z.per_component.iter().map(|&(n_c, n_s)| json!({ "n_c": n_c, "n_s": n_s })).collect();
    let rows: Vec<String> = z.matrix.rows().iter().map(ToString::to_string).collect();
    json!({
        "components": components,
        "center": { "n_z": z.n_z, "n_z_bar": z.n_z_bar, "per_component": per, "M": rows },
        "total_dimension": big(&c.total_dimension),
        "universal": c.is_universal(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string(c: &Classification) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(c)).expect("values serialize");
    s.push('\n');
    s
}

pub fn trace_text(c: &Classification) -> String {
    c.trace_lines().iter().map(|l| format!("{l}\n")).collect()
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn to_text(c: &Classification) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "qubits: {}", c.n_qubits);
    let _ = writeln!(out, "components: {}", c.components.len());
    for (i, comp) in c.components.iter().enumerate() {
        let kind = match comp.form {
            Some(f) => f.to_string(),
            None => "isolated".into(),
        };
        let _ = writeln!(out, "[{i}] {kind}: {}, min qubits {}", comp.algebra, comp.min_qubits);
        let _ = writeln!(out, "    generators: {}", join(&comp.generators));
        if !comp.removed.is_empty() {
            let _ = writeln!(out, "    redundant: {}", join(&comp.removed));
        }
        let labels: Vec<String> = comp.labels.iter().map(|p| format_pauli(p, Style::Sparse)).collect();
        let _ = writeln!(out, "    labels: {}", labels.join(", "));
        if !comp.log.is_empty() {
            let _ = writeln!(out, "    contractions: {}", comp.log.len());
        }
    }
    let z = &c.center;
    let _ = writeln!(out, "center: n_z={} n_z_bar={}", z.n_z, z.n_z_bar);
    for row in z.matrix.rows() {
        let _ = writeln!(out, "    {row}");
    }
    let _ = writeln!(out, "total dimension: {}", c.total_dimension);
    let _ = writeln!(out, "universal: {}", if c.is_universal() { "yes" } else { "no" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::pauli::parse_pauli;

    #[test]
    fn json_shape() {
        let ps: Vec<_> = ["X0", "Z0"].iter().map(|s| parse_pauli(s, None).unwrap()).collect();
        let c = classify(&ps).unwrap();
        let text = to_json_string(&c);
        let keys: Vec<&str> = ["components", "center", "total_dimension", "universal"].to_vec();
        let v = to_json(&c);
        assert_eq!(v.as_object().unwrap().keys().map(String::as_str).collect::<Vec<_>>(), keys);
        let comp = &v["components"][0];
        let order: Vec<&str> = comp.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            order,
            ["family", "dependent", "n_L", "n_c", "algebra", "min_qubits", "canonical_labels", "trace_ref"]
        );
        assert_eq!(comp["algebra"]["name"], "so(3)");
        assert!(text.contains("\"total_dimension\": 3"));
        assert!(to_text(&c).contains("universal: yes"));
    }

    #[test]
    fn big_numbers_stay_exact() {
        let n = BigUint::from(1u32) << 200;
        assert_eq!(serde_json::to_string(&big(&n)).unwrap(), n.to_string());
    }
}
