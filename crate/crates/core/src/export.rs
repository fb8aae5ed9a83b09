//! JSON and DOT serializations. All rationals are written as `"p/q"` strings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::forcing::ProductAssignment;
use crate::labels::EdgeLabeling;
use crate::lattice::GtLattice;
use crate::repmat::SparseMatrix;
use crate::verify::{ConditionReport, VerificationSummary};

#[derive(Serialize)]
struct VertexRecord {
    id: usize,
    tableau: String,
    m: Vec<i64>,
}

fn vertices(lattice: &GtLattice) -> Vec<VertexRecord> {
    (0..lattice.len())
        .map(|id| VertexRecord {
            id,
            tableau: lattice.vertex(id).to_string(),
            m: lattice.m_vector(id),
        })
        .collect()
}

fn edge_json(lattice: &GtLattice, id: usize) -> serde_json::Map<String, Value> {
    let e = lattice.edge(id);
    let mut obj = serde_json::Map::new();
    obj.insert("from".into(), e.from.into());
    obj.insert("to".into(), e.to.into());
    obj.insert("color".into(), e.color.into());
    obj
}

pub fn lattice_json(lattice: &GtLattice) -> Value {
    json!({
        "shape": lattice.shape().parts(),
        "n": lattice.n(),
        "vertices": vertices(lattice),
        "edges": (0..lattice.edges().len()).map(|id| Value::Object(edge_json(lattice, id))).collect::<Vec<_>>(),
    })
}

/// Lattice JSON with `c`, `d` and `pi` added to every edge.
pub fn labeling_json(lattice: &GtLattice, labeling: &EdgeLabeling) -> Value {
    let edges: Vec<Value> = (0..lattice.edges().len())
        .map(|id| {
            let mut obj = edge_json(lattice, id);
            obj.insert("c".into(), labeling.c(id).to_string().into());
            obj.insert("d".into(), labeling.d(id).to_string().into());
            obj.insert("pi".into(), labeling.pi(id).to_string().into());
            Value::Object(obj)
        })
        .collect();
    json!({
        "shape": lattice.shape().parts(),
        "n": lattice.n(),
        "vertices": vertices(lattice),
        "edges": edges,
    })
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz digraph. Nodes are labeled by tableau, edges by color.
pub fn lattice_dot(lattice: &GtLattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph gt {{");
    let _ = writeln!(out, "  label=\"shape {} n {}\";", lattice.shape(), lattice.n());
    for v in 0..lattice.len() {
        let _ = writeln!(out, "  v{v} [label=\"{}\"];", escape(&lattice.vertex(v).to_string()));
    }
    for e in lattice.edges() {
        let _ = writeln!(out, "  v{} -> v{} [color={}, label=\"{}\"];", e.from, e.to, e.color, e.color);
    }
    out.push_str("}\n");
    out
}

pub fn matrix_json(m: &SparseMatrix) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .map(|(r, c, v)| json!([r, c, v.to_string()]))
        .collect();
    json!({ "dim": m.dim(), "entries": entries })
}

/// Forcing trace, one record per edge in edge order.
pub fn trace_json(asg: &ProductAssignment) -> Value {
    let records: Vec<Value> = (0..asg.len())
        .map(|edge| {
            let pi = asg.get(edge).map(ToString::to_string);
            let (by, witnesses) = match asg.provenance(edge) {
                Some(p) => {
                    let tag = match p {
                        crate::forcing::ForcedBy::Crossing { .. } => "crossing",
                        crate::forcing::ForcedBy::Diamond { .. } => "diamond",
                    };
                    (Some(tag), p.witnesses().to_vec())
                }
                None => (None, Vec::new()),
            };
            json!({ "edge": edge, "pi": pi, "forced_by": by, "witnesses": witnesses })
        })
        .collect();
    Value::Array(records)
}

pub fn report_json(report: &ConditionReport) -> Value {
    serde_json::to_value(report).expect("report serializes")
}

pub fn summary_json(summary: &VerificationSummary) -> Value {
    serde_json::to_value(summary).expect("summary serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::force_all;
    use crate::labels::label_all;
    use crate::lattice::build_lattice;
    use crate::repmat::matrix_x;

    fn lat(shape: &str, n: usize) -> GtLattice {
        build_lattice(&shape.parse().unwrap(), n).unwrap()
    }

    #[test]
    fn lattice_schema() {
        let l = lat("2", 2);
        let v = lattice_json(&l);
        assert_eq!(v["shape"], json!([2]));
        assert_eq!(v["n"], json!(2));
        assert_eq!(v["vertices"][0], json!({"id": 0, "tableau": "1,1", "m": [2]}));
        assert_eq!(v["edges"].as_array().unwrap().len(), 2);
        assert_eq!(v["edges"][0]["color"], json!(1));
    }

    #[test]
    fn labeling_schema() {
        let l = lat("2", 2);
        let lab = label_all(&l).unwrap();
        let v = labeling_json(&l, &lab);
        for e in v["edges"].as_array().unwrap() {
            assert_eq!(e["pi"], json!("2"));
            assert!(e["c"].is_string() && e["d"].is_string());
        }
    }

    #[test]
    fn dot_is_deterministic() {
        let a = lattice_dot(&lat("2,1", 3));
        let b = lattice_dot(&lat("2,1", 3));
        assert_eq!(a, b);
        assert!(a.starts_with("digraph"));
        assert_eq!(a.matches("->").count(), lat("2,1", 3).edges().len());
        assert!(a.contains("color=2"));
    }

    #[test]
    fn matrix_schema() {
        let l = lat("2", 2);
        let lab = label_all(&l).unwrap();
        let v = matrix_json(&matrix_x(&l, &lab, 1));
        assert_eq!(v, json!({"dim": 3, "entries": [[0, 1, "1"], [1, 2, "2"]]}));
    }

    #[test]
    fn trace_schema() {
        let l = lat("2,1", 3);
        let v = trace_json(&force_all(&l).unwrap());
        let records = v.as_array().unwrap();
        assert_eq!(records.len(), l.edges().len());
        for r in records {
            assert!(r["pi"].is_string());
            let by = r["forced_by"].as_str().unwrap();
            assert!(by == "crossing" || by == "diamond");
            if by == "diamond" {
                assert_eq!(r["witnesses"].as_array().unwrap().len(), 3);
            }
        }
    }
}
