use bnskein::colimit::Presentation;
use bnskein::frobenius::{decode, FrobeniusAlgebra};
use bnskein::tensor::LinMap;
use bnskein_exact::{ModuleInvariants, Ring};
use serde_json::{json, Value};

/// `q` or `z`, as accepted by `--ring`.
pub fn ring_tag(ring: &Ring) -> &'static str {
    match ring {
        Ring::Rational => "q",
        Ring::Integer => "z",
        Ring::Polynomial(_) => "poly",
    }
}

/// Basis names of one tensor multi-index, joined by `⊗`; `()` for the empty tensor.
pub fn multi_index_name(alg: &FrobeniusAlgebra, index: usize, n: usize) -> String {
    if n == 0 {
        return "()".into();
    }
    decode(index, alg.rank(), n)
        .into_iter()
        .map(|i| alg.basis_names()[i].clone())
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Generator names: `vertex[label=basis,...]` for vertices carrying a tensor
/// object, `vertex#i` otherwise.
pub fn generator_names(alg: &FrobeniusAlgebra, p: &Presentation) -> Vec<String> {
    let mut out = Vec::new();
    for b in &p.blocks {
        let n = b.labels.len();
        if n > 0 && alg.rank().pow(n as u32) == b.rank {
            for i in 0..b.rank {
                let parts: Vec<String> = b
                    .labels
                    .iter()
                    .zip(decode(i, alg.rank(), n))
                    .map(|(l, e)| format!("{l}={}", alg.basis_names()[e]))
                    .collect();
                out.push(format!("{}[{}]", b.vertex, parts.join(",")));
            }
        } else {
            out.extend((0..b.rank).map(|i| format!("{}#{i}", b.vertex)));
        }
    }
    out
}

pub fn invariants_json(inv: &ModuleInvariants) -> Value {
    json!({
        "free_rank": inv.free_rank,
        "torsion": inv.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
}

pub fn presentation_report(alg: &FrobeniusAlgebra, ring: &Ring, p: &Presentation, inv: &ModuleInvariants) -> Value {
    json!({
        "ring": ring_tag(ring),
        "generators": generator_names(alg, p),
        "relation_count": p.relations.ncols(),
        "free_rank": inv.free_rank,
        "torsion": inv.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
}

/// A sparse triplet listing with rows and columns named by basis multi-indices.
pub fn linmap_report(alg: &FrobeniusAlgebra, map: &LinMap) -> Value {
    let (nd, nc) = (map.dom().len(), map.cod().len());
    let m = map.matrix();
    let entries: Vec<Value> = m
        .triplets()
        .map(|(r, c, v)| {
            json!({
                "row": multi_index_name(alg, r, nc),
                "col": multi_index_name(alg, c, nd),
                "value": v.to_string(),
            })
        })
        .collect();
    let mut out = json!({
        "ring": alg.ring().to_string(),
        "inputs": map.dom(),
        "outputs": map.cod(),
        "rows": m.nrows(),
        "cols": m.ncols(),
        "entries": entries,
    });
    if nd == 0 && nc == 0 {
        out["scalar"] = Value::String(m.get(0, 0).to_string());
    }
    out
}

/// A graded table with an optional second column and the agreement flag.
pub fn graded_table(first: &str, a: &[(u32, usize)], second: Option<(&str, &[(u32, usize)])>) -> Value {
    let rows: Vec<Value> = a
        .iter()
        .enumerate()
        .map(|(i, (d, x))| {
            let mut row = json!({ "degree": d, first: x });
            if let Some((name, b)) = second {
                row[name] = b.get(i).map_or(Value::Null, |(_, y)| json!(y));
            }
            row
        })
        .collect();
    let mut out = json!({ "table": rows });
    if let Some((_, b)) = second {
        out["agree"] = Value::Bool(a == b);
    }
    out
}
