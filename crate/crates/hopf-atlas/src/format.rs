//! Canonical JSON text for field elements, algebras, witnesses and traces.
//!
//! Objects carry their keys in sorted order; a top-level array is written one
//! element per line, everything below that compactly. Algebra tensors are
//! listed sorted by index tuple with zero entries omitted, so two equal
//! algebras serialize to identical bytes.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::hopf::{FinHopf, Metadata, Representation, SparseVec};
use crate::iso::IsoWitness;
use crate::linalg::Vector;
use crate::scalars::{euler_phi, format_rational, parse_rational, Field, FieldElem};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad field {field:?}: {msg}")]
    Field { field: String, msg: String },
}

fn bad(field: &str, msg: impl Into<String>) -> FormatError {
    FormatError::Field { field: field.to_string(), msg: msg.into() }
}

pub fn elem_to_json(x: &FieldElem) -> Value {
    json!({ "N": x.order(), "coords": x.coords().iter().map(format_rational).collect::<Vec<_>>() })
}

pub fn elem_from_json(v: &Value, field: &Field) -> Result<FieldElem, FormatError> {
    let n = v.get("N").and_then(Value::as_u64).ok_or_else(|| bad("N", "missing cyclotomic order"))? as u32;
    let coords = v.get("coords").and_then(Value::as_array).ok_or_else(|| bad("coords", "missing"))?;
    if n == 0 || coords.len() != euler_phi(n) {
        return Err(bad("coords", format!("expected φ({n}) coordinates, found {}", coords.len())));
    }
    let mut rs = Vec::with_capacity(coords.len());
    for c in coords {
        let s = c.as_str().ok_or_else(|| bad("coords", "coordinates are strings"))?;
        rs.push(parse_rational(s).map_err(|e| bad("coords", e.to_string()))?);
    }
    let own = if n == field.order() { field.clone() } else { Field::try_new(n).map_err(|e| bad("N", e.to_string()))? };
    let x = own.from_coords(rs).map_err(|e| bad("coords", e.to_string()))?;
    if own.order() == field.order() {
        Ok(x)
    } else if field.order() % n == 0 {
        Ok(x.embed_into(field))
    } else {
        Err(bad("N", format!("coefficient over N={n} does not embed in N={}", field.order())))
    }
}

fn vec_to_json(v: &[FieldElem]) -> Value {
    Value::Array(v.iter().map(elem_to_json).collect())
}

fn vec_from_json(v: &Value, field: &Field, n: usize, what: &str) -> Result<Vector, FormatError> {
    let arr = v.as_array().ok_or_else(|| bad(what, "expected a coefficient list"))?;
    if arr.len() != n {
        return Err(bad(what, format!("expected {n} coefficients, found {}", arr.len())));
    }
    arr.iter().map(|c| elem_from_json(c, field)).collect()
}

fn as_index(v: &Value, what: &str, bound: usize) -> Result<usize, FormatError> {
    let i = v.as_u64().ok_or_else(|| bad(what, "expected an index"))? as usize;
    if i >= bound {
        return Err(bad(what, format!("index {i} out of range {bound}")));
    }
    Ok(i)
}

/// Writes `v` canonically (see module docs).
pub fn emit(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let mut out = String::from("{\n");
            let last = map.len().saturating_sub(1);
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&format!("  {}: ", Value::String(k.clone())));
                match val {
                    Value::Array(items) if !items.is_empty() => {
                        out.push_str("[\n");
                        for (j, item) in items.iter().enumerate() {
                            out.push_str("    ");
                            out.push_str(&item.to_string());
                            if j + 1 < items.len() {
                                out.push(',');
                            }
                            out.push('\n');
                        }
                        out.push_str("  ]");
                    }
                    other => out.push_str(&other.to_string()),
                }
                if i < last {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str("}\n");
            out
        }
        other => format!("{other}\n"),
    }
}

fn sparse3(rows: &[SparseVec], n: usize, split: bool) -> Value {
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut row = row.clone();
        row.sort_by_key(|(k, _)| *k);
        for (k, c) in row {
            if c.is_zero() {
                continue;
            }
            if split {
                out.push(json!([i, k / n, k % n, elem_to_json(&c)]));
            } else {
                out.push(json!([i, k, elem_to_json(&c)]));
            }
        }
    }
    Value::Array(out)
}

fn mult_json(h: &FinHopf) -> Value {
    let n = h.dim;
    let mut out = Vec::new();
    for (p, row) in h.mult.iter().enumerate() {
        let mut row = row.clone();
        row.sort_by_key(|(k, _)| *k);
        for (k, c) in row {
            if !c.is_zero() {
                out.push(json!([p / n, p % n, k, elem_to_json(&c)]));
            }
        }
    }
    Value::Array(out)
}

fn metadata_json(md: &Metadata) -> Value {
    let mut m = Map::new();
    m.insert("grouplikes".into(), Value::Array(md.claimed_grouplikes.iter().map(|v| vec_to_json(v)).collect()));
    m.insert(
        "generators".into(),
        Value::Array(
            md.claimed_generators.iter().map(|(n, v)| json!({"name": n, "vector": vec_to_json(v)})).collect(),
        ),
    );
    m.insert("monomials".into(), json!(md.monomials));
    m.insert(
        "matrix_bases".into(),
        Value::Array(
            md.claimed_matrix_bases
                .iter()
                .map(|mb| Value::Array(mb.iter().map(|row| Value::Array(row.iter().map(|v| vec_to_json(v)).collect())).collect()))
                .collect(),
        ),
    );
    m.insert(
        "representations".into(),
        Value::Array(
            md.representations
                .iter()
                .map(|r| {
                    let images: Vec<Value> = r
                        .images
                        .iter()
                        .map(|mtx| Value::Array(mtx.iter().map(|row| vec_to_json(row)).collect()))
                        .collect();
                    json!({"dim": r.dim, "images": images})
                })
                .collect(),
        ),
    );
    Value::Object(m)
}

pub fn algebra_to_value(h: &FinHopf) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(h.name));
    m.insert("dim".into(), json!(h.dim));
    m.insert("N".into(), json!(h.field.order()));
    m.insert("mult".into(), mult_json(h));
    m.insert("unit".into(), vec_to_json(&h.unit));
    m.insert("comult".into(), sparse3(&h.comult, h.dim, true));
    m.insert("counit".into(), vec_to_json(&h.counit));
    m.insert("antipode".into(), sparse3(&h.antipode, h.dim, false));
    m.insert("metadata".into(), metadata_json(&h.metadata));
    Value::Object(m)
}

pub fn algebra_to_string(h: &FinHopf) -> String {
    emit(&algebra_to_value(h))
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value, FormatError> {
    v.get(key).ok_or_else(|| bad(key, "missing"))
}

fn get_array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>, FormatError> {
    get(v, key)?.as_array().ok_or_else(|| bad(key, "expected an array"))
}

fn metadata_from(v: &Value, f: &Field, n: usize) -> Result<Metadata, FormatError> {
    let mut md = Metadata::default();
    for g in get_array(v, "grouplikes")? {
        md.claimed_grouplikes.push(vec_from_json(g, f, n, "grouplikes")?);
    }
    for g in get_array(v, "generators")? {
        let name = get(g, "name")?.as_str().ok_or_else(|| bad("name", "expected a string"))?.to_string();
        md.claimed_generators.push((name, vec_from_json(get(g, "vector")?, f, n, "generators")?));
    }
    let gens = md.claimed_generators.len();
    for w in get_array(v, "monomials")? {
        let w = w.as_array().ok_or_else(|| bad("monomials", "expected words"))?;
        md.monomials.push(w.iter().map(|x| as_index(x, "monomials", gens)).collect::<Result<_, _>>()?);
    }
    for mb in get_array(v, "matrix_bases")? {
        let rows = mb.as_array().ok_or_else(|| bad("matrix_bases", "expected rows"))?;
        let mut out = Vec::new();
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("matrix_bases", "expected a row"))?;
            out.push(row.iter().map(|x| vec_from_json(x, f, n, "matrix_bases")).collect::<Result<Vec<_>, _>>()?);
        }
        md.claimed_matrix_bases.push(out);
    }
    for r in get_array(v, "representations")? {
        let d = get(r, "dim")?.as_u64().ok_or_else(|| bad("dim", "expected an integer"))? as usize;
        let mut images = Vec::new();
        for mtx in get_array(r, "images")? {
            let rows = mtx.as_array().ok_or_else(|| bad("images", "expected rows"))?;
            images.push(rows.iter().map(|row| vec_from_json(row, f, d, "images")).collect::<Result<Vec<_>, _>>()?);
        }
        if images.len() != n || images.iter().any(|m| m.len() != d) {
            return Err(bad("representations", "wrong shape"));
        }
        md.representations.push(Representation { dim: d, images });
    }
    Ok(md)
}

pub fn algebra_from_value(v: &Value) -> Result<FinHopf, FormatError> {
    let name = get(v, "name")?.as_str().ok_or_else(|| bad("name", "expected a string"))?.to_string();
    let n = get(v, "dim")?.as_u64().ok_or_else(|| bad("dim", "expected an integer"))? as usize;
    if n == 0 {
        return Err(bad("dim", "must be positive"));
    }
    let order = get(v, "N")?.as_u64().ok_or_else(|| bad("N", "expected an integer"))? as u32;
    let f = Field::try_new(order).map_err(|e| bad("N", e.to_string()))?;
    let mut mult = vec![SparseVec::new(); n * n];
    for e in get_array(v, "mult")? {
        let e = e.as_array().filter(|e| e.len() == 4).ok_or_else(|| bad("mult", "entries are [i,j,k,c]"))?;
        let (i, j, k) = (as_index(&e[0], "mult", n)?, as_index(&e[1], "mult", n)?, as_index(&e[2], "mult", n)?);
        mult[i * n + j].push((k, elem_from_json(&e[3], &f)?));
    }
    let mut comult = vec![SparseVec::new(); n];
    for e in get_array(v, "comult")? {
        let e = e.as_array().filter(|e| e.len() == 4).ok_or_else(|| bad("comult", "entries are [i,j,k,c]"))?;
        let (i, j, k) = (as_index(&e[0], "comult", n)?, as_index(&e[1], "comult", n)?, as_index(&e[2], "comult", n)?);
        comult[i].push((j * n + k, elem_from_json(&e[3], &f)?));
    }
    let mut antipode = vec![SparseVec::new(); n];
    for e in get_array(v, "antipode")? {
        let e = e.as_array().filter(|e| e.len() == 3).ok_or_else(|| bad("antipode", "entries are [i,j,c]"))?;
        let (i, j) = (as_index(&e[0], "antipode", n)?, as_index(&e[1], "antipode", n)?);
        antipode[i].push((j, elem_from_json(&e[2], &f)?));
    }
    for rows in [&mut mult, &mut comult, &mut antipode] {
        for r in rows.iter_mut() {
            r.sort_by_key(|(k, _)| *k);
            if r.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(bad("tensor", "duplicate index tuple"));
            }
        }
    }
    let h = FinHopf {
        name,
        dim: n,
        field: f.clone(),
        mult,
        unit: vec_from_json(get(v, "unit")?, &f, n, "unit")?,
        comult,
        counit: vec_from_json(get(v, "counit")?, &f, n, "counit")?,
        antipode,
        metadata: metadata_from(get(v, "metadata")?, &f, n)?,
    };
    h.check_shapes().map_err(|e| bad("shape", e.to_string()))?;
    Ok(h)
}

pub fn algebra_from_str(s: &str) -> Result<FinHopf, FormatError> {
    algebra_from_value(&serde_json::from_str(s)?)
}

pub fn witness_to_value(w: &IsoWitness) -> Value {
    let mut m = Map::new();
    m.insert("source".into(), json!(w.source));
    m.insert("target".into(), json!(w.target));
    m.insert("N".into(), json!(w.field_order));
    m.insert(
        "generator_images".into(),
        Value::Array(w.generator_images.iter().map(|(n, v)| json!({"name": n, "image": vec_to_json(v)})).collect()),
    );
    Value::Object(m)
}

pub fn witness_to_string(w: &IsoWitness) -> String {
    emit(&witness_to_value(w))
}

pub fn witness_from_value(v: &Value) -> Result<IsoWitness, FormatError> {
    let s = |k: &str| -> Result<String, FormatError> {
        Ok(get(v, k)?.as_str().ok_or_else(|| bad(k, "expected a string"))?.to_string())
    };
    let order = get(v, "N")?.as_u64().ok_or_else(|| bad("N", "expected an integer"))? as u32;
    let f = Field::try_new(order).map_err(|e| bad("N", e.to_string()))?;
    let mut images = Vec::new();
    for g in get_array(v, "generator_images")? {
        let name = get(g, "name")?.as_str().ok_or_else(|| bad("name", "expected a string"))?.to_string();
        let arr = get(g, "image")?.as_array().ok_or_else(|| bad("image", "expected coefficients"))?;
        let img = arr.iter().map(|c| elem_from_json(c, &f)).collect::<Result<Vec<_>, _>>()?;
        images.push((name, img));
    }
    Ok(IsoWitness { source: s("source")?, target: s("target")?, field_order: order, generator_images: images })
}

pub fn witness_from_str(s: &str) -> Result<IsoWitness, FormatError> {
    witness_from_value(&serde_json::from_str(s)?)
}

/// A list of witnesses as one JSON array.
pub fn witnesses_to_string(ws: &[IsoWitness]) -> String {
    let items: Vec<String> = ws.iter().map(|w| witness_to_value(w).to_string()).collect();
    format!("[\n{}\n]\n", items.join(",\n"))
}

pub fn witnesses_from_str(s: &str) -> Result<Vec<IsoWitness>, FormatError> {
    let v: Value = serde_json::from_str(s)?;
    v.as_array().ok_or_else(|| bad("witnesses", "expected an array"))?.iter().map(witness_from_value).collect()
}
