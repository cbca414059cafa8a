//! JSON document formats and the bundled design catalog.
//!
//! Documents are serialized canonically: object keys sorted, no whitespace,
//! one trailing LF. Floats use the shortest text that reads back to the same
//! binary64, so `serialize ∘ parse` is the identity on canonical text.
//!
//! | schema               | payload                                                  |
//! |----------------------|----------------------------------------------------------|
//! | `classical-design/1` | `v`, `b`, `incidence`: `v` rows of `b` naturals          |
//! | `quantum-design/1`   | `dim`, `projectors`: matrices of `[re, im]` pairs        |
//! | `cp-map/1`           | `in`, `out`: `{kind, n}`, `convention`, `matrix`         |
//! | `design-report/1`    | see [`crate::report`]                                    |

use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::classical::{gen_complete, gen_projective_plane, ClassicalDesign};
use crate::cpmaps::{example_cp_map, Algebra, CpMap};
use crate::numkit::{ComplexMatrix, NatMatrix, Tolerance};
use crate::quantum::{mub_generate, mub_verify, QuantumDesign};
use crate::report::{DesignReport, REPORT_SCHEMA};
use crate::{Error, Result};

pub const CLASSICAL_SCHEMA: &str = "classical-design/1";
pub const QUANTUM_SCHEMA: &str = "quantum-design/1";
pub const CPMAP_SCHEMA: &str = "cp-map/1";

/// Any document this crate reads or writes.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Classical(ClassicalDesign),
    Quantum(QuantumDesign),
    CpMap(CpMap),
    Report(DesignReport),
}

impl Document {
    pub fn schema(&self) -> &'static str {
        match self {
            Document::Classical(_) => CLASSICAL_SCHEMA,
            Document::Quantum(_) => QUANTUM_SCHEMA,
            Document::CpMap(_) => CPMAP_SCHEMA,
            Document::Report(_) => REPORT_SCHEMA,
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Classical(d) => classical_to_json(d),
            Document::Quantum(q) => quantum_to_json(q),
            Document::CpMap(f) => cpmap_to_json(f),
            Document::Report(r) => r.to_json(),
        }
    }
}

/// Compact JSON with sorted keys and a trailing LF.
pub fn to_canonical(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("values always serialize");
    s.push('\n');
    s
}

fn err(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Format {
        path: path.into(),
        message: message.into(),
    }
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn matrix_json(m: &ComplexMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(complex_json).collect()))
            .collect(),
    )
}

fn algebra_json(a: Algebra) -> Value {
    match a {
        Algebra::Commutative(n) => json!({"kind": "commutative", "n": n}),
        Algebra::Matrix(n) => json!({"kind": "matrix", "n": n}),
    }
}

pub fn classical_to_json(d: &ClassicalDesign) -> String {
    to_canonical(&json!({
        "schema": CLASSICAL_SCHEMA,
        "v": d.v(),
        "b": d.b(),
        "incidence": d.incidence().to_rows(),
    }))
}

pub fn quantum_to_json(q: &QuantumDesign) -> String {
    to_canonical(&json!({
        "schema": QUANTUM_SCHEMA,
        "dim": q.b(),
        "projectors": q.projectors().iter().map(matrix_json).collect::<Vec<_>>(),
    }))
}

pub fn cpmap_to_json(f: &CpMap) -> String {
    to_canonical(&json!({
        "schema": CPMAP_SCHEMA,
        "in": algebra_json(f.in_alg()),
        "out": algebra_json(f.out_alg()),
        "convention": "superoperator",
        "matrix": matrix_json(f.matrix()),
    }))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(key, "missing field"))
}

fn as_count(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| err(path, format!("expected a nonnegative integer, found {v}")))
}

fn as_array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> Result<&'a Vec<Value>> {
    let a = v
        .as_array()
        .ok_or_else(|| err(path, format!("expected an array, found {}", kind(v))))?;
    if let Some(n) = len {
        if a.len() != n {
            return Err(err(path, format!("expected {n} entries, found {}", a.len())));
        }
    }
    Ok(a)
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn parse_complex(v: &Value, path: &str) -> Result<Complex64> {
    let pair = as_array(v, path, Some(2))?;
    let part = |i: usize| {
        pair[i].as_f64().filter(|x| x.is_finite()).ok_or_else(|| {
            err(
                format!("{path}[{i}]"),
                format!("expected a finite number, found {}", pair[i]),
            )
        })
    };
    Ok(Complex64::new(part(0)?, part(1)?))
}

fn parse_matrix(v: &Value, path: &str, rows: usize, cols: usize) -> Result<ComplexMatrix> {
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in as_array(v, path, Some(rows))?.iter().enumerate() {
        let rpath = format!("{path}[{i}]");
        for (j, z) in as_array(row, &rpath, Some(cols))?.iter().enumerate() {
            data.push(parse_complex(z, &format!("{rpath}[{j}]"))?);
        }
    }
    ComplexMatrix::new(rows, cols, data)
}

fn parse_algebra(v: &Value, path: &str) -> Result<Algebra> {
    let obj = v
        .as_object()
        .ok_or_else(|| err(path, format!("expected an object, found {}", kind(v))))?;
    let n = as_count(
        obj.get("n").ok_or_else(|| err(format!("{path}.n"), "missing field"))?,
        &format!("{path}.n"),
    )?;
    if n == 0 {
        return Err(err(format!("{path}.n"), "algebra size must be at least 1"));
    }
    match obj.get("kind").and_then(Value::as_str) {
        Some("commutative") => Ok(Algebra::Commutative(n)),
        Some("matrix") => Ok(Algebra::Matrix(n)),
        _ => Err(err(format!("{path}.kind"), "expected \"commutative\" or \"matrix\"")),
    }
}

fn parse_classical(obj: &Map<String, Value>) -> Result<ClassicalDesign> {
    let v = as_count(field(obj, "v")?, "v")?;
    let b = as_count(field(obj, "b")?, "b")?;
    let mut data = Vec::with_capacity(v * b);
    for (i, row) in as_array(field(obj, "incidence")?, "incidence", Some(v))?
        .iter()
        .enumerate()
    {
        let rpath = format!("incidence[{i}]");
        for (j, x) in as_array(row, &rpath, Some(b))?.iter().enumerate() {
            data.push(
                x.as_u64()
                    .ok_or_else(|| err(format!("{rpath}[{j}]"), format!("expected a natural number, found {x}")))?,
            );
        }
    }
    ClassicalDesign::new(NatMatrix::new(v, b, data)?)
}

fn parse_quantum(obj: &Map<String, Value>) -> Result<QuantumDesign> {
    let b = as_count(field(obj, "dim")?, "dim")?;
    let projectors = as_array(field(obj, "projectors")?, "projectors", None)?
        .iter()
        .enumerate()
        .map(|(i, m)| parse_matrix(m, &format!("projectors[{i}]"), b, b))
        .collect::<Result<Vec<_>>>()?;
    QuantumDesign::new(b, projectors)
}

fn parse_cpmap(obj: &Map<String, Value>) -> Result<CpMap> {
    let in_alg = parse_algebra(field(obj, "in")?, "in")?;
    let out_alg = parse_algebra(field(obj, "out")?, "out")?;
    match field(obj, "convention")?.as_str() {
        Some("superoperator") => {}
        _ => return Err(err("convention", "expected \"superoperator\"")),
    }
    let m = parse_matrix(field(obj, "matrix")?, "matrix", out_alg.coord_dim(), in_alg.coord_dim())?;
    CpMap::new(in_alg, out_alg, m)
}

/// Parses any supported document, dispatching on its `schema` field.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| err("<document>", e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| err("<document>", format!("expected an object, found {}", kind(&value))))?;
    let schema = field(obj, "schema")?
        .as_str()
        .ok_or_else(|| err("schema", "expected a string"))?;
    match schema {
        CLASSICAL_SCHEMA => parse_classical(obj).map(Document::Classical),
        QUANTUM_SCHEMA => parse_quantum(obj).map(Document::Quantum),
        CPMAP_SCHEMA => parse_cpmap(obj).map(Document::CpMap),
        REPORT_SCHEMA => serde_json::from_value(value.clone())
            .map(Document::Report)
            .map_err(|e| err("<document>", e.to_string())),
        other => Err(Error::SchemaMismatch {
            expected: format!("one of {CLASSICAL_SCHEMA}, {QUANTUM_SCHEMA}, {CPMAP_SCHEMA}, {REPORT_SCHEMA}"),
            found: other.to_string(),
        }),
    }
}

fn mismatch(expected: &str, found: &Document) -> Error {
    Error::SchemaMismatch {
        expected: expected.to_string(),
        found: found.schema().to_string(),
    }
}

pub fn classical_from_json(text: &str) -> Result<ClassicalDesign> {
    match parse_document(text)? {
        Document::Classical(d) => Ok(d),
        other => Err(mismatch(CLASSICAL_SCHEMA, &other)),
    }
}

pub fn quantum_from_json(text: &str) -> Result<QuantumDesign> {
    match parse_document(text)? {
        Document::Quantum(q) => Ok(q),
        other => Err(mismatch(QUANTUM_SCHEMA, &other)),
    }
}

pub fn cpmap_from_json(text: &str) -> Result<CpMap> {
    match parse_document(text)? {
        Document::CpMap(f) => Ok(f),
        other => Err(mismatch(CPMAP_SCHEMA, &other)),
    }
}

/// Reads and parses a document; format errors are prefixed with the path.
pub fn load(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| err(path.display().to_string(), e.to_string()))?;
    parse_document(&text).map_err(|e| match e {
        Error::Format { path: p, message } => err(format!("{}: {p}", path.display()), message),
        other => other,
    })
}

pub fn save(path: &Path, doc: &Document) -> Result<()> {
    std::fs::write(path, doc.to_json()).map_err(|e| err(path.display().to_string(), e.to_string()))
}

/// Parameters recorded for a catalog entry.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub schema: &'static str,
    pub description: String,
    /// Expected values, keyed like the `parameters` of a report.
    pub expected: Map<String, Value>,
}

const INDEX: &str = include_str!("../catalog/index.json");

const FILES: &[(&str, &str)] = &[
    ("fano", include_str!("../catalog/fano.json")),
    ("pg2-3", include_str!("../catalog/pg2-3.json")),
    ("pg2-5", include_str!("../catalog/pg2-5.json")),
    ("complete-3-2", include_str!("../catalog/complete-3-2.json")),
    ("mub-2-2", include_str!("../catalog/mub-2-2.json")),
    ("mub-3-4", include_str!("../catalog/mub-3-4.json")),
    ("cp-example-4x4", include_str!("../catalog/cp-example-4x4.json")),
];

/// Names of all bundled entries, in catalog order.
pub fn catalog_names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

/// Bundled document text for `name`.
pub fn catalog_text(name: &str) -> Result<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
}

pub fn catalog_get(name: &str) -> Result<Document> {
    parse_document(catalog_text(name)?)
}

/// Metadata of every bundled entry.
pub fn catalog_index() -> Vec<CatalogEntry> {
    let index: Value = serde_json::from_str(INDEX).expect("bundled index is valid JSON");
    let entries = index["entries"].as_object().expect("entries object");
    FILES
        .iter()
        .map(|(name, _)| {
            let e = &entries[*name];
            let schema = match e["schema"].as_str() {
                Some(CLASSICAL_SCHEMA) => CLASSICAL_SCHEMA,
                Some(QUANTUM_SCHEMA) => QUANTUM_SCHEMA,
                _ => CPMAP_SCHEMA,
            };
            CatalogEntry {
                name,
                schema,
                description: e["description"].as_str().unwrap_or_default().to_string(),
                expected: e["expected"].as_object().cloned().unwrap_or_default(),
            }
        })
        .collect()
}

/// Rebuilds a catalog entry from the generators.
pub fn catalog_build(name: &str) -> Result<Document> {
    let tol = Tolerance::default();
    Ok(match name {
        "fano" => Document::Classical(gen_projective_plane(2)?),
        "pg2-3" => Document::Classical(gen_projective_plane(3)?),
        "pg2-5" => Document::Classical(gen_projective_plane(5)?),
        "complete-3-2" => Document::Classical(gen_complete(3, 2)?),
        "mub-2-2" => Document::Quantum(mub_verify(&mub_generate(2, 2)?, tol)?.design),
        "mub-3-4" => Document::Quantum(mub_verify(&mub_generate(3, 4)?, tol)?.design),
        "cp-example-4x4" => Document::CpMap(example_cp_map()),
        other => return Err(Error::UnknownCatalogEntry(other.to_string())),
    })
}
