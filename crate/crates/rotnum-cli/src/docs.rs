//! Input and output documents.
//!
//! The structured loop format is a JSON object with an optional `name` and a
//! `vertices` array of integer pairs:
//!
//! ```json
//! { "name": "square", "vertices": [[1, 0], [0, 1], [-1, 0], [0, -1]] }
//! ```
//!
//! The plain format is one `x y` pair per line; blank lines and `#` comments
//! are ignored. Integers of any size round-trip losslessly: they serialize
//! as plain JSON numbers, rationals as `"p/q"` strings in lowest terms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use rotnum::{
    analyze_loop, refine_loop, rotation_formula, winding_number_exact, winding_number_float,
    Int, LatticeVector, Rat, VectorLoop, VertexOrigin,
};

/// Arbitrary-precision integer that serializes as a bare JSON number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub Int);

impl From<Int> for JsonInt {
    fn from(n: Int) -> JsonInt {
        JsonInt(n)
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let number: serde_json::Number = serde_json::from_str(&self.0.to_string())
            .map_err(serde::ser::Error::custom)?;
        number.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let number = serde_json::Number::deserialize(deserializer)?;
        let value = Int::from_str(&number.to_string())
            .map_err(|_| serde::de::Error::custom(format!("expected an integer, got {number}")))?;
        Ok(JsonInt(value))
    }
}

/// Exact rational that serializes as a `"p/q"` string (`"p"` for integers).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl From<Rat> for JsonRat {
    fn from(r: Rat) -> JsonRat {
        JsonRat(r)
    }
}

impl fmt::Display for JsonRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        let value = Rat::from_str(&text).map_err(serde::de::Error::custom)?;
        Ok(JsonRat(value))
    }
}

fn vertex_pairs(vs: &[LatticeVector]) -> Vec<(JsonInt, JsonInt)> {
    vs.iter()
        .map(|v| (JsonInt(v.x.clone()), JsonInt(v.y.clone())))
        .collect()
}

/// A loop as it appears on disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LoopDocument {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub vertices: Vec<(JsonInt, JsonInt)>,
}

impl LoopDocument {
    pub fn from_loop(name: Option<String>, vl: &VectorLoop) -> LoopDocument {
        LoopDocument {
            name,
            vertices: vertex_pairs(vl.vertices()),
        }
    }

    /// Validates the vertex list into a loop.
    pub fn to_loop(&self) -> Result<VectorLoop, rotnum::Error> {
        VectorLoop::new(
            self.vertices
                .iter()
                .map(|(x, y)| LatticeVector::new(x.0.clone(), y.0.clone()))
                .collect(),
        )
    }

    pub fn parse_structured(text: &str) -> Result<LoopDocument, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    /// Plain format: two whitespace-separated integers per line. Blank lines
    /// and `#` comments are skipped.
    pub fn parse_plain(text: &str) -> Result<LoopDocument, String> {
        let mut vertices = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [x, y] = fields.as_slice() else {
                return Err(format!(
                    "line {}: expected two integers, got {:?}",
                    idx + 1,
                    line
                ));
            };
            let parse = |s: &str| {
                Int::from_str(s).map_err(|_| format!("line {}: {:?} is not an integer", idx + 1, s))
            };
            vertices.push((JsonInt(parse(x)?), JsonInt(parse(y)?)));
        }
        Ok(LoopDocument {
            name: None,
            vertices,
        })
    }
}

/// One row of the per-edge analysis table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeRow {
    pub i: usize,
    pub eps: JsonInt,
    pub a: JsonRat,
    pub x: JsonInt,
    pub y: JsonInt,
    pub l: usize,
    pub terms: Vec<JsonInt>,
}

/// Provenance of one vertex of a refined loop. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OriginDoc {
    Original { vertex: usize },
    Inserted { edge: usize, insert: usize },
}

impl From<&VertexOrigin> for OriginDoc {
    fn from(origin: &VertexOrigin) -> OriginDoc {
        match origin {
            VertexOrigin::Original { vertex } => OriginDoc::Original { vertex: *vertex },
            VertexOrigin::Inserted { edge, position } => OriginDoc::Inserted {
                edge: *edge,
                insert: *position,
            },
        }
    }
}

impl fmt::Display for OriginDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OriginDoc::Original { vertex } => write!(f, "vertex {vertex}"),
            OriginDoc::Inserted { edge, insert } => write!(f, "edge {edge} insert {insert}"),
        }
    }
}

/// A refined loop: still a valid loop document, plus provenance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinedDocument {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub vertices: Vec<(JsonInt, JsonInt)>,
    pub origins: Vec<OriginDoc>,
}

impl RefinedDocument {
    pub fn build(name: Option<String>, vl: &VectorLoop) -> RefinedDocument {
        let refinement = refine_loop(vl);
        RefinedDocument {
            name: name.map(|n| format!("{n}-refined")),
            vertices: vertex_pairs(refinement.enlarged().vertices()),
            origins: refinement.origins().iter().map(OriginDoc::from).collect(),
        }
    }
}

/// Winding-number oracle values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleDocument {
    pub winding_exact: JsonInt,
    pub float_value: f64,
    pub float_rounded: JsonInt,
}

impl OracleDocument {
    pub fn build(vl: &VectorLoop) -> Result<OracleDocument, rotnum::Error> {
        let float = winding_number_float(vl)?;
        Ok(OracleDocument {
            winding_exact: JsonInt(winding_number_exact(vl)),
            float_value: float.value,
            float_rounded: JsonInt(float.rounded),
        })
    }
}

/// The full analysis report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub vertices: Vec<(JsonInt, JsonInt)>,
    pub edges: Vec<EdgeRow>,
    pub signed_term_sum: JsonInt,
    pub a_sum: JsonRat,
    pub xy_sum: JsonRat,
    pub rotation: JsonInt,
    pub hm_on_refined: JsonRat,
    pub oracle: OracleDocument,
    pub refined: RefinedDocument,
}

impl AnalysisDocument {
    pub fn build(name: Option<String>, vl: &VectorLoop) -> Result<AnalysisDocument, rotnum::Error> {
        let edges = analyze_loop(vl)
            .into_iter()
            .map(|e| EdgeRow {
                i: e.index,
                eps: JsonInt(e.epsilon.clone()),
                a: JsonRat(e.a.clone()),
                x: JsonInt(e.x.clone()),
                y: JsonInt(e.y.clone()),
                l: e.l(),
                terms: e.terms().iter().cloned().map(JsonInt).collect(),
            })
            .collect();
        let report = rotation_formula(vl);
        let oracle = OracleDocument::build(vl)?;
        Ok(AnalysisDocument {
            name: name.clone(),
            vertices: vertex_pairs(vl.vertices()),
            edges,
            signed_term_sum: JsonInt(report.signed_term_sum.clone()),
            a_sum: JsonRat(report.a_sum.clone()),
            xy_sum: JsonRat(report.xy_sum.clone()),
            rotation: JsonInt(
                report
                    .formula
                    .to_integer()
                    .expect("formula value is integral")
                    .clone(),
            ),
            hm_on_refined: JsonRat(report.hm_on_refined.clone()),
            oracle,
            refined: RefinedDocument::build(name, vl),
        })
    }
}
