//! JSON file formats. Rationals are strings `"p/q"` or `"p"`; plain JSON
//! integers are accepted on input.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use assoc_core::exact::{format_rational, parse_rational, Polytope, Rational, RationalVector};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    pub fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Number::Int(i) => Ok(Rational::from_integer((*i).into())),
            Number::Text(s) => parse_rational(s)
                .ok_or_else(|| CliError::Input(format!("not a rational number: {s:?}"))),
        }
    }
}

/// `{"points": [["0", "0"], ["1", "0"], ...]}`, counterclockwise.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub points: Vec<Vec<Number>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FacetRecord {
    pub normal: Vec<Number>,
    pub offset: Number,
    /// Indices into the vertex list.
    pub vertices: Vec<usize>,
}

/// Vertices, primitive outer normals, offsets and incidences. Only the
/// vertices are read back; facets are recomputed.
#[derive(Debug, Serialize, Deserialize)]
pub struct PolytopeFile {
    #[serde(default)]
    pub ambient_dim: Option<usize>,
    #[serde(default)]
    pub intrinsic_dim: Option<usize>,
    pub vertices: Vec<Vec<Number>>,
    #[serde(default)]
    pub facets: Vec<FacetRecord>,
}

/// `{"n": 2, "values": {"1,2": "3/2", ...}}`: cluster `f` or Minkowski
/// `alpha`, keyed by index pair.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    #[serde(default)]
    pub n: Option<usize>,
    pub values: BTreeMap<String, Number>,
}

pub fn text(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn vector(v: &RationalVector) -> Value {
    Value::Array(v.iter().map(text).collect())
}

fn number(r: &Rational) -> Number {
    Number::Text(format_rational(r))
}

pub fn polytope_file(p: &Polytope) -> PolytopeFile {
    PolytopeFile {
        ambient_dim: Some(p.ambient_dim),
        intrinsic_dim: Some(p.intrinsic_dim),
        vertices: p.vertices.iter().map(|v| v.iter().map(number).collect()).collect(),
        facets: p
            .facets
            .iter()
            .map(|f| FacetRecord {
                normal: f.normal.iter().map(number).collect(),
                offset: number(&f.offset),
                vertices: f.vertices.clone(),
            })
            .collect(),
    }
}

pub fn rational_rows(rows: &[Vec<Number>]) -> Result<Vec<RationalVector>, CliError> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(Number::to_rational)
                .collect::<Result<Vec<_>, _>>()
                .map(RationalVector::new)
        })
        .collect()
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let data = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&data)
        .map_err(|e| CliError::Input(format!("malformed {}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut s = serde_json::to_string_pretty(value).expect("plain data");
    s.push('\n');
    fs::write(path, s).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

/// Parses `"i,j"` keys into index pairs.
pub fn pair_values(values: &BTreeMap<String, Number>) -> Result<BTreeMap<(usize, usize), Rational>, CliError> {
    values
        .iter()
        .map(|(key, v)| {
            let bad = || CliError::Input(format!("bad index pair {key:?}, expected \"i,j\""));
            let (i, j) = key.split_once(',').ok_or_else(bad)?;
            let i = i.trim().parse().map_err(|_| bad())?;
            let j = j.trim().parse().map_err(|_| bad())?;
            Ok(((i, j), v.to_rational()?))
        })
        .collect()
}
