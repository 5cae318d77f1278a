//! Exact JSON formats. Every number is a string `"p/q"` or `"p"`; decimals
//! and exponents are rejected.
//!
//! Point set: `{"k": 2, "points": [{"x": {"a": "1/2", "b": "0"}, "y": {"a": "0", "b": "3"}}]}`
//! where a coordinate `{"a", "b"}` means `a + b*sqrt(k)` and `b` may be
//! omitted.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::{format_rational, parse_rational, QuadExt, Rational};
use crate::error::{Error, Result};
use crate::huff::HuffPoint;
use crate::rds::{PlanePoint, RationalDistanceSet, SimilarityTransform};
use crate::surface::{general_type_certificate, CertificateOutcome, GeneralTypeCertificate};

fn zero_string() -> String {
    "0".to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordJson {
    pub a: String,
    #[serde(default = "zero_string")]
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointJson {
    pub x: CoordJson,
    pub y: CoordJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSetJson {
    pub k: u64,
    pub points: Vec<PointJson>,
}

/// A quadratic-field value together with its radicand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadJson {
    pub a: String,
    pub b: String,
    pub k: u64,
}

pub fn quad_json(q: &QuadExt) -> QuadJson {
    QuadJson { a: format_rational(q.a()), b: format_rational(q.b()), k: q.k() }
}

fn coord_json(q: &QuadExt) -> CoordJson {
    CoordJson { a: format_rational(q.a()), b: format_rational(q.b()) }
}

fn rational_at(text: &str, context: &str) -> Result<Rational> {
    parse_rational(text).map_err(|m| Error::parse(context, m))
}

fn coord_value(c: &CoordJson, k: u64, context: &str) -> Result<QuadExt> {
    let a = rational_at(&c.a, &format!("{context}.a"))?;
    let b = rational_at(&c.b, &format!("{context}.b"))?;
    QuadExt::new(a, b, k).map_err(|e| Error::parse(context, e.to_string()))
}

/// Parses point-set JSON. `source` names the input in error messages.
pub fn parse_set_str(text: &str, source: &str) -> Result<RationalDistanceSet> {
    let raw: PointSetJson = serde_json::from_str(text).map_err(|e| Error::parse(source, e.to_string()))?;
    let mut points = Vec::with_capacity(raw.points.len());
    for (n, p) in raw.points.iter().enumerate() {
        let ctx = format!("{source}: points[{n}]");
        let x = coord_value(&p.x, raw.k, &format!("{ctx}.x"))?;
        let y = coord_value(&p.y, raw.k, &format!("{ctx}.y"))?;
        points.push(PlanePoint::new(x, y).map_err(|e| Error::parse(&ctx, e.to_string()))?);
    }
    RationalDistanceSet::new(points, raw.k).map_err(|e| Error::parse(source, e.to_string()))
}

/// Reads a point-set file without verifying distances.
pub fn parse_set_file(path: &Path) -> Result<RationalDistanceSet> {
    let text = read_file(path)?;
    parse_set_str(&text, &path.display().to_string())
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}

pub fn set_json(points: &[PlanePoint], k: u64) -> PointSetJson {
    PointSetJson {
        k,
        points: points.iter().map(|p| PointJson { x: coord_json(p.x()), y: coord_json(p.y()) }).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformJson {
    pub matrix: [[QuadJson; 2]; 2],
    pub translation: [QuadJson; 2],
}

pub fn transform_json(t: &SimilarityTransform) -> TransformJson {
    let m = &t.matrix;
    TransformJson {
        matrix: [
            [quad_json(&m[0][0]), quad_json(&m[0][1])],
            [quad_json(&m[1][0]), quad_json(&m[1][1])],
        ],
        translation: [quad_json(&t.translation[0]), quad_json(&t.translation[1])],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuffPointJson {
    pub x: String,
    pub u: String,
    pub v: String,
}

pub fn huff_point_json(p: &HuffPoint) -> HuffPointJson {
    HuffPointJson { x: format_rational(&p.x), u: format_rational(&p.u), v: format_rational(&p.v) }
}

/// Hex SHA-256 of raw input bytes.
pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// A certificate as stored on disk: the checked facts, the points they
/// were computed from and the hash of the input file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub input_sha256: String,
    pub points: PointSetJson,
    pub certificate: GeneralTypeCertificate,
}

pub fn certificate_file(input: &[u8], set: &RationalDistanceSet, cert: GeneralTypeCertificate) -> CertificateFile {
    CertificateFile {
        input_sha256: sha256_hex(input),
        points: set_json(set.points(), set.k()),
        certificate: cert,
    }
}

/// Parses a stored certificate and recomputes every field from the
/// embedded points. When `input` is given its hash must match too.
pub fn load_certificate(text: &str, input: Option<&[u8]>) -> Result<GeneralTypeCertificate> {
    let file: CertificateFile =
        serde_json::from_str(text).map_err(|e| Error::parse("certificate", e.to_string()))?;
    if let Some(bytes) = input {
        if sha256_hex(bytes) != file.input_sha256 {
            return Err(Error::integrity("input hash does not match the certificate"));
        }
    }
    let points_text = serde_json::to_string(&file.points).expect("serializable");
    let set = parse_set_str(&points_text, "certificate.points")?;
    match general_type_certificate(set.points())? {
        CertificateOutcome::Issued(fresh) if fresh == file.certificate => Ok(fresh),
        CertificateOutcome::Issued(_) => Err(Error::integrity("certificate fields do not match a fresh computation")),
        CertificateOutcome::Rejected(r) => Err(Error::integrity(format!("certified points are rejected: {r}"))),
    }
}

/// Point list for the n-dimensional construction:
/// `{"points": [["1/2", "0", "3"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointListJson {
    pub points: Vec<Vec<String>>,
}

pub fn parse_point_list(text: &str, source: &str, dim: usize) -> Result<Vec<Vec<Rational>>> {
    let raw: PointListJson = serde_json::from_str(text).map_err(|e| Error::parse(source, e.to_string()))?;
    raw.points
        .iter()
        .enumerate()
        .map(|(n, p)| {
            if p.len() != dim {
                return Err(Error::parse(
                    format!("{source}: points[{n}]"),
                    format!("expected {dim} coordinates, found {}", p.len()),
                ));
            }
            p.iter()
                .enumerate()
                .map(|(j, c)| rational_at(c, &format!("{source}: points[{n}][{j}]")))
                .collect()
        })
        .collect()
}
