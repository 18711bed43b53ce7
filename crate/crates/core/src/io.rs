//! JSON documents for polytopes and posets, and JSON renderings of results.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{render_qrat, render_t_numerator, render_xpoly, render::render_zpoly, QRat, SeriesTQ, XPoly};
use crate::error::{DocumentError, GeometryError};
use crate::poset::{make_poset, Poset};
use crate::polytope::{make_polytope, LatticePolytope, LinearForm};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub lambda: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
}

impl PolytopeDocument {
    pub fn build(&self) -> Result<(LatticePolytope, LinearForm), GeometryError> {
        if self.lambda.len() != self.dim {
            return Err(GeometryError::FormDimension {
                expected: self.dim,
                found: self.lambda.len(),
            });
        }
        Ok((make_polytope(self.dim, &self.vertices)?, LinearForm::new(self.lambda.clone())))
    }
}

pub fn parse_polytope_document(text: &str) -> Result<(LatticePolytope, LinearForm), DocumentError> {
    let doc: PolytopeDocument = serde_json::from_str(text)?;
    Ok(doc.build()?)
}

pub fn parse_poset_document(text: &str) -> Result<Poset, DocumentError> {
    let doc: PosetDocument = serde_json::from_str(text)?;
    Ok(make_poset(doc.size, &doc.covers)?)
}

pub fn qrat_json(r: &QRat) -> Value {
    json!({ "num": render_zpoly(r.numer(), "q"), "den": render_zpoly(r.denom(), "q") })
}

pub fn series_json(s: &SeriesTQ) -> Value {
    json!({
        "numerator": render_t_numerator(s.numerator()),
        "denominator_exponents": s.denominator_exponents(),
        "coefficients": s.numerator().iter().map(qrat_json).collect::<Vec<_>>(),
    })
}

pub fn xpoly_json(f: &XPoly) -> Value {
    json!({
        "polynomial": render_xpoly(f, "x", false),
        "coefficients": f.coeffs().iter().map(qrat_json).collect::<Vec<_>>(),
    })
}

pub fn value_json(r: &QRat) -> Value {
    json!({ "value": render_qrat(r), "num": render_zpoly(r.numer(), "q"), "den": render_zpoly(r.denom(), "q") })
}
