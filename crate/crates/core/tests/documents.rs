use qehrhart_core::algebra::{QRat, ZPoly};
use qehrhart_core::corpus::exc;
use qehrhart_core::ehrhart::qehrhart_series;
use qehrhart_core::error::{DocumentError, GeometryError, PosetError};
use qehrhart_core::io::{parse_polytope_document, parse_poset_document, qrat_json, series_json, value_json, PolytopeDocument};

#[test]
fn polytope_documents() {
    let (q, lam) = parse_polytope_document(r#"{"dim": 1, "vertices": [[0], [1]], "lambda": [1]}"#).unwrap();
    assert_eq!(q.vertices(), &[vec![0], vec![1]]);
    assert_eq!(lam.coefficients(), &[1]);
    let err = parse_polytope_document(r#"{"dim": 2, "vertices": [[0, 0]], "lambda": [1]}"#).unwrap_err();
    assert!(matches!(err, DocumentError::Geometry(GeometryError::FormDimension { expected: 2, found: 1 })));
    let err = parse_polytope_document(r#"{"dim": 1, "vertices": [[0]], "lambda": [1], "extra": 0}"#).unwrap_err();
    assert!(matches!(err, DocumentError::Json(_)));
    let err = parse_polytope_document(r#"{"dim": 1, "vertices": [[0.5]], "lambda": [1]}"#).unwrap_err();
    assert!(matches!(err, DocumentError::Json(_)));
    let doc: PolytopeDocument = serde_json::from_str(r#"{"dim": 2, "vertices": [[0, 0], [1]], "lambda": [1, 1]}"#).unwrap();
    assert!(matches!(doc.build(), Err(GeometryError::DimensionMismatch { index: 1, .. })));
}

#[test]
fn poset_documents() {
    let p = parse_poset_document(r#"{"size": 4, "covers": [[0, 1], [0, 2], [0, 3]]}"#).unwrap();
    assert_eq!(p.covers(), vec![(0, 1), (0, 2), (0, 3)]);
    let err = parse_poset_document(r#"{"size": 2, "covers": [[0, 1], [1, 0]]}"#).unwrap_err();
    assert!(matches!(err, DocumentError::Poset(PosetError::Cycle(_))));
    let err = parse_poset_document(r#"{"size": 2, "covers": [[0, 2]]}"#).unwrap_err();
    assert!(matches!(err, DocumentError::Poset(PosetError::OutOfRange(2))));
}

#[test]
fn json_renderings() {
    let c = exc();
    let s = qehrhart_series(&c.polytope, &c.form).unwrap();
    let j = series_json(&s);
    assert_eq!(j["numerator"], "1 - q^3*t^2");
    assert_eq!(j["denominator_exponents"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(j["coefficients"].as_array().unwrap().len(), 3);
    assert_eq!(j["coefficients"][2], serde_json::json!({"num": "-q^3", "den": "1"}));
    let half = QRat::new(ZPoly::from_i64s(&[1]), ZPoly::from_i64s(&[1, 1]));
    assert_eq!(qrat_json(&half), serde_json::json!({"num": "1", "den": "q + 1"}));
    assert_eq!(value_json(&half)["value"], "( 1 ) / ( q + 1 )");
}
