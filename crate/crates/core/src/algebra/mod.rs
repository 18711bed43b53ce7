//! Exact arithmetic over `Q(q)`: integer polynomials, rational functions,
//! polynomials in `x`, series in `t`, the Hahn calculus and Carlitz
//! q-Bernoulli numbers.

pub mod bernoulli;
pub mod hahn;
pub mod qnumbers;
pub mod qrat;
pub mod render;
pub mod series;
pub mod xpoly;
pub mod zpoly;

pub use bernoulli::{carlitz_bernoulli, carlitz_bernoulli_table, umbra};
pub use hahn::{hahn_antiderivative, hahn_delta};
pub use qnumbers::{cyclotomic, qbinom, qfactorial, qint};
pub use qrat::QRat;
pub use render::{parse_qrat, parse_xpoly, render_qrat, render_t_numerator, render_xpoly};
pub use series::SeriesTQ;
pub use xpoly::XPoly;
pub use zpoly::ZPoly;

/// `f([n]_q)`
pub fn eval_at_qint(f: &XPoly, n: i64) -> QRat {
    f.eval_at_qint(n)
}

/// Lagrange/Newton interpolation over `Q(q)`.
pub fn interpolate(nodes: &[(QRat, QRat)]) -> Result<XPoly, crate::error::AlgebraError> {
    XPoly::interpolate(nodes)
}

pub fn to_y_basis(f: &XPoly) -> Vec<QRat> {
    f.to_y_basis()
}

pub fn from_y_basis(c: &[QRat]) -> XPoly {
    XPoly::from_y_basis(c)
}
