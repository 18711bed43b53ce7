//! The Hahn q-difference operator `(f(1 + qx) - f(x)) / (1 + qx - x)` and
//! its inverse on multiples of `1 + qx`.

use super::qrat::QRat;
use super::xpoly::XPoly;

/// Hahn difference of `f`; the division is always exact.
pub fn hahn_delta(f: &XPoly) -> XPoly {
    let numerator = &f.shift_qint() - f;
    let denominator = XPoly::y();
    numerator
        .div_exact(&denominator)
        .expect("f(1+qx) - f(x) vanishes at x = 1/(1-q)")
}

/// Hahn difference computed in the `y`-basis, where `y^j` maps to
/// `(q^j - 1) y^(j-1)`.
pub fn hahn_delta_y_basis(f: &XPoly) -> XPoly {
    let c = f.to_y_basis();
    let out: Vec<QRat> = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, cj)| cj * &(&QRat::q_pow(j as i64) - &QRat::one()))
        .collect();
    XPoly::from_y_basis(&out)
}

/// The unique `f` divisible by `1 + qx` with `hahn_delta(f) = g`.
pub fn hahn_antiderivative(g: &XPoly) -> XPoly {
    let c = g.to_y_basis();
    let mut lifted = vec![QRat::zero(); c.len() + 1];
    for (j, cj) in c.iter().enumerate() {
        let k = j as i64 + 1;
        lifted[j + 1] = cj / &(&QRat::q_pow(k) - &QRat::one());
    }
    let f = XPoly::from_y_basis(&lifted);
    let at_root = f.eval(&-QRat::q_pow(-1));
    &f - &XPoly::constant(at_root)
}
