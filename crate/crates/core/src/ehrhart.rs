//! q-Ehrhart polynomials and series of a polytope with a linear form,
//! reciprocity, special values and periodicity.

use crate::algebra::{cyclotomic, qint, QRat, SeriesTQ, XPoly};
use crate::error::GeometryError;
use crate::polytope::{check_pair, LatticePolytope, LinearForm, Region};

#[derive(Clone, Debug)]
pub struct EhrhartData {
    pub polytope: LatticePolytope,
    pub form: LinearForm,
    /// Maximum of the form on the polytope.
    pub m: i64,
    pub d: usize,
    pub polynomial: XPoly,
    pub series: SeriesTQ,
}

impl EhrhartData {
    pub fn compute(q: &LatticePolytope, lambda: &LinearForm) -> Result<Self, GeometryError> {
        let polynomial = qehrhart_polynomial(q, lambda)?;
        let series = series_from_polynomial(&polynomial);
        Ok(EhrhartData {
            polytope: q.clone(),
            form: lambda.clone(),
            m: q.lambda_range(lambda).1,
            d: q.affine_dim(),
            polynomial,
            series,
        })
    }
}

fn internal(msg: impl Into<String>) -> GeometryError {
    GeometryError::Internal(msg.into())
}

/// `sum q^{lambda(x)}` over the lattice points of `nQ`.
pub fn w_poly(q: &LatticePolytope, lambda: &LinearForm, n: i64) -> Result<QRat, GeometryError> {
    check_pair(q, lambda)?;
    if n < 0 {
        return Err(GeometryError::Precondition(format!("dilation {n} is negative")));
    }
    Ok(q.weight(lambda, n, Region::Closed))
}

/// Interpolates the weights of `nQ` at `x = [n]_q`, `n = 0..m`, then checks
/// two further dilates.
pub fn qehrhart_polynomial(q: &LatticePolytope, lambda: &LinearForm) -> Result<XPoly, GeometryError> {
    check_pair(q, lambda)?;
    let m = q.lambda_range(lambda).1;
    let nodes: Vec<(QRat, QRat)> = (0..=m)
        .map(|n| (qint(n), q.weight(lambda, n, Region::Closed)))
        .collect();
    let l = XPoly::interpolate(&nodes).map_err(|e| internal(e.to_string()))?;
    if l.degree() != Some(m as usize) {
        return Err(internal(format!("degree {:?} differs from {m}", l.degree())));
    }
    for n in [m + 1, m + 2] {
        if l.eval_at_qint(n) != q.weight(lambda, n, Region::Closed) {
            return Err(internal(format!("interpolant disagrees with enumeration at n = {n}")));
        }
    }
    Ok(l)
}

/// `sum_j c_j / (1 - q^j t)` for `L = sum_j c_j (1 + qx - x)^j`.
pub fn series_from_polynomial(l: &XPoly) -> SeriesTQ {
    l.to_y_basis()
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(SeriesTQ::zero(), |acc, (j, c)| &acc + &SeriesTQ::new(vec![c], vec![j as u32]))
}

pub fn qehrhart_series(q: &LatticePolytope, lambda: &LinearForm) -> Result<SeriesTQ, GeometryError> {
    Ok(series_from_polynomial(&qehrhart_polynomial(q, lambda)?))
}

/// `L([-n]_q) - (-1)^d W(int(nQ), 1/q)`; zero by reciprocity.
pub fn reciprocity_residual(q: &LatticePolytope, lambda: &LinearForm, n: i64) -> Result<QRat, GeometryError> {
    if n < 1 {
        return Err(GeometryError::Precondition(format!("n = {n} must be positive")));
    }
    let l = qehrhart_polynomial(q, lambda)?;
    let inner = q.weight(lambda, n, Region::Interior).invert_q();
    let signed = if q.affine_dim().is_multiple_of(2) { inner } else { -inner };
    Ok(&l.eval_at_qint(-n) - &signed)
}

/// `L / (1 + qx)` at `x = -1/q`, for polytopes without interior points.
pub fn special_value(q: &LatticePolytope, lambda: &LinearForm) -> Result<QRat, GeometryError> {
    check_pair(q, lambda)?;
    if !q.is_empty() {
        return Err(GeometryError::Precondition("polytope has an interior lattice point".into()));
    }
    let l = qehrhart_polynomial(q, lambda)?;
    special_value_of(&l)
}

pub fn special_value_of(l: &XPoly) -> Result<QRat, GeometryError> {
    let quotient = l
        .div_exact(&XPoly::one_plus_qx())
        .ok_or_else(|| internal("1 + qx does not divide the q-Ehrhart polynomial"))?;
    Ok(quotient.eval(&-QRat::q_pow(-1)))
}

/// Squarefree denominator once powers of `q` are removed.
pub fn has_simple_cyclotomic_poles(r: &QRat) -> bool {
    r.denominator_without_q_power().is_squarefree()
}

/// `L(1/(1-q))`
pub fn value_at_infinity(l: &XPoly) -> QRat {
    let at = (&QRat::one() - &QRat::q()).recip();
    l.eval(&at)
}

/// `(1 - t) S` at `t = 1`.
pub fn series_limit_t1(s: &SeriesTQ) -> Result<QRat, GeometryError> {
    s.limit_at_t1().map_err(|e| GeometryError::Precondition(e.to_string()))
}

/// Whether `Phi_N` divides the numerator of `L([-n + kN]_q)` for every
/// sampled `k`.
pub fn periodicity_certificate(
    q: &LatticePolytope,
    lambda: &LinearForm,
    n: i64,
    period: i64,
    sample_ks: &[i64],
) -> Result<bool, GeometryError> {
    let m = q.lambda_range(lambda).1;
    if n < 1 || period <= m {
        return Err(GeometryError::Precondition(format!(
            "need n >= 1 and N > {m}, got n = {n}, N = {period}"
        )));
    }
    if q.count(n, Region::Interior) != 0 {
        return Err(GeometryError::Precondition(format!("interior of {n}Q has lattice points")));
    }
    let l = qehrhart_polynomial(q, lambda)?;
    let phi = cyclotomic(period as usize);
    Ok(sample_ks
        .iter()
        .all(|&k| l.eval_at_qint(-n + k * period).numer().divisible_by(&phi)))
}

/// Classical Ehrhart polynomial from point counts at `n = 0..affine_dim`,
/// with rational constant coefficients.
pub fn classical_ehrhart(q: &LatticePolytope) -> XPoly {
    let nodes: Vec<(QRat, QRat)> = (0..=q.affine_dim() as i64)
        .map(|n| (QRat::from_int(n), QRat::from_int(q.count(n, Region::Closed))))
        .collect();
    XPoly::interpolate(&nodes).expect("integer nodes are distinct")
}

/// `L` at `q = 1`, obtained by interpolating the specialized values
/// `L([n]_q)|_{q=1}` at the integers `n = 0..deg L`.
pub fn specialize_at_one(l: &XPoly) -> Option<XPoly> {
    let deg = l.degree().unwrap_or(0) as i64;
    let mut nodes = Vec::new();
    for n in 0..=deg {
        let v = l.eval_at_qint(n).at_one()?;
        nodes.push((QRat::from_int(n), QRat::from_ratio(v.numer().clone(), v.denom().clone())));
    }
    XPoly::interpolate(&nodes).ok()
}

/// `L` at `q = 1` by substituting into each coefficient, when defined.
pub fn substitute_q_one(l: &XPoly) -> Option<XPoly> {
    let coeffs: Option<Vec<QRat>> = l
        .coeffs()
        .iter()
        .map(|c| c.at_one().map(|v| QRat::from_ratio(v.numer().clone(), v.denom().clone())))
        .collect();
    coeffs.map(XPoly::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_qrat, parse_xpoly, ZPoly};
    use crate::polytope::make_polytope;

    fn poly(dim: usize, pts: &[&[i64]]) -> LatticePolytope {
        make_polytope(dim, &pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn exa() -> (LatticePolytope, LinearForm) {
        (poly(1, &[&[0], &[1]]), LinearForm::new(vec![1]))
    }

    fn exb() -> (LatticePolytope, LinearForm) {
        (poly(2, &[&[0, 0], &[1, 0], &[1, 1]]), LinearForm::new(vec![1, 1]))
    }

    fn exd() -> (LatticePolytope, LinearForm) {
        (poly(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 3]]), LinearForm::new(vec![1, 1]))
    }

    #[test]
    fn weights() {
        let (a, la) = exa();
        assert_eq!(w_poly(&a, &la, 1).unwrap(), QRat::from_poly(ZPoly::from_i64s(&[1, 1])));
        assert!(w_poly(&a, &la, 0).unwrap().is_one());
    }

    #[test]
    fn polynomials() {
        let (a, la) = exa();
        assert_eq!(qehrhart_polynomial(&a, &la).unwrap(), parse_xpoly("q*x + 1", 'x').unwrap());
        let (d, ld) = exd();
        assert_eq!(
            qehrhart_polynomial(&d, &ld).unwrap(),
            parse_xpoly("(q*x + 1)*(q*(q - 1)*x^2 + 2*q*x + 1)", 'x').unwrap()
        );
    }

    #[test]
    fn point_series() {
        let p = poly(2, &[&[0, 0]]);
        let s = qehrhart_series(&p, &LinearForm::new(vec![1, 1])).unwrap();
        assert_eq!(s, SeriesTQ::reciprocal_of_factors(vec![0]));
    }

    #[test]
    fn reciprocity_on_segment() {
        let (a, la) = exa();
        for n in 1..=4 {
            assert!(reciprocity_residual(&a, &la, n).unwrap().is_zero());
        }
    }

    #[test]
    fn special_values() {
        let (a, la) = exa();
        assert!(special_value(&a, &la).unwrap().is_one());
        let (b, lb) = exb();
        assert_eq!(special_value(&b, &lb).unwrap(), parse_qrat("1/(1 + q)").unwrap());
        let (d, ld) = exd();
        assert_eq!(special_value(&d, &ld).unwrap(), -QRat::q_pow(-1));
        let big = poly(2, &[&[0, 0], &[3, 0], &[0, 3]]);
        assert!(matches!(
            special_value(&big, &LinearForm::new(vec![1, 2])),
            Err(GeometryError::Precondition(_))
        ));
    }

    #[test]
    fn simple_poles() {
        let r = QRat::new(ZPoly::one(), ZPoly::from_i64s(&[0, 1, 1]));
        assert!(has_simple_cyclotomic_poles(&r));
        let r = QRat::new(ZPoly::one(), ZPoly::from_i64s(&[1, 2, 1]));
        assert!(!has_simple_cyclotomic_poles(&r));
    }

    #[test]
    fn infinity_of_a_point_poset() {
        let l = XPoly::one_plus_qx();
        assert_eq!(value_at_infinity(&l), (&QRat::one() - &QRat::q()).recip());
    }

    #[test]
    fn periodicity() {
        let (a, la) = exa();
        assert!(periodicity_certificate(&a, &la, 1, 2, &[1, 2]).unwrap());
        assert!(periodicity_certificate(&a, &la, 1, 3, &[1, 2]).unwrap());
        let (b, lb) = exb();
        assert!(periodicity_certificate(&b, &lb, 1, 4, &[1, 2]).unwrap());
        assert!(periodicity_certificate(&b, &lb, 1, 2, &[1]).is_err());
    }

    #[test]
    fn degeneration_of_segment() {
        let (a, la) = exa();
        let l = qehrhart_polynomial(&a, &la).unwrap();
        assert_eq!(specialize_at_one(&l).unwrap(), classical_ehrhart(&a));
        assert_eq!(substitute_q_one(&l).unwrap(), classical_ehrhart(&a));
    }
}
