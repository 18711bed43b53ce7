//! Polynomials in `x` with coefficients in `Q(q)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;

use super::qnumbers::qint;
use super::qrat::QRat;
use crate::error::AlgebraError;

/// Polynomial `sum_k coeffs[k] * x^k` over `Q(q)`; the leading coefficient
/// is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<QRat>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: QRat) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(QRat::one())
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::new(vec![QRat::zero(), QRat::one()])
    }

    /// `a + b x`
    pub fn linear(a: QRat, b: QRat) -> Self {
        Self::new(vec![a, b])
    }

    /// `y = 1 + (q - 1) x`, which takes the value `q^n` at `x = [n]_q`.
    pub fn y() -> Self {
        Self::linear(QRat::one(), &QRat::q() - &QRat::one())
    }

    /// `1 + q x`
    pub fn one_plus_qx() -> Self {
        Self::linear(QRat::one(), QRat::q())
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QRat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&QRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, at: &QRat) -> QRat {
        let mut acc = QRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// `f([n]_q)`
    pub fn eval_at_qint(&self, n: i64) -> QRat {
        self.eval(&qint(n))
    }

    /// `f(g(x))`
    pub fn compose(&self, g: &XPoly) -> XPoly {
        let mut acc = XPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &XPoly::constant(c.clone());
        }
        acc
    }

    /// `f(1 + q x)`; its value at `[n]_q` is `f([n+1]_q)`.
    pub fn shift_qint(&self) -> XPoly {
        self.compose(&XPoly::one_plus_qx())
    }

    /// Euclidean division over `Q(q)`.
    pub fn div_rem(&self, divisor: &XPoly) -> (XPoly, XPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.lead().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (XPoly::zero(), self.clone());
        }
        let mut quot = vec![QRat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let qk = top * &lead_inv;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&qk * c);
            }
            quot[k] = qk;
        }
        rem.truncate(dd);
        (XPoly::new(quot), XPoly::new(rem))
    }

    /// Quotient of an exact division, `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &XPoly) -> Option<XPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Coefficients `c_j` with `f = sum_j c_j y^j`, `y = 1 + (q-1) x`.
    pub fn to_y_basis(&self) -> Vec<QRat> {
        // x = (y - 1) / (q - 1)
        let inv = (&QRat::q() - &QRat::one()).recip();
        let n = self.coeffs.len();
        let mut out = vec![QRat::zero(); n];
        let mut inv_pow = QRat::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                let base = a * &inv_pow;
                for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                    let b: BigInt = binomial(BigInt::from(k), BigInt::from(j));
                    let signed = if (k - j) % 2 == 0 { b } else { -b };
                    *slot = &*slot + &(&base * &QRat::from_int(signed));
                }
            }
            inv_pow = &inv_pow * &inv;
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    pub fn from_y_basis(c: &[QRat]) -> XPoly {
        let y = XPoly::y();
        let mut acc = XPoly::zero();
        for cj in c.iter().rev() {
            acc = &(&acc * &y) + &XPoly::constant(cj.clone());
        }
        acc
    }

    /// The unique polynomial of degree `< nodes.len()` through the nodes,
    /// built from Newton divided differences.
    pub fn interpolate(nodes: &[(QRat, QRat)]) -> Result<XPoly, AlgebraError> {
        let k = nodes.len();
        for i in 0..k {
            for j in 0..i {
                if nodes[i].0 == nodes[j].0 {
                    return Err(AlgebraError::DegenerateNodes);
                }
            }
        }
        let mut table: Vec<QRat> = nodes.iter().map(|(_, v)| v.clone()).collect();
        let mut newton = Vec::with_capacity(k);
        for level in 0..k {
            newton.push(table[level].clone());
            for i in (level + 1..k).rev() {
                let num = &table[i] - &table[i - 1];
                let den = &nodes[i].0 - &nodes[i - level - 1].0;
                table[i] = &num / &den;
            }
        }
        let mut acc = XPoly::zero();
        for i in (0..k).rev() {
            let factor = XPoly::linear(-&nodes[i].0, QRat::one());
            acc = &(&acc * &factor) + &XPoly::constant(newton[i].clone());
        }
        Ok(acc)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self + &(-rhs)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![QRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        XPoly::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for XPoly {
            type Output = XPoly;
            fn $method(self, rhs: XPoly) -> XPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&XPoly> for XPoly {
            type Output = XPoly;
            fn $method(self, rhs: &XPoly) -> XPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<XPoly> for &XPoly {
            type Output = XPoly;
            fn $method(self, rhs: XPoly) -> XPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

impl std::fmt::Display for XPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::render::render_xpoly(self, "x", false))
    }
}

impl std::fmt::Debug for XPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::render::render_xpoly(self, "x", false))
    }
}
