//! Elements of the rational function field `Q(q)` in canonical form.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::zpoly::ZPoly;

/// A rational function `num / den` in `q`.
///
/// Canonical form: `num` and `den` are integer polynomials with no common
/// factor in `Z[q]` (so no common polynomial factor and no common integer
/// factor), and `den` has a positive leading coefficient. Zero is `0 / 1`.
/// Two values are equal iff their canonical forms are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: ZPoly,
    den: ZPoly,
}

impl QRat {
    /// Builds and canonicalizes `num / den`. Panics if `den` is zero.
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "QRat with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if let Some(c) = den.as_constant() {
            let g = num.content().gcd(&c);
            (num.div_scalar_exact(&g), ZPoly::constant(c / g))
        } else {
            let g = ZPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        if den.lead().unwrap().is_negative() {
            QRat { num: -num, den: -den }
        } else {
            QRat { num, den }
        }
    }

    pub fn from_poly(p: ZPoly) -> Self {
        QRat {
            num: p,
            den: ZPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(ZPoly::constant(c))
    }

    pub fn from_ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self::new(ZPoly::constant(n), ZPoly::constant(d))
    }

    pub fn zero() -> Self {
        Self::from_poly(ZPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(ZPoly::q())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(ZPoly::monomial(1, k as usize))
        } else {
            QRat {
                num: ZPoly::one(),
                den: ZPoly::monomial(1, k.unsigned_abs() as usize),
            }
        }
    }

    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a polynomial in `q` with integer coefficients.
    pub fn is_integral_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&ZPoly> {
        self.is_integral_poly().then_some(&self.num)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        if self.num.lead().unwrap().is_negative() {
            QRat {
                num: -&self.den,
                den: -&self.num,
            }
        } else {
            QRat {
                num: self.den.clone(),
                den: self.num.clone(),
            }
        }
    }

    pub fn checked_div(&self, rhs: &QRat) -> Option<QRat> {
        (!rhs.is_zero()).then(|| self * &rhs.recip())
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            return self.recip().pow(-e);
        }
        QRat {
            num: self.num.pow(e as u32),
            den: self.den.pow(e as u32),
        }
    }

    /// Substitutes `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let mut num = self.num.reverse();
        let mut den = self.den.reverse();
        if dd >= dn {
            num = num.shift_up(dd - dn);
        } else {
            den = den.shift_up(dn - dd);
        }
        QRat::new(num, den)
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, at: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(at);
        (!d.is_zero()).then(|| self.num.eval_rational(at) / d)
    }

    /// Value at `q = 1`, `None` when `q = 1` is a pole.
    pub fn at_one(&self) -> Option<BigRational> {
        let d = self.den.value_at_one();
        (!d.is_zero()).then(|| BigRational::new(self.num.value_at_one(), d))
    }

    /// Denominator with its `q`-power factor removed.
    pub fn denominator_without_q_power(&self) -> ZPoly {
        let v = self.den.valuation().unwrap_or(0);
        self.den.shift_down(v)
    }

    /// Sum of a slice, combining denominators once.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a QRat>) -> QRat {
        items.into_iter().fold(QRat::zero(), |acc, x| &acc + x)
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<ZPoly> for QRat {
    fn from(p: ZPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QRat::new(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return QRat::new(&self.num * &rhs.den + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return QRat::new(&self.num + &rhs.num * &self.den, self.den.clone());
        }
        let g = ZPoly::gcd(&self.den, &rhs.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = rhs.den.div_exact(&g).unwrap();
        QRat::new(&self.num * &b + &rhs.num * &a, &self.den * &b)
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel: the result is then coprime up to sign.
        let g1 = ZPoly::gcd(&self.num, &rhs.den);
        let g2 = ZPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        if den.lead().unwrap().is_negative() {
            QRat { num: -num, den: -den }
        } else {
            QRat { num, den }
        }
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $method(self, rhs: &QRat) -> QRat {
                (&self).$method(rhs)
            }
        }
        impl $tr<QRat> for &QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl std::fmt::Display for QRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::render::render_qrat(self))
    }
}

impl std::fmt::Debug for QRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::render::render_qrat(self))
    }
}
