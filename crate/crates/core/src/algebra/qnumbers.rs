//! q-integers, q-factorials, Gaussian binomials and cyclotomic polynomials.

use num_bigint::BigInt;

use super::qrat::QRat;
use super::zpoly::ZPoly;

/// `[n]_q = 1 + q + ... + q^(n-1)` as an integer polynomial, `n >= 0`.
pub fn qint_poly(n: usize) -> ZPoly {
    ZPoly::new(vec![BigInt::from(1); n])
}

/// `[n]_q = (q^n - 1)/(q - 1)` for any integer `n`; `[-n]_q = -[n]_q / q^n`.
pub fn qint(n: i64) -> QRat {
    if n >= 0 {
        QRat::from_poly(qint_poly(n as usize))
    } else {
        let k = n.unsigned_abs() as usize;
        QRat::new(-qint_poly(k), ZPoly::monomial(1, k))
    }
}

/// `[n]!_q = [1]_q [2]_q ... [n]_q`
pub fn qfactorial_poly(n: usize) -> ZPoly {
    (1..=n).fold(ZPoly::one(), |acc, k| &acc * &qint_poly(k))
}

pub fn qfactorial(n: usize) -> QRat {
    QRat::from_poly(qfactorial_poly(n))
}

/// Gaussian binomial coefficient; zero when `m > n`.
pub fn qbinom_poly(n: usize, m: usize) -> ZPoly {
    if m > n {
        return ZPoly::zero();
    }
    // Product of [n-m+1..n] over [m]!, exact in Z[q].
    let top = (n - m + 1..=n).fold(ZPoly::one(), |acc, k| &acc * &qint_poly(k));
    top.div_exact(&qfactorial_poly(m))
        .expect("Gaussian binomial is a polynomial")
}

pub fn qbinom(n: usize, m: usize) -> QRat {
    QRat::from_poly(qbinom_poly(n, m))
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// The cyclotomic polynomial `Phi_n`, by exact division of `q^n - 1` by
/// `Phi_d` over the proper divisors `d` of `n`.
pub fn cyclotomic(n: usize) -> ZPoly {
    assert!(n >= 1, "cyclotomic order must be positive");
    let mut p = ZPoly::q_pow_minus_one(n);
    for d in divisors(n).filter(|&d| d < n) {
        p = p.div_exact(&cyclotomic(d)).expect("Phi_d divides q^n - 1");
    }
    p
}
