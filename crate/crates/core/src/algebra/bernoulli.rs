//! Carlitz q-Bernoulli numbers and the umbral form `x^n -> beta_n`.

use num_bigint::BigInt;
use num_integer::binomial;

use super::qrat::QRat;
use super::xpoly::XPoly;

/// `beta_0 .. beta_n`, from `q (q beta + 1)^n - beta_n = [n = 1]` with
/// `beta^k` read as `beta_k` after expansion.
pub fn carlitz_bernoulli_table(n: usize) -> Vec<QRat> {
    let mut betas = vec![QRat::one()];
    for k in 1..=n {
        // (q^{k+1} - 1) beta_k = [k = 1] - q sum_{i<k} C(k,i) q^i beta_i
        let mut rhs = if k == 1 { QRat::one() } else { QRat::zero() };
        let mut acc = QRat::zero();
        for (i, b) in betas.iter().enumerate() {
            let c: BigInt = binomial(BigInt::from(k), BigInt::from(i));
            acc = &acc + &(&(b * &QRat::q_pow(i as i64)) * &QRat::from_int(c));
        }
        rhs = &rhs - &(&QRat::q() * &acc);
        let lead = &QRat::q_pow(k as i64 + 1) - &QRat::one();
        betas.push(&rhs / &lead);
    }
    betas
}

pub fn carlitz_bernoulli(n: usize) -> QRat {
    carlitz_bernoulli_table(n).pop().unwrap()
}

/// The q-umbra: the linear form sending `x^n` to `beta_n`.
pub fn umbra(f: &XPoly) -> QRat {
    let Some(d) = f.degree() else {
        return QRat::zero();
    };
    let betas = carlitz_bernoulli_table(d);
    f.coeffs()
        .iter()
        .zip(&betas)
        .fold(QRat::zero(), |acc, (a, b)| &acc + &(a * b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zpoly::ZPoly;
    use num_rational::BigRational;

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::from_i64s(c)
    }

    /// Classical Bernoulli numbers from `sum_{k<=n} C(n+1,k) B_k = 0`.
    fn classical_bernoulli(n: usize) -> Vec<BigRational> {
        let mut b: Vec<BigRational> = vec![BigRational::from_integer(1.into())];
        for m in 1..=n {
            let mut s = BigRational::from_integer(0.into());
            for (k, bk) in b.iter().enumerate() {
                let c: BigInt = binomial(BigInt::from(m + 1), BigInt::from(k));
                s += bk * BigRational::from_integer(c);
            }
            b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
        }
        b
    }

    #[test]
    fn first_values() {
        assert!(carlitz_bernoulli(0).is_one());
        assert_eq!(carlitz_bernoulli(1), QRat::new(zp(&[-1]), zp(&[1, 1])));
        assert_eq!(
            carlitz_bernoulli(2),
            QRat::new(zp(&[0, 1]), &zp(&[1, 1]) * &zp(&[1, 1, 1]))
        );
    }

    #[test]
    fn specializes_to_classical_numbers() {
        let classical = classical_bernoulli(8);
        let q_analog = carlitz_bernoulli_table(8);
        for (n, (b, beta)) in classical.iter().zip(&q_analog).enumerate() {
            assert_eq!(beta.at_one().as_ref(), Some(b), "n = {n}");
        }
    }

    #[test]
    fn denominators_are_squarefree_up_to_q() {
        for beta in carlitz_bernoulli_table(8) {
            assert!(beta.denominator_without_q_power().is_squarefree(), "{beta}");
        }
    }

    #[test]
    fn umbra_examples() {
        assert!(umbra(&XPoly::one()).is_one());
        assert_eq!(umbra(&XPoly::one_plus_qx()), QRat::new(zp(&[1]), zp(&[1, 1])));
        assert_eq!(umbra(&XPoly::x()), carlitz_bernoulli(1));
        assert!(umbra(&XPoly::zero()).is_zero());
    }
}
