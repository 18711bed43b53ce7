//! Rational functions in `t` over `Q(q)` whose denominators are products of
//! factors `(1 - q^j t)`.

use std::collections::BTreeMap;

use super::qrat::QRat;
use crate::error::AlgebraError;

/// `numerator(t) / prod_j (1 - q^j t)`.
///
/// Canonical form: no denominator factor divides the numerator, exponents
/// are sorted, and the zero series has no factors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeriesTQ {
    numerator: Vec<QRat>,
    exponents: Vec<u32>,
}

/// `p(t) * (1 - q^j t)`
fn mul_factor(p: &[QRat], j: u32) -> Vec<QRat> {
    let a = QRat::q_pow(j as i64);
    let mut out = Vec::with_capacity(p.len() + 1);
    for k in 0..=p.len() {
        let cur = p.get(k).cloned().unwrap_or_default();
        let prev = if k > 0 { &p[k - 1] * &a } else { QRat::zero() };
        out.push(&cur - &prev);
    }
    out
}

/// `p(t) / (1 - q^j t)` when exact.
fn div_factor(p: &[QRat], j: u32) -> Option<Vec<QRat>> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    let a = QRat::q_pow(j as i64);
    let d = p.len() - 1;
    if d == 0 {
        return None;
    }
    let mut m = Vec::with_capacity(d);
    let mut prev = QRat::zero();
    for c in &p[..d] {
        let mk = c + &(&a * &prev);
        m.push(mk.clone());
        prev = mk;
    }
    (&p[d] + &(&a * &prev)).is_zero().then_some(m)
}

fn trim(mut p: Vec<QRat>) -> Vec<QRat> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

impl SeriesTQ {
    pub fn new(numerator: Vec<QRat>, mut exponents: Vec<u32>) -> Self {
        let mut numerator = trim(numerator);
        if numerator.is_empty() {
            return SeriesTQ {
                numerator,
                exponents: Vec::new(),
            };
        }
        exponents.sort_unstable();
        let mut kept = Vec::with_capacity(exponents.len());
        for j in exponents {
            match div_factor(&numerator, j) {
                Some(m) => numerator = m,
                None => kept.push(j),
            }
        }
        SeriesTQ {
            numerator,
            exponents: kept,
        }
    }

    /// `1 / prod_j (1 - q^j t)`
    pub fn reciprocal_of_factors(exponents: Vec<u32>) -> Self {
        Self::new(vec![QRat::one()], exponents)
    }

    pub fn zero() -> Self {
        Self::new(Vec::new(), Vec::new())
    }

    pub fn numerator(&self) -> &[QRat] {
        &self.numerator
    }

    pub fn denominator_exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// True when no exponent is repeated.
    pub fn has_squarefree_denominator(&self) -> bool {
        self.exponents.windows(2).all(|w| w[0] != w[1])
    }

    /// Numerator over a prescribed denominator, which must be a multiple of
    /// the canonical one.
    pub fn numerator_over(&self, exponents: &[u32]) -> Option<Vec<QRat>> {
        let mut missing: BTreeMap<u32, usize> = BTreeMap::new();
        for &j in exponents {
            *missing.entry(j).or_default() += 1;
        }
        for j in &self.exponents {
            let c = missing.get_mut(j)?;
            if *c == 0 {
                return None;
            }
            *c -= 1;
        }
        let mut num = self.numerator.clone();
        for (j, c) in missing {
            for _ in 0..c {
                num = mul_factor(&num, j);
            }
        }
        Some(trim(num))
    }

    /// Taylor coefficients of `t^0 .. t^order`.
    pub fn taylor(&self, order: usize) -> Vec<QRat> {
        let mut c: Vec<QRat> = (0..=order)
            .map(|k| self.numerator.get(k).cloned().unwrap_or_default())
            .collect();
        for &j in &self.exponents {
            let a = QRat::q_pow(j as i64);
            for k in 1..=order {
                let add = &c[k - 1] * &a;
                c[k] = &c[k] + &add;
            }
        }
        c
    }

    /// Applies `q -> 1/q` (optionally) and then `t -> q^shift t`.
    pub fn substitute(&self, invert_q: bool, shift: i64) -> Result<Self, AlgebraError> {
        let mut exps = Vec::with_capacity(self.exponents.len());
        for &j in &self.exponents {
            let e = if invert_q { -(j as i64) } else { j as i64 } + shift;
            if e < 0 {
                return Err(AlgebraError::NegativeExponent(e));
            }
            exps.push(e as u32);
        }
        let num = self
            .numerator
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let c = if invert_q { c.invert_q() } else { c.clone() };
                &c * &QRat::q_pow(shift * k as i64)
            })
            .collect();
        Ok(Self::new(num, exps))
    }

    /// Divides by one more factor `(1 - q^j t)`.
    pub fn divide_by_factor(&self, j: u32) -> Self {
        let mut exps = self.exponents.clone();
        exps.push(j);
        Self::new(self.numerator.clone(), exps)
    }

    /// `(1 - t) S` at `t = 1`, for series with a simple pole at `t = 1`.
    pub fn limit_at_t1(&self) -> Result<QRat, AlgebraError> {
        let zeros = self.exponents.iter().filter(|&&j| j == 0).count();
        if zeros != 1 {
            return Err(AlgebraError::NotSimplePoleAtOne(zeros));
        }
        let num = QRat::sum(&self.numerator);
        let den = self
            .exponents
            .iter()
            .filter(|&&j| j != 0)
            .fold(QRat::one(), |acc, &j| &acc * &(&QRat::one() - &QRat::q_pow(j as i64)));
        Ok(&num / &den)
    }

    pub fn scale(&self, c: &QRat) -> Self {
        Self::new(
            self.numerator.iter().map(|a| a * c).collect(),
            self.exponents.clone(),
        )
    }

    fn common_exponents(a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut count: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        for &j in a {
            count.entry(j).or_default().0 += 1;
        }
        for &j in b {
            count.entry(j).or_default().1 += 1;
        }
        count
            .into_iter()
            .flat_map(|(j, (x, y))| std::iter::repeat_n(j, x.max(y)))
            .collect()
    }
}

impl std::ops::Add for &SeriesTQ {
    type Output = SeriesTQ;
    fn add(self, rhs: &SeriesTQ) -> SeriesTQ {
        let exps = SeriesTQ::common_exponents(&self.exponents, &rhs.exponents);
        let a = self.numerator_over(&exps).unwrap();
        let b = rhs.numerator_over(&exps).unwrap();
        let n = a.len().max(b.len());
        let num = (0..n)
            .map(|k| {
                &a.get(k).cloned().unwrap_or_default() + &b.get(k).cloned().unwrap_or_default()
            })
            .collect();
        SeriesTQ::new(num, exps)
    }
}

impl std::ops::Neg for &SeriesTQ {
    type Output = SeriesTQ;
    fn neg(self) -> SeriesTQ {
        SeriesTQ {
            numerator: self.numerator.iter().map(|c| -c).collect(),
            exponents: self.exponents.clone(),
        }
    }
}

impl std::ops::Sub for &SeriesTQ {
    type Output = SeriesTQ;
    fn sub(self, rhs: &SeriesTQ) -> SeriesTQ {
        self + &(-rhs)
    }
}

impl std::fmt::Display for SeriesTQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}) / prod(1 - q^j*t, j in {:?})",
            super::render::render_t_numerator(&self.numerator),
            self.exponents
        )
    }
}

impl std::fmt::Debug for SeriesTQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}
