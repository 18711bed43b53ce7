//! Identity checks over the built-in corpus and seeded random polytopes.

use std::fmt::Write as _;

use num_traits::Signed;

use crate::algebra::{carlitz_bernoulli_table, hahn_delta, qint, umbra, QRat, SeriesTQ, XPoly};
use crate::corpus::{self, NamedPolytope};
use crate::ehrhart::{
    classical_ehrhart, has_simple_cyclotomic_poles, qehrhart_polynomial, reciprocity_residual, series_from_polynomial,
    series_limit_t1, special_value, special_value_of, specialize_at_one, value_at_infinity,
};
use crate::poset::{
    colouring_sum, derive_poset, descent_numerator, descent_polynomial, longest_chain, macmahon_polynomial,
    order_polytope, q_volume, Derivation, Poset,
};
use crate::polytope::{bplus, pyramid, reverse, translate, LatticePolytope, LinearForm};
use crate::triangulation::series_via_triangulation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Polytopes,
    Posets,
    Umbral,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub identity: String,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    fn record(&mut self, identity: &str, instance: &str, outcome: Result<bool, String>) {
        let (passed, detail) = match outcome {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, "identity does not hold".to_string()),
            Err(e) => (false, e),
        };
        self.checks.push(Check {
            identity: identity.to_string(),
            instance: instance.to_string(),
            passed,
            detail,
        });
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status}  {}  [{}]", c.identity, c.instance);
            if !c.detail.is_empty() {
                let _ = write!(out, "  {}", c.detail);
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), self.failures());
        out
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn run(scope: Scope, seed: u64) -> Report {
    let mut report = Report::default();
    if matches!(scope, Scope::All | Scope::Polytopes) {
        let mut instances = corpus::polytope_corpus();
        instances.extend(corpus::random_polytopes(seed, 20));
        for p in &instances {
            polytope_suite(&mut report, p);
        }
    }
    if matches!(scope, Scope::All | Scope::Posets) {
        for p in corpus::poset_corpus() {
            poset_suite(&mut report, &p.name, &p.poset);
        }
    }
    if matches!(scope, Scope::All | Scope::Umbral) {
        umbral_suite(&mut report);
    }
    report
}

/// `true` when the series denominator is squarefree, uses only vertex
/// values, contains both extreme values, and the series starts with 1.
pub fn structural_ok(s: &SeriesTQ, q: &LatticePolytope, lambda: &LinearForm) -> bool {
    let values = q.lambda_values(lambda);
    let (lo, hi) = q.lambda_range(lambda);
    let exps = s.denominator_exponents();
    s.has_squarefree_denominator()
        && exps.iter().all(|&j| values.contains(&(j as i64)))
        && exps.contains(&(lo as u32))
        && exps.contains(&(hi as u32))
        && s.taylor(0)[0].is_one()
}

fn polytope_suite(report: &mut Report, p: &NamedPolytope) {
    let (q, lam, name) = (&p.polytope, &p.form, p.name.as_str());
    let l = match qehrhart_polynomial(q, lam) {
        Ok(l) => l,
        Err(e) => {
            report.record("q-Ehrhart polynomial by interpolation", name, Err(err(e)));
            return;
        }
    };
    let s = series_from_polynomial(&l);
    let m = q.lambda_range(lam).1;

    report.record(
        "series by interpolation equals series by pulling triangulation",
        name,
        series_via_triangulation(q, lam).map(|t| t == s).map_err(err),
    );
    report.record(
        "reciprocity L([-n]_q) = (-1)^d W(int nQ, 1/q) for n = 1..5",
        name,
        (1..=5)
            .map(|n| reciprocity_residual(q, lam, n).map(|r| r.is_zero()))
            .try_fold(true, |acc, r| r.map(|b| acc && b))
            .map_err(err),
    );
    report.record(
        "squarefree denominator on vertex values with min and max, constant term 1",
        name,
        Ok(structural_ok(&s, q, lam) && l.degree() == Some(m as usize)),
    );
    report.record(
        "q = 1 specialization equals the classical Ehrhart polynomial",
        name,
        Ok(specialize_at_one(&l) == Some(classical_ehrhart(q))),
    );
    report.record("translation multiplies L by (1 + qx - x)^N", name, shift_identity(q, lam, &l));
    report.record(
        "reversal: Ehr of v_max - Q is Ehr(t q^m, 1/q)",
        name,
        (|| {
            let r = reverse(q, lam).map_err(err)?;
            let rs = series_from_polynomial(&qehrhart_polynomial(&r, lam).map_err(err)?);
            Ok(rs == s.substitute(true, m).map_err(err)?)
        })(),
    );
    report.record(
        "pyramid with apex value m divides Ehr by (1 - q^m t)",
        name,
        (|| {
            let (py, pl) = pyramid(q, lam, m + 1).map_err(err)?;
            let ps = series_from_polynomial(&qehrhart_polynomial(&py, &pl).map_err(err)?);
            Ok(ps == s.divide_by_factor(m as u32 + 1))
        })(),
    );
    report.record("Hahn difference of L for B+(Q) is q L(1 + qx)", name, bplus_identity(q, lam, &l));
    if q.is_empty() {
        report.record(
            "empty polytope: 1 + qx divides L",
            name,
            Ok(l.eval(&-QRat::q_pow(-1)).is_zero() && special_value_of(&l).is_ok()),
        );
        report.record(
            "special value has simple poles away from q = 0",
            name,
            special_value_of(&l).map(|v| has_simple_cyclotomic_poles(&v)).map_err(err),
        );
    }
}

fn shift_identity(q: &LatticePolytope, lam: &LinearForm, l: &XPoly) -> Result<bool, String> {
    let d = q.dim();
    if d == 0 {
        return Ok(true);
    }
    let mut ok = true;
    for i in 0..d {
        let mut v = vec![0i64; d];
        v[i] = 1;
        if lam.eval(&v) < 0 {
            continue;
        }
        let (t, n) = translate(q, lam, &v).map_err(err)?;
        let lt = qehrhart_polynomial(&t, lam).map_err(err)?;
        ok &= lt == &XPoly::y().pow(n as u32) * l;
    }
    Ok(ok)
}

fn bplus_identity(q: &LatticePolytope, lam: &LinearForm, l: &XPoly) -> Result<bool, String> {
    let (b, bl) = bplus(q, lam).map_err(err)?;
    let lb = qehrhart_polynomial(&b, &bl).map_err(err)?;
    Ok(hahn_delta(&lb) == l.shift_qint().scale(&QRat::q()))
}

fn poset_suite(report: &mut Report, name: &str, p: &Poset) {
    let n = p.size();
    let (q, lam) = order_polytope(p);
    let l = match qehrhart_polynomial(&q, &lam) {
        Ok(l) => l,
        Err(e) => {
            report.record("q-Ehrhart polynomial of the order polytope", name, Err(err(e)));
            return;
        }
    };
    let s = series_from_polynomial(&l);
    let all: Vec<u32> = (0..=n as u32).collect();

    report.record(
        "descent/comajor numerator equals the geometric series",
        name,
        Ok(descent_numerator(p) == s),
    );
    report.record(
        "numerator has nonnegative integer coefficients and value 1 at t = 0",
        name,
        Ok({
            let w = descent_polynomial(p);
            w[0].is_one()
                && w.iter().all(|c| c.coeffs().iter().all(|a| !a.is_negative()))
                && s.numerator_over(&all).is_some_and(|raw| {
                    raw.iter().zip(&w).all(|(a, b)| a.as_poly() == Some(b))
                })
        }),
    );
    if n <= 6 {
        report.record(
            "weak colourings by {0..n} count the points of n O(P)",
            name,
            Ok((0..=n as i64 + 2).all(|k| colouring_sum(p, k, false) == l.eval_at_qint(k))),
        );
        report.record(
            "strict colourings by {1..n-1}, weighted by q^-(sum), equal (-1)^#P L([-n]_q)",
            name,
            Ok((1..=5).all(|k| {
                let v = l.eval_at_qint(-k);
                let signed = if n.is_multiple_of(2) { v } else { -v };
                colouring_sum(p, k, true).invert_q() == signed
            })),
        );
    }
    report.record(
        "L divisible by [k]_q + q^k x for k up to the longest chain",
        name,
        Ok({
            let prod = (1..=longest_chain(p) as i64).fold(XPoly::one(), |acc, k| {
                &acc * &XPoly::linear(qint(k), QRat::q_pow(k))
            });
            l.div_exact(&prod).is_some()
        }),
    );
    report.record(
        "value at x = 1/(1-q) equals (1-t) Ehr at t = 1",
        name,
        series_limit_t1(&s).map(|v| v == value_at_infinity(&l)).map_err(err),
    );
    let opposite = derive_poset(p, Derivation::Opposite);
    let (oq, ol) = order_polytope(&opposite);
    match qehrhart_polynomial(&oq, &ol) {
        Ok(lo) => {
            let os = series_from_polynomial(&lo);
            report.record(
                "opposite poset: Ehr(t q^#P, 1/q)",
                name,
                s.substitute(true, n as i64).map(|x| x == os).map_err(err),
            );
            report.record(
                "q-volume equals q^binom(#P+1,2) times the opposite numerator at t = 1, q -> 1/q",
                name,
                Ok(os.numerator_over(&all).is_some_and(|raw| {
                    let at_one = QRat::sum(&raw).invert_q();
                    let shift = QRat::q_pow((n * (n + 1) / 2) as i64);
                    q_volume(&l, n) == &shift * &at_one
                })),
            );
        }
        Err(e) => report.record("q-Ehrhart polynomial of the opposite poset", name, Err(err(e))),
    }
    report.record(
        "adding a minimum divides Ehr by (1 - q^(#P+1) t)",
        name,
        (|| {
            let (mq, ml) = order_polytope(&derive_poset(p, Derivation::AddMin));
            let ms = series_from_polynomial(&qehrhart_polynomial(&mq, &ml).map_err(err)?);
            Ok(ms == s.divide_by_factor(n as u32 + 1))
        })(),
    );
    report.record(
        "adding a maximum gives Ehr(qt, q) / (1 - t)",
        name,
        (|| {
            let (mq, ml) = order_polytope(&derive_poset(p, Derivation::AddMax));
            let ms = series_from_polynomial(&qehrhart_polynomial(&mq, &ml).map_err(err)?);
            Ok(ms == s.substitute(false, 1).map_err(err)?.divide_by_factor(0))
        })(),
    );
    if let Some((a, b)) = name
        .strip_prefix("chain product ")
        .and_then(|rest| rest.split_once('x'))
        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
    {
        report.record("MacMahon box product", name, Ok(macmahon_polynomial(a, b) == l));
    }
}

fn umbral_suite(report: &mut Report) {
    let betas = carlitz_bernoulli_table(8);
    report.record(
        "Carlitz numbers at q = 1 are the Bernoulli numbers (n <= 8)",
        "beta_0..beta_8",
        Ok(betas.iter().zip(classical_bernoulli(8)).all(|(b, c)| b.at_one() == Some(c))),
    );
    let a = corpus::exa();
    report.record(
        "special value of B+(segment) is umbra(qx + 1) = 1/(1 + q)",
        &a.name,
        (|| {
            let (b, bl) = bplus(&a.polytope, &a.form).map_err(err)?;
            let v = special_value(&b, &bl).map_err(err)?;
            let expected = (&QRat::one() + &QRat::q()).recip();
            Ok(v == umbra(&XPoly::one_plus_qx()) && v == expected)
        })(),
    );
    for t in corpus::tree_posets(5) {
        let (q, lam) = order_polytope(&t.poset);
        let outcome = (|| {
            let l = qehrhart_polynomial(&q, &lam).map_err(err)?;
            let (b1, l1) = bplus(&q, &lam).map_err(err)?;
            let (b2, l2) = bplus(&b1, &l1).map_err(err)?;
            let v1 = special_value(&b1, &l1).map_err(err)?;
            let v2 = special_value(&b2, &l2).map_err(err)?;
            let minus_x_l = &XPoly::x().scale(&-QRat::one()) * &l;
            let simple = has_simple_cyclotomic_poles(&special_value(&q, &lam).map_err(err)?);
            Ok((v1 == umbra(&l), v2 == umbra(&minus_x_l), simple))
        })();
        match outcome {
            Ok((one, two, simple)) => {
                report.record("special value of B+(Q) equals umbra(L)", &t.name, Ok(one));
                report.record("special value of B+(B+(Q)) equals umbra(-x L)", &t.name, Ok(two));
                report.record("special value has simple poles away from q = 0", &t.name, Ok(simple));
            }
            Err(e) => report.record("umbral identities", &t.name, Err(e)),
        }
    }
}

/// Classical Bernoulli numbers with `B_1 = -1/2`.
pub fn classical_bernoulli(n: usize) -> Vec<num_rational::BigRational> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let mut b: Vec<BigRational> = vec![BigRational::from_integer(1.into())];
    for m in 1..=n {
        let mut s = BigRational::from_integer(0.into());
        for (k, bk) in b.iter().enumerate() {
            let c: BigInt = num_integer::binomial(BigInt::from(m + 1), BigInt::from(k));
            s += bk * BigRational::from_integer(c);
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}
