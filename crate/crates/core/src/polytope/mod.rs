//! Lattice polytopes given by their vertices, with facets and edges derived
//! at construction, plus the operations used by the q-Ehrhart machinery.

pub mod hull;
pub mod linalg;

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{QRat, ZPoly};
use crate::error::GeometryError;
use linalg::{dot, nullspace, rank};

/// Integer linear form on `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coefficients: Vec<i64>) -> Self {
        LinearForm(coefficients)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        dot(&self.0, x)
    }

    /// `c` followed by the coefficients of `self`.
    pub fn prepend(&self, c: i64) -> LinearForm {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(c);
        v.extend_from_slice(&self.0);
        LinearForm(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// `normal . x <= offset` on the polytope.
    pub normal: Vec<i64>,
    pub offset: i64,
    /// Indices of the vertices lying on the facet.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Closed,
    /// Relative interior.
    Interior,
}

#[derive(Clone, Debug)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    facets: Vec<Facet>,
    equations: Vec<(Vec<i64>, i64)>,
    edges: Vec<(usize, usize)>,
    affine_dim: usize,
    stripped: Vec<Vec<i64>>,
}

pub fn format_point(p: &[i64]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Builds the polytope spanned by `points`, keeping only extreme points.
pub fn make_polytope(dim: usize, points: &[Vec<i64>]) -> Result<LatticePolytope, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::Empty);
    }
    for (i, p) in points.iter().enumerate() {
        if p.len() != dim {
            return Err(GeometryError::DimensionMismatch {
                index: i,
                expected: dim,
                found: p.len(),
            });
        }
    }
    let mut distinct: Vec<Vec<i64>> = Vec::new();
    for p in points {
        if !distinct.contains(p) {
            distinct.push(p.clone());
        }
    }
    let base = distinct[0].clone();
    let diffs: Vec<Vec<i64>> = distinct[1..]
        .iter()
        .map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    let affine_dim = rank(&diffs);
    let equations: Vec<(Vec<i64>, i64)> = nullspace(&diffs, dim)
        .into_iter()
        .map(|a| {
            let b = dot(&a, &base);
            (a, b)
        })
        .collect();

    if affine_dim == 0 {
        return Ok(LatticePolytope {
            dim,
            vertices: distinct,
            facets: Vec::new(),
            equations,
            edges: Vec::new(),
            affine_dim,
            stripped: Vec::new(),
        });
    }

    // Coordinates on which the affine hull projects isomorphically.
    let mut coords: Vec<usize> = Vec::new();
    for c in 0..dim {
        let mut trial = coords.clone();
        trial.push(c);
        let sub: Vec<Vec<i64>> = diffs.iter().map(|d| trial.iter().map(|&j| d[j]).collect()).collect();
        if rank(&sub) == trial.len() {
            coords = trial;
            if coords.len() == affine_dim {
                break;
            }
        }
    }
    let projected: Vec<Vec<i64>> = distinct
        .iter()
        .map(|p| coords.iter().map(|&j| p[j]).collect())
        .collect();
    let halfspaces = hull::facets(&projected);

    let incident: Vec<Vec<usize>> = projected
        .iter()
        .map(|p| {
            (0..halfspaces.len())
                .filter(|&f| dot(&halfspaces[f].0, p) == halfspaces[f].1)
                .collect()
        })
        .collect();
    let mut vertices = Vec::new();
    let mut stripped = Vec::new();
    let mut vertex_facets: Vec<Vec<usize>> = Vec::new();
    for (i, p) in distinct.iter().enumerate() {
        let normals: Vec<Vec<i64>> = incident[i].iter().map(|&f| halfspaces[f].0.clone()).collect();
        if rank(&normals) == affine_dim {
            vertices.push(p.clone());
            vertex_facets.push(incident[i].clone());
        } else {
            stripped.push(p.clone());
        }
    }

    let facets: Vec<Facet> = halfspaces
        .iter()
        .enumerate()
        .map(|(f, (a, b))| {
            let mut normal = vec![0i64; dim];
            for (k, &j) in coords.iter().enumerate() {
                normal[j] = a[k];
            }
            Facet {
                normal,
                offset: *b,
                vertices: (0..vertices.len()).filter(|&v| vertex_facets[v].contains(&f)).collect(),
            }
        })
        .collect();

    let mut edges = Vec::new();
    for u in 0..vertices.len() {
        for v in u + 1..vertices.len() {
            let common: Vec<Vec<i64>> = facets
                .iter()
                .filter(|f| f.vertices.contains(&u) && f.vertices.contains(&v))
                .map(|f| f.normal.clone())
                .collect();
            if rank(&common) == affine_dim - 1 {
                edges.push((u, v));
            }
        }
    }

    Ok(LatticePolytope {
        dim,
        vertices,
        facets,
        equations,
        edges,
        affine_dim,
        stripped,
    })
}

impl LatticePolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Equations `a . x = b` cutting out the affine hull.
    pub fn equations(&self) -> &[(Vec<i64>, i64)] {
        &self.equations
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    /// Input points dropped because they were not extreme.
    pub fn stripped_points(&self) -> &[Vec<i64>] {
        &self.stripped
    }

    pub fn lambda_values(&self, lambda: &LinearForm) -> Vec<i64> {
        self.vertices.iter().map(|v| lambda.eval(v)).collect()
    }

    pub fn lambda_range(&self, lambda: &LinearForm) -> (i64, i64) {
        let vals = self.lambda_values(lambda);
        (*vals.iter().min().unwrap(), *vals.iter().max().unwrap())
    }

    /// Calls `visit` on every lattice point of `nQ` (or its relative interior).
    pub fn visit_lattice_points(&self, n: i64, region: Region, visit: &mut dyn FnMut(&[i64])) {
        assert!(n >= 0, "dilation factor must be nonnegative");
        let d = self.dim;
        let lo: Vec<i64> = (0..d).map(|i| n * self.vertices.iter().map(|v| v[i]).min().unwrap()).collect();
        let hi: Vec<i64> = (0..d).map(|i| n * self.vertices.iter().map(|v| v[i]).max().unwrap()).collect();

        // (coefficients, rhs, is_equation); strict inequalities become `<= rhs - 1`.
        let mut cons: Vec<(Vec<i64>, i64, bool)> = Vec::new();
        for f in &self.facets {
            let rhs = n * f.offset - i64::from(region == Region::Interior);
            cons.push((f.normal.clone(), rhs, false));
        }
        for (a, b) in &self.equations {
            cons.push((a.clone(), n * b, true));
        }
        // Extreme values of the not-yet-fixed coordinates over the box.
        let mut suf_min = vec![vec![0i64; d + 1]; cons.len()];
        let mut suf_max = vec![vec![0i64; d + 1]; cons.len()];
        for (c, (a, _, _)) in cons.iter().enumerate() {
            for i in (0..d).rev() {
                let (x, y) = (a[i] * lo[i], a[i] * hi[i]);
                suf_min[c][i] = suf_min[c][i + 1] + x.min(y);
                suf_max[c][i] = suf_max[c][i + 1] + x.max(y);
            }
        }
        let touching: Vec<Vec<usize>> = (0..d)
            .map(|i| (0..cons.len()).filter(|&c| cons[c].0[i] != 0).collect())
            .collect();

        struct Ctx<'a> {
            cons: &'a [(Vec<i64>, i64, bool)],
            suf_min: &'a [Vec<i64>],
            suf_max: &'a [Vec<i64>],
            touching: &'a [Vec<usize>],
            lo: &'a [i64],
            hi: &'a [i64],
        }

        fn rec(ctx: &Ctx, i: usize, x: &mut Vec<i64>, sums: &mut [i64], visit: &mut dyn FnMut(&[i64])) {
            if i == ctx.lo.len() {
                visit(x);
                return;
            }
            let (mut lo, mut hi) = (ctx.lo[i], ctx.hi[i]);
            for &c in &ctx.touching[i] {
                let (a, rhs, eq) = (&ctx.cons[c].0, ctx.cons[c].1, ctx.cons[c].2);
                let ai = a[i];
                // a_i x_i <= upper, and a_i x_i >= lower for equations
                let upper = rhs - sums[c] - ctx.suf_min[c][i + 1];
                let (l, h) = bound(ai, upper, true);
                lo = lo.max(l);
                hi = hi.min(h);
                if eq {
                    let lower = rhs - sums[c] - ctx.suf_max[c][i + 1];
                    let (l, h) = bound(ai, lower, false);
                    lo = lo.max(l);
                    hi = hi.min(h);
                }
                if lo > hi {
                    return;
                }
            }
            for v in lo..=hi {
                for &c in &ctx.touching[i] {
                    sums[c] += ctx.cons[c].0[i] * v;
                }
                x.push(v);
                rec(ctx, i + 1, x, sums, visit);
                x.pop();
                for &c in &ctx.touching[i] {
                    sums[c] -= ctx.cons[c].0[i] * v;
                }
            }
        }

        // Interval of integers v with a*v <= r (upper) or a*v >= r (lower).
        fn bound(a: i64, r: i64, upper: bool) -> (i64, i64) {
            let (lo, hi) = (i64::MIN / 4, i64::MAX / 4);
            match (a > 0, upper) {
                (true, true) => (lo, r.div_euclid(a)),
                (true, false) => (-((-r).div_euclid(a)), hi),
                (false, true) => (-(r.div_euclid(-a)), hi),
                (false, false) => (lo, (-r).div_euclid(-a)),
            }
        }

        // Constraints that touch no coordinate (dimension 0) are checked once.
        for (a, rhs, eq) in &cons {
            if a.iter().all(|&x| x == 0) && (0 > *rhs || (*eq && *rhs != 0)) {
                return;
            }
        }
        let ctx = Ctx {
            cons: &cons,
            suf_min: &suf_min,
            suf_max: &suf_max,
            touching: &touching,
            lo: &lo,
            hi: &hi,
        };
        let mut sums = vec![0i64; cons.len()];
        rec(&ctx, 0, &mut Vec::with_capacity(d), &mut sums, visit);
    }

    pub fn lattice_points(&self, n: i64, region: Region) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        self.visit_lattice_points(n, region, &mut |p| out.push(p.to_vec()));
        out
    }

    /// `sum q^{lambda(x)}` over the lattice points of `nQ`, without listing them.
    pub fn weight(&self, lambda: &LinearForm, n: i64, region: Region) -> QRat {
        let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
        self.visit_lattice_points(n, region, &mut |p| *counts.entry(lambda.eval(p)).or_default() += 1);
        laurent(&counts)
    }

    /// Number of lattice points of `nQ` (or its relative interior).
    pub fn count(&self, n: i64, region: Region) -> u64 {
        let mut c = 0u64;
        self.visit_lattice_points(n, region, &mut |_| c += 1);
        c
    }

    pub fn is_empty(&self) -> bool {
        let mut any = false;
        self.visit_lattice_points(1, Region::Interior, &mut |_| any = true);
        !any
    }

    /// Whether `x` satisfies all facet inequalities and hull equations of `nQ`.
    pub fn contains(&self, n: i64, x: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(&f.normal, x) <= n * f.offset)
            && self.equations.iter().all(|(a, b)| dot(a, x) == n * b)
    }
}

fn laurent(counts: &BTreeMap<i64, u64>) -> QRat {
    let Some((&low, _)) = counts.iter().next() else {
        return QRat::zero();
    };
    let shift = low.min(0);
    let top = (*counts.keys().last().unwrap() - shift) as usize;
    let mut coeffs = vec![0i64; top + 1];
    for (&e, &c) in counts {
        coeffs[(e - shift) as usize] = c as i64;
    }
    &QRat::from_poly(ZPoly::from_i64s(&coeffs)) * &QRat::q_pow(shift)
}

/// `sum q^{lambda(x)}`, or `sum q^{-lambda(x)}` when `inverse_q`.
pub fn weighted_sum(points: &[Vec<i64>], lambda: &LinearForm, inverse_q: bool) -> QRat {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for p in points {
        let e = lambda.eval(p);
        *counts.entry(if inverse_q { -e } else { e }).or_default() += 1;
    }
    laurent(&counts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Dimension { expected: usize, found: usize },
    Positivity { vertex: Vec<i64>, value: i64 },
    Genericity { from: Vec<i64>, to: Vec<i64> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Dimension { expected, found } => {
                write!(f, "Linear form has length {found}, expected {expected}")
            }
            Violation::Positivity { vertex, value } => write!(
                f,
                "Positivity violated at vertex {}: lambda = {value}",
                format_point(vertex)
            ),
            Violation::Genericity { from, to } => write!(
                f,
                "Genericity violated on edge {}-{}",
                format_point(from),
                format_point(to)
            ),
        }
    }
}

/// Checks that `lambda` is nonnegative on vertices and separates every edge.
pub fn validate_pair(q: &LatticePolytope, lambda: &LinearForm) -> Result<(), Vec<Violation>> {
    if lambda.dim() != q.dim {
        return Err(vec![Violation::Dimension {
            expected: q.dim,
            found: lambda.dim(),
        }]);
    }
    let mut out = Vec::new();
    for v in &q.vertices {
        let value = lambda.eval(v);
        if value < 0 {
            out.push(Violation::Positivity {
                vertex: v.clone(),
                value,
            });
        }
    }
    for &(u, v) in &q.edges {
        let (a, b) = (&q.vertices[u], &q.vertices[v]);
        if lambda.eval(a) == lambda.eval(b) {
            let (from, to) = if a <= b { (a, b) } else { (b, a) };
            out.push(Violation::Genericity {
                from: from.clone(),
                to: to.clone(),
            });
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

pub(crate) fn check_pair(q: &LatticePolytope, lambda: &LinearForm) -> Result<(), GeometryError> {
    validate_pair(q, lambda).map_err(|vs| {
        GeometryError::Violations(vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))
    })
}

/// Translate by `v`; also returns `N = lambda(v)`.
pub fn translate(
    q: &LatticePolytope,
    lambda: &LinearForm,
    v: &[i64],
) -> Result<(LatticePolytope, i64), GeometryError> {
    if v.len() != q.dim {
        return Err(GeometryError::FormDimension {
            expected: q.dim,
            found: v.len(),
        });
    }
    let shift = lambda.eval(v);
    if shift < 0 {
        return Err(GeometryError::Precondition(format!(
            "translation vector {} has lambda = {shift} < 0",
            format_point(v)
        )));
    }
    let pts: Vec<Vec<i64>> = q
        .vertices
        .iter()
        .map(|p| p.iter().zip(v).map(|(a, b)| a + b).collect())
        .collect();
    Ok((make_polytope(q.dim, &pts)?, shift))
}

/// `v_max - Q`, where `v_max` is the vertex maximizing `lambda`.
pub fn reverse(q: &LatticePolytope, lambda: &LinearForm) -> Result<LatticePolytope, GeometryError> {
    check_pair(q, lambda)?;
    let vals = q.lambda_values(lambda);
    let m = *vals.iter().max().unwrap();
    let tops: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == m).collect();
    if tops.len() != 1 {
        return Err(GeometryError::Precondition("maximal vertex is not unique".into()));
    }
    let vmax = &q.vertices[tops[0]];
    let pts: Vec<Vec<i64>> = q
        .vertices
        .iter()
        .map(|p| vmax.iter().zip(p).map(|(a, b)| a - b).collect())
        .collect();
    make_polytope(q.dim, &pts)
}

/// Pyramid with apex `(1, 0, .., 0)` over `(0, Q)` and form `m (+) lambda`.
pub fn pyramid(
    q: &LatticePolytope,
    lambda: &LinearForm,
    m: i64,
) -> Result<(LatticePolytope, LinearForm), GeometryError> {
    let (lo, hi) = q.lambda_range(lambda);
    if m < 0 || (lo <= m && m <= hi) {
        return Err(GeometryError::Precondition(format!(
            "apex value {m} must be nonnegative and outside [{lo}, {hi}]"
        )));
    }
    let mut pts: Vec<Vec<i64>> = q.vertices.iter().map(|v| prepend(0, v)).collect();
    let mut apex = vec![0i64; q.dim + 1];
    apex[0] = 1;
    pts.push(apex);
    Ok((make_polytope(q.dim + 1, &pts)?, lambda.prepend(m)))
}

/// Hull of the origin and `{1} x Q`, with form `k + lambda(v)`.
pub fn bplus(q: &LatticePolytope, lambda: &LinearForm) -> Result<(LatticePolytope, LinearForm), GeometryError> {
    let mut pts: Vec<Vec<i64>> = vec![vec![0i64; q.dim + 1]];
    pts.extend(q.vertices.iter().map(|v| prepend(1, v)));
    Ok((make_polytope(q.dim + 1, &pts)?, lambda.prepend(1)))
}

fn prepend(c: i64, v: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(c);
    out.extend_from_slice(v);
    out
}
