//! The lambda-pulling triangulation and generating functions of simplices.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use crate::algebra::{QRat, SeriesTQ, ZPoly};
use crate::error::GeometryError;
use crate::polytope::linalg::{affine_rank, diagonalize_columns};
use crate::polytope::{check_pair, LatticePolytope, LinearForm, Region};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub vertex_indices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Triangulation {
    pub maximal_simplices: Vec<Simplex>,
    /// Every nonempty face of every maximal simplex, once.
    pub all_faces: Vec<Simplex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    /// `0 <= t_i < 1`
    Lower,
    /// `0 < t_i <= 1`
    Upper,
}

fn points_of(q: &LatticePolytope, idx: &[usize]) -> Vec<Vec<i64>> {
    idx.iter().map(|&i| q.vertices()[i].clone()).collect()
}

/// Facets of the face `face` (a sorted vertex index set) of `q`.
pub fn facets_of_face(q: &LatticePolytope, face: &[usize]) -> Vec<Vec<usize>> {
    let dim = affine_rank(&points_of(q, face));
    if dim == 0 {
        return Vec::new();
    }
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for g in q.facets() {
        let cut: Vec<usize> = face.iter().copied().filter(|v| g.vertices.contains(v)).collect();
        if cut.is_empty() || cut.len() == face.len() {
            continue;
        }
        if affine_rank(&points_of(q, &cut)) + 1 == dim {
            out.insert(cut);
        }
    }
    out.into_iter().collect()
}

/// All nonempty faces of `q`, including `q` itself.
pub fn face_lattice(q: &LatticePolytope) -> Vec<Vec<usize>> {
    let top: Vec<usize> = (0..q.vertices().len()).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack = vec![top];
    while let Some(f) = stack.pop() {
        if !seen.insert(f.clone()) {
            continue;
        }
        stack.extend(facets_of_face(q, &f));
    }
    seen.into_iter().collect()
}

struct Puller<'a> {
    q: &'a LatticePolytope,
    values: Vec<i64>,
    memo: HashMap<Vec<usize>, Vec<Vec<usize>>>,
}

impl Puller<'_> {
    fn run(&mut self, face: &[usize]) -> Result<Vec<Vec<usize>>, GeometryError> {
        if let Some(r) = self.memo.get(face) {
            return Ok(r.clone());
        }
        let low = face.iter().map(|&v| self.values[v]).min().unwrap();
        let mins: Vec<usize> = face.iter().copied().filter(|&v| self.values[v] == low).collect();
        if mins.len() != 1 {
            return Err(GeometryError::Precondition(format!(
                "face {face:?} has no unique lambda-minimal vertex"
            )));
        }
        let x0 = mins[0];
        let result = if face.len() == 1 {
            vec![face.to_vec()]
        } else {
            let mut out = Vec::new();
            for g in facets_of_face(self.q, face) {
                if g.contains(&x0) {
                    continue;
                }
                for mut s in self.run(&g)? {
                    s.push(x0);
                    s.sort_unstable();
                    out.push(s);
                }
            }
            out.sort();
            out
        };
        self.memo.insert(face.to_vec(), result.clone());
        Ok(result)
    }
}

/// Recursive pulling from the lambda-minimal vertex of every face.
pub fn lambda_triangulation(q: &LatticePolytope, lambda: &LinearForm) -> Result<Triangulation, GeometryError> {
    check_pair(q, lambda)?;
    let mut puller = Puller {
        q,
        values: q.lambda_values(lambda),
        memo: HashMap::new(),
    };
    let top: Vec<usize> = (0..q.vertices().len()).collect();
    let maximal = puller.run(&top)?;
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in &maximal {
        for mask in 1u64..(1u64 << s.len()) {
            let sub: Vec<usize> = (0..s.len()).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
            faces.insert(sub);
        }
    }
    Ok(Triangulation {
        maximal_simplices: maximal.into_iter().map(|v| Simplex { vertex_indices: v }).collect(),
        all_faces: faces.into_iter().map(|v| Simplex { vertex_indices: v }).collect(),
    })
}

type Frac = Ratio<i128>;

fn frac_part(x: Frac) -> Frac {
    x - Frac::from_integer(x.numer().div_floor(x.denom()))
}

/// Lattice points of the half-open parallelepiped spanned by `(1, v_i)`.
pub fn parallelepiped_points(vertices: &[Vec<i64>], half: Half) -> Result<Vec<Vec<i64>>, GeometryError> {
    if vertices.is_empty() || affine_rank(vertices) + 1 != vertices.len() {
        return Err(GeometryError::Precondition("simplex vertices are affinely dependent".into()));
    }
    let gens: Vec<Vec<i64>> = vertices
        .iter()
        .map(|v| std::iter::once(1).chain(v.iter().copied()).collect())
        .collect();
    let k = gens.len();
    let (v, diag) = diagonalize_columns(&gens);
    let mut out = Vec::new();
    let mut a = vec![0i128; k];
    loop {
        // s = a / d, t = frac(V s)
        let t: Vec<Frac> = (0..k)
            .map(|i| {
                let x = (0..k).fold(Frac::zero(), |acc, j| acc + Frac::new(v[i][j] * a[j], diag[j]));
                let f = frac_part(x);
                if half == Half::Upper && f.is_zero() {
                    Frac::from_integer(1)
                } else {
                    f
                }
            })
            .collect();
        let p: Vec<i64> = (0..gens[0].len())
            .map(|r| {
                let s = (0..k).fold(Frac::zero(), |acc, i| acc + t[i] * Frac::from_integer(gens[i][r] as i128));
                debug_assert!(s.is_integer());
                s.to_integer() as i64
            })
            .collect();
        out.push(p);
        let mut i = 0;
        loop {
            if i == k {
                out.sort();
                return Ok(out);
            }
            a[i] += 1;
            if a[i] < diag[i] {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// Lattice-point generating function of the cone over a simplex, or of the
/// open cone for `Region::Interior`.
pub fn simplex_series(vertices: &[Vec<i64>], lambda: &LinearForm, region: Region) -> Result<SeriesTQ, GeometryError> {
    let (exps, numer) = simplex_numerator(vertices, lambda, region)?;
    Ok(SeriesTQ::new(numer.into_iter().map(QRat::from_poly).collect(), exps))
}

/// Exponents and raw integer numerator `sum q^{lambda(p)} t^{p_0}`.
fn simplex_numerator(
    vertices: &[Vec<i64>],
    lambda: &LinearForm,
    region: Region,
) -> Result<(Vec<u32>, Vec<ZPoly>), GeometryError> {
    let values: Vec<i64> = vertices.iter().map(|v| lambda.eval(v)).collect();
    let distinct: BTreeSet<i64> = values.iter().copied().collect();
    if distinct.len() != values.len() {
        return Err(GeometryError::Precondition("lambda does not separate the simplex vertices".into()));
    }
    if values.iter().any(|&x| x < 0) {
        return Err(GeometryError::Precondition("lambda is negative on a simplex vertex".into()));
    }
    let half = match region {
        Region::Closed => Half::Lower,
        Region::Interior => Half::Upper,
    };
    let mut terms: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for p in parallelepiped_points(vertices, half)? {
        let e = lambda.eval(&p[1..]);
        *terms.entry((p[0] as usize, e as usize)).or_default() += 1;
    }
    Ok((values.iter().map(|&x| x as u32).collect(), to_tq(&terms)))
}

fn to_tq(terms: &BTreeMap<(usize, usize), i64>) -> Vec<ZPoly> {
    let tdeg = terms.keys().map(|k| k.0).max().unwrap_or(0);
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); tdeg + 1];
    for (&(t, e), &c) in terms {
        if rows[t].len() <= e {
            rows[t].resize(e + 1, 0);
        }
        rows[t][e] += c;
    }
    rows.iter().map(|r| ZPoly::from_i64s(r)).collect()
}

fn mul_factor(p: &[ZPoly], j: u32) -> Vec<ZPoly> {
    let mut out = vec![ZPoly::zero(); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        out[k] = &out[k] + c;
        out[k + 1] = &out[k + 1] - &c.shift_up(j as usize);
    }
    out
}

/// Ehrhart series as `1 + sum` of the open-simplex series of every face of
/// the pulling triangulation (the `1` accounts for the empty face).
pub fn series_via_triangulation(q: &LatticePolytope, lambda: &LinearForm) -> Result<SeriesTQ, GeometryError> {
    let tri = lambda_triangulation(q, lambda)?;
    // Faces sharing a denominator are summed before clearing denominators.
    let mut groups: BTreeMap<Vec<u32>, BTreeMap<(usize, usize), i64>> = BTreeMap::new();
    for f in &tri.all_faces {
        let pts = points_of(q, &f.vertex_indices);
        let mut exps: Vec<u32> = pts.iter().map(|v| lambda.eval(v) as u32).collect();
        exps.sort_unstable();
        let entry = groups.entry(exps).or_default();
        let half = parallelepiped_points(&pts, Half::Upper)?;
        for p in half {
            *entry.entry((p[0] as usize, lambda.eval(&p[1..]) as usize)).or_default() += 1;
        }
    }
    let all: BTreeSet<u32> = q.lambda_values(lambda).into_iter().map(|x| x as u32).collect();
    let mut total: Vec<ZPoly> = vec![ZPoly::one()];
    for &j in &all {
        total = mul_factor(&total, j);
    }
    for (exps, terms) in &groups {
        let mut num = to_tq(terms);
        for &j in all.iter().filter(|j| !exps.contains(j)) {
            num = mul_factor(&num, j);
        }
        if total.len() < num.len() {
            total.resize(num.len(), ZPoly::zero());
        }
        for (a, b) in total.iter_mut().zip(&num) {
            *a = &*a + b;
        }
    }
    Ok(SeriesTQ::new(
        total.into_iter().map(QRat::from_poly).collect(),
        all.into_iter().collect(),
    ))
}
