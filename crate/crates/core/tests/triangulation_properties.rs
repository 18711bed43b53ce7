use std::collections::BTreeSet;

use num_rational::Ratio;
use qehrhart_core::algebra::QRat;
use qehrhart_core::corpus::{polytope_corpus, random_polytopes, NamedPolytope};
use qehrhart_core::polytope::linalg::{affine_rank, solve_in_span};
use qehrhart_core::polytope::{make_polytope, LatticePolytope, Region};
use qehrhart_core::triangulation::{
    face_lattice, lambda_triangulation, parallelepiped_points, series_via_triangulation, simplex_series, Half,
};

fn instances() -> Vec<NamedPolytope> {
    let mut out = polytope_corpus();
    out.extend(random_polytopes(11, 12));
    out
}

fn pts(q: &LatticePolytope, idx: &[usize]) -> Vec<Vec<i64>> {
    idx.iter().map(|&i| q.vertices()[i].clone()).collect()
}

/// Barycentric coordinates of `x` in `n * conv(simplex)`, lifted to height `n`.
fn bary(simplex: &[Vec<i64>], n: i64, x: &[i64]) -> Option<Vec<Ratio<i128>>> {
    let cols: Vec<Vec<i64>> = simplex.iter().map(|v| std::iter::once(1).chain(v.iter().copied()).collect()).collect();
    let target: Vec<i64> = std::iter::once(n).chain(x.iter().copied()).collect();
    solve_in_span(&cols, &target)
}

#[test]
fn open_faces_partition_dilates() {
    for p in instances() {
        let (q, lam) = (&p.polytope, &p.form);
        let t = lambda_triangulation(q, lam).unwrap();
        for n in 1..=3 {
            let points = q.lattice_points(n, Region::Closed);
            for x in &points {
                let owners = t
                    .all_faces
                    .iter()
                    .filter(|f| {
                        bary(&pts(q, &f.vertex_indices), n, x)
                            .is_some_and(|c| c.iter().all(|v| *v > Ratio::from_integer(0)))
                    })
                    .count();
                assert_eq!(owners, 1, "{}: {x:?} in {n}Q", p.name);
            }
            let mut count = 0;
            let mut weight = QRat::zero();
            for f in &t.all_faces {
                let face = make_polytope(q.dim(), &pts(q, &f.vertex_indices)).unwrap();
                count += face.lattice_points(n, Region::Interior).len();
                weight = &weight + &face.weight(lam, n, Region::Interior);
            }
            assert_eq!(count, points.len(), "{}", p.name);
            assert_eq!(weight, q.weight(lam, n, Region::Closed), "{}", p.name);
        }
    }
}

#[test]
fn simplices_are_full_and_affinely_independent() {
    for p in instances() {
        let q = &p.polytope;
        let t = lambda_triangulation(q, &p.form).unwrap();
        for s in &t.maximal_simplices {
            let v = pts(q, &s.vertex_indices);
            assert_eq!(v.len(), q.affine_dim() + 1);
            assert_eq!(affine_rank(&v), q.affine_dim());
        }
        let faces: BTreeSet<Vec<usize>> = t.all_faces.iter().map(|f| f.vertex_indices.clone()).collect();
        assert_eq!(faces.len(), t.all_faces.len());
    }
}

#[test]
fn pulling_property() {
    for p in instances() {
        let (q, lam) = (&p.polytope, &p.form);
        let t = lambda_triangulation(q, lam).unwrap();
        let values = q.lambda_values(lam);
        for face in face_lattice(q) {
            let dim = affine_rank(&pts(q, &face));
            let low = face.iter().copied().min_by_key(|&v| values[v]).unwrap();
            for s in &t.all_faces {
                let inside = s.vertex_indices.iter().all(|v| face.contains(v));
                if inside && s.vertex_indices.len() == dim + 1 {
                    assert!(s.vertex_indices.contains(&low), "{}: {:?} in {face:?}", p.name, s.vertex_indices);
                }
            }
        }
    }
}

#[test]
fn order_independence() {
    for p in instances() {
        let q = &p.polytope;
        let coords = |poly: &LatticePolytope| -> BTreeSet<BTreeSet<Vec<i64>>> {
            lambda_triangulation(poly, &p.form)
                .unwrap()
                .maximal_simplices
                .iter()
                .map(|s| pts(poly, &s.vertex_indices).into_iter().collect())
                .collect()
        };
        let mut rev = q.vertices().to_vec();
        rev.reverse();
        let mut rotated = q.vertices().to_vec();
        rotated.rotate_left(1);
        let base = coords(q);
        assert_eq!(coords(&make_polytope(q.dim(), &rev).unwrap()), base, "{}", p.name);
        assert_eq!(coords(&make_polytope(q.dim(), &rotated).unwrap()), base, "{}", p.name);
    }
}

#[test]
fn pole_bound() {
    for p in instances() {
        let s = series_via_triangulation(&p.polytope, &p.form).unwrap();
        let values = p.polytope.lambda_values(&p.form);
        let max = p.polytope.lambda_range(&p.form).1;
        for &j in s.denominator_exponents() {
            assert!(j as i64 <= max && values.contains(&(j as i64)), "{}", p.name);
        }
    }
}

/// Box scan over `[0, sum w_i]` with exact barycentric coordinates.
fn box_scan(vertices: &[Vec<i64>], half: Half) -> Vec<Vec<i64>> {
    let gens: Vec<Vec<i64>> = vertices.iter().map(|v| std::iter::once(1).chain(v.iter().copied()).collect()).collect();
    let d = gens[0].len();
    let lo: Vec<i64> = (0..d).map(|i| gens.iter().map(|g| g[i].min(0)).sum()).collect();
    let hi: Vec<i64> = (0..d).map(|i| gens.iter().map(|g| g[i].max(0)).sum()).collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        if let Some(c) = solve_in_span(&gens, &cur) {
            let zero = Ratio::from_integer(0);
            let one = Ratio::from_integer(1);
            let ok = match half {
                Half::Lower => c.iter().all(|t| *t >= zero && *t < one),
                Half::Upper => c.iter().all(|t| *t > zero && *t <= one),
            };
            if ok {
                out.push(cur.clone());
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                out.sort();
                return out;
            }
            cur[i] += 1;
            if cur[i] <= hi[i] {
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

#[test]
fn parallelepiped_points_match_box_scan() {
    for p in instances() {
        let q = &p.polytope;
        let t = lambda_triangulation(q, &p.form).unwrap();
        for f in &t.all_faces {
            let v = pts(q, &f.vertex_indices);
            for half in [Half::Lower, Half::Upper] {
                assert_eq!(parallelepiped_points(&v, half).unwrap(), box_scan(&v, half), "{}: {v:?}", p.name);
            }
        }
    }
}

#[test]
fn simplex_series_taylor_matches_enumeration() {
    for p in instances() {
        let q = &p.polytope;
        let t = lambda_triangulation(q, &p.form).unwrap();
        for f in &t.all_faces {
            let v = pts(q, &f.vertex_indices);
            let simplex = make_polytope(q.dim(), &v).unwrap();
            for region in [Region::Closed, Region::Interior] {
                let s = simplex_series(&v, &p.form, region).unwrap();
                let coeffs = s.taylor(3);
                for n in 0..=3i64 {
                    let expected = if n == 0 && region == Region::Interior {
                        QRat::zero()
                    } else {
                        simplex.weight(&p.form, n, region)
                    };
                    assert_eq!(coeffs[n as usize], expected, "{}: {v:?} {region:?} n = {n}", p.name);
                }
            }
        }
    }
}
