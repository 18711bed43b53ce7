//! Facets of the convex hull of full-dimensional integer point sets.
//!
//! `facets` runs an exact beneath-beyond construction on a triangulated
//! boundary and merges coplanar pieces at the end. `facets_brute_force`
//! tries every hyperplane through `k` affinely independent points and keeps
//! the supporting ones; it is exponential and kept for cross-checking.

use std::collections::{BTreeSet, HashMap};

use super::linalg::{affine_rank, dot, hyperplane_through};

/// A facet inequality `normal . x <= offset` with a primitive normal.
pub type Halfspace = (Vec<i64>, i64);

struct Piece {
    verts: Vec<usize>,
    normal: Vec<i64>,
    offset: i64,
}

fn oriented(points: &[Vec<i64>], verts: &[usize], ref_sum: &[i64], scale: i64) -> Piece {
    let pts: Vec<Vec<i64>> = verts.iter().map(|&i| points[i].clone()).collect();
    let (mut a, mut b) = hyperplane_through(&pts).expect("facet vertices are independent");
    // The reference point (ref_sum / scale) lies strictly inside.
    if dot(&a, ref_sum) > scale * b {
        a.iter_mut().for_each(|x| *x = -*x);
        b = -b;
    }
    Piece {
        verts: verts.to_vec(),
        normal: a,
        offset: b,
    }
}

/// Facets of the hull of `points`, which must affinely span `Z^k`, `k >= 1`.
pub fn facets(points: &[Vec<i64>]) -> Vec<Halfspace> {
    let k = points[0].len();
    if k == 1 {
        let lo = points.iter().map(|p| p[0]).min().unwrap();
        let hi = points.iter().map(|p| p[0]).max().unwrap();
        return vec![(vec![-1], -lo), (vec![1], hi)];
    }
    let mut simplex = vec![0usize];
    for i in 1..points.len() {
        if simplex.len() == k + 1 {
            break;
        }
        let mut trial: Vec<Vec<i64>> = simplex.iter().map(|&j| points[j].clone()).collect();
        trial.push(points[i].clone());
        if affine_rank(&trial) == simplex.len() {
            simplex.push(i);
        }
    }
    assert_eq!(simplex.len(), k + 1, "points are not full-dimensional");
    let mut ref_sum = vec![0i64; k];
    for &i in &simplex {
        for (s, x) in ref_sum.iter_mut().zip(&points[i]) {
            *s += x;
        }
    }
    let scale = (k + 1) as i64;

    let mut pieces: Vec<Piece> = (0..=k)
        .map(|skip| {
            let verts: Vec<usize> = simplex
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &v)| v)
                .collect();
            oriented(points, &verts, &ref_sum, scale)
        })
        .collect();

    let in_simplex: BTreeSet<usize> = simplex.iter().copied().collect();
    for (i, p) in points.iter().enumerate() {
        if in_simplex.contains(&i) {
            continue;
        }
        let (visible, kept): (Vec<Piece>, Vec<Piece>) = pieces
            .into_iter()
            .partition(|f| dot(&f.normal, p) > f.offset);
        pieces = kept;
        if visible.is_empty() {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for f in &visible {
            for skip in 0..f.verts.len() {
                let mut r = f.verts.clone();
                r.remove(skip);
                r.sort_unstable();
                *ridges.entry(r).or_default() += 1;
            }
        }
        for (ridge, count) in ridges {
            if count == 1 {
                let mut verts = ridge;
                verts.push(i);
                pieces.push(oriented(points, &verts, &ref_sum, scale));
            }
        }
    }

    let mut unique: Vec<Halfspace> = Vec::new();
    for f in pieces {
        let h = (f.normal, f.offset);
        if !unique.contains(&h) {
            unique.push(h);
        }
    }
    unique.sort();
    unique
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, visit);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), &mut visit);
}

/// Exhaustive hyperplane search with a one-sidedness test.
pub fn facets_brute_force(points: &[Vec<i64>]) -> Vec<Halfspace> {
    let k = points[0].len();
    let mut found: Vec<Halfspace> = Vec::new();
    combinations(points.len(), k, |subset| {
        let pts: Vec<Vec<i64>> = subset.iter().map(|&i| points[i].clone()).collect();
        let Some((a, b)) = hyperplane_through(&pts) else {
            return;
        };
        let values: Vec<i64> = points.iter().map(|p| dot(&a, p)).collect();
        let h = if values.iter().all(|&v| v <= b) {
            (a, b)
        } else if values.iter().all(|&v| v >= b) {
            (a.iter().map(|x| -x).collect(), -b)
        } else {
            return;
        };
        if !found.contains(&h) {
            found.push(h);
        }
    });
    found.sort();
    found
}
