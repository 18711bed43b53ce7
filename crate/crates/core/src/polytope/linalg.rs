//! Exact integer linear algebra for desk-scale matrices.

use num_integer::Integer;
use num_rational::Ratio;

pub type Frac = Ratio<i128>;

fn normalize_row(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

/// Fraction-free Gauss-Jordan elimination. Returns the pivot columns; on
/// return each pivot row has zeros in every other pivot column.
fn eliminate(m: &mut [Vec<i128>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let a = m[r][c];
                let b = m[i][c];
                let g = a.gcd(&b);
                let (a, b) = (a / g, b / g);
                let (top, rest) = if i < r {
                    let (lo, hi) = m.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = m.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, y) in rest.iter_mut().zip(top.iter()) {
                    *x = a * *x - b * *y;
                }
                normalize_row(rest);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn to_i128(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect()
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m = to_i128(rows);
    eliminate(&mut m, ncols).len()
}

/// Affine dimension of a point set (`-1` is not representable; empty sets
/// are reported as 0).
pub fn affine_rank(points: &[Vec<i64>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs)
}

/// Integer basis of `{v : rows * v = 0}`, each vector primitive.
pub fn nullspace(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut m = to_i128(rows);
    let pivots = eliminate(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let l = pivots
            .iter()
            .enumerate()
            .fold(1i128, |acc, (r, &pc)| acc.lcm(&m[r][pc].abs()));
        let mut v = vec![0i128; ncols];
        v[f] = l;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][f] * (l / m[r][pc]);
        }
        normalize_row(&mut v);
        basis.push(v.into_iter().map(|x| x as i64).collect());
    }
    basis
}

/// Primitive normal `a` and offset `b` with `a . p = b` for the given
/// affinely independent points spanning a hyperplane of `Z^k`.
pub fn hyperplane_through(points: &[Vec<i64>]) -> Option<(Vec<i64>, i64)> {
    let k = points[0].len();
    let base = &points[0];
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let ns = nullspace(&diffs, k);
    if ns.len() != 1 {
        return None;
    }
    let a = ns.into_iter().next().unwrap();
    let b = dot(&a, base);
    Some((a, b))
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves `sum_i t_i cols[i] = target` for a set of linearly independent
/// integer columns; `None` when `target` is outside their span.
pub fn solve_in_span(cols: &[Vec<i64>], target: &[i64]) -> Option<Vec<Frac>> {
    let k = cols.len();
    let dim = target.len();
    let mut m: Vec<Vec<i128>> = (0..dim)
        .map(|r| {
            let mut row: Vec<i128> = cols.iter().map(|c| c[r] as i128).collect();
            row.push(target[r] as i128);
            row
        })
        .collect();
    let pivots = eliminate(&mut m, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    if pivots.len() != k {
        return None;
    }
    Some(
        pivots
            .iter()
            .enumerate()
            .map(|(r, &pc)| Frac::new(m[r][k], m[r][pc]))
            .collect(),
    )
}

/// Column operations `V` and diagonal entries `d` with `U * W * V = diag(d)`
/// for a full-column-rank integer matrix `W` given by its columns.
pub fn diagonalize_columns(cols: &[Vec<i64>]) -> (Vec<Vec<i128>>, Vec<i128>) {
    let k = cols.len();
    let rows = cols.first().map_or(0, |c| c.len());
    // a[r][c]
    let mut a: Vec<Vec<i128>> = (0..rows)
        .map(|r| cols.iter().map(|c| c[r] as i128).collect())
        .collect();
    let mut v: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut diag = Vec::with_capacity(k);
    for t in 0..k {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..k {
                    if a[r][c] != 0
                        && best.is_none_or(|(br, bc)| a[r][c].abs() < a[br][bc].abs())
                    {
                        best = Some((r, c));
                    }
                }
            }
            let (pr, pc) = best.expect("columns must be linearly independent");
            a.swap(t, pr);
            if pc != t {
                for row in a.iter_mut() {
                    row.swap(t, pc);
                }
                for row in v.iter_mut() {
                    row.swap(t, pc);
                }
            }
            let p = a[t][t];
            let mut clean = true;
            for r in t + 1..rows {
                let f = a[r][t] / p;
                if f != 0 {
                    for c in t..k {
                        a[r][c] -= f * a[t][c];
                    }
                }
                clean &= a[r][t] == 0;
            }
            for c in t + 1..k {
                let f = a[t][c] / p;
                if f != 0 {
                    for row in a.iter_mut() {
                        row[c] -= f * row[t];
                    }
                    for row in v.iter_mut() {
                        row[c] -= f * row[t];
                    }
                }
                clean &= a[t][c] == 0;
            }
            if clean {
                break;
            }
        }
        diag.push(a[t][t].abs());
    }
    (v, diag)
}
