//! Finite posets, their order polytopes and P-partition generating functions.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::{qfactorial, qint, QRat, SeriesTQ, XPoly, ZPoly};
use crate::error::PosetError;
use crate::polytope::{make_polytope, LatticePolytope, LinearForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    /// `leq[i][j]` iff `i <= j`.
    leq: Vec<Vec<bool>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derivation {
    Opposite,
    AddMin,
    AddMax,
}

/// Poset generated by `covers`, where `(i, j)` means `i < j`.
pub fn make_poset(n: usize, covers: &[(usize, usize)]) -> Result<Poset, PosetError> {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(i, j) in covers {
        if i >= n {
            return Err(PosetError::OutOfRange(i));
        }
        if j >= n {
            return Err(PosetError::OutOfRange(j));
        }
        if i == j {
            return Err(PosetError::Cycle(i));
        }
        leq[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if leq[i][j] && leq[j][i] {
                return Err(PosetError::Cycle(i));
            }
        }
    }
    Ok(Poset { size: n, leq })
}

impl Poset {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Pairs `(i, j)` with `j` covering `i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Topological order with smallest-index tie-breaking; element
    /// `order[k]` receives label `k + 1`.
    pub fn natural_order(&self) -> Vec<usize> {
        let n = self.size;
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .find(|&i| !placed[i] && (0..n).all(|j| placed[j] || !self.lt(j, i)))
                .expect("relation is acyclic");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    /// Calls `visit` on every linear extension, as a sequence of elements.
    pub fn visit_linear_extensions(&self, visit: &mut dyn FnMut(&[usize])) {
        fn go(p: &Poset, placed: &mut Vec<bool>, seq: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
            let n = p.size;
            if seq.len() == n {
                visit(seq);
                return;
            }
            for i in 0..n {
                if !placed[i] && (0..n).all(|j| placed[j] || !p.lt(j, i)) {
                    placed[i] = true;
                    seq.push(i);
                    go(p, placed, seq, visit);
                    seq.pop();
                    placed[i] = false;
                }
            }
        }
        go(self, &mut vec![false; self.size], &mut Vec::new(), visit);
    }

    pub fn linear_extension_count(&self) -> usize {
        let mut c = 0;
        self.visit_linear_extensions(&mut |_| c += 1);
        c
    }

    /// Up-closed subsets, as membership vectors.
    pub fn filters(&self) -> Vec<Vec<bool>> {
        let n = self.size;
        let mut out = Vec::new();
        let order = self.natural_order();
        // Decide membership from the top of the natural order downwards.
        fn go(p: &Poset, order: &[usize], k: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
            if k == 0 {
                out.push(cur.clone());
                return;
            }
            let x = order[k - 1];
            go(p, order, k - 1, cur, out);
            if (0..p.size).all(|y| !p.lt(x, y) || cur[y]) {
                cur[x] = true;
                go(p, order, k - 1, cur, out);
                cur[x] = false;
            }
        }
        go(self, &order, n, &mut vec![false; n], &mut out);
        out
    }
}

/// Order polytope with the sum-of-coordinates form.
pub fn order_polytope(p: &Poset) -> (LatticePolytope, LinearForm) {
    let vertices: Vec<Vec<i64>> = p
        .filters()
        .into_iter()
        .map(|f| f.into_iter().map(i64::from).collect())
        .collect();
    let q = make_polytope(p.size, &vertices).expect("filter indicators have a common length");
    (q, LinearForm::new(vec![1; p.size]))
}

/// Sum of `q^{sum of colours}` over order-preserving colourings by
/// `{0..n}`, or strictly order-preserving ones by `{1..n-1}`.
///
/// The strict sum is the interior weight of `nO(P)`, so reciprocity reads
/// `(-1)^#P L_P([-n]_q) = colouring_sum(P, n, true)` at `q -> 1/q`.
pub fn colouring_sum(p: &Poset, n: i64, strict: bool) -> QRat {
    let order = p.natural_order();
    let (lo, hi) = if strict { (1, n - 1) } else { (0, n) };
    let mut counts: Vec<u64> = Vec::new();
    fn go(
        p: &Poset,
        order: &[usize],
        k: usize,
        colour: &mut Vec<i64>,
        bounds: (i64, i64, bool),
        total: i64,
        counts: &mut Vec<u64>,
    ) {
        if k == order.len() {
            let t = total as usize;
            if counts.len() <= t {
                counts.resize(t + 1, 0);
            }
            counts[t] += 1;
            return;
        }
        let x = order[k];
        let (lo, hi, strict) = bounds;
        // Predecessors of x are already coloured.
        let floor = order[..k]
            .iter()
            .filter(|&&y| p.lt(y, x))
            .map(|&y| colour[y] + i64::from(strict))
            .max()
            .unwrap_or(lo)
            .max(lo);
        for c in floor..=hi {
            colour[x] = c;
            go(p, order, k + 1, colour, bounds, total + c, counts);
        }
    }
    if lo > hi && p.size > 0 {
        return QRat::zero();
    }
    go(p, &order, 0, &mut vec![0; p.size], (lo, hi, strict), 0, &mut counts);
    let coeffs: Vec<i64> = counts.into_iter().map(|c| c as i64).collect();
    QRat::from_poly(ZPoly::from_i64s(&coeffs))
}

/// `sum_w t^{des(w)} q^{comaj(w)}` over linear extensions, read as words of
/// natural labels; `comaj` sums `#P - i` over descent positions `i`.
/// Entry `k` is the coefficient of `t^k`.
pub fn descent_polynomial(p: &Poset) -> Vec<ZPoly> {
    let n = p.size;
    let order = p.natural_order();
    let mut label = vec![0usize; n];
    for (k, &x) in order.iter().enumerate() {
        label[x] = k + 1;
    }
    let mut table: Vec<Vec<i64>> = vec![Vec::new(); n.max(1)];
    p.visit_linear_extensions(&mut |seq| {
        let mut des = 0;
        let mut comaj = 0;
        for i in 1..n {
            if label[seq[i - 1]] > label[seq[i]] {
                des += 1;
                comaj += n - i;
            }
        }
        let row = &mut table[des];
        if row.len() <= comaj {
            row.resize(comaj + 1, 0);
        }
        row[comaj] += 1;
    });
    let mut out: Vec<ZPoly> = table.iter().map(|r| ZPoly::from_i64s(r)).collect();
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// `W_P / prod_{j=0}^{#P} (1 - q^j t)`, in canonical form.
pub fn descent_numerator(p: &Poset) -> SeriesTQ {
    let num = descent_polynomial(p).into_iter().map(QRat::from_poly).collect();
    SeriesTQ::new(num, (0..=p.size as u32).collect())
}

pub fn derive_poset(p: &Poset, kind: Derivation) -> Poset {
    let n = p.size;
    match kind {
        Derivation::Opposite => Poset {
            size: n,
            leq: (0..n).map(|i| (0..n).map(|j| p.leq[j][i]).collect()).collect(),
        },
        // The new minimum becomes element 0; a new maximum is appended.
        Derivation::AddMin | Derivation::AddMax => {
            let off = usize::from(kind == Derivation::AddMin);
            let extra = if off == 1 { 0 } else { n };
            let mut leq = vec![vec![false; n + 1]; n + 1];
            for i in 0..n {
                for j in 0..n {
                    leq[i + off][j + off] = p.leq[i][j];
                }
            }
            for k in 0..=n {
                if off == 1 {
                    leq[extra][k] = true;
                } else {
                    leq[k][extra] = true;
                }
            }
            Poset { size: n + 1, leq }
        }
    }
}

/// Leading coefficient of `L_P` times `[#P]!_q`.
pub fn q_volume(l: &XPoly, size: usize) -> QRat {
    let lead = l.lead().cloned().unwrap_or_default();
    &lead * &qfactorial(size)
}

/// `prod_{i<=m, j<=n} ([i+j-1]_q + q^{i+j-1} x) / [i+j-1]_q`
pub fn macmahon_polynomial(m: usize, n: usize) -> XPoly {
    let mut out = XPoly::one();
    for i in 1..=m {
        for j in 1..=n {
            let k = (i + j - 1) as i64;
            let c = qint(k);
            let factor = XPoly::linear(QRat::one(), &QRat::q_pow(k) / &c);
            out = &out * &factor;
        }
    }
    out
}

/// Size of a longest chain.
pub fn longest_chain(p: &Poset) -> usize {
    let mut best = vec![1usize; p.size];
    for &x in &p.natural_order() {
        for y in 0..p.size {
            if p.lt(y, x) {
                best[x] = best[x].max(best[y] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

pub fn chain(n: usize) -> Poset {
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    make_poset(n, &covers).unwrap()
}

pub fn antichain(n: usize) -> Poset {
    make_poset(n, &[]).unwrap()
}

/// Product of chains of sizes `m` and `n`; element `(i, j)` is `i * n + j`.
pub fn chain_product(m: usize, n: usize) -> Poset {
    let mut covers = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if i + 1 < m {
                covers.push((i * n + j, (i + 1) * n + j));
            }
            if j + 1 < n {
                covers.push((i * n + j, i * n + j + 1));
            }
        }
    }
    make_poset(m * n, &covers).unwrap()
}

fn tree_code(children: &[Vec<usize>], v: usize) -> String {
    let mut subs: Vec<String> = children[v].iter().map(|&c| tree_code(children, c)).collect();
    subs.sort();
    format!("({})", subs.concat())
}

/// Rooted trees with `n` nodes up to isomorphism, as parent arrays with the
/// root at index 0.
pub fn rooted_trees(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut seen: HashSet<String> = HashSet::new();
    let mut out = Vec::new();
    let mut parent = vec![0usize; n];
    fn go(k: usize, parent: &mut Vec<usize>, seen: &mut HashSet<String>, out: &mut Vec<Vec<usize>>) {
        let n = parent.len();
        if k == n {
            let mut children = vec![Vec::new(); n];
            for v in 1..n {
                children[parent[v]].push(v);
            }
            if seen.insert(tree_code(&children, 0)) {
                out.push(parent.clone());
            }
            return;
        }
        for p in 0..k {
            parent[k] = p;
            go(k + 1, parent, seen, out);
        }
    }
    go(1, &mut parent, &mut seen, &mut out);
    out
}

/// Tree poset in which every node is below its parent.
pub fn tree_poset(parent: &[usize]) -> Poset {
    let covers: Vec<(usize, usize)> = (1..parent.len()).map(|v| (v, parent[v])).collect();
    make_poset(parent.len(), &covers).unwrap()
}

/// Elements of a filter, for display.
pub fn filter_elements(f: &[bool]) -> BTreeSet<usize> {
    f.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}
