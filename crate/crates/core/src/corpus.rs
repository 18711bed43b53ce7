//! Built-in test instances: the worked examples, a few extra polytopes,
//! small posets and seeded random polytopes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::{antichain, chain, chain_product, derive_poset, make_poset, rooted_trees, tree_poset, Derivation, Poset};
use crate::polytope::{make_polytope, validate_pair, LatticePolytope, LinearForm};

#[derive(Clone, Debug)]
pub struct NamedPolytope {
    pub name: String,
    pub polytope: LatticePolytope,
    pub form: LinearForm,
}

#[derive(Clone, Debug)]
pub struct NamedPoset {
    pub name: String,
    pub poset: Poset,
}

fn named(name: &str, dim: usize, pts: &[&[i64]], form: &[i64]) -> NamedPolytope {
    let pts: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
    NamedPolytope {
        name: name.to_string(),
        polytope: make_polytope(dim, &pts).expect("corpus polytope"),
        form: LinearForm::new(form.to_vec()),
    }
}

pub fn exa() -> NamedPolytope {
    named("segment [0,1]", 1, &[&[0], &[1]], &[1])
}

pub fn exb() -> NamedPolytope {
    named("triangle (0,0),(1,0),(1,1)", 2, &[&[0, 0], &[1, 0], &[1, 1]], &[1, 1])
}

pub fn exc() -> NamedPolytope {
    named("parallelogram (0,0),(1,0),(1,1),(2,1)", 2, &[&[0, 0], &[1, 0], &[1, 1], &[2, 1]], &[1, 1])
}

pub fn exd() -> NamedPolytope {
    named("quadrilateral (0,0),(1,0),(1,1),(0,3)", 2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 3]], &[1, 1])
}

/// The four worked examples, in order.
pub fn examples() -> Vec<NamedPolytope> {
    vec![exa(), exb(), exc(), exd()]
}

/// Worked examples plus polytopes exercising larger lattice indices,
/// lower-dimensional embeddings and interior points.
pub fn polytope_corpus() -> Vec<NamedPolytope> {
    let mut out = examples();
    out.push(named("segment [0,2]", 1, &[&[0], &[2]], &[1]));
    out.push(named("segment (0,0)-(2,1)", 2, &[&[0, 0], &[2, 1]], &[1, 1]));
    out.push(named("point (1,2)", 2, &[&[1, 2]], &[1, 0]));
    out.push(named(
        "hexagon",
        2,
        &[&[0, 0], &[1, 0], &[2, 1], &[2, 2], &[1, 2], &[0, 1]],
        &[1, 2],
    ));
    out.push(named("triangle (0,0),(3,0),(0,3)", 2, &[&[0, 0], &[3, 0], &[0, 3]], &[1, 2]));
    out.push(named(
        "tetrahedron of volume 2",
        3,
        &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]],
        &[1, 2, 1],
    ));
    out.push(named(
        "triangle in a plane of Z^3",
        3,
        &[&[0, 0, 0], &[1, 0, 1], &[0, 2, 2]],
        &[1, 1, 1],
    ));
    out
}

pub fn claw() -> Poset {
    make_poset(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

pub fn coclaw() -> Poset {
    derive_poset(&claw(), Derivation::Opposite)
}

fn np(name: impl Into<String>, poset: Poset) -> NamedPoset {
    NamedPoset {
        name: name.into(),
        poset,
    }
}

/// Rooted trees with at most `max_nodes` nodes, the root being the maximum.
pub fn tree_posets(max_nodes: usize) -> Vec<NamedPoset> {
    let mut out = Vec::new();
    for n in 1..=max_nodes {
        for (k, parent) in rooted_trees(n).into_iter().enumerate() {
            out.push(np(format!("tree {n}.{k} {parent:?}"), tree_poset(&parent)));
        }
    }
    out
}

pub fn poset_corpus() -> Vec<NamedPoset> {
    let mut out = vec![np("claw", claw()), np("co-claw", coclaw())];
    for n in 1..=4 {
        out.push(np(format!("chain {n}"), chain(n)));
    }
    for n in 2..=4 {
        out.push(np(format!("antichain {n}"), antichain(n)));
    }
    for (m, n) in [(2, 2), (3, 2), (3, 3)] {
        out.push(np(format!("chain product {m}x{n}"), chain_product(m, n)));
    }
    out.extend(tree_posets(5).into_iter().filter(|t| t.poset.size() >= 3));
    out
}

/// Random valid pairs: dimension at most 3, coordinates in `[0, 4]`, form
/// entries in `{0, 1, 2}`, and form maximum at most 8.
pub fn random_polytopes(seed: u64, count: usize) -> Vec<NamedPolytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let dim = rng.gen_range(1..=3usize);
        let npts = rng.gen_range(dim + 1..=dim + 3);
        let pts: Vec<Vec<i64>> = (0..npts)
            .map(|_| (0..dim).map(|_| rng.gen_range(0..=4)).collect())
            .collect();
        let form = LinearForm::new((0..dim).map(|_| rng.gen_range(0..=2)).collect());
        let q = make_polytope(dim, &pts).expect("random points share a dimension");
        if validate_pair(&q, &form).is_err() || q.lambda_range(&form).1 > 8 {
            continue;
        }
        let k = out.len();
        out.push(NamedPolytope {
            name: format!("random {seed}.{k}"),
            polytope: q,
            form,
        });
    }
    out
}
