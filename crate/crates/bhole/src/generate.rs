//! Generators for standard graphs and the two sharpness families.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// PRNG algorithm used by [`gnp`]; recorded in reports so corpora are
/// reproducible across builds.
pub const RNG_ALGORITHM: &str = "chacha20";

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Empty(usize),
    Petersen,
    Gnp { n: usize, p: f64, seed: u64 },
    /// K_a ⊔ K_b plus a single bridge; requires b ≥ 3a+4.
    Sharpness1 { a: usize, b: usize },
    /// (K_{a−2} ∪ K_1) ∨ K_2; requires a ≥ 3.
    Sharpness2 { a: usize },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Complete(n) => complete(n),
        Family::Cycle(n) => cycle(n),
        Family::Path(n) => path(n),
        Family::Empty(n) => Graph::empty(n),
        Family::Petersen => Ok(petersen()),
        Family::Gnp { n, p, seed } => gnp(n, p, seed),
        Family::Sharpness1 { a, b } => sharpness1(a, b),
        Family::Sharpness2 { a } => sharpness2(a),
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Param(format!("cycle requires n ≥ 3, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Param("path requires n ≥ 1".into()));
    }
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn petersen() -> Graph {
    // outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i -- i+5
    let mut g = Graph::empty(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
    }
    g
}

/// Erdős–Rényi G(n,p), deterministic in `seed`. Pairs are sampled in
/// lexicographic order (0,1), (0,2), ..., one draw per pair.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Param(format!("gnp requires 0 ≤ p ≤ 1, got {p}")));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// K_a ⊔ K_b plus exactly one edge between vertex 0 of the K_a block and
/// vertex 0 (index a) of the K_b block.
pub fn sharpness1(a: usize, b: usize) -> Result<Graph> {
    if a < 1 {
        return Err(Error::Param("sharpness1 requires a ≥ 1".into()));
    }
    if b < 3 * a + 4 {
        return Err(Error::Param(format!(
            "sharpness1 requires b ≥ 3a+4 (a={a} needs b ≥ {}, got {b})",
            3 * a + 4
        )));
    }
    let g = complete(a)?.disjoint_union(&complete(b)?)?;
    g.with_edge(0, a)
}

/// (K_{a−2} ∪ K_1) ∨ K_2 on a+1 vertices. The K_1 vertex is index a−2,
/// the two join vertices are the last two indices.
pub fn sharpness2(a: usize) -> Result<Graph> {
    if a < 3 {
        return Err(Error::Param(format!("sharpness2 requires a ≥ 3, got {a}")));
    }
    let left = complete(a - 2)?.disjoint_union(&complete(1)?)?;
    left.join(&complete(2)?)
}
