//! Shared test oracles: raw exhaustive searches, independent of the
//! production code paths they check.
#![allow(dead_code)] // each test target uses a different subset

use bhole::graph::{Graph, VertexSet};

/// All size-k subsets of 0..n as bitmasks.
pub fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(n: usize, k: usize, start: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for v in start..=n.saturating_sub(k) {
            rec(n, k - 1, v + 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k, 0, 0, &mut out);
    }
    out
}

/// Oracle: does an (s,t)-bipartite-hole exist? Enumerates both sides.
pub fn oracle_hole_exists(g: &Graph, s: usize, t: usize) -> bool {
    let n = g.order();
    if s + t > n {
        return false;
    }
    for a in subsets(n, s) {
        let a = VertexSet::from_bits(a);
        let rest: Vec<usize> = g.vertex_set().difference(a).iter().collect();
        for b in subsets(rest.len(), t) {
            let b: VertexSet = VertexSet::from_bits(b).iter().map(|i| rest[i]).collect();
            if !g.sets_touch(a, b) {
                return true;
            }
        }
    }
    false
}

/// Oracle for α̃: smallest k ≥ 1 with a positive hole-free split of k+1.
pub fn oracle_hole_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n >= 2);
    for k in 1.. {
        for s in 1..=k {
            let t = k + 1 - s;
            if !oracle_hole_exists(g, s, t) {
                return k;
            }
        }
    }
    unreachable!()
}

/// Oracle for the max-r formulation.
pub fn oracle_hole_number_dual(g: &Graph) -> usize {
    let mut r = 0;
    while (0..=r + 1).all(|s| oracle_hole_exists(g, s, r + 1 - s)) {
        r += 1;
    }
    r
}

/// Plain unpruned backtracking hamiltonicity, for cross-checking the
/// production solvers.
pub fn oracle_is_hamiltonian(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    fn dfs(g: &Graph, path: &mut Vec<usize>, visited: &mut u64) -> bool {
        let cur = *path.last().unwrap();
        if path.len() == g.order() {
            return g.has_edge(cur, path[0]);
        }
        for w in g.neighbors(cur).iter() {
            if *visited >> w & 1 == 0 {
                path.push(w);
                *visited |= 1 << w;
                if dfs(g, path, visited) {
                    return true;
                }
                path.pop();
                *visited &= !(1 << w);
            }
        }
        false
    }
    dfs(g, &mut vec![0], &mut 1)
}

/// Deterministic random graph stream for sampling tests.
pub struct GraphSampler {
    rng: rand_chacha::ChaCha20Rng,
}

impl GraphSampler {
    pub fn new(seed: u64) -> Self {
        use rand::SeedableRng;
        GraphSampler {
            rng: rand_chacha::ChaCha20Rng::seed_from_u64(seed),
        }
    }

    /// A random graph with order in `min_n..=max_n` and edge probability
    /// drawn from a small fixed palette.
    pub fn next_graph(&mut self, min_n: usize, max_n: usize) -> Graph {
        use rand::Rng;
        let n = self.rng.gen_range(min_n..=max_n);
        let p = [0.2, 0.35, 0.5, 0.65, 0.8][self.rng.gen_range(0..5)];
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if self.rng.gen::<f64>() < p {
                    g = g.with_edge(u, v).unwrap();
                }
            }
        }
        g
    }
}
