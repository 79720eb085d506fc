//! Held–Karp-style subset dynamic programming over path endpoints.
//!
//! `dp[mask]` holds the set of vertices `v` such that some path starting at
//! the fixed root covers exactly `mask` and ends at `v`. Independent of the
//! backtracking engine; the two are cross-checked against each other.

use crate::graph::Graph;

/// Practical cap: the table has 2^n words.
const MAX_DP_ORDER: usize = 24;

fn endpoints_table(g: &Graph, root: usize) -> Vec<u64> {
    let n = g.order();
    assert!(n <= MAX_DP_ORDER, "subset DP limited to n <= {MAX_DP_ORDER}");
    let full = 1usize << n;
    let mut dp = vec![0u64; full];
    dp[1 << root] = 1 << root;
    for mask in 1..full {
        let ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = g.row(v) & !(mask as u64);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                dp[mask | 1 << w] |= 1 << w;
            }
        }
    }
    dp
}

/// Hamiltonicity by subset DP: a spanning path from vertex 0 whose far end
/// sees 0 again. Exact for n ≤ 24.
pub fn is_hamiltonian_dp(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let dp = endpoints_table(g, 0);
    dp[(1 << n) - 1] & g.row(0) != 0
}

/// Hamilton (u,v)-path existence by subset DP.
pub fn has_hamilton_path_dp(g: &Graph, u: usize, v: usize) -> bool {
    let n = g.order();
    if n == 0 || u == v || u >= n || v >= n {
        return false;
    }
    let dp = endpoints_table(g, u);
    dp[(1 << n) - 1] >> v & 1 == 1
}

/// For each root u, the set of vertices reachable as the far end of a
/// spanning path from u. Row u therefore answers all (u,·) path queries.
pub fn all_path_endpoints_dp(g: &Graph) -> Vec<u64> {
    let n = g.order();
    (0..n)
        .map(|u| {
            let dp = endpoints_table(g, u);
            dp[(1 << n) - 1] & !(1 << u)
        })
        .collect()
}
