//! Exact backtracking search for Hamilton cycles and paths.
//!
//! Path extension over bitset adjacency with three sound prunes: the
//! unvisited region (plus the active endpoints) must stay connected, every
//! unvisited interior vertex must keep two usable connections, and targets
//! must keep one. Start vertex and neighbor order are fixed (minimum degree
//! first) so solver traces are reproducible.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{HamiltonSequence, SeqKind};

/// Exact: returns a validating Hamilton cycle iff one exists. `None` for
/// n < 3.
pub fn find_hamilton_cycle(g: &Graph) -> Option<HamiltonSequence> {
    let n = g.order();
    if n < 3 || !g.is_connected() {
        return None;
    }
    let start = min_degree_vertex(g);
    let mut path = Vec::with_capacity(n);
    path.push(start);
    let mut visited = 1u64 << start;
    if extend_cycle(g, start, &mut path, &mut visited) {
        let seq = HamiltonSequence::new(SeqKind::Cycle, path);
        debug_assert!(seq.validate(g).is_ok());
        Some(seq)
    } else {
        None
    }
}

/// Exact Hamilton (u,v)-path decision. Errors on u = v or out-of-range ids.
pub fn find_hamilton_path(g: &Graph, u: usize, v: usize) -> Result<Option<HamiltonSequence>> {
    let n = g.order();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                order: n,
            });
        }
    }
    if u == v {
        return Err(Error::Param("path endpoints must be distinct".into()));
    }
    let mut path = Vec::with_capacity(n);
    path.push(u);
    let mut visited = 1u64 << u;
    if extend_path(g, Some(v), &mut path, &mut visited) {
        let seq = HamiltonSequence::new(SeqKind::Path, path);
        debug_assert!(seq.validate(g).is_ok());
        Ok(Some(seq))
    } else {
        Ok(None)
    }
}

/// Hamilton path with free endpoints, trying each start vertex in the fixed
/// order. Used by `is_traceable`.
pub(super) fn find_hamilton_path_free(g: &Graph) -> Option<HamiltonSequence> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return None;
    }
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (g.degree(v), v));
    for start in starts {
        let mut path = Vec::with_capacity(n);
        path.push(start);
        let mut visited = 1u64 << start;
        if extend_path(g, None, &mut path, &mut visited) {
            let seq = HamiltonSequence::new(SeqKind::Path, path);
            debug_assert!(seq.validate(g).is_ok());
            return Some(seq);
        }
    }
    None
}

fn min_degree_vertex(g: &Graph) -> usize {
    g.vertices()
        .min_by_key(|&v| (g.degree(v), v))
        .expect("nonempty graph")
}

fn ordered_neighbors(g: &Graph, cur: usize, allowed: u64) -> Vec<usize> {
    let mut ns: Vec<usize> = VertexSet::from_bits(g.row(cur) & allowed).iter().collect();
    ns.sort_by_key(|&v| (g.degree(v), v));
    ns
}

fn extend_cycle(g: &Graph, start: usize, path: &mut Vec<usize>, visited: &mut u64) -> bool {
    let n = g.order();
    let cur = *path.last().unwrap();
    if path.len() == n {
        return g.has_edge(cur, start);
    }
    let rem = g.vertex_set().bits() & !*visited;
    // the cycle must re-enter the unvisited region and return to start
    if g.row(start) & rem == 0 {
        return false;
    }
    if !g.is_connected_within(VertexSet::from_bits(rem | 1 << cur | 1 << start)) {
        return false;
    }
    let anchors = 1u64 << cur | 1 << start;
    let mut probe = rem;
    while probe != 0 {
        let w = probe.trailing_zeros() as usize;
        probe &= probe - 1;
        if (g.row(w) & (rem | anchors)).count_ones() < 2 {
            return false;
        }
    }
    for w in ordered_neighbors(g, cur, rem) {
        path.push(w);
        *visited |= 1 << w;
        if extend_cycle(g, start, path, visited) {
            return true;
        }
        path.pop();
        *visited &= !(1 << w);
    }
    false
}

/// Extends toward `target` (fixed far endpoint) or any endpoint when `None`.
fn extend_path(g: &Graph, target: Option<usize>, path: &mut Vec<usize>, visited: &mut u64) -> bool {
    let n = g.order();
    let cur = *path.last().unwrap();
    if path.len() == n {
        return target.is_none_or(|t| cur == t);
    }
    let rem = g.vertex_set().bits() & !*visited;
    if !g.is_connected_within(VertexSet::from_bits(rem | 1 << cur)) {
        return false;
    }
    let avail = rem | 1 << cur;
    let mut probe = rem;
    while probe != 0 {
        let w = probe.trailing_zeros() as usize;
        probe &= probe - 1;
        let need = match target {
            // the far endpoint needs one connection, interior vertices two
            Some(t) if w == t => 1,
            Some(_) => 2,
            // free endpoints: any one vertex may be the far end; only a
            // degree-0 pocket is hopeless (already caught by connectivity)
            None => 1,
        };
        if (g.row(w) & avail & !(1 << w)).count_ones() < need as u32 {
            return false;
        }
    }
    let extendable = match target {
        // keep the target for last unless it is the only vertex left
        Some(t) if rem != 1 << t => rem & !(1 << t),
        _ => rem,
    };
    for w in ordered_neighbors(g, cur, extendable) {
        path.push(w);
        *visited |= 1 << w;
        if extend_path(g, target, path, visited) {
            return true;
        }
        path.pop();
        *visited &= !(1 << w);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn cycle_on_c5_and_k4() {
        let c5 = generate::cycle(5).unwrap();
        let seq = find_hamilton_cycle(&c5).unwrap();
        seq.validate(&c5).unwrap();
        assert!(find_hamilton_cycle(&generate::complete(4).unwrap()).is_some());
    }

    #[test]
    fn petersen_not_hamiltonian() {
        assert!(find_hamilton_cycle(&generate::petersen()).is_none());
    }

    #[test]
    fn sharpness1_not_hamiltonian() {
        assert!(find_hamilton_cycle(&generate::sharpness1(1, 7).unwrap()).is_none());
    }

    #[test]
    fn small_orders_have_no_cycle() {
        assert!(find_hamilton_cycle(&generate::complete(2).unwrap()).is_none());
        assert!(find_hamilton_cycle(&generate::complete(1).unwrap()).is_none());
    }

    #[test]
    fn path_on_path_graph() {
        let p4 = generate::path(4).unwrap();
        let seq = find_hamilton_path(&p4, 0, 3).unwrap().unwrap();
        assert_eq!(seq.vertices, vec![0, 1, 2, 3]);
        assert!(find_hamilton_path(&p4, 0, 1).unwrap().is_none());
    }

    #[test]
    fn k23_parity_obstruction() {
        // two size-2-side vertices: no Hamilton path between them
        let k23 = Graph::empty(2)
            .unwrap()
            .join(&Graph::empty(3).unwrap())
            .unwrap();
        assert!(find_hamilton_path(&k23, 0, 1).unwrap().is_none());
    }

    #[test]
    fn c5_adjacent_pair_path() {
        let c5 = generate::cycle(5).unwrap();
        let seq = find_hamilton_path(&c5, 0, 1).unwrap().unwrap();
        seq.validate(&c5).unwrap();
    }

    #[test]
    fn path_argument_errors() {
        let c5 = generate::cycle(5).unwrap();
        assert!(find_hamilton_path(&c5, 2, 2).is_err());
        assert!(find_hamilton_path(&c5, 0, 9).is_err());
    }
}
