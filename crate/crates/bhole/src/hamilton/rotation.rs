//! Rotation closures: re-splicing a Hamilton path into a Hamilton cycle
//! using chord edges, plus a bounded rotation-extension constructor that
//! serves as a fast path in front of the exact solver.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{HamiltonSequence, SeqKind};

/// A closure move on a Hamilton path v₁,…,vₙ. Indices are 1-based positions
/// into the path, mirroring the quantifiers of the underlying identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rotation {
    /// Chords v₁vᵢ and vᵢ₋₁vₙ with i ∈ [2, n−1]: splice
    /// v₁,…,vᵢ₋₁,vₙ,…,vᵢ and close.
    Pivot { i: usize },
    /// Noncrossing chords from the endpoints: for a split position
    /// k ∈ [2, n−1], chords v₁vᵢ (i ∈ [2,k]), vₙvⱼ (j ∈ [k, n−1]) and
    /// vᵢ₋₁vⱼ₊₁; i = j is allowed.
    Noncrossing { k: usize, i: usize, j: usize },
    /// Crossing chords: for k ∈ [2, n−1], chords v₁vᵢ (i ∈ [k, n−1]),
    /// vₙvⱼ (j ∈ [1, k−1]) and vᵢ₊₁vⱼ₊₁; i = j+1 is allowed.
    Crossing { k: usize, i: usize, j: usize },
}

fn check_range(name: &str, val: usize, lo: usize, hi: usize) -> Result<()> {
    if val < lo || val > hi {
        return Err(Error::Rotation(format!(
            "index {name}={val} outside [{lo}, {hi}]"
        )));
    }
    Ok(())
}

/// Close a Hamilton path into a Hamilton cycle via the given rotation.
/// Every edge of the output is either a path edge or one of the chord
/// edges whose presence is checked here; a missing chord is reported by
/// name.
pub fn rotation_close(
    g: &Graph,
    path: &HamiltonSequence,
    rotation: Rotation,
) -> Result<HamiltonSequence> {
    if path.kind != SeqKind::Path {
        return Err(Error::Rotation("input must be a path, not a cycle".into()));
    }
    path.validate(g)?;
    let n = path.len();
    if n < 3 {
        return Err(Error::Rotation("path too short to close".into()));
    }
    let v = |idx: usize| path.vertices[idx - 1]; // 1-based
    let require = |a: usize, b: usize| -> Result<()> {
        if g.has_edge(v(a), v(b)) {
            Ok(())
        } else {
            Err(Error::Rotation(format!(
                "missing adjacency v{a} ~ v{b} (vertices {} and {})",
                v(a),
                v(b)
            )))
        }
    };

    let out: Vec<usize> = match rotation {
        Rotation::Pivot { i } => {
            check_range("i", i, 2, n - 1)?;
            require(i, 1)?;
            require(i - 1, n)?;
            // v1..v_{i-1}, then vn down to v_i
            (1..i).chain((i..=n).rev()).map(v).collect()
        }
        Rotation::Noncrossing { k, i, j } => {
            check_range("k", k, 2, n - 1)?;
            check_range("i", i, 2, k)?;
            check_range("j", j, k, n - 1)?;
            require(i, 1)?;
            require(j, n)?;
            require(i - 1, j + 1)?;
            // v1..v_{i-1}, v_{j+1}..vn, then v_j down to v_i
            (1..i)
                .chain(j + 1..=n)
                .chain((i..=j).rev())
                .map(v)
                .collect()
        }
        Rotation::Crossing { k, i, j } => {
            check_range("k", k, 2, n - 1)?;
            check_range("i", i, k, n - 1)?;
            check_range("j", j, 1, k - 1)?;
            require(i, 1)?;
            require(j, n)?;
            require(i + 1, j + 1)?;
            // v1..v_j, vn down to v_{i+1}, then v_{j+1}..v_i
            (1..=j)
                .chain((i + 1..=n).rev())
                .chain(j + 1..=i)
                .map(v)
                .collect()
        }
    };

    let cycle = HamiltonSequence::new(SeqKind::Cycle, out);
    cycle.validate(g)?;
    Ok(cycle)
}

/// Budget = `DEFAULT_BUDGET_FACTOR`·n² rotations unless overridden.
pub const DEFAULT_BUDGET_FACTOR: usize = 50;

/// Bounded rotation-extension search for a Hamilton cycle. Sound but
/// incomplete: a returned cycle always validates, `None` means "gave up"
/// (which is the only possible answer on a non-hamiltonian graph).
pub fn rotation_extension_construct(g: &Graph, budget: Option<usize>) -> Option<HamiltonSequence> {
    let n = g.order();
    if n < 3 || !g.is_connected() {
        return None;
    }
    let mut budget = budget.unwrap_or(DEFAULT_BUDGET_FACTOR * n * n);
    let start = g
        .vertices()
        .min_by_key(|&v| (g.degree(v), v))
        .expect("nonempty");
    let mut path = vec![start];
    let mut visited: u64 = 1 << start;
    let mut seen_states: HashSet<(u64, usize, usize)> = HashSet::new();

    loop {
        // greedy extension at the tail, then at the head
        let mut extended = false;
        loop {
            let tail = *path.last().unwrap();
            let free = g.row(tail) & !visited;
            if free != 0 {
                let w = VertexSet::from_bits(free)
                    .iter()
                    .min_by_key(|&v| (g.degree(v), v))
                    .unwrap();
                path.push(w);
                visited |= 1 << w;
                extended = true;
                continue;
            }
            let head = path[0];
            let free = g.row(head) & !visited;
            if free != 0 {
                let w = VertexSet::from_bits(free)
                    .iter()
                    .min_by_key(|&v| (g.degree(v), v))
                    .unwrap();
                path.reverse();
                path.push(w);
                visited |= 1 << w;
                extended = true;
                continue;
            }
            break;
        }
        let _ = extended;

        if path.len() == n {
            let (head, tail) = (path[0], *path.last().unwrap());
            if g.has_edge(tail, head) {
                let cycle = HamiltonSequence::new(SeqKind::Cycle, path);
                debug_assert!(cycle.validate(g).is_ok());
                return Some(cycle);
            }
            // pivot closure: v_i ~ v1 and v_{i-1} ~ vn
            let seq = HamiltonSequence::new(SeqKind::Path, path.clone());
            for i in 2..n {
                if g.has_edge(path[i - 1], head) && g.has_edge(path[i - 2], tail) {
                    if let Ok(cycle) = rotation_close(g, &seq, Rotation::Pivot { i }) {
                        return Some(cycle);
                    }
                }
            }
        }

        // rotate: chord from the tail to an interior vertex flips a suffix
        // and produces a new endpoint
        if budget == 0 {
            return None;
        }
        let tail = *path.last().unwrap();
        let mut rotated = false;
        let chords: Vec<usize> = VertexSet::from_bits(g.row(tail) & visited).iter().collect();
        for target in chords {
            let pos = path.iter().position(|&x| x == target).unwrap();
            if pos + 2 >= path.len() {
                continue; // chord to the predecessor or tail itself: no-op
            }
            let mut cand = path.clone();
            cand[pos + 1..].reverse();
            let state = (visited, cand[0], *cand.last().unwrap());
            if seen_states.insert(state) {
                path = cand;
                rotated = true;
                budget -= 1;
                break;
            }
        }
        if !rotated {
            // try rotating from the head before giving up
            path.reverse();
            let tail = *path.last().unwrap();
            let chords: Vec<usize> = VertexSet::from_bits(g.row(tail) & visited).iter().collect();
            for target in chords {
                let pos = path.iter().position(|&x| x == target).unwrap();
                if pos + 2 >= path.len() {
                    continue;
                }
                let mut cand = path.clone();
                cand[pos + 1..].reverse();
                let state = (visited, cand[0], *cand.last().unwrap());
                if seen_states.insert(state) {
                    path = cand;
                    rotated = true;
                    budget -= 1;
                    break;
                }
            }
            if !rotated {
                return None;
            }
        }
    }
}
