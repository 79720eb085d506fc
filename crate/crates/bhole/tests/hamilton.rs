//! Solver cross-checks, the cone reduction, and rotation soundness.

mod support;

use bhole::generate;
use bhole::graph::Graph;
use bhole::hamilton::{
    all_path_endpoints_dp, cone, find_hamilton_cycle, find_hamilton_path, is_hamiltonian_dp,
    is_traceable, rotation_close, rotation_extension_construct, HamiltonSequence, Rotation,
    SeqKind,
};
use bhole::theorems::enumerate_labeled;
use support::{oracle_is_hamiltonian, GraphSampler};

#[test]
fn backtracking_and_dp_agree_exhaustively() {
    for n in 1..=6 {
        for g in enumerate_labeled(n).unwrap() {
            let bt = find_hamilton_cycle(&g);
            assert_eq!(bt.is_some(), is_hamiltonian_dp(&g));
            if let Some(seq) = bt {
                seq.validate(&g).unwrap();
            }
            // all-pairs path existence
            let ends = all_path_endpoints_dp(&g);
            for u in 0..n {
                for v in u + 1..n {
                    let bt_path = find_hamilton_path(&g, u, v).unwrap();
                    assert_eq!(bt_path.is_some(), ends[u] >> v & 1 == 1);
                    if let Some(seq) = bt_path {
                        seq.validate(&g).unwrap();
                        assert_eq!(seq.vertices[0], u);
                        assert_eq!(*seq.vertices.last().unwrap(), v);
                    }
                }
            }
        }
    }
}

#[test]
fn solvers_agree_with_plain_oracle_on_samples() {
    let mut sampler = GraphSampler::new(0xcafe);
    for _ in 0..120 {
        let g = sampler.next_graph(3, 12);
        let bt = find_hamilton_cycle(&g).is_some();
        assert_eq!(bt, is_hamiltonian_dp(&g));
        assert_eq!(bt, oracle_is_hamiltonian(&g));
    }
}

#[test]
fn cone_reduction_exhaustively() {
    for n in 2..=6 {
        for g in enumerate_labeled(n).unwrap() {
            let apex = cone(&g).unwrap();
            assert_eq!(apex.order(), n + 1);
            assert_eq!(apex.degree(n), n);
            // traceable(G) ⟺ hamiltonian(G ∨ K1); is_traceable itself
            // asserts the agreement internally, exercise it on everything
            let (tr, witness) = is_traceable(&g);
            assert_eq!(tr, find_hamilton_cycle(&apex).is_some());
            if let Some(seq) = witness {
                seq.validate(&g).unwrap();
            }
        }
    }
}

#[test]
fn rotation_soundness_on_found_instances() {
    // for sampled graphs with a Hamilton path, every applicable rotation at
    // every index must close into a valid Hamilton cycle
    let mut sampler = GraphSampler::new(0x0707);
    let mut instances = 0;
    while instances < 400 {
        let g = sampler.next_graph(4, 10);
        let Some(path) = first_hamilton_path(&g) else {
            continue;
        };
        let n = path.len();
        let vs = &path.vertices;
        let adj = |a: usize, b: usize| g.has_edge(vs[a - 1], vs[b - 1]);
        for i in 2..n {
            if adj(i, 1) && adj(i - 1, n) {
                let c = rotation_close(&g, &path, Rotation::Pivot { i }).unwrap();
                c.validate(&g).unwrap();
                instances += 1;
            }
        }
        for k in 2..n {
            for i in 2..=k {
                for j in k..n {
                    if adj(i, 1) && adj(j, n) && adj(i - 1, j + 1) {
                        let c =
                            rotation_close(&g, &path, Rotation::Noncrossing { k, i, j }).unwrap();
                        c.validate(&g).unwrap();
                        instances += 1;
                    }
                }
            }
            for i in k..n {
                for j in 1..k {
                    if adj(i, 1) && adj(j, n) && adj(i + 1, j + 1) {
                        let c = rotation_close(&g, &path, Rotation::Crossing { k, i, j }).unwrap();
                        c.validate(&g).unwrap();
                        instances += 1;
                    }
                }
            }
        }
    }
}

fn first_hamilton_path(g: &Graph) -> Option<HamiltonSequence> {
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if let Some(p) = find_hamilton_path(g, u, v).unwrap() {
                return Some(p);
            }
        }
    }
    None
}

#[test]
fn rotation_never_fabricates_edges() {
    // output consecutive pairs must all be edges, checked by validate; also
    // confirm the rejected-precondition path reports cleanly
    let g = generate::path(5).unwrap();
    let p = HamiltonSequence::new(SeqKind::Path, vec![0, 1, 2, 3, 4]);
    for i in 2..5 {
        assert!(rotation_close(&g, &p, Rotation::Pivot { i }).is_err());
    }
}

#[test]
fn rotation_extension_is_sound_exhaustively() {
    for n in 3..=6 {
        for g in enumerate_labeled(n).unwrap() {
            if let Some(cycle) = rotation_extension_construct(&g, None) {
                cycle.validate(&g).unwrap();
                assert!(is_hamiltonian_dp(&g));
            }
        }
    }
}

#[test]
fn rotation_extension_finds_easy_cycles() {
    for g in [
        generate::complete(6).unwrap(),
        generate::cycle(5).unwrap(),
    ] {
        assert!(rotation_extension_construct(&g, None).is_some());
    }
    assert!(rotation_extension_construct(&generate::petersen(), None).is_none());
}
