//! Sufficient conditions for hamiltonicity as checkable predicates, plus
//! exhaustive verification over graph corpora.

mod sharpness;
mod verify;

pub use sharpness::{sharpness_audit, ClaimCheck, SharpnessFamily, SharpnessReport};
pub use verify::{
    verify_corpus, ConditionReport, Counterexample, CorpusSource, TheoremOutcome, TheoremStats,
    VerificationReport, VerifyOptions,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamilton;
use crate::invariants::{self, Sigma2};

/// What a theorem concludes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    Hamiltonian,
    Traceable,
    HamiltonianConnected,
}

/// The registered sufficient conditions. Each id binds a hypothesis
/// predicate (degree/σ₂/connectivity side conditions) to a conclusion
/// decided exactly by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// δ ≥ n/2 ⟹ hamiltonian.
    Dirac,
    /// σ₂ ≥ n ⟹ hamiltonian.
    Ore,
    /// δ ≥ α̃ ⟹ hamiltonian.
    McDiarmidYolov,
    /// σ₂ ≥ n+1 ⟹ hamiltonian-connected.
    OreHc,
    /// δ ≥ α̃+1 ⟹ hamiltonian-connected.
    ZhouHc,
    /// 2-connected and σ₂ ≥ 2α̃ ⟹ hamiltonian.
    OreHole,
    /// connected and σ₂ ≥ 2α̃−2 ⟹ traceable.
    OreHoleTrace,
    /// 3-connected and σ₂ ≥ 2α̃+1 ⟹ hamiltonian-connected.
    OreHoleHc,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Dirac,
        TheoremId::Ore,
        TheoremId::McDiarmidYolov,
        TheoremId::OreHc,
        TheoremId::ZhouHc,
        TheoremId::OreHole,
        TheoremId::OreHoleTrace,
        TheoremId::OreHoleHc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Dirac => "dirac",
            TheoremId::Ore => "ore",
            TheoremId::McDiarmidYolov => "mcdiarmid-yolov",
            TheoremId::OreHc => "ore-hc",
            TheoremId::ZhouHc => "zhou-hc",
            TheoremId::OreHole => "ore-hole",
            TheoremId::OreHoleTrace => "ore-hole-trace",
            TheoremId::OreHoleHc => "ore-hole-hc",
        }
    }

    pub fn parse(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Param(format!("unknown theorem id \"{s}\"")))
    }

    /// Smallest order the statement is made for; smaller graphs are out of
    /// range, not counterexamples.
    pub fn min_order(self) -> usize {
        match self {
            TheoremId::OreHoleTrace => 2,
            // a 3-connected graph has at least 4 vertices
            TheoremId::OreHoleHc => 4,
            _ => 3,
        }
    }

    pub fn conclusion(self) -> Conclusion {
        match self {
            TheoremId::Dirac | TheoremId::Ore | TheoremId::McDiarmidYolov | TheoremId::OreHole => {
                Conclusion::Hamiltonian
            }
            TheoremId::OreHoleTrace => Conclusion::Traceable,
            TheoremId::OreHc | TheoremId::ZhouHc | TheoremId::OreHoleHc => {
                Conclusion::HamiltonianConnected
            }
        }
    }
}

fn range_check(g: &Graph, t: TheoremId) -> Result<()> {
    if g.order() < t.min_order() {
        return Err(Error::OrderOutOfRange {
            order: g.order(),
            min: t.min_order(),
            what: format!("theorem {}", t.name()),
        });
    }
    Ok(())
}

/// Evaluate the hypothesis, including connectivity side conditions. An
/// infinite σ₂ satisfies every inequality.
pub fn check_hypothesis(g: &Graph, t: TheoremId) -> Result<bool> {
    range_check(g, t)?;
    let mut eval = GraphEval::new(g);
    Ok(eval.hypothesis(t))
}

/// Decide the conclusion exactly via the Hamilton solvers.
pub fn check_conclusion(g: &Graph, t: TheoremId) -> Result<bool> {
    range_check(g, t)?;
    let mut eval = GraphEval::new(g);
    Ok(eval.conclusion(t.conclusion()))
}

/// Lazily-memoized invariants and solver answers for one graph. Cheap degree
/// facts are computed up front; α̃ and Hamilton decisions only on demand.
pub struct GraphEval<'a> {
    pub g: &'a Graph,
    delta: usize,
    sigma2: Sigma2,
    kappa: Option<usize>,
    alpha: Option<usize>,
    hamiltonian: Option<bool>,
    traceable: Option<bool>,
    ham_connected: Option<bool>,
}

impl<'a> GraphEval<'a> {
    pub fn new(g: &'a Graph) -> Self {
        GraphEval {
            g,
            delta: invariants::min_degree(g).unwrap_or(0),
            sigma2: invariants::sigma2(g),
            kappa: None,
            alpha: None,
            hamiltonian: None,
            traceable: None,
            ham_connected: None,
        }
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn sigma2(&self) -> Sigma2 {
        self.sigma2
    }

    pub fn kappa(&mut self) -> usize {
        *self
            .kappa
            .get_or_insert_with(|| invariants::kappa(self.g).expect("n >= 1"))
    }

    pub fn alpha_tilde(&mut self) -> usize {
        *self
            .alpha
            .get_or_insert_with(|| invariants::hole_number(self.g).expect("n >= 2").value)
    }

    pub fn hamiltonian(&mut self) -> bool {
        if let Some(v) = self.hamiltonian {
            return v;
        }
        // rotation-extension fast path (small budget so misses stay cheap),
        // exact solver as the authority
        let n = self.g.order();
        let v = hamilton::rotation_extension_construct(self.g, Some(4 * n)).is_some()
            || hamilton::find_hamilton_cycle(self.g).is_some();
        self.hamiltonian = Some(v);
        v
    }

    pub fn traceable(&mut self) -> bool {
        *self
            .traceable
            .get_or_insert_with(|| hamilton::is_traceable(self.g).0)
    }

    pub fn ham_connected(&mut self) -> bool {
        if let Some(v) = self.ham_connected {
            return v;
        }
        let v = hamilton::is_hamiltonian_connected(self.g).expect("n >= 2").0;
        self.ham_connected = Some(v);
        v
    }

    /// Hypothesis truth, assuming the order is already in range.
    pub fn hypothesis(&mut self, t: TheoremId) -> bool {
        let n = self.g.order();
        match t {
            TheoremId::Dirac => 2 * self.delta >= n,
            TheoremId::Ore => self.sigma2.at_least(n),
            TheoremId::McDiarmidYolov => self.delta >= self.alpha_tilde(),
            TheoremId::OreHc => self.sigma2.at_least(n + 1),
            TheoremId::ZhouHc => self.delta >= self.alpha_tilde() + 1,
            TheoremId::OreHole => self.kappa() >= 2 && self.sigma2.at_least(2 * self.alpha_tilde()),
            TheoremId::OreHoleTrace => {
                self.kappa() >= 1
                    && self
                        .sigma2
                        .at_least((2 * self.alpha_tilde()).saturating_sub(2))
            }
            TheoremId::OreHoleHc => {
                self.kappa() >= 3 && self.sigma2.at_least(2 * self.alpha_tilde() + 1)
            }
        }
    }

    pub fn conclusion(&mut self, c: Conclusion) -> bool {
        match c {
            Conclusion::Hamiltonian => self.hamiltonian(),
            Conclusion::Traceable => self.traceable(),
            Conclusion::HamiltonianConnected => self.ham_connected(),
        }
    }
}

/// Number of labeled simple graphs on n vertices, 2^C(n,2).
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// The labeled graph on `n` vertices encoded by `mask`: bit k of the mask is
/// the k-th pair in lexicographic order (0,1), (0,2), ..., (1,2), ...
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("n <= 7 in enumeration");
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

/// Built-in cap for exhaustive labeled enumeration; larger sweeps ingest
/// externally produced graph6 corpora instead.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Every labeled simple graph on `n` vertices, edge-mask ascending.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n < 1 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::Param(format!(
            "built-in enumeration covers 1 ≤ n ≤ {MAX_ENUMERATION_ORDER}; \
             ingest a graph6 corpus for larger orders (got n={n})"
        )));
    }
    Ok((0..labeled_count(n)).map(move |mask| labeled_graph(n, mask)))
}
