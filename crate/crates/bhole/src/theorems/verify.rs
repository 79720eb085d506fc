//! Corpus sweeps: evaluate hypothesis/conclusion pairs over enumerated or
//! ingested graphs, in parallel, with a deterministic merged report.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::generate::RNG_ALGORITHM;
use crate::graph::Graph;
use crate::graph6;
use crate::theorems::{labeled_count, labeled_graph, GraphEval, TheoremId};

/// Where the graphs come from.
#[derive(Debug, Clone)]
pub enum CorpusSource {
    /// All labeled graphs on every order in `lo..=hi` (each ≤ 7).
    Enumerate { lo: usize, hi: usize },
    /// Pre-parsed graphs, e.g. from a graph6 file; `lines_skipped` counts
    /// malformed input lines already reported upstream.
    Graphs {
        graphs: Vec<(String, Graph)>,
        lines_skipped: usize,
    },
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub theorems: Vec<TheoremId>,
    pub workers: usize,
    /// Solve conclusions even when the hypothesis fails (for statistics).
    pub survey: bool,
    pub seed: u64,
    /// Free-text corpus description echoed into the report.
    pub description: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TheoremOutcome {
    pub in_range: bool,
    pub hypothesis: Option<bool>,
    pub conclusion: Option<bool>,
    /// ¬hypothesis ∨ conclusion; `None` when not decidable from the above.
    pub consistent: Option<bool>,
}

/// Full invariant profile of one graph plus per-theorem outcomes.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConditionReport {
    pub graph6: String,
    pub n: usize,
    pub e: usize,
    pub delta: usize,
    pub sigma2: crate::invariants::Sigma2,
    pub kappa: usize,
    pub alpha_tilde: Option<usize>,
    pub theorems: BTreeMap<String, TheoremOutcome>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub theorem: String,
    pub report: ConditionReport,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct TheoremStats {
    pub hypothesis_true: u64,
    pub out_of_range: u64,
    pub conclusion_checked: u64,
    pub conclusion_true: u64,
    pub counterexamples: u64,
}

/// Merged sweep result. Serialization is byte-identical for identical
/// corpus, theorem set and seed, at any worker count; wall-clock timing is
/// therefore kept out of the JSON (log it separately if needed).
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub corpus: String,
    pub seed: u64,
    pub rng: String,
    pub survey: bool,
    pub graphs_scanned: u64,
    pub lines_skipped: usize,
    pub theorems: BTreeMap<String, TheoremStats>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn all_consistent(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

struct Partial {
    stats: BTreeMap<String, TheoremStats>,
    counterexamples: Vec<(u64, Counterexample)>,
    scanned: u64,
}

fn scan_one(
    g: &Graph,
    flat_idx: u64,
    opts: &VerifyOptions,
    partial: &mut Partial,
) {
    let n = g.order();
    let mut eval = GraphEval::new(g);
    let mut failing: Vec<TheoremId> = Vec::new();
    for &t in &opts.theorems {
        let stats = partial.stats.entry(t.name().to_string()).or_default();
        if n < t.min_order() {
            stats.out_of_range += 1;
            continue;
        }
        let hyp = eval.hypothesis(t);
        if hyp {
            stats.hypothesis_true += 1;
        }
        if hyp || opts.survey {
            let con = eval.conclusion(t.conclusion());
            stats.conclusion_checked += 1;
            if con {
                stats.conclusion_true += 1;
            }
            if hyp && !con {
                stats.counterexamples += 1;
                failing.push(t);
            }
        }
    }
    if !failing.is_empty() {
        let report = condition_report(g, &mut eval, &opts.theorems, opts.survey);
        for t in failing {
            partial.counterexamples.push((
                flat_idx,
                Counterexample {
                    theorem: t.name().to_string(),
                    report: report.clone(),
                },
            ));
        }
    }
    partial.scanned += 1;
}

fn condition_report(
    g: &Graph,
    eval: &mut GraphEval<'_>,
    theorems: &[TheoremId],
    survey: bool,
) -> ConditionReport {
    let n = g.order();
    let mut outcomes = BTreeMap::new();
    for &t in theorems {
        let outcome = if n < t.min_order() {
            TheoremOutcome {
                in_range: false,
                hypothesis: None,
                conclusion: None,
                consistent: None,
            }
        } else {
            let hyp = eval.hypothesis(t);
            let con = (hyp || survey).then(|| eval.conclusion(t.conclusion()));
            TheoremOutcome {
                in_range: true,
                hypothesis: Some(hyp),
                conclusion: con,
                consistent: if hyp { con } else { Some(true) },
            }
        };
        outcomes.insert(t.name().to_string(), outcome);
    }
    ConditionReport {
        graph6: graph6::to_graph6(g),
        n,
        e: g.size(),
        delta: eval.delta(),
        sigma2: eval.sigma2(),
        kappa: eval.kappa(),
        alpha_tilde: (n >= 2).then(|| eval.alpha_tilde()),
        theorems: outcomes,
    }
}

/// Flat index space over the source; workers take contiguous slices.
enum Indexer<'a> {
    Enumerate { orders: Vec<(usize, u64)> },
    Graphs(&'a [(String, Graph)]),
}

impl Indexer<'_> {
    fn total(&self) -> u64 {
        match self {
            Indexer::Enumerate { orders } => orders.iter().map(|&(_, c)| c).sum(),
            Indexer::Graphs(v) => v.len() as u64,
        }
    }

    fn graph_at(&self, mut idx: u64) -> Graph {
        match self {
            Indexer::Enumerate { orders } => {
                for &(n, count) in orders {
                    if idx < count {
                        return labeled_graph(n, idx);
                    }
                    idx -= count;
                }
                unreachable!("index out of range")
            }
            Indexer::Graphs(v) => v[idx as usize].1.clone(),
        }
    }
}

/// Run the sweep. A counterexample aborts nothing: all of them are
/// collected, sorted by corpus position.
pub fn verify_corpus(source: &CorpusSource, opts: &VerifyOptions) -> VerificationReport {
    let lines_skipped = match source {
        CorpusSource::Graphs { lines_skipped, .. } => *lines_skipped,
        CorpusSource::Enumerate { .. } => 0,
    };
    let indexer = match source {
        CorpusSource::Enumerate { lo, hi } => Indexer::Enumerate {
            orders: (*lo..=*hi).map(|n| (n, labeled_count(n))).collect(),
        },
        CorpusSource::Graphs { graphs, .. } => Indexer::Graphs(graphs),
    };
    let total = indexer.total();
    let workers = opts.workers.max(1).min(total.max(1) as usize);

    let chunk = total.div_ceil(workers as u64).max(1);
    let partials: Vec<Partial> = std::thread::scope(|scope| {
        let indexer = &indexer;
        let handles: Vec<_> = (0..workers as u64)
            .map(|w| {
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(total);
                scope.spawn(move || {
                    let mut partial = Partial {
                        stats: BTreeMap::new(),
                        counterexamples: Vec::new(),
                        scanned: 0,
                    };
                    for idx in lo..hi {
                        let g = indexer.graph_at(idx);
                        scan_one(&g, idx, opts, &mut partial);
                    }
                    partial
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut stats: BTreeMap<String, TheoremStats> = opts
        .theorems
        .iter()
        .map(|t| (t.name().to_string(), TheoremStats::default()))
        .collect();
    let mut counterexamples: Vec<(u64, Counterexample)> = Vec::new();
    let mut scanned = 0;
    for partial in partials {
        scanned += partial.scanned;
        for (name, s) in partial.stats {
            let agg = stats.entry(name).or_default();
            agg.hypothesis_true += s.hypothesis_true;
            agg.out_of_range += s.out_of_range;
            agg.conclusion_checked += s.conclusion_checked;
            agg.conclusion_true += s.conclusion_true;
            agg.counterexamples += s.counterexamples;
        }
        counterexamples.extend(partial.counterexamples);
    }
    counterexamples.sort_by(|a, b| (a.0, &a.1.theorem).cmp(&(b.0, &b.1.theorem)));

    VerificationReport {
        schema_version: 1,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        corpus: opts.description.clone(),
        seed: opts.seed,
        rng: RNG_ALGORITHM.to_string(),
        survey: opts.survey,
        graphs_scanned: scanned,
        lines_skipped,
        theorems: stats,
        counterexamples: counterexamples.into_iter().map(|(_, c)| c).collect(),
    }
}
