//! Exhaustive fall-coloring search.
//!
//! A fall k-coloring is exactly a partition of the vertex set into k maximal
//! independent sets, so the decision problem for fixed k is an exact cover
//! problem over the MIS catalog: pick exactly k pairwise disjoint catalog
//! sets covering every vertex.
//!
//! The search is deterministic: it always branches on the least-index
//! uncovered vertex and tries candidate sets in canonical catalog order, so
//! the first solution found is the canonical witness. Parallel runs search
//! top-level branches concurrently but accept the witness of the leftmost
//! successful branch, reproducing the sequential answer bit for bit.

mod mis;

pub use mis::{
    enumerate_mis, enumerate_mis_with_limits, is_dominating, is_independent, MisCatalog,
    DEFAULT_CATALOG_CAP, DEFAULT_MIS_VERTEX_BUDGET,
};

use std::fmt::Write as _;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::Coloring;
use crate::error::Result;
use crate::graph::{BitRow, Graph};

/// Default number of search-tree expansions allowed per k.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Search tuning knobs. Worker count affects speed only, never results.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { node_budget: DEFAULT_NODE_BUDGET, workers: 1 }
    }
}

/// Outcome of a fixed-k search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The canonical fall k-coloring witness.
    Found(Coloring),
    /// The search space was exhausted: no fall k-coloring exists.
    Nonexistent,
    /// The node budget ran out first; existence is undecided.
    Inconclusive { nodes_expanded: u64 },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Aggregate counters; excluded from all serialized output.
#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

/// The fall spectrum of a graph over a searched k-range, with one canonical
/// witness per attained k.
#[derive(Clone, Debug)]
pub struct SpectrumResult {
    pub graph_name: String,
    /// Decided range; empty when `k_min > k_max`.
    pub k_min: usize,
    pub k_max: usize,
    /// Attained k values, ascending.
    pub spectrum: Vec<usize>,
    /// Canonical witness per attained k.
    pub witnesses: Vec<(usize, Coloring)>,
    /// k values left undecided by budget exhaustion; nonempty means partial.
    pub unresolved: Vec<usize>,
    pub stats: SearchStats,
}

impl SpectrumResult {
    pub fn is_partial(&self) -> bool {
        !self.unresolved.is_empty()
    }

    pub fn witness_for(&self, k: usize) -> Option<&Coloring> {
        self.witnesses.iter().find(|(kk, _)| *kk == k).map(|(_, c)| c)
    }

    /// Structured text: graph name, searched range, spectrum, and a
    /// `partial` line when unresolved k remain. Witness colorings are
    /// written separately, one coloring file per attained k. Statistics are
    /// deliberately omitted so equal runs render byte-identically.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph {}", self.graph_name).unwrap();
        if self.k_min > self.k_max {
            writeln!(out, "searched empty").unwrap();
        } else {
            writeln!(out, "searched {} {}", self.k_min, self.k_max).unwrap();
        }
        let mut line = String::from("spectrum");
        for k in &self.spectrum {
            write!(line, " {k}").unwrap();
        }
        writeln!(out, "{line}").unwrap();
        if !self.unresolved.is_empty() {
            let mut line = String::from("partial");
            for k in &self.unresolved {
                write!(line, " {k}").unwrap();
            }
            writeln!(out, "{line}").unwrap();
        }
        out
    }
}

/// The k-interval outside which no fall k-coloring can exist: every class
/// is an MIS, so k·(max MIS size) ≥ |V| and k·(min MIS size) ≤ |V|; and a
/// minimum-degree vertex must see k−1 other colors among its neighbors, so
/// k ≤ δ+1. Returns (lo, hi), empty when lo > hi.
pub fn feasible_k_window(graph: &Graph, catalog: &MisCatalog) -> (usize, usize) {
    let n = graph.vertex_count();
    let lo = n.div_ceil(catalog.max_size());
    let hi = (graph.min_degree() + 1).min(n / catalog.min_size());
    (lo.max(1), hi)
}

/// Decides whether the graph has a fall k-coloring, returning the canonical
/// witness if so. `Nonexistent` is a proof of nonexistence; exhaustion of
/// the node budget yields an explicit inconclusive outcome instead.
pub fn find_fall_coloring(graph: &Graph, k: usize, config: &SearchConfig) -> Result<SearchOutcome> {
    let catalog = enumerate_mis(graph)?;
    Ok(search_fixed_k(graph, &catalog, k, config).0)
}

/// Computes the fall spectrum over `range` (defaulting to the feasible
/// window), ascending, with one canonical witness per attained k.
pub fn fall_spectrum(
    graph: &Graph,
    range: Option<(usize, usize)>,
    config: &SearchConfig,
) -> Result<SpectrumResult> {
    let start = Instant::now();
    let catalog = enumerate_mis(graph)?;
    let (win_lo, win_hi) = feasible_k_window(graph, &catalog);
    // A requested k outside the window is already decided (nonexistent), so
    // an explicit range never has to be clamped to stay sound.
    let (k_min, k_max) = range.unwrap_or((win_lo, win_hi));

    let mut spectrum = Vec::new();
    let mut witnesses = Vec::new();
    let mut unresolved = Vec::new();
    let mut nodes_total = 0;
    let mut k = k_min;
    while k <= k_max {
        let (outcome, nodes) = search_fixed_k(graph, &catalog, k, config);
        nodes_total += nodes;
        match outcome {
            SearchOutcome::Found(c) => {
                spectrum.push(k);
                witnesses.push((k, c));
            }
            SearchOutcome::Nonexistent => {}
            SearchOutcome::Inconclusive { .. } => unresolved.push(k),
        }
        k += 1;
    }

    Ok(SpectrumResult {
        graph_name: graph.name().to_string(),
        k_min,
        k_max,
        spectrum,
        witnesses,
        unresolved,
        stats: SearchStats { nodes_expanded: nodes_total, elapsed: start.elapsed() },
    })
}

struct SearchCtx<'a> {
    catalog: &'a MisCatalog,
    k: usize,
    vertex_count: usize,
    budget: u64,
    nodes: AtomicU64,
    aborted: AtomicBool,
}

fn search_fixed_k(
    graph: &Graph,
    catalog: &MisCatalog,
    k: usize,
    config: &SearchConfig,
) -> (SearchOutcome, u64) {
    let (lo, hi) = feasible_k_window(graph, catalog);
    if k < lo || k > hi {
        return (SearchOutcome::Nonexistent, 0);
    }

    let ctx = SearchCtx {
        catalog,
        k,
        vertex_count: graph.vertex_count(),
        budget: config.node_budget,
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
    };

    // The first branch vertex is 0; every catalog set containing it starts
    // a top-level subtree. Subtrees are independent, so they may run on
    // worker threads; the leftmost success is the canonical witness.
    let candidates = catalog.sets_containing(0);
    let run = |&set_index: &u32| -> Option<Vec<u32>> {
        let mut covered = ctx.catalog.sets()[set_index as usize].clone();
        let mut chosen = vec![set_index];
        dfs(&ctx, &mut covered, &mut chosen)
    };

    let solution = if config.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("worker pool");
        pool.install(|| candidates.par_iter().find_map_first(run))
    } else {
        candidates.iter().find_map(run)
    };

    let nodes = ctx.nodes.load(Ordering::Relaxed);
    let outcome = match solution {
        Some(chosen) => {
            let classes: Vec<BitRow> = chosen
                .iter()
                .map(|&i| catalog.sets()[i as usize].clone())
                .collect();
            let coloring = Coloring::from_classes(graph.vertex_count(), classes)
                .expect("exact cover is a partition");
            debug_assert!(crate::coloring::is_fall(graph, &coloring).unwrap().is_none());
            SearchOutcome::Found(coloring)
        }
        None if ctx.aborted.load(Ordering::Relaxed) => {
            SearchOutcome::Inconclusive { nodes_expanded: nodes }
        }
        None => SearchOutcome::Nonexistent,
    };
    (outcome, nodes)
}

fn dfs(ctx: &SearchCtx<'_>, covered: &mut BitRow, chosen: &mut Vec<u32>) -> Option<Vec<u32>> {
    if ctx.aborted.load(Ordering::Relaxed) {
        return None;
    }
    if ctx.nodes.fetch_add(1, Ordering::Relaxed) + 1 > ctx.budget {
        ctx.aborted.store(true, Ordering::Relaxed);
        return None;
    }

    let remaining = ctx.vertex_count - covered.count_ones();
    if remaining == 0 {
        return (chosen.len() == ctx.k).then(|| chosen.clone());
    }
    let slots = ctx.k - chosen.len();
    // Cardinality window: the leftover sets must tile the leftover vertices.
    if slots == 0
        || slots * ctx.catalog.max_size() < remaining
        || slots * ctx.catalog.min_size() > remaining
    {
        return None;
    }

    let v = covered.first_unset().expect("remaining > 0");
    for &set_index in ctx.catalog.sets_containing(v) {
        let set = &ctx.catalog.sets()[set_index as usize];
        if set.is_disjoint(covered) {
            covered.union_with(set);
            chosen.push(set_index);
            if let Some(solution) = dfs(ctx, covered, chosen) {
                return Some(solution);
            }
            chosen.pop();
            covered.difference_with(set);
        }
    }
    None
}
