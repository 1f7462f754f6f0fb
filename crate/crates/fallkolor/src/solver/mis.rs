//! Maximal independent set enumeration.
//!
//! An MIS is exactly an independent dominating set, hence exactly a possible
//! fall color class. Enumeration runs Bron–Kerbosch with pivoting on the
//! complement adjacency, so the "cliques" it reports are the independent
//! sets of the original graph.

use crate::error::{Error, Result};
use crate::graph::{BitRow, Graph};

/// Default cap on the vertex count accepted by [`enumerate_mis`].
pub const DEFAULT_MIS_VERTEX_BUDGET: usize = 200;
/// Default cap on the catalog size.
pub const DEFAULT_CATALOG_CAP: usize = 1_000_000;

/// Every maximal independent set of a graph, in canonical order
/// (ascending lexicographic on the sorted vertex-index sequences), with a
/// per-vertex membership index.
#[derive(Clone, Debug)]
pub struct MisCatalog {
    sets: Vec<BitRow>,
    per_vertex: Vec<Vec<u32>>,
    min_size: usize,
    max_size: usize,
}

impl MisCatalog {
    pub fn sets(&self) -> &[BitRow] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Catalog indices of the sets containing `v`, ascending.
    pub fn sets_containing(&self, v: usize) -> &[u32] {
        &self.per_vertex[v]
    }

    /// Size of the smallest maximal independent set.
    pub fn min_size(&self) -> usize {
        self.min_size
    }

    /// Size of the largest maximal independent set (the independence number).
    pub fn max_size(&self) -> usize {
        self.max_size
    }

    /// Membership test against the canonical order.
    pub fn contains(&self, set: &BitRow) -> bool {
        self.sets
            .binary_search_by(|probe| probe.iter_ones().cmp(set.iter_ones()))
            .is_ok()
    }
}

/// Enumerates all maximal independent sets with default budgets.
pub fn enumerate_mis(graph: &Graph) -> Result<MisCatalog> {
    enumerate_mis_with_limits(graph, DEFAULT_MIS_VERTEX_BUDGET, DEFAULT_CATALOG_CAP)
}

/// Enumeration with explicit vertex budget and catalog cap; both overruns
/// are explicit errors.
pub fn enumerate_mis_with_limits(
    graph: &Graph,
    vertex_budget: usize,
    catalog_cap: usize,
) -> Result<MisCatalog> {
    let n = graph.vertex_count();
    if n > vertex_budget {
        return Err(Error::MisBudgetExceeded { vertices: n, budget: vertex_budget });
    }

    // Complement adjacency rows (self excluded).
    let comp: Vec<BitRow> = (0..n)
        .map(|v| {
            let mut row = BitRow::zeros(n);
            row.set_all();
            row.difference_with(graph.row(v));
            row.clear(v);
            row
        })
        .collect();

    let mut sets = Vec::new();
    let mut all = BitRow::zeros(n);
    all.set_all();
    bron_kerbosch(
        &comp,
        BitRow::zeros(n),
        all,
        BitRow::zeros(n),
        catalog_cap,
        &mut sets,
    )?;

    sets.sort_by(|a, b| a.iter_ones().cmp(b.iter_ones()));

    // Re-verify each reported set against the definition.
    for set in &sets {
        debug_assert!(!set.is_empty());
        if !is_independent(graph, set) || !is_dominating(graph, set) {
            return Err(Error::ConstructionUnverified(format!(
                "enumerated set {set:?} is not a maximal independent set"
            )));
        }
    }

    let mut per_vertex = vec![Vec::new(); n];
    for (i, set) in sets.iter().enumerate() {
        for v in set.iter_ones() {
            per_vertex[v].push(i as u32);
        }
    }
    let min_size = sets.iter().map(|s| s.count_ones()).min().unwrap_or(0);
    let max_size = sets.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    Ok(MisCatalog { sets, per_vertex, min_size, max_size })
}

/// No edge inside the set.
pub fn is_independent(graph: &Graph, set: &BitRow) -> bool {
    set.iter_ones().all(|v| graph.row(v).is_disjoint(set))
}

/// Every vertex outside the set has a neighbor inside. Together with
/// independence this is exactly maximality.
pub fn is_dominating(graph: &Graph, set: &BitRow) -> bool {
    (0..graph.vertex_count())
        .filter(|&v| !set.get(v))
        .all(|v| graph.row(v).intersects(set))
}

fn bron_kerbosch(
    comp: &[BitRow],
    current: BitRow,
    mut candidates: BitRow,
    mut excluded: BitRow,
    cap: usize,
    out: &mut Vec<BitRow>,
) -> Result<()> {
    if candidates.is_empty() && excluded.is_empty() {
        if out.len() >= cap {
            return Err(Error::CatalogCapExceeded { cap });
        }
        out.push(current);
        return Ok(());
    }
    // Pivot: the candidate-or-excluded vertex covering the most candidates,
    // least index on ties.
    let mut pivot = usize::MAX;
    let mut best = usize::MAX;
    for u in candidates.iter_ones().chain(excluded.iter_ones()) {
        let mut covered = candidates.clone();
        covered.intersect_with(&comp[u]);
        let gain = candidates.count_ones() - covered.count_ones();
        // Minimizing the branch count = candidates not covered by the pivot.
        if gain < best || (gain == best && u < pivot) {
            best = gain;
            pivot = u;
        }
    }
    let mut branch = candidates.clone();
    branch.difference_with(&comp[pivot]);
    for v in branch.iter_ones() {
        let mut next_current = current.clone();
        next_current.set(v);
        let mut next_candidates = candidates.clone();
        next_candidates.intersect_with(&comp[v]);
        let mut next_excluded = excluded.clone();
        next_excluded.intersect_with(&comp[v]);
        bron_kerbosch(comp, next_current, next_candidates, next_excluded, cap, out)?;
        candidates.clear(v);
        excluded.set(v);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::SubsetLabel;

    #[test]
    fn complete_graph_has_singleton_sets() {
        let g = Graph::kneser(5, 1).unwrap();
        let catalog = enumerate_mis(&g).unwrap();
        assert_eq!(catalog.len(), 5);
        assert!(catalog.sets().iter().all(|s| s.count_ones() == 1));
        assert_eq!((catalog.min_size(), catalog.max_size()), (1, 1));
    }

    #[test]
    fn edgeless_graph_has_one_full_set() {
        let g = Graph::from_edges("edgeless", 4, &[]).unwrap();
        let catalog = enumerate_mis(&g).unwrap();
        assert_eq!(catalog.len(), 1);
        assert_eq!(catalog.sets()[0].count_ones(), 4);
    }

    #[test]
    fn petersen_catalog_matches_brute_force() {
        // Independent oracle: test every one of the 2^10 vertex subsets.
        let g = Graph::kneser(5, 2).unwrap();
        let n = g.vertex_count();
        let mut expected = Vec::new();
        for mask in 1u32..(1 << n) {
            let set = BitRow::from_indices(n, &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>());
            if is_independent(&g, &set) && is_dominating(&g, &set) {
                expected.push(set);
            }
        }
        expected.sort_by(|a, b| a.iter_ones().cmp(b.iter_ones()));

        let catalog = enumerate_mis(&g).unwrap();
        assert_eq!(catalog.sets(), &expected[..]);
        assert_eq!(catalog.len(), 15);
        let sizes: Vec<usize> = catalog.sets().iter().map(|s| s.count_ones()).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 4).count(), 5); // stars
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 10); // triangles
    }

    #[test]
    fn petersen_stars_and_triangles_by_label() {
        let g = Graph::kneser(5, 2).unwrap();
        let labels = g.labels().unwrap();
        let catalog = enumerate_mis(&g).unwrap();
        for set in catalog.sets() {
            let members: Vec<&SubsetLabel> = set.iter_ones().map(|v| &labels[v]).collect();
            let common: Vec<u32> = (1..=5)
                .filter(|&e| members.iter().all(|l| l.contains(e)))
                .collect();
            if set.count_ones() == 4 {
                assert_eq!(common.len(), 1, "stars have a common element");
            } else {
                let mut union: Vec<u32> = members.iter().flat_map(|l| l.elements()).copied().collect();
                union.sort_unstable();
                union.dedup();
                assert_eq!(union.len(), 3, "triangles live on three elements");
            }
        }
    }

    #[test]
    fn per_vertex_index_is_consistent() {
        let g = Graph::kneser(5, 2).unwrap();
        let catalog = enumerate_mis(&g).unwrap();
        for v in 0..g.vertex_count() {
            let via_index: Vec<u32> = catalog.sets_containing(v).to_vec();
            let via_scan: Vec<u32> = (0..catalog.len() as u32)
                .filter(|&i| catalog.sets()[i as usize].get(v))
                .collect();
            assert_eq!(via_index, via_scan);
            assert!(via_index.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn contains_uses_canonical_order() {
        let g = Graph::kneser(4, 2).unwrap();
        let catalog = enumerate_mis(&g).unwrap();
        for set in catalog.sets() {
            assert!(catalog.contains(set));
        }
        let not_mis = BitRow::from_indices(6, &[0]);
        assert!(!catalog.contains(&not_mis));
    }

    #[test]
    fn budget_overruns_are_errors() {
        let g = Graph::kneser(5, 2).unwrap();
        assert!(matches!(
            enumerate_mis_with_limits(&g, 5, DEFAULT_CATALOG_CAP),
            Err(Error::MisBudgetExceeded { vertices: 10, budget: 5 })
        ));
        assert!(matches!(
            enumerate_mis_with_limits(&g, 200, 10),
            Err(Error::CatalogCapExceeded { cap: 10 })
        ));
    }
}
