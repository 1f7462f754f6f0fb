//! Finite simple graphs with one adjacency bit row per vertex, the Kneser
//! graph generator, and DIMACS file I/O.

mod bitrow;
mod dimacs;

pub use bitrow::BitRow;
pub use dimacs::{read_dimacs, write_dimacs};

use crate::combinatorics::{binomial, colex_subsets, SubsetLabel};
use crate::error::{Error, Result};

/// Default cap on generated Kneser graph vertex counts.
pub const DEFAULT_VERTEX_BUDGET: u64 = 10_000;

/// An immutable finite simple graph. Adjacency is symmetric and irreflexive
/// by construction. Kneser graphs carry one subset label per vertex, in
/// colexicographic order of labels; graphs loaded from plain DIMACS carry
/// none.
#[derive(Clone, Debug)]
pub struct Graph {
    name: String,
    n: usize,
    adj: Vec<BitRow>,
    labels: Option<Vec<SubsetLabel>>,
}

impl Graph {
    /// Builds a graph from an undirected edge list over `0..n`.
    /// Self-loops and duplicate edges are rejected.
    pub fn from_edges(name: impl Into<String>, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        let mut adj = vec![BitRow::zeros(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if adj[u].get(v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            adj[u].set(v);
            adj[v].set(u);
        }
        Ok(Self { name: name.into(), n, adj, labels: None })
    }

    /// The Kneser graph KG(n, m) with the default vertex budget: vertices
    /// are the m-subsets of [n] in colex order, adjacent iff disjoint.
    pub fn kneser(n: u32, m: u32) -> Result<Self> {
        Self::kneser_with_budget(n, m, DEFAULT_VERTEX_BUDGET)
    }

    /// Kneser graph with an explicit vertex budget.
    pub fn kneser_with_budget(n: u32, m: u32, budget: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be positive".into()));
        }
        if m > n {
            return Err(Error::InvalidParameter(format!("m = {m} > n = {n}")));
        }
        let count = binomial(n as u64, m as u64)?;
        if count > budget {
            return Err(Error::VertexBudgetExceeded { n, m, count, budget });
        }
        let vcount = count as usize;
        let labels: Vec<SubsetLabel> = colex_subsets(n, m).collect();
        debug_assert_eq!(labels.len(), vcount);

        let mut adj = vec![BitRow::zeros(vcount); vcount];
        for u in 0..vcount {
            for v in (u + 1)..vcount {
                if labels[u].is_disjoint(&labels[v]) {
                    adj[u].set(v);
                    adj[v].set(u);
                }
            }
        }
        Ok(Self {
            name: format!("KG({n},{m})"),
            n: vcount,
            adj,
            labels: Some(labels),
        })
    }

    pub(crate) fn with_labels(
        name: impl Into<String>,
        n: usize,
        edges: &[(usize, usize)],
        labels: Vec<SubsetLabel>,
    ) -> Result<Self> {
        let mut g = Self::from_edges(name, n, edges)?;
        if labels.len() != n {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {n} vertices",
                labels.len()
            )));
        }
        for i in 0..labels.len() {
            for j in (i + 1)..labels.len() {
                if labels[i] == labels[j] {
                    return Err(Error::InvalidGraph(format!(
                        "duplicate label {} on vertices {} and {}",
                        labels[i],
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        g.labels = Some(labels);
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The adjacency bit row of `v`.
    pub fn row(&self, v: usize) -> &BitRow {
        &self.adj[v]
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].get(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones()).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter_ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// {v} ∪ neighbors(v) as a bit row.
    pub fn closed_neighborhood(&self, v: usize) -> Result<BitRow> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { index: v, count: self.n });
        }
        let mut row = self.adj[v].clone();
        row.set(v);
        Ok(row)
    }

    pub fn labels(&self) -> Option<&[SubsetLabel]> {
        self.labels.as_deref()
    }

    /// Structural identity: same vertex count, adjacency, and labels.
    /// The name tag is ignored.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj && self.labels == other.labels
    }

    /// Full scan for adjacency symmetry, irreflexivity, and label
    /// distinctness. Construction paths enforce these; this re-checks them,
    /// e.g. after file loads in tests.
    pub fn check_invariants(&self) -> Result<()> {
        for u in 0..self.n {
            if self.adj[u].len() != self.n {
                return Err(Error::InvalidGraph(format!("row {u} has wrong length")));
            }
            if self.adj[u].get(u) {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            for v in self.adj[u].iter_ones() {
                if !self.adj[v].get(u) {
                    return Err(Error::InvalidGraph(format!("asymmetric edge ({u},{v})")));
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::InvalidGraph("label count mismatch".into()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kneser_4_2_is_a_matching() {
        let g = Graph::kneser(4, 2).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 3);
        assert!((0..6).all(|v| g.degree(v) == 1));
        g.check_invariants().unwrap();
    }

    #[test]
    fn kneser_n_1_is_complete() {
        let g = Graph::kneser(6, 1).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 15);
        assert!((0..6).all(|v| g.degree(v) == 5));
    }

    #[test]
    fn kneser_5_2_is_petersen() {
        let g = Graph::kneser(5, 2).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn kneser_regularity_sweep() {
        for &(n, m) in &[(5u32, 2u32), (6, 2), (7, 2), (7, 3), (9, 3), (6, 3), (8, 4)] {
            let g = Graph::kneser(n, m).unwrap();
            let want = binomial((n - m) as u64, m as u64).unwrap() as usize;
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == want), "KG({n},{m})");
            assert_eq!(g.vertex_count() as u64, binomial(n as u64, m as u64).unwrap());
            g.check_invariants().unwrap();
        }
    }

    #[test]
    fn kneser_errors() {
        assert!(matches!(Graph::kneser(2, 3), Err(Error::InvalidParameter(_))));
        assert!(matches!(Graph::kneser(0, 0), Err(Error::InvalidParameter(_))));
        assert!(matches!(
            Graph::kneser(30, 15),
            Err(Error::VertexBudgetExceeded { .. })
        ));
    }

    #[test]
    fn closed_neighborhoods() {
        // Isolated vertex.
        let g = Graph::from_edges("edgeless", 3, &[]).unwrap();
        assert_eq!(
            g.closed_neighborhood(1).unwrap(),
            BitRow::from_indices(3, &[1])
        );
        // Complete graph.
        let k3 = Graph::from_edges("K3", 3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(
            k3.closed_neighborhood(0).unwrap(),
            BitRow::from_indices(3, &[0, 1, 2])
        );
        // KG(5,2) at the vertex {1,2}: itself plus {3,4}, {3,5}, {4,5}.
        let g = Graph::kneser(5, 2).unwrap();
        let v = SubsetLabel::new(vec![1, 2], 5).unwrap().colex_rank().unwrap() as usize;
        let expect: Vec<usize> = [vec![1u32, 2], vec![3, 4], vec![3, 5], vec![4, 5]]
            .iter()
            .map(|e| {
                SubsetLabel::new(e.clone(), 5).unwrap().colex_rank().unwrap() as usize
            })
            .collect();
        assert_eq!(
            g.closed_neighborhood(v).unwrap(),
            BitRow::from_indices(10, &expect)
        );
        assert!(g.closed_neighborhood(10).is_err());
    }

    #[test]
    fn from_edges_validation() {
        assert!(Graph::from_edges("g", 0, &[]).is_err());
        assert!(Graph::from_edges("g", 2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges("g", 2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges("g", 2, &[(0, 2)]).is_err());
    }

    #[test]
    fn kneser_2_adjacency_matches_line_graph_complement() {
        // Independent oracle: vertices of KG(n,2) are the edges of K_n;
        // adjacency iff the two K_n edges share no endpoint, computed here
        // from explicit endpoint comparisons rather than subset arithmetic.
        for n in 5u32..=7 {
            let g = Graph::kneser(n, 2).unwrap();
            let mut pairs = Vec::new();
            for b in 1..=n {
                for a in 1..b {
                    pairs.push((a, b));
                }
            }
            assert_eq!(pairs.len(), g.vertex_count());
            for (i, &(a, b)) in pairs.iter().enumerate() {
                for (j, &(c, d)) in pairs.iter().enumerate() {
                    let share = a == c || a == d || b == c || b == d;
                    let adjacent = i != j && !share;
                    assert_eq!(g.are_adjacent(i, j), adjacent, "n={n} {i}~{j}");
                }
            }
        }
    }
}
