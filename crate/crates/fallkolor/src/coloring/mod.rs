//! Colorings and fall-coloring verification.
//!
//! A coloring stores both the per-vertex assignment and the color classes as
//! bit rows; the two are kept consistent by construction. Verifiers return
//! `None` on success and a least-index witness on failure.

mod file;
mod homomorphism;

pub use file::{read_coloring, write_coloring};
pub use homomorphism::{compose_maps, pullback_coloring, verify_type2_hom, HomWitness, VertexMap};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BitRow, Graph};

/// A total assignment of `vertex_count` vertices to colors `0..k`.
/// Classes may be empty; such a coloring is never fall on a nonempty graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    k: usize,
    assignment: Vec<u32>,
    classes: Vec<BitRow>,
}

impl Coloring {
    pub fn from_assignment(k: usize, assignment: Vec<u32>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        let n = assignment.len();
        let mut classes = vec![BitRow::zeros(n); k];
        for (v, &color) in assignment.iter().enumerate() {
            if color as usize >= k {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} has color {color}, but k = {k}"
                )));
            }
            classes[color as usize].set(v);
        }
        Ok(Self { k, assignment, classes })
    }

    /// Builds from classes, which must partition `0..n`.
    pub fn from_classes(n: usize, classes: Vec<BitRow>) -> Result<Self> {
        let k = classes.len();
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        let mut assignment = vec![u32::MAX; n];
        for (color, class) in classes.iter().enumerate() {
            if class.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "class {color} is over {} vertices, expected {n}",
                    class.len()
                )));
            }
            for v in class.iter_ones() {
                if assignment[v] != u32::MAX {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {v} appears in classes {} and {color}",
                        assignment[v]
                    )));
                }
                assignment[v] = color as u32;
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == u32::MAX) {
            return Err(Error::InvalidParameter(format!("vertex {v} is uncolored")));
        }
        Ok(Self { k, assignment, classes })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.assignment.len()
    }

    /// 0-based color of `v`.
    pub fn color_of(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    pub fn classes(&self) -> &[BitRow] {
        &self.classes
    }

    /// Canonical form: classes ordered by their least vertex index, colors
    /// renumbered accordingly; empty classes go last. Used for all
    /// serialization and for equality in tests.
    pub fn canonical(&self) -> Coloring {
        let mut order: Vec<usize> = (0..self.k).collect();
        order.sort_by_key(|&c| self.classes[c].first_set().unwrap_or(usize::MAX));
        let classes: Vec<BitRow> = order.iter().map(|&c| self.classes[c].clone()).collect();
        let mut assignment = vec![u32::MAX; self.assignment.len()];
        for (new_color, class) in classes.iter().enumerate() {
            for v in class.iter_ones() {
                assignment[v] = new_color as u32;
            }
        }
        Coloring { k: self.k, assignment, classes }
    }
}

/// Why a coloring fails to be fall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FallWitness {
    /// An edge whose endpoints share a color.
    MonochromaticEdge { u: usize, v: usize },
    /// A vertex whose closed neighborhood misses a color (0-based).
    NonColorfulVertex { vertex: usize, missing_color: usize },
}

impl fmt::Display for FallWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FallWitness::MonochromaticEdge { u, v } => {
                write!(f, "monochromatic edge ({}, {})", u + 1, v + 1)
            }
            FallWitness::NonColorfulVertex { vertex, missing_color } => write!(
                f,
                "vertex {} does not see color {}",
                vertex + 1,
                missing_color + 1
            ),
        }
    }
}

fn check_shape(graph: &Graph, coloring: &Coloring) -> Result<()> {
    if coloring.vertex_count() != graph.vertex_count() {
        return Err(Error::ShapeMismatch {
            coloring: coloring.vertex_count(),
            graph: graph.vertex_count(),
        });
    }
    Ok(())
}

/// `None` iff no edge joins two same-colored vertices; otherwise the
/// least-index monochromatic edge.
pub fn is_proper(graph: &Graph, coloring: &Coloring) -> Result<Option<(usize, usize)>> {
    check_shape(graph, coloring)?;
    for u in 0..graph.vertex_count() {
        let class = &coloring.classes()[coloring.color_of(u) as usize];
        let mut conflict = graph.row(u).clone();
        conflict.intersect_with(class);
        let witness = conflict.iter_ones().find(|&v| v > u);
        if let Some(v) = witness {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

/// The set of vertices whose closed neighborhood carries all k colors.
/// Defined for any coloring, proper or not.
pub fn colorful_vertices(graph: &Graph, coloring: &Coloring) -> Result<BitRow> {
    check_shape(graph, coloring)?;
    let n = graph.vertex_count();
    let mut out = BitRow::zeros(n);
    for v in 0..n {
        let closed = graph.closed_neighborhood(v)?;
        let all_seen = coloring.classes().iter().all(|class| class.intersects(&closed));
        if all_seen {
            out.set(v);
        }
    }
    Ok(out)
}

/// `None` iff the coloring is a fall coloring of the graph: proper, with
/// every vertex colorful. The witness is the least-index monochromatic edge,
/// or else the least-index non-colorful vertex with its least missing color.
pub fn is_fall(graph: &Graph, coloring: &Coloring) -> Result<Option<FallWitness>> {
    if let Some((u, v)) = is_proper(graph, coloring)? {
        return Ok(Some(FallWitness::MonochromaticEdge { u, v }));
    }
    for v in 0..graph.vertex_count() {
        let closed = graph.closed_neighborhood(v)?;
        let missing = coloring
            .classes()
            .iter()
            .position(|class| !class.intersects(&closed));
        if let Some(color) = missing {
            return Ok(Some(FallWitness::NonColorfulVertex { vertex: v, missing_color: color }));
        }
    }
    Ok(None)
}
