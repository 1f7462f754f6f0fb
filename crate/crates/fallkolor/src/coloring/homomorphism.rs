//! Type-II graph homomorphisms: vertex maps that preserve edges and,
//! additionally, pull every target edge back onto every preimage vertex.
//! Fall colorings transport backwards along such maps.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{BitRow, Graph};

use super::{is_fall, Coloring};

/// A total function between the vertex sets of two graphs.
#[derive(Clone, Debug)]
pub struct VertexMap {
    source: Arc<Graph>,
    target: Arc<Graph>,
    map: Vec<usize>,
}

impl VertexMap {
    pub fn new(source: Arc<Graph>, target: Arc<Graph>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "map covers {} vertices, source has {}",
                map.len(),
                source.vertex_count()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= target.vertex_count()) {
            return Err(Error::VertexOutOfRange {
                index: bad,
                count: target.vertex_count(),
            });
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(graph: Arc<Graph>) -> Self {
        let map = (0..graph.vertex_count()).collect();
        Self { source: graph.clone(), target: graph, map }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn source_arc(&self) -> Arc<Graph> {
        self.source.clone()
    }

    pub fn target_arc(&self) -> Arc<Graph> {
        self.target.clone()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Preimage of each target vertex, as bit rows over the source.
    fn preimages(&self) -> Vec<BitRow> {
        let n = self.source.vertex_count();
        let mut pre = vec![BitRow::zeros(n); self.target.vertex_count()];
        for (v, &t) in self.map.iter().enumerate() {
            pre[t].set(v);
        }
        pre
    }
}

/// Why a vertex map fails to be a type-II homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomWitness {
    /// A source edge whose image is not a target edge (including collapsed
    /// endpoints: simple graphs have no loops).
    EdgeNotPreserved { u: usize, v: usize },
    /// A target edge and a preimage vertex of one endpoint with no source
    /// neighbor in the other endpoint's preimage.
    MissingNeighbor {
        target_u: usize,
        target_v: usize,
        source_vertex: usize,
    },
}

impl fmt::Display for HomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomWitness::EdgeNotPreserved { u, v } => {
                write!(f, "source edge ({}, {}) is not mapped to a target edge", u + 1, v + 1)
            }
            HomWitness::MissingNeighbor { target_u, target_v, source_vertex } => write!(
                f,
                "target edge ({}, {}): source vertex {} has no neighbor in the preimage of {}",
                target_u + 1,
                target_v + 1,
                source_vertex + 1,
                target_u + 1
            ),
        }
    }
}

/// `None` iff the map is a type-II homomorphism:
/// (1) every source edge maps to a target edge, and
/// (2) for every target edge {u₁,v₁} and every source vertex v mapped to v₁,
///     some source vertex u mapped to u₁ is adjacent to v.
/// Condition (2) is vacuous over empty preimages. Witnesses are least-index.
pub fn verify_type2_hom(hom: &VertexMap) -> Option<HomWitness> {
    let source = hom.source();
    let target = hom.target();

    for (u, v) in source.edges() {
        let (tu, tv) = (hom.apply(u), hom.apply(v));
        if tu == tv || !target.are_adjacent(tu, tv) {
            return Some(HomWitness::EdgeNotPreserved { u, v });
        }
    }

    let pre = hom.preimages();
    for (tu, tv) in target.edges() {
        // Both directions of the edge quantify separately.
        for (a, b) in [(tu, tv), (tv, tu)] {
            for v in pre[b].iter_ones() {
                if !source.row(v).intersects(&pre[a]) {
                    return Some(HomWitness::MissingNeighbor {
                        target_u: a,
                        target_v: b,
                        source_vertex: v,
                    });
                }
            }
        }
    }
    None
}

/// Assigns each source vertex the color of its image; k is preserved.
///
/// When the map verifies as type-II and the coloring is fall on the target,
/// the result is fall on the source; debug builds assert this.
pub fn pullback_coloring(hom: &VertexMap, coloring: &Coloring) -> Result<Coloring> {
    if coloring.vertex_count() != hom.target().vertex_count() {
        return Err(Error::ShapeMismatch {
            coloring: coloring.vertex_count(),
            graph: hom.target().vertex_count(),
        });
    }
    let assignment: Vec<u32> = hom.map().iter().map(|&t| coloring.color_of(t)).collect();
    let pulled = Coloring::from_assignment(coloring.k(), assignment)?;
    debug_assert!(
        verify_type2_hom(hom).is_some()
            || is_fall(hom.target(), coloring)?.is_some()
            || is_fall(hom.source(), &pulled)?.is_none(),
        "pullback of a fall coloring along a type-II homomorphism must be fall"
    );
    Ok(pulled)
}

/// Pointwise composition g ∘ f of f: G → H and g: H → I.
/// The endpoints must match structurally.
pub fn compose_maps(f: &VertexMap, g: &VertexMap) -> Result<VertexMap> {
    if !f.target().same_structure(g.source()) {
        return Err(Error::EndpointMismatch(format!(
            "first map lands in {}, second starts at {}",
            f.target().name(),
            g.source().name()
        )));
    }
    let map: Vec<usize> = f.map().iter().map(|&t| g.apply(t)).collect();
    VertexMap::new(f.source_arc(), g.target_arc(), map)
}
