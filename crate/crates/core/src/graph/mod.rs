//! Loopless multigraphs with an explicit rotation system.
//!
//! A dart is the pair `(vertex, edge)`: leaving `vertex` along `edge`. Since
//! graphs are loopless, every edge has exactly two darts and a rotation only
//! needs to list edge ids.
//!
//! Face convention, used by every module in this crate: after leaving `v`
//! along `e` and arriving at `w`, the walk continues along the successor of
//! `e` in the rotation at `w`.

mod embed;
mod structure;

pub use embed::embed_edge_list;
pub(crate) use structure::bridges_excluding;
pub use structure::{bridges, components, girth, short_cycles, StructureReport};

use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} has endpoint {vertex} but the graph has {vertex_count} vertices")]
    IndexOutOfRange {
        edge: EdgeId,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("rotation at vertex {vertex} does not match its incident edges: {detail}")]
    RotationMismatch { vertex: VertexId, detail: String },
    #[error("rotation system is not planar: component containing vertex {vertex} has genus {genus}")]
    NonPlanarRotation { vertex: VertexId, genus: usize },
    #[error("graph is not planar")]
    NonPlanar,
    #[error("vertex {vertex} is not on the face")]
    NotOnFace { vertex: VertexId },
}

/// A dart: leaving `tail` along `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub tail: VertexId,
    pub edge: EdgeId,
}

/// One boundary walk of the embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    /// Number of darts on the walk; a bridge on the walk counts twice.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// The vertices visited by the walk, in order (tails of the darts).
    pub fn vertices(&self) -> Vec<VertexId> {
        self.darts.iter().map(|d| d.tail).collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.darts.iter().map(|d| d.edge)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.darts.iter().any(|d| d.tail == v)
    }
}

/// Minimum number of boundary edges between an occurrence of `u` and an
/// occurrence of `v` on the walk of `face`, over both directions.
pub fn boundary_distance(face: &Face, u: VertexId, v: VertexId) -> Result<usize, GraphError> {
    let walk = face.vertices();
    let len = walk.len();
    let pos_u: Vec<usize> = (0..len).filter(|&i| walk[i] == u).collect();
    let pos_v: Vec<usize> = (0..len).filter(|&i| walk[i] == v).collect();
    if pos_u.is_empty() {
        return Err(GraphError::NotOnFace { vertex: u });
    }
    if pos_v.is_empty() {
        return Err(GraphError::NotOnFace { vertex: v });
    }
    let mut best = usize::MAX;
    for &i in &pos_u {
        for &j in &pos_v {
            let d = i.abs_diff(j);
            best = best.min(d.min(len - d));
        }
    }
    Ok(best)
}

#[derive(Clone, PartialEq, Eq)]
pub struct PlaneMultigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    rotations: Vec<Vec<EdgeId>>,
    /// Position of each edge in the rotation at its first and second endpoint.
    slots: Vec<(usize, usize)>,
}

impl fmt::Debug for PlaneMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlaneMultigraph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .field("rotations", &self.rotations)
            .finish()
    }
}

impl PlaneMultigraph {
    /// Validates and builds a plane multigraph.
    ///
    /// Every invariant is checked here, including that each connected
    /// component of the rotation system has genus zero.
    pub fn new(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
        rotations: Vec<Vec<EdgeId>>,
    ) -> Result<Self, GraphError> {
        let g = Self::new_unchecked_genus(vertex_count, edges, rotations)?;
        g.check_planar_rotation()?;
        Ok(g)
    }

    /// Like [`PlaneMultigraph::new`] but skips the genus check. Face tracing
    /// still works; the faces are those of whatever surface the rotation
    /// system describes.
    pub fn new_unchecked_genus(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
        rotations: Vec<Vec<EdgeId>>,
    ) -> Result<Self, GraphError> {
        for (e, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::IndexOutOfRange {
                        edge: e,
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge { edge: e, vertex: a });
            }
        }
        if rotations.len() != vertex_count {
            return Err(GraphError::RotationMismatch {
                vertex: rotations.len().min(vertex_count),
                detail: format!(
                    "{} rotations given for {} vertices",
                    rotations.len(),
                    vertex_count
                ),
            });
        }
        let mut slots = vec![(usize::MAX, usize::MAX); edges.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &e) in rot.iter().enumerate() {
                let Some(&(a, b)) = edges.get(e) else {
                    return Err(GraphError::RotationMismatch {
                        vertex: v,
                        detail: format!("unknown edge {e}"),
                    });
                };
                let slot = if a == v {
                    &mut slots[e].0
                } else if b == v {
                    &mut slots[e].1
                } else {
                    return Err(GraphError::RotationMismatch {
                        vertex: v,
                        detail: format!("edge {e} is not incident to it"),
                    });
                };
                if *slot != usize::MAX {
                    return Err(GraphError::RotationMismatch {
                        vertex: v,
                        detail: format!("edge {e} listed twice"),
                    });
                }
                *slot = i;
            }
        }
        for (e, &(a, b)) in edges.iter().enumerate() {
            if slots[e].0 == usize::MAX {
                return Err(GraphError::RotationMismatch {
                    vertex: a,
                    detail: format!("incident edge {e} missing"),
                });
            }
            if slots[e].1 == usize::MAX {
                return Err(GraphError::RotationMismatch {
                    vertex: b,
                    detail: format!("incident edge {e} missing"),
                });
            }
        }
        Ok(Self {
            vertex_count,
            edges,
            rotations,
            slots,
        })
    }

    pub fn empty() -> Self {
        Self {
            vertex_count: 0,
            edges: Vec::new(),
            rotations: Vec::new(),
            slots: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotations
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Neighbours of `v` in rotation order; a neighbour joined by parallel
    /// edges appears once per edge.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations[v].iter().map(move |&e| self.other_end(e, v))
    }

    /// Distinct neighbours of `v`, sorted.
    pub fn distinct_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut n: Vec<VertexId> = self.neighbors(v).collect();
        n.sort_unstable();
        n.dedup();
        n
    }

    /// Some edge joining `u` and `v`, the lowest id if there are several.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.rotations[u]
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u) == v)
            .min()
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut pairs: Vec<(VertexId, VertexId)> =
            self.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        pairs.windows(2).any(|w| w[0] == w[1])
    }

    fn slot(&self, v: VertexId, e: EdgeId) -> usize {
        let (a, _) = self.edges[e];
        if a == v {
            self.slots[e].0
        } else {
            self.slots[e].1
        }
    }

    /// Successor of `e` in the rotation at `v`.
    pub fn rotation_successor(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let rot = &self.rotations[v];
        rot[(self.slot(v, e) + 1) % rot.len()]
    }

    /// Predecessor of `e` in the rotation at `v`.
    pub fn rotation_predecessor(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let rot = &self.rotations[v];
        rot[(self.slot(v, e) + rot.len() - 1) % rot.len()]
    }

    /// The dart following `d` on its face walk.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let w = self.other_end(d.edge, d.tail);
        Dart {
            tail: w,
            edge: self.rotation_successor(w, d.edge),
        }
    }

    fn dart_index(&self, d: Dart) -> usize {
        let (a, _) = self.edges[d.edge];
        2 * d.edge + usize::from(a != d.tail)
    }

    /// Traces every face walk. Faces are produced in a fixed order: by the
    /// lowest dart (edge id, then first endpoint before second) they contain.
    pub fn trace_faces(&self) -> Vec<Face> {
        let mut seen = vec![false; 2 * self.edges.len()];
        let mut faces = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            for tail in [a, b] {
                let start = Dart { tail, edge: e };
                if seen[self.dart_index(start)] {
                    continue;
                }
                let mut darts = Vec::new();
                let mut d = start;
                loop {
                    seen[self.dart_index(d)] = true;
                    darts.push(d);
                    d = self.next_dart(d);
                    if d == start {
                        break;
                    }
                }
                faces.push(Face { darts });
            }
        }
        faces
    }

    /// For every edge, the indices (into `faces`) of the faces containing
    /// its two darts: `(face of dart from first endpoint, face of dart from
    /// second endpoint)`.
    pub fn edge_faces(&self, faces: &[Face]) -> Vec<(usize, usize)> {
        let mut out = vec![(usize::MAX, usize::MAX); self.edges.len()];
        for (fi, f) in faces.iter().enumerate() {
            for d in &f.darts {
                if self.edges[d.edge].0 == d.tail {
                    out[d.edge].0 = fi;
                } else {
                    out[d.edge].1 = fi;
                }
            }
        }
        out
    }

    /// Per connected component: (lowest vertex, vertices, edges, faces).
    fn component_counts(&self, faces: &[Face]) -> Vec<(VertexId, usize, usize, usize)> {
        let comps = components(self);
        let mut comp_of = vec![0usize; self.vertex_count];
        for (ci, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = ci;
            }
        }
        let mut counts: Vec<(VertexId, usize, usize, usize)> =
            comps.iter().map(|c| (c[0], c.len(), 0, 0)).collect();
        for &(a, _) in &self.edges {
            counts[comp_of[a]].2 += 1;
        }
        for f in faces {
            counts[comp_of[f.darts[0].tail]].3 += 1;
        }
        for c in &mut counts {
            if c.2 == 0 {
                // an isolated vertex sits in a single face
                c.3 = 1;
            }
        }
        counts
    }

    /// Genus of each component, computed from Euler's formula.
    pub fn check_planar_rotation(&self) -> Result<(), GraphError> {
        let faces = self.trace_faces();
        for (v0, nv, ne, nf) in self.component_counts(&faces) {
            let chi = nv as isize - ne as isize + nf as isize;
            if chi != 2 {
                return Err(GraphError::NonPlanarRotation {
                    vertex: v0,
                    genus: ((2 - chi) / 2).max(0) as usize,
                });
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        components(self).len() <= 1
    }

    pub fn structure_report(&self) -> StructureReport {
        StructureReport::of(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn triangle() -> PlaneMultigraph {
        PlaneMultigraph::new(
            3,
            vec![(0, 1), (1, 2), (2, 0)],
            vec![vec![0, 2], vec![0, 1], vec![1, 2]],
        )
        .unwrap()
    }

    #[test]
    fn triangle_is_valid() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let faces = g.trace_faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn loop_is_rejected() {
        let err = PlaneMultigraph::new(1, vec![(0, 0)], vec![vec![0]]).unwrap_err();
        assert_eq!(err, GraphError::LoopEdge { edge: 0, vertex: 0 });
    }

    #[test]
    fn out_of_range_endpoint() {
        let err = PlaneMultigraph::new(2, vec![(0, 2)], vec![vec![0], vec![]]).unwrap_err();
        assert!(matches!(
            err,
            GraphError::IndexOutOfRange {
                edge: 0,
                vertex: 2,
                ..
            }
        ));
    }

    #[test]
    fn rotation_must_list_incident_edges_once() {
        let missing = PlaneMultigraph::new(2, vec![(0, 1)], vec![vec![0], vec![]]).unwrap_err();
        assert!(matches!(missing, GraphError::RotationMismatch { vertex: 1, .. }));
        let twice = PlaneMultigraph::new(2, vec![(0, 1)], vec![vec![0, 0], vec![0]]).unwrap_err();
        assert!(matches!(twice, GraphError::RotationMismatch { vertex: 0, .. }));
        let foreign = PlaneMultigraph::new(3, vec![(0, 1)], vec![vec![0], vec![0], vec![0]]).unwrap_err();
        assert!(matches!(foreign, GraphError::RotationMismatch { vertex: 2, .. }));
    }

    #[test]
    fn prism_with_planar_rotation() {
        // triangles 0-1-2 and 3-4-5, matching 03 14 25
        let edges = vec![
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ];
        let rot = vec![
            vec![0, 6, 2],
            vec![1, 7, 0],
            vec![2, 8, 1],
            vec![5, 6, 3],
            vec![3, 7, 4],
            vec![4, 8, 5],
        ];
        let g = PlaneMultigraph::new(6, edges, rot).unwrap();
        assert!((0..6).all(|v| g.degree(v) == 3));
        let faces = g.trace_faces();
        assert_eq!(faces.len(), 5);
        let mut lens: Vec<usize> = faces.iter().map(Face::len).collect();
        lens.sort();
        assert_eq!(lens, vec![3, 3, 4, 4, 4]);
    }

    #[test]
    fn nonplanar_rotation_is_rejected() {
        // K4 with one vertex's rotation flipped has genus 1
        let edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let rot = vec![vec![0, 1, 2], vec![0, 4, 3], vec![1, 3, 5], vec![2, 5, 4]];
        let planar = PlaneMultigraph::new(4, edges.clone(), rot);
        let flipped = vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 5, 4]];
        let other = PlaneMultigraph::new(4, edges, flipped);
        // exactly one of the two orientations at vertex 1 is planar
        assert!(planar.is_ok() != other.is_ok());
        let err = if let Err(e) = planar {
            e
        } else {
            other.unwrap_err()
        };
        assert!(matches!(err, GraphError::NonPlanarRotation { genus: 1, .. }));
    }

    #[test]
    fn path_has_single_face_of_length_four() {
        let g = PlaneMultigraph::new(3, vec![(0, 1), (1, 2)], vec![vec![0], vec![0, 1], vec![1]]).unwrap();
        let faces = g.trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 4);
    }

    #[test]
    fn isolated_vertices_are_planar() {
        let g = PlaneMultigraph::new(2, vec![], vec![vec![], vec![]]).unwrap();
        assert!(g.trace_faces().is_empty());
        assert!(!g.is_connected());
    }

    fn cycle_face(n: usize) -> Face {
        Face {
            darts: (0..n).map(|i| Dart { tail: i, edge: i }).collect(),
        }
    }

    #[test]
    fn boundary_distance_cases() {
        let oct = cycle_face(8);
        assert_eq!(boundary_distance(&oct, 0, 4).unwrap(), 4);
        assert_eq!(boundary_distance(&oct, 3, 3).unwrap(), 0);
        let nine = cycle_face(9);
        assert_eq!(boundary_distance(&nine, 0, 5).unwrap(), 4);
        assert_eq!(
            boundary_distance(&nine, 0, 9).unwrap_err(),
            GraphError::NotOnFace { vertex: 9 }
        );
    }

    #[test]
    fn boundary_distance_with_repeated_vertex() {
        // walk of a path 0-1-2: vertices 0,1,2,1
        let f = Face {
            darts: vec![
                Dart { tail: 0, edge: 0 },
                Dart { tail: 1, edge: 1 },
                Dart { tail: 2, edge: 1 },
                Dart { tail: 1, edge: 0 },
            ],
        };
        assert_eq!(boundary_distance(&f, 0, 1).unwrap(), 1);
        assert_eq!(boundary_distance(&f, 0, 2).unwrap(), 2);
    }
}
