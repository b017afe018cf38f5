//! Recursive 9-coloring by reducible configurations.
//!
//! [`find_configuration`] returns the first configuration in a fixed order,
//! [`apply_reduction`] builds the smaller graph (or the two parts of a split),
//! and [`lift_and_extend`] turns a coloring of the smaller graph back into a
//! coloring of the original. Extension is done by exact bounded search over
//! the removed edges, so no hand-written coloring orders are needed.

mod construct;
mod detect;
mod lift;

pub use construct::apply_reduction;
pub use detect::{find_configuration, kind_present};
pub use lift::{lift_and_extend, merge_permutation, LiftReport};

use std::fmt;

use thiserror::Error;

use crate::coloring::{verify_strong, ColoringError, PartialColoring, DEFAULT_PALETTE};
use crate::exact::{exact_coloring, ExactError};
use crate::graph::{EdgeId, GraphError, PlaneMultigraph, VertexId};

/// Graphs with at most this many vertices are colored by the exact solver.
pub const BASE_CASE_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("input is not a valid coloring instance: {0}")]
    InputInvalid(String),
    #[error("reduction of {kind} failed revalidation: {detail}")]
    InvalidConfiguration { kind: ConfigKind, detail: String },
    #[error("coloring of the reduced graph does not extend across {kind} ({detail})")]
    ExtensionImpossible { kind: ConfigKind, detail: String },
    #[error(
        "no reducible configuration found in a nonempty graph with {vertices} vertices and {edges} edges"
    )]
    DetectorGap { vertices: usize, edges: usize },
    #[error("internal counterexample: {0}")]
    InternalCounterexample(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The configuration kinds, in detection order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigKind {
    Disconnected,
    ParallelEdge,
    DegreeLeqOne,
    CutEdge,
    NonAdjacentTwoEdgeCut,
    TriangleWith2Vertex,
    Triangle,
    FourCycleWith2Vertex,
    FourCycle,
    TwoVerticesAtDistance1or2,
    TwoVertexOn5Face,
    TwoVerticesAtDistance3,
    FaceBoundaryDistance4Pair,
    TwoVertexOn6Face,
    TwoVertexOn7Face,
    AdjacentFiveFiveFaces,
    FiveSixAdjacentFaces,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 17] = [
        ConfigKind::Disconnected,
        ConfigKind::ParallelEdge,
        ConfigKind::DegreeLeqOne,
        ConfigKind::CutEdge,
        ConfigKind::NonAdjacentTwoEdgeCut,
        ConfigKind::TriangleWith2Vertex,
        ConfigKind::Triangle,
        ConfigKind::FourCycleWith2Vertex,
        ConfigKind::FourCycle,
        ConfigKind::TwoVerticesAtDistance1or2,
        ConfigKind::TwoVertexOn5Face,
        ConfigKind::TwoVerticesAtDistance3,
        ConfigKind::FaceBoundaryDistance4Pair,
        ConfigKind::TwoVertexOn6Face,
        ConfigKind::TwoVertexOn7Face,
        ConfigKind::AdjacentFiveFiveFaces,
        ConfigKind::FiveSixAdjacentFaces,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::Disconnected => "Disconnected",
            ConfigKind::ParallelEdge => "ParallelEdge",
            ConfigKind::DegreeLeqOne => "DegreeLeqOne",
            ConfigKind::CutEdge => "CutEdge",
            ConfigKind::NonAdjacentTwoEdgeCut => "NonAdjacentTwoEdgeCut",
            ConfigKind::TriangleWith2Vertex => "TriangleWith2Vertex",
            ConfigKind::Triangle => "Triangle",
            ConfigKind::FourCycleWith2Vertex => "FourCycleWith2Vertex",
            ConfigKind::FourCycle => "FourCycle",
            ConfigKind::TwoVerticesAtDistance1or2 => "TwoVerticesAtDistance1or2",
            ConfigKind::TwoVertexOn5Face => "TwoVertexOn5Face",
            ConfigKind::TwoVerticesAtDistance3 => "TwoVerticesAtDistance3",
            ConfigKind::FaceBoundaryDistance4Pair => "FaceBoundaryDistance4Pair",
            ConfigKind::TwoVertexOn6Face => "TwoVertexOn6Face",
            ConfigKind::TwoVertexOn7Face => "TwoVertexOn7Face",
            ConfigKind::AdjacentFiveFiveFaces => "AdjacentFiveFiveFaces",
            ConfigKind::FiveSixAdjacentFaces => "FiveSixAdjacentFaces",
        }
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Two 2-vertices at distance at most two.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NearPair {
    /// `u` and `v` adjacent; `w` is the other neighbour of `v`.
    Adjacent { u: VertexId, v: VertexId, w: VertexId },
    /// `u` and `v` share the 3-vertex `x`; primes are the remaining
    /// neighbours (not necessarily distinct).
    Through {
        u: VertexId,
        v: VertexId,
        x: VertexId,
        u_prime: VertexId,
        v_prime: VertexId,
        x_prime: VertexId,
    },
}

/// A reducible configuration with its witness.
///
/// Cycle and face witnesses list the cycle vertices in order as `x`, and
/// the off-cycle neighbour of each listed 3-vertex as `y` (same index).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Configuration {
    Disconnected {
        components: Vec<Vec<VertexId>>,
    },
    /// `edge` is removed; `twin` is an earlier edge with the same ends.
    ParallelEdge {
        edge: EdgeId,
        twin: EdgeId,
    },
    DegreeLeqOne {
        vertex: VertexId,
    },
    /// A bridge `v1 v2`; both sides have at least two vertices.
    CutEdge {
        edge: EdgeId,
        v1: VertexId,
        v2: VertexId,
    },
    /// Edge cut `{u1 w1, u2 w2}` forming a matching, with `u1`, `u2` on the
    /// same side.
    NonAdjacentTwoEdgeCut {
        e1: EdgeId,
        e2: EdgeId,
        u1: VertexId,
        w1: VertexId,
        u2: VertexId,
        w2: VertexId,
    },
    /// Triangle `w0 w1 w2` with `w0` a 2-vertex.
    TriangleWith2Vertex {
        w: [VertexId; 3],
    },
    /// Triangle of 3-vertices; `u[i]` is the third neighbour of `w[i]`.
    Triangle {
        w: [VertexId; 3],
        u: [VertexId; 3],
    },
    /// 4-cycle with `w[0]` a 2-vertex.
    FourCycleWith2Vertex {
        w: [VertexId; 4],
    },
    /// 4-cycle of 3-vertices with `y[0] != y[2]`.
    FourCycle {
        x: [VertexId; 4],
        y: [VertexId; 4],
    },
    TwoVerticesAtDistance1or2(NearPair),
    /// 5-cycle `x[0..5]` with `x[4]` the 2-vertex; `y[0..4]` belong to
    /// `x[0..4]`. The auxiliary edge joins `y[1]` and `y[3]`.
    TwoVertexOn5Face {
        x: [VertexId; 5],
        y: [VertexId; 4],
    },
    /// Path `x[0..6]` with `x[1]`, `x[4]` 2-vertices at distance three;
    /// `y[0]`, `y[1]` belong to `x[2]`, `x[3]`.
    TwoVerticesAtDistance3 {
        x: [VertexId; 6],
        y: [VertexId; 2],
    },
    /// Face path `x[0..7]` with 2-vertices `x[1]`, `x[5]`; `y[0..3]`
    /// belong to `x[2..5]`. The auxiliary edge joins `y[0]` and `y[2]`.
    FaceBoundaryDistance4Pair {
        x: [VertexId; 7],
        y: [VertexId; 3],
    },
    /// 6-face `x[0..6]` with `x[0]` the 2-vertex; `y[i]` belongs to `x[i]`
    /// for `i >= 1` (`y[0] == x[0]` as a placeholder). A new vertex is
    /// joined to `y[1]`, `y[3]`, `y[4]`.
    TwoVertexOn6Face {
        x: [VertexId; 6],
        y: [VertexId; 6],
    },
    /// 7-face `x[0..7]` with `x[0]` the 2-vertex; `y` as for the 6-face.
    /// Auxiliary edges `y[1] y[6]` and `y[2] y[4]`.
    TwoVertexOn7Face {
        x: [VertexId; 7],
        y: [VertexId; 7],
    },
    /// 5-faces `x0 x1 x2 x3 x4` and `x4 x5 x6 x7 x0` sharing `x4 x0`;
    /// `y[i]` belongs to `x[i]` except at 0 and 4 (placeholders). `y[2]`
    /// may equal `y[6]`.
    AdjacentFiveFiveFaces {
        x: [VertexId; 8],
        y: [VertexId; 8],
    },
    /// 6-face `u0..u5` and 5-face `u5 u6 u7 u8 u0` sharing `u5 u0`; `v[i]`
    /// belongs to `u[i]` except at 0 and 5 (placeholders).
    FiveSixAdjacentFaces {
        u: [VertexId; 9],
        v: [VertexId; 9],
    },
}

impl Configuration {
    pub fn kind(&self) -> ConfigKind {
        match self {
            Configuration::Disconnected { .. } => ConfigKind::Disconnected,
            Configuration::ParallelEdge { .. } => ConfigKind::ParallelEdge,
            Configuration::DegreeLeqOne { .. } => ConfigKind::DegreeLeqOne,
            Configuration::CutEdge { .. } => ConfigKind::CutEdge,
            Configuration::NonAdjacentTwoEdgeCut { .. } => ConfigKind::NonAdjacentTwoEdgeCut,
            Configuration::TriangleWith2Vertex { .. } => ConfigKind::TriangleWith2Vertex,
            Configuration::Triangle { .. } => ConfigKind::Triangle,
            Configuration::FourCycleWith2Vertex { .. } => ConfigKind::FourCycleWith2Vertex,
            Configuration::FourCycle { .. } => ConfigKind::FourCycle,
            Configuration::TwoVerticesAtDistance1or2(_) => ConfigKind::TwoVerticesAtDistance1or2,
            Configuration::TwoVertexOn5Face { .. } => ConfigKind::TwoVertexOn5Face,
            Configuration::TwoVerticesAtDistance3 { .. } => ConfigKind::TwoVerticesAtDistance3,
            Configuration::FaceBoundaryDistance4Pair { .. } => ConfigKind::FaceBoundaryDistance4Pair,
            Configuration::TwoVertexOn6Face { .. } => ConfigKind::TwoVertexOn6Face,
            Configuration::TwoVertexOn7Face { .. } => ConfigKind::TwoVertexOn7Face,
            Configuration::AdjacentFiveFiveFaces { .. } => ConfigKind::AdjacentFiveFiveFaces,
            Configuration::FiveSixAdjacentFaces { .. } => ConfigKind::FiveSixAdjacentFaces,
        }
    }

    /// Witness ids as a compact single-line string.
    pub fn witness(&self) -> String {
        fn list(v: &[usize]) -> String {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            parts.join(",")
        }
        match self {
            Configuration::Disconnected { components } => format!("components={}", components.len()),
            Configuration::ParallelEdge { edge, twin } => format!("edge={edge} twin={twin}"),
            Configuration::DegreeLeqOne { vertex } => format!("v={vertex}"),
            Configuration::CutEdge { edge, v1, v2 } => format!("edge={edge} v1={v1} v2={v2}"),
            Configuration::NonAdjacentTwoEdgeCut {
                e1,
                e2,
                u1,
                w1,
                u2,
                w2,
            } => {
                format!("e1={e1} e2={e2} u1={u1} w1={w1} u2={u2} w2={w2}")
            }
            Configuration::TriangleWith2Vertex { w } => format!("w={}", list(w)),
            Configuration::Triangle { w, u } => format!("w={} u={}", list(w), list(u)),
            Configuration::FourCycleWith2Vertex { w } => format!("w={}", list(w)),
            Configuration::FourCycle { x, y } => format!("x={} y={}", list(x), list(y)),
            Configuration::TwoVerticesAtDistance1or2(NearPair::Adjacent { u, v, w }) => {
                format!("u={u} v={v} w={w}")
            }
            Configuration::TwoVerticesAtDistance1or2(NearPair::Through {
                u,
                v,
                x,
                u_prime,
                v_prime,
                x_prime,
            }) => format!("u={u} v={v} x={x} u'={u_prime} v'={v_prime} x'={x_prime}"),
            Configuration::TwoVertexOn5Face { x, y } => format!("x={} y={}", list(x), list(y)),
            Configuration::TwoVerticesAtDistance3 { x, y } => format!("x={} y={}", list(x), list(y)),
            Configuration::FaceBoundaryDistance4Pair { x, y } => format!("x={} y={}", list(x), list(y)),
            Configuration::TwoVertexOn6Face { x, y } => format!("x={} y={}", list(x), list(&y[1..])),
            Configuration::TwoVertexOn7Face { x, y } => format!("x={} y={}", list(x), list(&y[1..])),
            Configuration::AdjacentFiveFiveFaces { x, y } => format!(
                "x={} y={},{},{},{},{},{}",
                list(x),
                y[1],
                y[2],
                y[3],
                y[5],
                y[6],
                y[7]
            ),
            Configuration::FiveSixAdjacentFaces { u, v } => format!(
                "u={} v={},{},{},{},{},{},{}",
                list(u),
                v[1],
                v[2],
                v[3],
                v[4],
                v[6],
                v[7],
                v[8]
            ),
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind(), self.witness())
    }
}

/// One endpoint of an auxiliary edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuxEnd {
    /// A surviving vertex; the edge takes the rotation slot that `replaces`
    /// (a removed edge at `vertex`) occupied.
    Old { vertex: VertexId, replaces: EdgeId },
    /// The i-th added vertex.
    New(usize),
}

/// A graph produced by a reduction, with its correspondence to the
/// original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    pub graph: PlaneMultigraph,
    /// For each edge of the reduced graph, the original edge it is (or
    /// stands for), or `None` for auxiliary edges.
    pub edge_origin: Vec<Option<EdgeId>>,
    /// For each original vertex, its id in the reduced graph.
    pub vertex_map: Vec<Option<VertexId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduced {
    /// One smaller graph; auxiliary edges are `aux_edges[i]` for the i-th
    /// entry of [`ReductionStep::added_edges`].
    Single {
        reduced: ReducedGraph,
        aux_edges: Vec<EdgeId>,
    },
    /// Independent parts whose colorings are merged. Original edges that
    /// appear in more than one part (cut edges) must agree.
    Split { parts: Vec<ReducedGraph> },
}

/// Everything needed to lift a coloring back across one reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub configuration: Configuration,
    pub removed_vertices: Vec<VertexId>,
    pub removed_edges: Vec<EdgeId>,
    pub added_vertices: usize,
    pub added_edges: Vec<(AuxEnd, AuxEnd)>,
    /// `(removed edge, added edge index)`: the removed edge starts with the
    /// color of that auxiliary edge.
    pub seeding: Vec<(EdgeId, usize)>,
    /// Removed edges the extension search colors.
    pub frontier: Vec<EdgeId>,
    pub reduced: Reduced,
    /// Whether the reduced graph had to be re-embedded because the slot
    /// placement did not give a planar rotation system.
    pub reembedded: bool,
}

impl ReductionStep {
    pub fn kind(&self) -> ConfigKind {
        self.configuration.kind()
    }
}

/// One line of the reduction trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub depth: usize,
    pub kind: ConfigKind,
    pub witness: String,
    pub vertices: usize,
    pub edges: usize,
    pub frontier: usize,
    pub nodes: u64,
    /// Seeded pendants had to be recolored.
    pub widened: bool,
    pub reembedded: bool,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "depth={} kind={} n={} m={} frontier={} nodes={} widened={} reembedded={} {}",
            self.depth,
            self.kind,
            self.vertices,
            self.edges,
            self.frontier,
            self.nodes,
            self.widened,
            self.reembedded,
            self.witness
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub entries: Vec<TraceEntry>,
    /// Base cases solved exactly.
    pub base_cases: usize,
}

impl ReductionTrace {
    pub fn count(&self, kind: ConfigKind) -> usize {
        self.entries.iter().filter(|e| e.kind == kind).count()
    }
}

/// A strong 9-coloring of `g`, with the reductions that produced it.
pub fn color_graph(g: &PlaneMultigraph) -> Result<(PartialColoring, ReductionTrace), ReduceError> {
    color_graph_observed(g, &mut |_, _| {})
}

/// [`color_graph`], calling `observe` on every graph the recursion visits
/// (including base cases) together with its depth.
pub fn color_graph_observed(
    g: &PlaneMultigraph,
    observe: &mut dyn FnMut(&PlaneMultigraph, usize),
) -> Result<(PartialColoring, ReductionTrace), ReduceError> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) > 3) {
        return Err(ReduceError::InputInvalid(format!(
            "vertex {v} has degree {}",
            g.degree(v)
        )));
    }
    let mut trace = ReductionTrace::default();
    let coloring = color_rec(g, 0, &mut trace, observe)?;
    let violations = verify_strong(g, &coloring)?;
    if !violations.is_empty() {
        return Err(ReduceError::InternalCounterexample(format!(
            "final coloring has {} conflicts",
            violations.len()
        )));
    }
    Ok((coloring, trace))
}

fn color_rec(
    g: &PlaneMultigraph,
    depth: usize,
    trace: &mut ReductionTrace,
    observe: &mut dyn FnMut(&PlaneMultigraph, usize),
) -> Result<PartialColoring, ReduceError> {
    observe(g, depth);
    if g.edge_count() == 0 {
        return Ok(PartialColoring::new(DEFAULT_PALETTE, 0)?);
    }
    if g.vertex_count() <= BASE_CASE_VERTICES {
        trace.base_cases += 1;
        return exact_coloring(g, DEFAULT_PALETTE)?.ok_or_else(|| {
            ReduceError::InternalCounterexample(format!(
                "no strong 9-coloring of a {}-vertex graph: {:?}",
                g.vertex_count(),
                g.edges()
            ))
        });
    }
    let cfg = find_configuration(g).ok_or(ReduceError::DetectorGap {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
    })?;
    let step = apply_reduction(g, &cfg)?;
    let slot = trace.entries.len();
    trace.entries.push(TraceEntry {
        depth,
        kind: cfg.kind(),
        witness: cfg.witness(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        frontier: step.frontier.len(),
        nodes: 0,
        widened: false,
        reembedded: step.reembedded,
    });
    let subs = match &step.reduced {
        Reduced::Single { reduced, .. } => vec![color_rec(&reduced.graph, depth + 1, trace, observe)?],
        Reduced::Split { parts } => parts
            .iter()
            .map(|p| color_rec(&p.graph, depth + 1, trace, observe))
            .collect::<Result<Vec<_>, _>>()?,
    };
    let (coloring, report) = lift_and_extend(g, &step, &subs)?;
    trace.entries[slot].nodes = report.nodes;
    trace.entries[slot].widened = report.widened;
    Ok(coloring)
}
