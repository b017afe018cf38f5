//! Euler charges and the two discharging rules, in exact fifths.
//!
//! A vertex starts with `2d(v) - 6`, a face with `d(f) - 6`; on a connected
//! plane graph these sum to -12. Then
//!
//! * R1: every 2-vertex receives 1 from each incident face (per incidence);
//! * R2: every 5-face receives 1/5 from each adjacent face (per shared edge).
//!
//! [`audit`] checks the structural predicates whose conjunction would make
//! every final charge nonnegative, and cross-checks the detector.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{bridges, bridges_excluding, short_cycles, Face, PlaneMultigraph};
use crate::reduce::{find_configuration, ConfigKind};

/// Charges are stored multiplied by five.
pub type Fifths = i64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a bridge (edge {0})")]
    HasBridge(usize),
    #[error("every predicate holds and no configuration was found:\n{0}")]
    DetectorGap(Box<AuditReport>),
    #[error("charge bound violated: {0}")]
    BoundViolation(String),
}

/// Formats a value in fifths as an integer or reduced fraction.
pub fn fmt_fifths(x: Fifths) -> String {
    if x % 5 == 0 {
        (x / 5).to_string()
    } else {
        format!("{x}/5")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeReport {
    pub vertex_initial: Vec<Fifths>,
    pub vertex_final: Vec<Fifths>,
    pub faces: Vec<Face>,
    pub face_initial: Vec<Fifths>,
    pub face_final: Vec<Fifths>,
}

impl ChargeReport {
    pub fn total_initial(&self) -> Fifths {
        self.vertex_initial.iter().chain(&self.face_initial).sum()
    }

    pub fn total_final(&self) -> Fifths {
        self.vertex_final.iter().chain(&self.face_final).sum()
    }
}

impl fmt::Display for ChargeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, (a, b)) in self.vertex_initial.iter().zip(&self.vertex_final).enumerate() {
            writeln!(
                f,
                "vertex {v} initial={} final={}",
                fmt_fifths(*a),
                fmt_fifths(*b)
            )?;
        }
        for (i, (a, b)) in self.face_initial.iter().zip(&self.face_final).enumerate() {
            let len = self.faces.get(i).map_or(0, Face::len);
            writeln!(
                f,
                "face {i} length={len} initial={} final={}",
                fmt_fifths(*a),
                fmt_fifths(*b)
            )?;
        }
        write!(
            f,
            "total initial={} final={}",
            fmt_fifths(self.total_initial()),
            fmt_fifths(self.total_final())
        )
    }
}

fn check_input(g: &PlaneMultigraph) -> Result<(), DischargeError> {
    if !g.is_connected() {
        return Err(DischargeError::Disconnected);
    }
    if let Some(&b) = bridges(g).iter().next() {
        return Err(DischargeError::HasBridge(b));
    }
    Ok(())
}

pub fn charges(g: &PlaneMultigraph) -> Result<ChargeReport, DischargeError> {
    check_input(g)?;
    let n = g.vertex_count();
    let faces = g.trace_faces();
    let vertex_initial: Vec<Fifths> = (0..n).map(|v| 5 * (2 * g.degree(v) as i64 - 6)).collect();
    let mut face_initial: Vec<Fifths> = faces.iter().map(|f| 5 * (f.len() as i64 - 6)).collect();
    if g.edge_count() == 0 && n > 0 {
        // a lone vertex sits in one face with an empty boundary
        face_initial.push(-30);
    }
    let mut vertex_final = vertex_initial.clone();
    let mut face_final = face_initial.clone();
    for (fi, f) in faces.iter().enumerate() {
        for d in &f.darts {
            if g.degree(d.tail) == 2 {
                face_final[fi] -= 5;
                vertex_final[d.tail] += 5;
            }
        }
    }
    let ef = g.edge_faces(&faces);
    for &(a, b) in &ef {
        if faces[a].len() == 5 {
            face_final[a] += 1;
            face_final[b] -= 1;
        }
        if faces[b].len() == 5 {
            face_final[b] += 1;
            face_final[a] -= 1;
        }
    }
    Ok(ChargeReport {
        vertex_initial,
        vertex_final,
        faces,
        face_initial,
        face_final,
    })
}

/// Structural properties that together force nonnegative final charges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    NoParallelEdges,
    MinDegreeTwo,
    TwoEdgeCutsAdjacent,
    NoTriangles,
    NoFourCycles,
    TwoVertexDistance3,
    NoTwoVertexOn5Cycle,
    TwoVertexDistance4,
    FaceBoundaryDistance5,
    NoTwoVertexOn6Cycle,
    NoTwoVertexOn7Face,
    NoAdjacent5Faces,
    No5FaceAdjacent6Face,
}

impl Predicate {
    pub const ALL: [Predicate; 13] = [
        Predicate::NoParallelEdges,
        Predicate::MinDegreeTwo,
        Predicate::TwoEdgeCutsAdjacent,
        Predicate::NoTriangles,
        Predicate::NoFourCycles,
        Predicate::TwoVertexDistance3,
        Predicate::NoTwoVertexOn5Cycle,
        Predicate::TwoVertexDistance4,
        Predicate::FaceBoundaryDistance5,
        Predicate::NoTwoVertexOn6Cycle,
        Predicate::NoTwoVertexOn7Face,
        Predicate::NoAdjacent5Faces,
        Predicate::No5FaceAdjacent6Face,
    ];

    pub fn description(self) -> &'static str {
        match self {
            Predicate::NoParallelEdges => "no parallel edges",
            Predicate::MinDegreeTwo => "minimum degree at least 2",
            Predicate::TwoEdgeCutsAdjacent => "every 2-edge-cut consists of adjacent edges",
            Predicate::NoTriangles => "no triangles",
            Predicate::NoFourCycles => "no 4-cycles",
            Predicate::TwoVertexDistance3 => "2-vertices pairwise at distance at least 3",
            Predicate::NoTwoVertexOn5Cycle => "no 2-vertex on a 5-cycle",
            Predicate::TwoVertexDistance4 => "2-vertices pairwise at distance at least 4",
            Predicate::FaceBoundaryDistance5 => "2-vertices on a common face at boundary distance at least 5",
            Predicate::NoTwoVertexOn6Cycle => "no 2-vertex on a 6-cycle",
            Predicate::NoTwoVertexOn7Face => "no 2-vertex on a 7-face",
            Predicate::NoAdjacent5Faces => "no two 5-faces share an edge",
            Predicate::No5FaceAdjacent6Face => "no 5-face shares an edge with a 6-face",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.description())
    }
}

fn min_two_vertex_distance(g: &PlaneMultigraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    for s in (0..n).filter(|&v| g.degree(v) == 2) {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v != s && g.degree(v) == 2 {
                best = Some(best.map_or(dist[v], |b| b.min(dist[v])));
                break;
            }
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    best
}

/// Shortest cyclic distance along a face walk between occurrences of two
/// distinct 2-vertices.
fn min_boundary_distance(g: &PlaneMultigraph, face: &Face) -> Option<usize> {
    let walk = face.vertices();
    let len = walk.len();
    let mut best = None;
    for i in 0..len {
        for j in i + 1..len {
            if walk[i] != walk[j] && g.degree(walk[i]) == 2 && g.degree(walk[j]) == 2 {
                let d = (j - i).min(len - (j - i));
                best = Some(best.map_or(d, |b: usize| b.min(d)));
            }
        }
    }
    best
}

fn two_vertex_on_cycle(g: &PlaneMultigraph, len: usize) -> bool {
    short_cycles(g, len, len)
        .iter()
        .any(|c| c.iter().any(|&v| g.degree(v) == 2))
}

fn evaluate(g: &PlaneMultigraph, p: Predicate, faces: &[Face], two_dist: Option<usize>) -> bool {
    let ef = || g.edge_faces(faces);
    match p {
        Predicate::NoParallelEdges => !g.has_parallel_edges(),
        Predicate::MinDegreeTwo => (0..g.vertex_count()).all(|v| g.degree(v) >= 2),
        Predicate::TwoEdgeCutsAdjacent => (0..g.edge_count()).all(|e1| {
            let (a, b) = g.endpoints(e1);
            bridges_excluding(g, Some(e1)).into_iter().all(|e2| {
                let (c, d) = g.endpoints(e2);
                [c, d].iter().any(|x| *x == a || *x == b)
            })
        }),
        Predicate::NoTriangles => short_cycles(g, 3, 3).is_empty(),
        Predicate::NoFourCycles => short_cycles(g, 4, 4).is_empty(),
        Predicate::TwoVertexDistance3 => two_dist.is_none_or(|d| d >= 3),
        Predicate::NoTwoVertexOn5Cycle => !two_vertex_on_cycle(g, 5),
        Predicate::TwoVertexDistance4 => two_dist.is_none_or(|d| d >= 4),
        Predicate::FaceBoundaryDistance5 => faces
            .iter()
            .all(|f| min_boundary_distance(g, f).is_none_or(|d| d >= 5)),
        Predicate::NoTwoVertexOn6Cycle => !two_vertex_on_cycle(g, 6),
        Predicate::NoTwoVertexOn7Face => faces
            .iter()
            .filter(|f| f.len() == 7)
            .all(|f| f.darts.iter().all(|d| g.degree(d.tail) != 2)),
        Predicate::NoAdjacent5Faces => ef()
            .iter()
            .all(|&(a, b)| !(faces[a].len() == 5 && faces[b].len() == 5)),
        Predicate::No5FaceAdjacent6Face => ef().iter().all(|&(a, b)| {
            let (x, y) = (faces[a].len(), faces[b].len());
            !((x == 5 && y == 6) || (x == 6 && y == 5))
        }),
    }
}

/// The predicates failing on `g`, in [`Predicate::ALL`] order.
pub fn failing_predicates(g: &PlaneMultigraph) -> Vec<Predicate> {
    let faces = g.trace_faces();
    let two_dist = min_two_vertex_distance(g);
    Predicate::ALL
        .into_iter()
        .filter(|&p| !evaluate(g, p, &faces, two_dist))
        .collect()
}

/// A closed-form lower bound on one final charge, checked where its local
/// premises hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    /// "vertex" or "face".
    pub element: &'static str,
    pub index: usize,
    /// Degree of the vertex or length of the face.
    pub size: usize,
    pub final_charge: Fifths,
    pub bound: Fifths,
    pub holds: bool,
}

fn bound_checks(g: &PlaneMultigraph, report: &ChargeReport) -> Vec<BoundCheck> {
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        let d = g.degree(v);
        if d == 2 || d == 3 {
            let fin = report.vertex_final[v];
            out.push(BoundCheck {
                element: "vertex",
                index: v,
                size: d,
                final_charge: fin,
                bound: 0,
                holds: fin == 0,
            });
        }
    }
    let faces = &report.faces;
    let ef = g.edge_faces(faces);
    for (fi, f) in faces.iter().enumerate() {
        let k = f.len();
        let across: Vec<usize> = f
            .darts
            .iter()
            .map(|d| {
                let (a, b) = ef[d.edge];
                if a == fi {
                    faces[b].len()
                } else {
                    faces[a].len()
                }
            })
            .collect();
        let twos = f.darts.iter().filter(|d| g.degree(d.tail) == 2).count();
        let bound = match k {
            5 if twos == 0 && across.iter().all(|&l| l >= 7) => 0,
            6 if twos == 0 && across.iter().all(|&l| l != 5) => 0,
            7.. => {
                // no two consecutive sides border 5-faces, and 2-vertices
                // are spread out along the boundary
                let spaced = min_boundary_distance(g, f).is_none_or(|d| d >= 5);
                let alternating = (0..k).all(|i| !(across[i] == 5 && across[(i + 1) % k] == 5));
                if !(spaced && alternating) || (k == 7 && twos > 0) {
                    continue;
                }
                if k == 7 {
                    2
                } else {
                    let k = k as i64;
                    5 * (k - 6 - k / 5) - k / 2
                }
            }
            _ => continue,
        };
        let fin = report.face_final[fi];
        out.push(BoundCheck {
            element: "face",
            index: fi,
            size: k,
            final_charge: fin,
            bound,
            holds: fin >= bound,
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub charges: ChargeReport,
    pub failing: Vec<Predicate>,
    pub bounds: Vec<BoundCheck>,
    /// The first configuration the detector finds, if any.
    pub detector: Option<ConfigKind>,
}

impl AuditReport {
    /// The failing predicates are nonempty exactly when the detector finds
    /// something.
    pub fn consistent(&self) -> bool {
        self.failing.is_empty() == self.detector.is_none()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in Predicate::ALL {
            let status = if self.failing.contains(&p) { "fail" } else { "pass" };
            writeln!(f, "predicate {status}: {p}")?;
        }
        let held = self.bounds.iter().filter(|b| b.holds).count();
        writeln!(f, "bound checks: {held}/{} hold", self.bounds.len())?;
        match self.detector {
            Some(k) => writeln!(f, "detector: {k}")?,
            None => writeln!(f, "detector: none")?,
        }
        write!(
            f,
            "total initial={} final={}",
            fmt_fifths(self.charges.total_initial()),
            fmt_fifths(self.charges.total_final())
        )
    }
}

pub fn audit(g: &PlaneMultigraph) -> Result<AuditReport, DischargeError> {
    let charges = charges(g)?;
    let failing = failing_predicates(g);
    let bounds = bound_checks(g, &charges);
    let detector = find_configuration(g).map(|c| c.kind());
    if let Some(b) = bounds.iter().find(|b| !b.holds) {
        return Err(DischargeError::BoundViolation(format!(
            "{} {} of size {} ends at {} below {}",
            b.element,
            b.index,
            b.size,
            fmt_fifths(b.final_charge),
            fmt_fifths(b.bound)
        )));
    }
    let report = AuditReport {
        charges,
        failing,
        bounds,
        detector,
    };
    if !report.consistent() || report.failing.is_empty() {
        return Err(DischargeError::DetectorGap(Box::new(report)));
    }
    Ok(report)
}
