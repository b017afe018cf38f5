//! Named instances and seeded random subcubic plane multigraphs.
//!
//! Random graphs grow from a triangle by face-local moves, each of which
//! keeps the rotation system planar, loopless and subcubic:
//!
//! * subdivide an edge (makes a 2-vertex);
//! * expand a face: subdivide two of its edges and join the new vertices
//!   across it;
//! * join two vertices of degree at most 2 lying on a common face;
//! * with parallels allowed, double a face edge whose ends have degree at
//!   most 2, or cut a fresh digon into a face edge.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{embed_edge_list, EdgeId, PlaneMultigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unknown instance name {0:?}")]
    UnknownName(String),
    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),
}

pub const NAMED_INSTANCES: [&str; 9] = [
    "prism",
    "k4",
    "cube",
    "dodecahedron",
    "c5",
    "c6",
    "c7",
    "theta",
    "doubled_edge_path",
];

pub fn named_instance(name: &str) -> Result<PlaneMultigraph, GenError> {
    let cycle = |n: usize| (0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>();
    let (n, edges): (usize, Vec<(VertexId, VertexId)>) = match name {
        "prism" => (
            6,
            vec![
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        ),
        "k4" => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "cube" => {
            let mut e = Vec::new();
            for i in 0..8 {
                for b in [1, 2, 4] {
                    if i & b == 0 {
                        e.push((i, i | b));
                    }
                }
            }
            (8, e)
        }
        "dodecahedron" => {
            // outer pentagon a_i, middle 10-cycle b_j, inner pentagon c_i
            let (a, b, c) = (0, 5, 15);
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((a + i, a + (i + 1) % 5));
                e.push((a + i, b + 2 * i));
                e.push((c + i, c + (i + 1) % 5));
                e.push((b + 2 * i + 1, c + i));
            }
            for j in 0..10 {
                e.push((b + j, b + (j + 1) % 10));
            }
            (20, e)
        }
        "c5" => (5, cycle(5)),
        "c6" => (6, cycle(6)),
        "c7" => (7, cycle(7)),
        // paths of lengths 2, 3 and 3 between vertices 0 and 1
        "theta" => (
            7,
            vec![(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 1)],
        ),
        "doubled_edge_path" => (4, vec![(0, 1), (1, 2), (1, 2), (2, 3)]),
        other => return Err(GenError::UnknownName(other.to_string())),
    };
    Ok(embed_edge_list(n, &edges).expect("named instances are planar"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub target_vertices: usize,
    pub seed: u64,
    /// Probability that a move is an edge subdivision.
    pub two_vertex_fraction: f64,
    pub allow_parallel: bool,
}

impl GenSpec {
    pub fn new(target_vertices: usize, seed: u64) -> Self {
        Self {
            target_vertices,
            seed,
            two_vertex_fraction: 0.2,
            allow_parallel: false,
        }
    }
}

/// How many moves of each kind built a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenStats {
    pub subdivisions: usize,
    pub expansions: usize,
    pub joins: usize,
    pub parallels: usize,
}

pub fn generate(spec: &GenSpec) -> Result<PlaneMultigraph, GenError> {
    generate_with_stats(spec).map(|(g, _)| g)
}

pub fn generate_with_stats(spec: &GenSpec) -> Result<(PlaneMultigraph, GenStats), GenError> {
    if spec.target_vertices < 3 {
        return Err(GenError::InfeasibleSpec(format!(
            "need at least 3 vertices, got {}",
            spec.target_vertices
        )));
    }
    if !(0.0..=1.0).contains(&spec.two_vertex_fraction) {
        return Err(GenError::InfeasibleSpec(format!(
            "two-vertex fraction {} outside [0, 1]",
            spec.two_vertex_fraction
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut b = Builder::triangle();
    let mut stats = GenStats::default();
    // Per graph, how often an expansion splits a longest face evenly and
    // lengthens its shortest neighbours. High values give large girth.
    let wide = [0.0, 0.6, 0.95][rng.gen_range(0..3)];
    let join_rate = 0.5 * (1.0 - wide);
    while b.rotations.len() < spec.target_vertices {
        // an expansion adds two vertices; finish on exactly the target
        let last = b.rotations.len() + 1 == spec.target_vertices;
        if rng.gen_bool(spec.two_vertex_fraction) || last {
            let e = rng.gen_range(0..b.edges.len());
            b.subdivide(e, b.edges[e].0);
            stats.subdivisions += 1;
            continue;
        }
        let faces = b.faces();
        let roll: f64 = rng.gen();
        let face = &faces[rng.gen_range(0..faces.len())];
        if spec.allow_parallel && roll < 0.15 {
            b.double(face, &mut rng);
            stats.parallels += 1;
        } else if rng.gen_bool(wide) {
            if b.expand_wide(&faces, &mut rng) {
                stats.expansions += 1;
            }
        } else if roll < join_rate && b.try_join(face, &mut rng, spec.allow_parallel) {
            stats.joins += 1;
        } else if b.expand(face, &mut rng) {
            stats.expansions += 1;
        }
    }
    let g = PlaneMultigraph::new(b.rotations.len(), b.edges, b.rotations)
        .expect("generator moves keep the rotation system planar");
    Ok((g, stats))
}

/// Mutable edge list plus rotations, grown in place.
struct Builder {
    edges: Vec<(VertexId, VertexId)>,
    rotations: Vec<Vec<EdgeId>>,
}

/// A face corner: the walk enters `vertex` along `incoming`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Corner {
    vertex: VertexId,
    incoming: EdgeId,
}

/// Face walk as (tail, edge) darts.
type Walk = Vec<(VertexId, EdgeId)>;

impl Builder {
    fn triangle() -> Self {
        Self {
            edges: vec![(0, 1), (1, 2), (2, 0)],
            rotations: vec![vec![0, 2], vec![0, 1], vec![1, 2]],
        }
    }

    fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn successor(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let rot = &self.rotations[v];
        let i = rot.iter().position(|&x| x == e).unwrap();
        rot[(i + 1) % rot.len()]
    }

    fn faces(&self) -> Vec<Walk> {
        let mut seen = vec![[false; 2]; self.edges.len()];
        let mut out = Vec::new();
        for e in 0..self.edges.len() {
            for side in 0..2 {
                if seen[e][side] {
                    continue;
                }
                let tail = if side == 0 {
                    self.edges[e].0
                } else {
                    self.edges[e].1
                };
                let mut walk = Vec::new();
                let (mut v, mut f) = (tail, e);
                loop {
                    let s = usize::from(self.edges[f].0 != v);
                    if seen[f][s] {
                        break;
                    }
                    seen[f][s] = true;
                    walk.push((v, f));
                    let w = self.other(f, v);
                    f = self.successor(w, f);
                    v = w;
                }
                out.push(walk);
            }
        }
        out
    }

    fn corners(&self, walk: &Walk) -> Vec<Corner> {
        walk.iter()
            .map(|&(t, e)| Corner {
                vertex: self.other(e, t),
                incoming: e,
            })
            .collect()
    }

    /// Splits `e` with a new vertex. Returns the new vertex and the edge
    /// by which a walk along `e` starting at `from` enters it.
    fn subdivide(&mut self, e: EdgeId, from: VertexId) -> Corner {
        let (a, b) = self.edges[e];
        let s = self.rotations.len();
        let e2 = self.edges.len();
        self.edges[e] = (a, s);
        self.edges.push((s, b));
        let pos = self.rotations[b].iter().position(|&x| x == e).unwrap();
        self.rotations[b][pos] = e2;
        self.rotations.push(vec![e, e2]);
        Corner {
            vertex: s,
            incoming: if from == a { e } else { e2 },
        }
    }

    /// Adds an edge through two corners of one face.
    fn join(&mut self, p: Corner, q: Corner) {
        let h = self.edges.len();
        self.edges.push((p.vertex, q.vertex));
        for c in [p, q] {
            let rot = &mut self.rotations[c.vertex];
            let i = rot.iter().position(|&x| x == c.incoming).unwrap();
            rot.insert(i + 1, h);
        }
    }

    fn expand(&mut self, face: &Walk, rng: &mut ChaCha8Rng) -> bool {
        let mut edges: Vec<(VertexId, EdgeId)> = face.clone();
        edges.sort_by_key(|&(_, e)| e);
        edges.dedup_by_key(|&mut (_, e)| e);
        if edges.len() < 2 {
            return false;
        }
        let i = rng.gen_range(0..face.len());
        let mut j = rng.gen_range(0..face.len() - 1);
        if j >= i {
            j += 1;
        }
        let (di, dj) = (face[i], face[j]);
        if di.1 == dj.1 {
            return false;
        }
        let p = self.subdivide(di.1, di.0);
        let q = self.subdivide(dj.1, dj.0);
        self.join(p, q);
        true
    }

    /// Expands a longest face, splitting it as evenly as possible and
    /// preferring edges shared with short faces.
    fn expand_wide(&mut self, faces: &[Walk], rng: &mut ChaCha8Rng) -> bool {
        let longest = faces.iter().map(Vec::len).max().unwrap();
        let pool: Vec<&Walk> = faces.iter().filter(|f| f.len() == longest).collect();
        let face = pool[rng.gen_range(0..pool.len())];
        let mut face_len = vec![[0usize; 2]; self.edges.len()];
        for f in faces {
            for &(t, e) in f {
                face_len[e][usize::from(self.edges[e].0 != t)] = f.len();
            }
        }
        // length of the face across the dart
        let across = |&(t, e): &(VertexId, EdgeId)| face_len[e][usize::from(self.edges[e].0 == t)];
        let l = face.len();
        let mut best = Vec::new();
        let mut best_key = (0, 0);
        for i in 0..l {
            for j in i + 1..l {
                if face[i].1 == face[j].1 {
                    continue;
                }
                let piece = (j - i + 2).min(l - j + i + 2);
                let key = (piece, usize::MAX - across(&face[i]) - across(&face[j]));
                if key > best_key {
                    best_key = key;
                    best.clear();
                }
                if key == best_key {
                    best.push((i, j));
                }
            }
        }
        if best.is_empty() {
            return false;
        }
        let (i, j) = best[rng.gen_range(0..best.len())];
        let (di, dj) = (face[i], face[j]);
        let p = self.subdivide(di.1, di.0);
        let q = self.subdivide(dj.1, dj.0);
        self.join(p, q);
        true
    }

    fn try_join(&mut self, face: &Walk, rng: &mut ChaCha8Rng, allow_parallel: bool) -> bool {
        let corners: Vec<Corner> = self
            .corners(face)
            .into_iter()
            .filter(|c| self.rotations[c.vertex].len() <= 2)
            .collect();
        let mut pairs = Vec::new();
        for (i, p) in corners.iter().enumerate() {
            for q in &corners[i + 1..] {
                if p.vertex == q.vertex {
                    continue;
                }
                let adjacent = self.rotations[p.vertex]
                    .iter()
                    .any(|&e| self.other(e, p.vertex) == q.vertex);
                if adjacent && !allow_parallel {
                    continue;
                }
                pairs.push((*p, *q));
            }
        }
        if pairs.is_empty() {
            return false;
        }
        let (p, q) = pairs[rng.gen_range(0..pairs.len())];
        self.join(p, q);
        true
    }

    /// Doubles a face edge whose ends have degree at most 2, or failing
    /// that subdivides a face edge twice and doubles the middle piece.
    fn double(&mut self, face: &Walk, rng: &mut ChaCha8Rng) {
        let corners = self.corners(face);
        let l = face.len();
        // dart k runs from corner k-1 to corner k
        let candidates: Vec<usize> = (0..l)
            .filter(|&k| {
                let (t, e) = face[k];
                let h = self.other(e, t);
                self.rotations[t].len() <= 2 && self.rotations[h].len() <= 2
            })
            .collect();
        if candidates.is_empty() {
            let (t, e) = face[rng.gen_range(0..l)];
            let p = self.subdivide(e, t);
            let rest = *self.rotations[p.vertex]
                .iter()
                .find(|&&x| x != p.incoming)
                .unwrap();
            let q = self.subdivide(rest, p.vertex);
            self.join(p, q);
            return;
        }
        let k = candidates[rng.gen_range(0..candidates.len())];
        let before = corners[(k + l - 1) % l];
        self.join(before, corners[k]);
    }
}
