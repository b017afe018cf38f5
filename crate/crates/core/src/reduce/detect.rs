use std::cell::OnceCell;
use std::collections::VecDeque;

use super::{ConfigKind, Configuration, NearPair};
use crate::graph::{
    bridges, bridges_excluding, components, short_cycles, Dart, EdgeId, Face, PlaneMultigraph, VertexId,
};

/// The first configuration present in `g`, in [`ConfigKind::ALL`] order.
/// `None` only for graphs without vertices, unless the detector has a gap.
pub fn find_configuration(g: &PlaneMultigraph) -> Option<Configuration> {
    let ctx = Ctx::new(g);
    ConfigKind::ALL.iter().find_map(|&k| ctx.detect(k))
}

/// The first witness of `kind` in `g`, ignoring every other kind.
///
/// Detectors for later kinds assume the earlier kinds are absent (for
/// example that 2-vertices are far apart); they never panic when that does
/// not hold, but may then miss witnesses.
pub fn kind_present(g: &PlaneMultigraph, kind: ConfigKind) -> Option<Configuration> {
    Ctx::new(g).detect(kind)
}

struct Ctx<'a> {
    g: &'a PlaneMultigraph,
    faces: OnceCell<Vec<Face>>,
    edge_faces: OnceCell<Vec<(usize, usize)>>,
    cycles: OnceCell<Vec<Vec<VertexId>>>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a PlaneMultigraph) -> Self {
        Self {
            g,
            faces: OnceCell::new(),
            edge_faces: OnceCell::new(),
            cycles: OnceCell::new(),
        }
    }

    fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| self.g.trace_faces())
    }

    fn edge_faces(&self) -> &[(usize, usize)] {
        self.edge_faces.get_or_init(|| self.g.edge_faces(self.faces()))
    }

    fn cycles(&self) -> &[Vec<VertexId>] {
        self.cycles.get_or_init(|| short_cycles(self.g, 3, 5))
    }

    fn detect(&self, kind: ConfigKind) -> Option<Configuration> {
        match kind {
            ConfigKind::Disconnected => self.disconnected(),
            ConfigKind::ParallelEdge => self.parallel_edge(),
            ConfigKind::DegreeLeqOne => self.degree_leq_one(),
            ConfigKind::CutEdge => self.cut_edge(),
            ConfigKind::NonAdjacentTwoEdgeCut => self.two_edge_cut(),
            ConfigKind::TriangleWith2Vertex => self.triangle_with_2_vertex(),
            ConfigKind::Triangle => self.triangle(),
            ConfigKind::FourCycleWith2Vertex => self.four_cycle_with_2_vertex(),
            ConfigKind::FourCycle => self.four_cycle(),
            ConfigKind::TwoVerticesAtDistance1or2 => self.near_pair(),
            ConfigKind::TwoVertexOn5Face => self.two_vertex_on_5_cycle(),
            ConfigKind::TwoVerticesAtDistance3 => self.distance_3(),
            ConfigKind::FaceBoundaryDistance4Pair => self.boundary_distance_4(),
            ConfigKind::TwoVertexOn6Face => self.two_vertex_on_6_face(),
            ConfigKind::TwoVertexOn7Face => self.two_vertex_on_7_face(),
            ConfigKind::AdjacentFiveFiveFaces => self.five_five(),
            ConfigKind::FiveSixAdjacentFaces => self.five_six(),
        }
    }

    fn is_two(&self, v: VertexId) -> bool {
        self.g.degree(v) == 2
    }

    /// The neighbour of the 3-vertex `v` other than `a` and `b`.
    fn third(&self, v: VertexId, a: VertexId, b: VertexId) -> Option<VertexId> {
        let g = self.g;
        if g.degree(v) != 3 {
            return None;
        }
        let mut others = g.neighbors(v).filter(|&w| w != a && w != b);
        let w = others.next()?;
        others.next().is_none().then_some(w)
    }

    /// The other neighbour of the 2-vertex `v`.
    fn other(&self, v: VertexId, a: VertexId) -> Option<VertexId> {
        if !self.is_two(v) {
            return None;
        }
        let mut others = self.g.neighbors(v).filter(|&w| w != a);
        let w = others.next()?;
        others.next().is_none().then_some(w)
    }

    /// Third neighbours of cycle vertices, `None` at 2-vertices, or `None`
    /// overall if some 3-vertex has no off-cycle third neighbour.
    fn cycle_thirds(&self, x: &[VertexId], skip: &[usize]) -> Option<Vec<VertexId>> {
        let n = x.len();
        (0..n)
            .map(|i| {
                if skip.contains(&i) {
                    return Some(x[i]);
                }
                let y = self.third(x[i], x[(i + n - 1) % n], x[(i + 1) % n])?;
                (!x.contains(&y)).then_some(y)
            })
            .collect()
    }

    /// Vertices of a face walk when they are pairwise distinct.
    fn simple_face(&self, f: &Face) -> Option<Vec<VertexId>> {
        let vs = f.vertices();
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        (sorted.len() == vs.len()).then_some(vs)
    }

    fn disconnected(&self) -> Option<Configuration> {
        let comps = components(self.g);
        (comps.len() > 1).then_some(Configuration::Disconnected { components: comps })
    }

    fn parallel_edge(&self) -> Option<Configuration> {
        let g = self.g;
        (0..g.edge_count()).find_map(|e| {
            let (a, b) = g.endpoints(e);
            g.rotation(a)
                .iter()
                .copied()
                .filter(|&f| f < e && g.other_end(f, a) == b)
                .min()
                .map(|twin| Configuration::ParallelEdge { edge: e, twin })
        })
    }

    fn degree_leq_one(&self) -> Option<Configuration> {
        (0..self.g.vertex_count())
            .find(|&v| self.g.degree(v) <= 1)
            .map(|vertex| Configuration::DegreeLeqOne { vertex })
    }

    fn cut_edge(&self) -> Option<Configuration> {
        bridges(self.g).into_iter().next().map(|edge| {
            let (v1, v2) = self.g.endpoints(edge);
            Configuration::CutEdge { edge, v1, v2 }
        })
    }

    fn two_edge_cut(&self) -> Option<Configuration> {
        let g = self.g;
        for e1 in 0..g.edge_count() {
            let (a, b) = g.endpoints(e1);
            for e2 in bridges_excluding(g, Some(e1)) {
                if e2 <= e1 {
                    continue;
                }
                let (c, d) = g.endpoints(e2);
                if [a, b].contains(&c) || [a, b].contains(&d) {
                    continue;
                }
                let side = reachable(g, a, &[e1, e2]);
                if side[b] || side[c] == side[d] {
                    continue;
                }
                let (u2, w2) = if side[c] { (c, d) } else { (d, c) };
                return Some(Configuration::NonAdjacentTwoEdgeCut {
                    e1,
                    e2,
                    u1: a,
                    w1: b,
                    u2,
                    w2,
                });
            }
        }
        None
    }

    fn triangle_with_2_vertex(&self) -> Option<Configuration> {
        let g = self.g;
        (0..g.vertex_count()).find_map(|w0| {
            if !self.is_two(w0) {
                return None;
            }
            let n = g.distinct_neighbors(w0);
            (n.len() == 2 && g.edge_between(n[0], n[1]).is_some())
                .then(|| Configuration::TriangleWith2Vertex { w: [w0, n[0], n[1]] })
        })
    }

    fn triangle(&self) -> Option<Configuration> {
        self.cycles().iter().filter(|c| c.len() == 3).find_map(|c| {
            let u = self.cycle_thirds(c, &[])?;
            Some(Configuration::Triangle {
                w: [c[0], c[1], c[2]],
                u: [u[0], u[1], u[2]],
            })
        })
    }

    fn four_cycle_with_2_vertex(&self) -> Option<Configuration> {
        self.cycles().iter().filter(|c| c.len() == 4).find_map(|c| {
            let i = (0..4).find(|&i| self.is_two(c[i]))?;
            Some(Configuration::FourCycleWith2Vertex {
                w: [c[i], c[(i + 1) % 4], c[(i + 2) % 4], c[(i + 3) % 4]],
            })
        })
    }

    fn four_cycle(&self) -> Option<Configuration> {
        self.cycles().iter().filter(|c| c.len() == 4).find_map(|c| {
            let y = self.cycle_thirds(c, &[])?;
            let r = (0..2).find(|&r| y[r] != y[r + 2])?;
            Some(Configuration::FourCycle {
                x: [c[r], c[r + 1], c[(r + 2) % 4], c[(r + 3) % 4]],
                y: [y[r], y[r + 1], y[(r + 2) % 4], y[(r + 3) % 4]],
            })
        })
    }

    fn near_pair(&self) -> Option<Configuration> {
        let g = self.g;
        for u in 0..g.vertex_count() {
            if !self.is_two(u) {
                continue;
            }
            for v in g.distinct_neighbors(u) {
                if self.is_two(v) {
                    let Some(w) = self.other(v, u) else { continue };
                    return Some(Configuration::TwoVerticesAtDistance1or2(NearPair::Adjacent {
                        u,
                        v,
                        w,
                    }));
                }
            }
        }
        for u in 0..g.vertex_count() {
            if !self.is_two(u) {
                continue;
            }
            for x in g.distinct_neighbors(u) {
                if g.degree(x) != 3 {
                    continue;
                }
                for v in g.distinct_neighbors(x) {
                    if v == u || !self.is_two(v) {
                        continue;
                    }
                    let (Some(u_prime), Some(v_prime), Some(x_prime)) =
                        (self.other(u, x), self.other(v, x), self.third(x, u, v))
                    else {
                        continue;
                    };
                    return Some(Configuration::TwoVerticesAtDistance1or2(NearPair::Through {
                        u,
                        v,
                        x,
                        u_prime,
                        v_prime,
                        x_prime,
                    }));
                }
            }
        }
        None
    }

    fn two_vertex_on_5_cycle(&self) -> Option<Configuration> {
        self.cycles().iter().filter(|c| c.len() == 5).find_map(|c| {
            let i = (0..5).find(|&i| self.is_two(c[i]))?;
            let forward: Vec<VertexId> = (1..=5).map(|k| c[(i + k) % 5]).collect();
            let backward: Vec<VertexId> = (1..=5).map(|k| c[(i + 5 - k) % 5]).collect();
            [forward, backward].into_iter().find_map(|x| {
                let y = self.cycle_thirds(&x, &[4])?;
                (y[1] != y[3]).then(|| Configuration::TwoVertexOn5Face {
                    x: [x[0], x[1], x[2], x[3], x[4]],
                    y: [y[0], y[1], y[2], y[3]],
                })
            })
        })
    }

    fn distance_3(&self) -> Option<Configuration> {
        let g = self.g;
        for a in 0..g.vertex_count() {
            if !self.is_two(a) {
                continue;
            }
            let (dist, parent) = bfs(g, a, 3);
            let Some(b) = (0..g.vertex_count()).find(|&b| dist[b] == 3 && self.is_two(b)) else {
                continue;
            };
            let p2 = parent[b];
            let p1 = parent[p2];
            let (Some(x0), Some(x5), Some(y0), Some(y1)) = (
                self.other(a, p1),
                self.other(b, p2),
                self.third(p1, a, p2),
                self.third(p2, p1, b),
            ) else {
                continue;
            };
            return Some(Configuration::TwoVerticesAtDistance3 {
                x: [x0, a, p1, p2, b, x5],
                y: [y0, y1],
            });
        }
        None
    }

    fn boundary_distance_4(&self) -> Option<Configuration> {
        for f in self.faces() {
            let Some(w) = self.simple_face(f) else { continue };
            let l = w.len();
            if l < 8 {
                continue;
            }
            for i in 0..l {
                if !self.is_two(w[i]) || !self.is_two(w[(i + 4) % l]) {
                    continue;
                }
                let x: Vec<VertexId> = (0..7).map(|k| w[(i + l - 1 + k) % l]).collect();
                let ys: Option<Vec<VertexId>> = (2..5)
                    .map(|j| {
                        let y = self.third(x[j], x[j - 1], x[j + 1])?;
                        (!x[1..6].contains(&y)).then_some(y)
                    })
                    .collect();
                let Some(y) = ys else { continue };
                if y[0] == y[2] {
                    continue;
                }
                return Some(Configuration::FaceBoundaryDistance4Pair {
                    x: [x[0], x[1], x[2], x[3], x[4], x[5], x[6]],
                    y: [y[0], y[1], y[2]],
                });
            }
        }
        None
    }

    /// Simple faces of length `len` with a 2-vertex, rotated so it comes
    /// first (keeping the walk direction), with their third neighbours.
    fn faces_with_2_vertex(&self, len: usize) -> impl Iterator<Item = (Vec<VertexId>, Vec<VertexId>)> + '_ {
        self.faces()
            .iter()
            .filter(move |f| f.len() == len)
            .filter_map(move |f| {
                let w = self.simple_face(f)?;
                let i = (0..len).find(|&i| self.is_two(w[i]))?;
                let x: Vec<VertexId> = (0..len).map(|k| w[(i + k) % len]).collect();
                let y = self.cycle_thirds(&x, &[0])?;
                Some((x, y))
            })
    }

    fn two_vertex_on_6_face(&self) -> Option<Configuration> {
        self.faces_with_2_vertex(6).find_map(|(x, y)| {
            let distinct = y[1] != y[3] && y[1] != y[4] && y[3] != y[4];
            distinct.then(|| Configuration::TwoVertexOn6Face {
                x: x.clone().try_into().unwrap(),
                y: y.try_into().unwrap(),
            })
        })
    }

    fn two_vertex_on_7_face(&self) -> Option<Configuration> {
        self.faces_with_2_vertex(7).find_map(|(x, y)| {
            (y[1] != y[6] && y[2] != y[4]).then(|| Configuration::TwoVertexOn7Face {
                x: x.clone().try_into().unwrap(),
                y: y.try_into().unwrap(),
            })
        })
    }

    /// For the dart `d`, the vertices of its face walk starting just after
    /// it, so the walk ends at the tail of `d`.
    fn walk_after(&self, d: Dart) -> Vec<VertexId> {
        let g = self.g;
        let mut out = Vec::new();
        let mut cur = g.next_dart(d);
        while cur != d {
            out.push(cur.tail);
            cur = g.next_dart(cur);
        }
        out.push(d.tail);
        out
    }

    /// Darts `d` of every edge such that the face of `d` has length `a` and
    /// the face of its reverse has length `b`.
    fn adjacent_face_darts(&self, a: usize, b: usize) -> Vec<Dart> {
        let g = self.g;
        let faces = self.faces();
        let ef = self.edge_faces();
        let mut out = Vec::new();
        for e in 0..g.edge_count() {
            let (p, q) = g.endpoints(e);
            let (fp, fq) = ef[e];
            if fp == fq {
                continue;
            }
            if faces[fp].len() == a && faces[fq].len() == b {
                out.push(Dart { tail: p, edge: e });
            }
            if faces[fq].len() == a && faces[fp].len() == b {
                out.push(Dart { tail: q, edge: e });
            }
        }
        out
    }

    fn five_five(&self) -> Option<Configuration> {
        let g = self.g;
        self.adjacent_face_darts(5, 5).into_iter().find_map(|d| {
            let p = d.tail;
            let first = self.walk_after(d);
            let q = first[0];
            let second = self.walk_after(Dart {
                tail: q,
                edge: d.edge,
            });
            // x0..x4 from the first face, x5..x7 from the second
            let mut x = first.clone();
            x.extend_from_slice(&second[1..4]);
            if x[4] != p || second[0] != p || second[4] != q || !all_distinct(&x) {
                return None;
            }
            let mut y = x.clone();
            for i in [1, 2, 3, 5, 6, 7] {
                let yi = self.third(x[i], x[i - 1], x[(i + 1) % 8])?;
                if x.contains(&yi) {
                    return None;
                }
                y[i] = yi;
            }
            let ys = [y[1], y[2], y[3], y[5], y[6], y[7]];
            for i in 0..6 {
                for j in i + 1..6 {
                    // only y2 = y6 may coincide
                    if ys[i] == ys[j] && !(i == 1 && j == 4) {
                        return None;
                    }
                }
            }
            debug_assert!(g.edge_between(x[4], x[0]).is_some());
            Some(Configuration::AdjacentFiveFiveFaces {
                x: x.try_into().unwrap(),
                y: y.try_into().unwrap(),
            })
        })
    }

    fn five_six(&self) -> Option<Configuration> {
        self.adjacent_face_darts(6, 5).into_iter().find_map(|d| {
            let six = self.walk_after(d);
            let q = six[0];
            let five = self.walk_after(Dart {
                tail: q,
                edge: d.edge,
            });
            let mut u = six.clone();
            u.extend_from_slice(&five[1..4]);
            if !all_distinct(&u) {
                return None;
            }
            let mut v = u.clone();
            for i in [1, 2, 3, 4, 6, 7, 8] {
                let vi = self.third(u[i], u[i - 1], u[(i + 1) % 9])?;
                if u.contains(&vi) {
                    return None;
                }
                v[i] = vi;
            }
            if v[2] == v[3] || v[4] == v[6] || v[8] == v[1] {
                return None;
            }
            Some(Configuration::FiveSixAdjacentFaces {
                u: u.try_into().unwrap(),
                v: v.try_into().unwrap(),
            })
        })
    }
}

fn all_distinct(v: &[VertexId]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

fn reachable(g: &PlaneMultigraph, s: VertexId, avoid: &[EdgeId]) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for &e in g.rotation(v) {
            if avoid.contains(&e) {
                continue;
            }
            let w = g.other_end(e, v);
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Distances from `s` up to `limit` (`usize::MAX` beyond) and BFS parents,
/// exploring neighbours in ascending order.
fn bfs(g: &PlaneMultigraph, s: VertexId, limit: usize) -> (Vec<usize>, Vec<VertexId>) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if dist[v] == limit {
            continue;
        }
        for w in g.distinct_neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}
