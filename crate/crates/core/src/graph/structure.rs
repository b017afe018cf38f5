use std::collections::{BTreeSet, VecDeque};

use super::{EdgeId, PlaneMultigraph, VertexId};

/// Structural quantities shared by the detectors and the auditor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub bridges: BTreeSet<EdgeId>,
    pub components: Vec<Vec<VertexId>>,
    pub two_vertices: BTreeSet<VertexId>,
    /// Every simple cycle of length 3 to 7, as a vertex sequence starting at
    /// its lowest vertex and continuing towards the lower of the two
    /// neighbours on the cycle.
    pub short_cycles: Vec<Vec<VertexId>>,
    /// Length of a shortest cycle; parallel edges form cycles of length 2.
    /// `None` for forests.
    pub girth: Option<usize>,
}

impl StructureReport {
    pub fn of(g: &PlaneMultigraph) -> Self {
        Self {
            bridges: bridges(g),
            components: components(g),
            two_vertices: (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).collect(),
            short_cycles: short_cycles(g, 3, 7),
            girth: girth(g),
        }
    }
}

/// Connected components, each sorted, ordered by lowest vertex.
pub fn components(g: &PlaneMultigraph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Bridges, by lowpoint DFS over edge ids (so parallel edges are never
/// bridges). Iterative to keep long paths off the call stack.
pub fn bridges(g: &PlaneMultigraph) -> BTreeSet<EdgeId> {
    bridges_excluding(g, None)
}

/// Bridges of `g` with edge `skip` deleted.
pub(crate) fn bridges_excluding(g: &PlaneMultigraph, skip: Option<EdgeId>) -> BTreeSet<EdgeId> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = BTreeSet::new();
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, edge used to enter it, next rotation index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, idx) = *top;
            let rot = g.rotation(v);
            if idx < rot.len() {
                top.2 += 1;
                let e = rot[idx];
                if Some(e) == parent_edge || Some(e) == skip {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(pe), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.insert(pe);
                    }
                }
            }
        }
    }
    out
}

/// All simple cycles with `min_len..=max_len` vertices, canonicalised and
/// deduplicated (parallel edges do not produce distinct cycles).
pub fn short_cycles(g: &PlaneMultigraph, min_len: usize, max_len: usize) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let nbrs: Vec<Vec<VertexId>> = (0..n).map(|v| g.distinct_neighbors(v)).collect();
    let mut out = BTreeSet::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend_cycles(
            &nbrs,
            s,
            min_len.max(3),
            max_len,
            &mut path,
            &mut on_path,
            &mut out,
        );
        on_path[s] = false;
        path.pop();
    }
    out.into_iter().collect()
}

fn extend_cycles(
    nbrs: &[Vec<VertexId>],
    start: VertexId,
    min_len: usize,
    max_len: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut BTreeSet<Vec<VertexId>>,
) {
    let v = *path.last().unwrap();
    for &w in &nbrs[v] {
        if w == start && path.len() >= min_len && path[1] < path[path.len() - 1] {
            out.insert(path.clone());
        }
        // start is the lowest vertex of every cycle it reports
        if w > start && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend_cycles(nbrs, start, min_len, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Shortest cycle length, counting a parallel pair as a 2-cycle.
pub fn girth(g: &PlaneMultigraph) -> Option<usize> {
    if g.has_parallel_edges() {
        return Some(2);
    }
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in g.rotation(v) {
                if e == parent_edge[v] && v != s {
                    continue;
                }
                let w = g.other_end(e, v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::embed_edge_list;

    fn graph(n: usize, edges: &[(usize, usize)]) -> PlaneMultigraph {
        embed_edge_list(n, edges).unwrap()
    }

    fn naive_bridges(g: &PlaneMultigraph) -> BTreeSet<EdgeId> {
        let base = components(g).len();
        (0..g.edge_count())
            .filter(|&e| {
                let edges: Vec<_> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != e)
                    .map(|(_, &p)| p)
                    .collect();
                let h = embed_edge_list(g.vertex_count(), &edges).unwrap();
                components(&h).len() > base
            })
            .collect()
    }

    #[test]
    fn path_report() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let r = g.structure_report();
        assert_eq!(r.bridges, BTreeSet::from([0, 1]));
        assert_eq!(r.girth, None);
        assert!(r.short_cycles.is_empty());
        assert_eq!(r.two_vertices, BTreeSet::from([1]));
    }

    #[test]
    fn k4_report() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let r = g.structure_report();
        assert!(r.bridges.is_empty());
        assert_eq!(r.girth, Some(3));
        let triangles: Vec<_> = r.short_cycles.iter().filter(|c| c.len() == 3).collect();
        assert_eq!(triangles.len(), 4);
        // K4 also has three 4-cycles
        assert_eq!(r.short_cycles.len(), 7);
    }

    #[test]
    fn c5_with_pendant() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]);
        let r = g.structure_report();
        assert_eq!(r.bridges, BTreeSet::from([5]));
        assert_eq!(r.girth, Some(5));
        assert_eq!(r.short_cycles, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn parallel_edges_are_not_bridges() {
        let g = graph(3, &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(bridges(&g), BTreeSet::from([2]));
        assert_eq!(girth(&g), Some(2));
    }

    #[test]
    fn bridges_match_naive_on_small_graphs() {
        let cases: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (6, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
            (5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]),
            (4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
            (7, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 4)]),
        ];
        for (n, edges) in cases {
            let g = graph(n, &edges);
            assert_eq!(bridges(&g), naive_bridges(&g), "{edges:?}");
        }
    }

    #[test]
    fn cube_girth_and_cycles() {
        let mut edges = Vec::new();
        for i in 0..8usize {
            for b in [1, 2, 4] {
                if i & b == 0 {
                    edges.push((i, i | b));
                }
            }
        }
        let g = graph(8, &edges);
        assert_eq!(girth(&g), Some(4));
        let fours = short_cycles(&g, 4, 4);
        assert_eq!(fours.len(), 6);
        // 6-cycles in Q3: 16
        assert_eq!(short_cycles(&g, 6, 6).len(), 16);
    }
}
