//! Test-side oracles and instance builders. Nothing here calls into the
//! library's coloring, embedding or detection code unless the name says so.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use strongcolor::generate::{generate, named_instance, GenSpec, NAMED_INSTANCES};
use strongcolor::graph::{embed_edge_list, PlaneMultigraph};

pub type EdgeList = Vec<(usize, usize)>;

pub fn edge_list(g: &PlaneMultigraph) -> EdgeList {
    g.edges().to_vec()
}

pub fn vertex_count(edges: &[(usize, usize)]) -> usize {
    edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0)
}

/// Two edges see each other: they are distinct and either share an end or
/// some third edge touches both.
pub fn sees(edges: &[(usize, usize)], e: usize, f: usize) -> bool {
    if e == f {
        return false;
    }
    let (a, b) = edges[e];
    let (c, d) = edges[f];
    let touch = |x: usize, y: usize, u: usize, v: usize| x == u || x == v || y == u || y == v;
    if touch(a, b, c, d) {
        return true;
    }
    edges.iter().any(|&(x, y)| touch(x, y, a, b) && touch(x, y, c, d))
}

/// Every edge colored in `1..=k` and no two equal colors see each other.
pub fn is_strong(edges: &[(usize, usize)], colors: &[u8], k: u8) -> bool {
    colors.len() == edges.len()
        && colors.iter().all(|&c| (1..=k).contains(&c))
        && (0..edges.len())
            .all(|e| (e + 1..edges.len()).all(|f| colors[e] != colors[f] || !sees(edges, e, f)))
}

/// No two edges of the set see each other.
pub fn is_induced_matching(edges: &[(usize, usize)], set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &e)| set[i + 1..].iter().all(|&f| e != f && !sees(edges, e, f)))
}

/// Smallest k admitting a strong k-coloring, by plain backtracking.
pub fn brute_chi(edges: &[(usize, usize)]) -> u8 {
    let m = edges.len();
    let conflict: Vec<Vec<usize>> = (0..m)
        .map(|e| (0..e).filter(|&f| sees(edges, e, f)).collect())
        .collect();
    (0..=m as u8)
        .find(|&k| {
            let mut colors = vec![0u8; m];
            m == 0 || extend(&conflict, &mut colors, 0, k, 0)
        })
        .unwrap()
}

fn extend(conflict: &[Vec<usize>], colors: &mut [u8], e: usize, k: u8, used: u8) -> bool {
    if e == colors.len() {
        return true;
    }
    // only one fresh color needs trying
    for c in 1..=k.min(used + 1) {
        if conflict[e].iter().all(|&f| colors[f] != c) {
            colors[e] = c;
            if extend(conflict, colors, e + 1, k, used.max(c)) {
                return true;
            }
        }
    }
    colors[e] = 0;
    false
}

/// Planarity of a subcubic multigraph by trying every rotation system
/// (each 3-vertex has two cyclic orders) and counting faces.
pub fn planar_by_rotations(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(a, b)) in edges.iter().enumerate() {
        assert_ne!(a, b);
        inc[a].push(e);
        inc[b].push(e);
    }
    assert!(inc.iter().all(|r| r.len() <= 3));
    let comps = components_of(n, edges);
    let cubic: Vec<usize> = (0..n).filter(|&v| inc[v].len() == 3).collect();
    (0..1u32 << cubic.len()).any(|mask| {
        let mut rot = inc.clone();
        for (i, &v) in cubic.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rot[v].swap(1, 2);
            }
        }
        let faces = count_faces(edges, &rot);
        let isolated = (0..n).filter(|&v| inc[v].is_empty()).count();
        // Euler per component summed: V - E + F = 2 * components
        n as isize - edges.len() as isize + (faces + isolated) as isize == 2 * comps as isize
    })
}

fn count_faces(edges: &[(usize, usize)], rot: &[Vec<usize>]) -> usize {
    let mut seen = vec![[false; 2]; edges.len()];
    let mut faces = 0;
    for e in 0..edges.len() {
        for s in 0..2 {
            if seen[e][s] {
                continue;
            }
            faces += 1;
            let (mut f, mut side) = (e, s);
            while !seen[f][side] {
                seen[f][side] = true;
                let head = if side == 0 { edges[f].1 } else { edges[f].0 };
                let r = &rot[head];
                let i = r.iter().position(|&x| x == f).unwrap();
                let g = r[(i + 1) % r.len()];
                side = usize::from(edges[g].0 != head);
                f = g;
            }
        }
    }
    faces
}

pub fn components_of(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

/// Canonical form of a multigraph under vertex relabeling, by color
/// refinement plus individualization.
pub fn canonical_form(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let mut mult = vec![vec![0u8; n]; n];
    for &(a, b) in edges {
        mult[a][b] += 1;
        mult[b][a] += 1;
    }
    let mut best: Option<Vec<u8>> = None;
    search_canonical(&mult, refine(&mult, vec![0; n]), &mut best);
    best.unwrap_or_default()
}

fn refine(mult: &[Vec<u8>], mut colors: Vec<usize>) -> Vec<usize> {
    let n = colors.len();
    loop {
        let sigs: Vec<(usize, Vec<(usize, u8)>)> = (0..n)
            .map(|v| {
                let mut s: Vec<(usize, u8)> = (0..n)
                    .filter(|&w| mult[v][w] > 0)
                    .map(|w| (colors[w], mult[v][w]))
                    .collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = colors.iter().collect::<HashSet<_>>().len();
        colors = next;
        if distinct.len() == before {
            return colors;
        }
    }
}

fn search_canonical(mult: &[Vec<u8>], colors: Vec<usize>, best: &mut Option<Vec<u8>>) {
    let n = colors.len();
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &colors {
        *sizes.entry(c).or_default() += 1;
    }
    match sizes.iter().find(|(_, &s)| s > 1) {
        None => {
            let mut order = vec![0; n];
            for v in 0..n {
                order[colors[v]] = v;
            }
            let mut form = vec![n as u8];
            for i in 0..n {
                for j in i + 1..n {
                    form.push(mult[order[i]][order[j]]);
                }
            }
            if best.as_ref().is_none_or(|b| form < *b) {
                *best = Some(form);
            }
        }
        Some((&cell, _)) => {
            for v in (0..n).filter(|&v| colors[v] == cell) {
                let split: Vec<usize> = (0..n)
                    .map(|w| 2 * colors[w] + usize::from(colors[w] == cell && w != v))
                    .collect();
                search_canonical(mult, refine(mult, split), best);
            }
        }
    }
}

/// Every connected loopless subcubic planar multigraph with 1 to
/// `max_edges` edges, one per isomorphism class.
///
/// Each such graph arises from a smaller one by adding an edge between old
/// vertices (drop a non-bridge) or a pendant edge (drop a leaf).
pub fn enumerate_graphs(max_edges: usize) -> Vec<EdgeList> {
    let mut level: Vec<EdgeList> = vec![vec![(0, 1)]];
    let mut all = level.clone();
    for _ in 1..max_edges {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let n = vertex_count(g);
            let mut deg = vec![0; n];
            for &(a, b) in g {
                deg[a] += 1;
                deg[b] += 1;
            }
            let mut children = Vec::new();
            for u in 0..n {
                if deg[u] == 3 {
                    continue;
                }
                let mut h = g.clone();
                h.push((u, n));
                children.push((h, false));
                for v in u + 1..n {
                    if deg[v] < 3 {
                        let mut h = g.clone();
                        h.push((u, v));
                        children.push((h, true));
                    }
                }
            }
            for (h, closes_cycle) in children {
                let hn = vertex_count(&h);
                if seen.insert(canonical_form(hn, &h)) && (!closes_cycle || planar_by_rotations(hn, &h)) {
                    next.push(h);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

pub fn embed(edges: &[(usize, usize)]) -> PlaneMultigraph {
    embed_edge_list(vertex_count(edges), edges).unwrap()
}

/// Replaces edge `e` by a path of two edges through a new vertex.
pub fn subdivide(edges: &[(usize, usize)], e: usize) -> EdgeList {
    let n = vertex_count(edges);
    let mut out = edges.to_vec();
    let (a, b) = out[e];
    out[e] = (a, n);
    out.push((n, b));
    out
}

/// Disjoint union, second graph relabeled after the first.
pub fn disjoint_union(g: &[(usize, usize)], h: &[(usize, usize)]) -> EdgeList {
    let n = vertex_count(g);
    g.iter()
        .copied()
        .chain(h.iter().map(|&(a, b)| (a + n, b + n)))
        .collect()
}

/// Disjoint union plus a bridge from `u` in `g` to `v` in `h`.
pub fn bridge_join(g: &[(usize, usize)], u: usize, h: &[(usize, usize)], v: usize) -> EdgeList {
    let mut out = disjoint_union(g, h);
    out.push((u, v + vertex_count(g)));
    out
}

pub fn icosahedron() -> EdgeList {
    let mut e = Vec::new();
    for i in 0..5 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (lo, lo_next) = (6 + i, 6 + (i + 1) % 5);
        e.extend([
            (0, up),
            (up, up_next),
            (lo, lo_next),
            (lo, 11),
            (up, lo),
            (up_next, lo),
        ]);
    }
    e
}

/// Truncation of a plane graph: each vertex becomes a cycle through its
/// incidences in rotation order. Truncating the icosahedron gives the
/// 60-vertex fullerene whose pentagons are pairwise disjoint.
pub fn truncate(g: &PlaneMultigraph) -> EdgeList {
    // corner (v, e) gets id 2e or 2e+1
    let id = |v: usize, e: usize| 2 * e + usize::from(g.endpoints(e).0 != v);
    let mut out: EdgeList = (0..g.edge_count()).map(|e| (2 * e, 2 * e + 1)).collect();
    for v in 0..g.vertex_count() {
        let rot = g.rotation(v);
        for i in 0..rot.len() {
            out.push((id(v, rot[i]), id(v, rot[(i + 1) % rot.len()])));
        }
    }
    out
}

pub fn c60() -> EdgeList {
    truncate(&embed(&icosahedron()))
}

/// Edges of `g` whose two sides are faces of the given lengths.
pub fn edges_between_faces(g: &PlaneMultigraph, a: usize, b: usize) -> Vec<usize> {
    let faces = g.trace_faces();
    let ef = g.edge_faces(&faces);
    (0..g.edge_count())
        .filter(|&e| {
            let (x, y) = (faces[ef[e].0].len(), faces[ef[e].1].len());
            (x, y) == (a, b) || (x, y) == (b, a)
        })
        .collect()
}

/// Named instances plus `seeds` generated graphs with 10 to 200 vertices.
/// Every third seed allows parallel edges; the subdivision rate cycles
/// through 0 to 0.5.
pub fn corpus(seeds: u64) -> Vec<(String, PlaneMultigraph)> {
    let mut out: Vec<(String, PlaneMultigraph)> = NAMED_INSTANCES
        .iter()
        .map(|&name| (name.to_string(), named_instance(name).unwrap()))
        .collect();
    for seed in 0..seeds {
        let spec = corpus_spec(seed);
        let label = format!(
            "gen n={} seed={} p2={} parallel={}",
            spec.target_vertices, spec.seed, spec.two_vertex_fraction, spec.allow_parallel
        );
        out.push((label, generate(&spec).unwrap()));
    }
    out
}

pub fn corpus_spec(seed: u64) -> GenSpec {
    GenSpec {
        target_vertices: 10 + (seed as usize * 37) % 191,
        seed,
        two_vertex_fraction: [0.0, 0.1, 0.2, 0.35, 0.5][seed as usize % 5],
        allow_parallel: seed.is_multiple_of(3),
    }
}
