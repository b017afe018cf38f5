//! Planar embedding of raw edge lists.
//!
//! Each biconnected block is embedded by the path-addition method of
//! Demoucron, Malgrange and Pertuiset: start from a cycle, then repeatedly
//! take a fragment (an unembedded chord, or a component of the unembedded
//! vertices together with its attachment edges), pick a face that contains
//! all of its attachment vertices, and route a path of the fragment through
//! that face. A fragment with no admissible face certifies non-planarity.
//! Quadratic time, which is plenty for a few hundred vertices.
//!
//! Block rotations are concatenated at cut vertices and parallel edges are
//! placed next to their first copy, which leaves a digon face between them.

use std::collections::{HashMap, VecDeque};

use super::{EdgeId, GraphError, PlaneMultigraph, VertexId};

pub fn embed_edge_list(
    vertex_count: usize,
    edge_endpoints: &[(VertexId, VertexId)],
) -> Result<PlaneMultigraph, GraphError> {
    for (e, &(a, b)) in edge_endpoints.iter().enumerate() {
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

    // first copy of each vertex pair represents it during embedding
    let mut representative: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
    let mut twin_of: Vec<Option<EdgeId>> = vec![None; edge_endpoints.len()];
    let mut simple: Vec<EdgeId> = Vec::new();
    for (e, &(a, b)) in edge_endpoints.iter().enumerate() {
        let key = (a.min(b), a.max(b));
        match representative.get(&key) {
            Some(&r) => twin_of[e] = Some(r),
            None => {
                representative.insert(key, e);
                simple.push(e);
            }
        }
    }

    let mut rotations: Vec<Vec<EdgeId>> = vec![Vec::new(); vertex_count];
    for block in biconnected_blocks(vertex_count, edge_endpoints, &simple) {
        let block_rot = if block.len() == 1 {
            let e = block[0];
            let (a, b) = edge_endpoints[e];
            vec![(a, vec![e]), (b, vec![e])]
        } else {
            embed_block(edge_endpoints, &block)?
        };
        for (v, cyc) in block_rot {
            rotations[v].extend(cyc);
        }
    }

    for (e, twin) in twin_of.iter().enumerate() {
        let Some(r) = *twin else { continue };
        let (a, b) = edge_endpoints[r];
        let pa = rotations[a].iter().position(|&x| x == r).unwrap();
        rotations[a].insert(pa + 1, e);
        let pb = rotations[b].iter().position(|&x| x == r).unwrap();
        rotations[b].insert(pb, e);
    }

    let g = PlaneMultigraph::new_unchecked_genus(vertex_count, edge_endpoints.to_vec(), rotations)?;
    // a non-planar result here means the embedder itself is wrong
    g.check_planar_rotation()
        .expect("path-addition embedding produced a non-planar rotation system");
    Ok(g)
}

/// Biconnected blocks of the simple graph formed by `edges`, as lists of
/// edge ids. Tarjan's algorithm with an explicit stack.
fn biconnected_blocks(n: usize, endpoints: &[(VertexId, VertexId)], edges: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    let mut adj: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for &e in edges {
        let (a, b) = endpoints[e];
        adj[a].push(e);
        adj[b].push(e);
    }
    let other = |e: EdgeId, v: VertexId| {
        let (a, b) = endpoints[e];
        if a == v {
            b
        } else {
            a
        }
    };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, pe, idx) = *top;
            if idx < adj[v].len() {
                top.2 += 1;
                let e = adj[v][idx];
                if Some(e) == pe {
                    continue;
                }
                let w = other(e, v);
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(pe), Some(&(p, _, _))) = (pe, stack.last()) {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(x) = edge_stack.pop() {
                            block.push(x);
                            if x == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one biconnected simple block with at least three vertices.
/// Returns the rotation at each block vertex.
fn embed_block(
    endpoints: &[(VertexId, VertexId)],
    block: &[EdgeId],
) -> Result<Vec<(VertexId, Vec<EdgeId>)>, GraphError> {
    // local indexing
    let mut local: HashMap<VertexId, usize> = HashMap::new();
    let mut global: Vec<VertexId> = Vec::new();
    for &e in block {
        let (a, b) = endpoints[e];
        for v in [a, b] {
            local.entry(v).or_insert_with(|| {
                global.push(v);
                global.len() - 1
            });
        }
    }
    let n = global.len();
    let m = block.len();
    // Euler bound for simple planar graphs
    if m > 3 * n - 6 {
        return Err(GraphError::NonPlanar);
    }
    let ends: Vec<(usize, usize)> = block
        .iter()
        .map(|&e| (local[&endpoints[e].0], local[&endpoints[e].1]))
        .collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b)) in ends.iter().enumerate() {
        adj[a].push(i);
        adj[b].push(i);
    }
    let other = |i: usize, v: usize| if ends[i].0 == v { ends[i].1 } else { ends[i].0 };
    let mut edge_index: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, &(a, b)) in ends.iter().enumerate() {
        edge_index.insert((a.min(b), a.max(b)), i);
    }

    let mut in_h = vec![false; n];
    let mut edge_in_h = vec![false; m];
    let cycle = find_cycle(n, &adj, &other);
    for w in 0..cycle.len() {
        let a = cycle[w];
        let b = cycle[(w + 1) % cycle.len()];
        in_h[a] = true;
        edge_in_h[edge_index[&(a.min(b), a.max(b))]] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut embedded = cycle.len();

    while embedded < m {
        let fragments = fragments(n, &adj, &other, &ends, &in_h, &edge_in_h);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return Err(GraphError::NonPlanar),
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("unembedded edges imply a fragment");
        let path = fragment_path(&fragments[fi], &adj, &other, &in_h);
        for w in 0..path.len() - 1 {
            let (a, b) = (path[w], path[w + 1]);
            edge_in_h[edge_index[&(a.min(b), a.max(b))]] = true;
            in_h[a] = true;
            in_h[b] = true;
        }
        embedded += path.len() - 1;
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }

    // successor at w of edge (v,w) is edge (w,x) for consecutive v,w,x
    let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
    for f in &faces {
        let k = f.len();
        for t in 0..k {
            let v = f[t];
            let w = f[(t + 1) % k];
            let x = f[(t + 2) % k];
            let in_edge = edge_index[&(v.min(w), v.max(w))];
            let out_edge = edge_index[&(w.min(x), w.max(x))];
            succ.insert((w, in_edge), out_edge);
        }
    }
    let mut out = Vec::with_capacity(n);
    for v in 0..n {
        let start = adj[v][0];
        let mut rot = vec![block[start]];
        let mut e = succ[&(v, start)];
        while e != start {
            rot.push(block[e]);
            e = succ[&(v, e)];
        }
        debug_assert_eq!(rot.len(), adj[v].len());
        out.push((global[v], rot));
    }
    Ok(out)
}

fn find_cycle(n: usize, adj: &[Vec<usize>], other: &impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut stack = vec![(0usize, usize::MAX)];
    visited[0] = true;
    while let Some((v, pe)) = stack.pop() {
        for &e in &adj[v] {
            if e == pe {
                continue;
            }
            let w = other(e, v);
            if visited[w] {
                // v -> ... -> w along tree plus edge: walk both up to the LCA
                let anc_v = ancestors(v, &parent);
                let anc_w = ancestors(w, &parent);
                let lca = *anc_v.iter().find(|x| anc_w.contains(x)).unwrap();
                let mut cyc: Vec<usize> = anc_v.iter().take_while(|&&x| x != lca).copied().collect();
                cyc.push(lca);
                let tail: Vec<usize> = anc_w.iter().take_while(|&&x| x != lca).copied().collect();
                cyc.extend(tail.into_iter().rev());
                if cyc.len() >= 3 {
                    return cyc;
                }
                continue;
            }
            visited[w] = true;
            parent[w] = Some((v, e));
            stack.push((w, e));
        }
    }
    unreachable!("a biconnected block with three or more vertices has a cycle")
}

fn ancestors(mut v: usize, parent: &[Option<(usize, usize)>]) -> Vec<usize> {
    let mut out = vec![v];
    while let Some((p, _)) = parent[v] {
        out.push(p);
        v = p;
    }
    out
}

struct Fragment {
    /// Interior (unembedded) vertices; empty for a chord.
    interior: Vec<usize>,
    /// Chord edge, if the fragment is a single edge between embedded vertices.
    chord: Option<usize>,
    attachments: Vec<usize>,
}

fn fragments(
    n: usize,
    adj: &[Vec<usize>],
    other: &impl Fn(usize, usize) -> usize,
    ends: &[(usize, usize)],
    in_h: &[bool],
    edge_in_h: &[bool],
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (i, &(a, b)) in ends.iter().enumerate() {
        if !edge_in_h[i] && in_h[a] && in_h[b] {
            out.push(Fragment {
                interior: Vec::new(),
                chord: Some(i),
                attachments: vec![a, b],
            });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in &adj[v] {
                let w = other(e, v);
                if in_h[w] {
                    if !attachments.contains(&w) {
                        attachments.push(w);
                    }
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                    queue.push_back(w);
                }
            }
        }
        attachments.sort_unstable();
        out.push(Fragment {
            interior,
            chord: None,
            attachments,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(
    frag: &Fragment,
    adj: &[Vec<usize>],
    other: &impl Fn(usize, usize) -> usize,
    in_h: &[bool],
) -> Vec<usize> {
    if frag.chord.is_some() {
        return frag.attachments.clone();
    }
    let start = frag.attachments[0];
    let interior: std::collections::HashSet<usize> = frag.interior.iter().copied().collect();
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &e in &adj[start] {
        let w = other(e, start);
        if interior.contains(&w) && !parent.contains_key(&w) {
            parent.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &e in &adj[v] {
            let w = other(e, v);
            if in_h[w] {
                if w != start {
                    let mut path = vec![w, v];
                    let mut x = v;
                    while let Some(&p) = parent.get(&x) {
                        path.push(p);
                        if p == start {
                            break;
                        }
                        x = p;
                    }
                    path.reverse();
                    return path;
                }
            } else if interior.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a biconnected block have two attachments")
}

/// Splits oriented face `face` by `path` (from one face vertex to another).
/// The face walk and the two results are oriented consistently: the path is
/// walked backwards in the first and forwards in the second.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    f1.extend(interior.iter().rev());
    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    f2.extend(interior.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face_lengths(g: &PlaneMultigraph) -> Vec<usize> {
        let mut l: Vec<usize> = g.trace_faces().iter().map(|f| f.len()).collect();
        l.sort();
        l
    }

    #[test]
    fn cycle_has_two_faces() {
        let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = embed_edge_list(6, &edges).unwrap();
        assert_eq!(face_lengths(&g), vec![6, 6]);
    }

    #[test]
    fn k5_and_k33_are_nonplanar() {
        let mut k5 = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                k5.push((a, b));
            }
        }
        assert_eq!(embed_edge_list(5, &k5).unwrap_err(), GraphError::NonPlanar);
        let mut k33 = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                k33.push((a, b));
            }
        }
        assert_eq!(embed_edge_list(6, &k33).unwrap_err(), GraphError::NonPlanar);
    }

    #[test]
    fn petersen_is_nonplanar() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        assert_eq!(embed_edge_list(10, &e).unwrap_err(), GraphError::NonPlanar);
    }

    #[test]
    fn cube_has_six_square_faces() {
        let mut edges = Vec::new();
        for i in 0..8usize {
            for b in [1, 2, 4] {
                if i & b == 0 {
                    edges.push((i, i | b));
                }
            }
        }
        let g = embed_edge_list(8, &edges).unwrap();
        assert_eq!(face_lengths(&g), vec![4; 6]);
    }

    #[test]
    fn k4_has_four_triangles() {
        let g = embed_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(face_lengths(&g), vec![3; 4]);
    }

    #[test]
    fn blocks_joined_at_cut_vertex() {
        // two triangles sharing vertex 2, plus a pendant path
        let g = embed_edge_list(
            7,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6)],
        )
        .unwrap();
        assert!(g.check_planar_rotation().is_ok());
        assert_eq!(g.trace_faces().len(), 3);
    }

    #[test]
    fn parallel_edges_form_digons() {
        let g = embed_edge_list(2, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(face_lengths(&g), vec![2, 2, 2]);
        let h = embed_edge_list(4, &[(0, 1), (1, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(face_lengths(&h), vec![2, 6]);
    }

    #[test]
    fn disconnected_input() {
        let g = embed_edge_list(7, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap();
        assert_eq!(face_lengths(&g), vec![3, 3, 4, 4]);
    }

    #[test]
    fn loops_rejected() {
        assert_eq!(
            embed_edge_list(1, &[(0, 0)]).unwrap_err(),
            GraphError::LoopEdge { edge: 0, vertex: 0 }
        );
    }
}
