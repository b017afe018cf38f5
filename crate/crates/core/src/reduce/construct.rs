use std::collections::BTreeSet;

use super::{AuxEnd, Configuration, NearPair, ReduceError, Reduced, ReducedGraph, ReductionStep};
use crate::graph::{components, embed_edge_list, EdgeId, PlaneMultigraph, VertexId};

/// Builds the reduced graph (or split parts) for `cfg`.
///
/// Auxiliary edges at surviving vertices take the rotation slot of the
/// removed pendant edge they replace, which keeps them inside the region the
/// removed vertices vacated. New vertices try each cyclic order of their
/// edges and keep the first planar one.
pub fn apply_reduction(g: &PlaneMultigraph, cfg: &Configuration) -> Result<ReductionStep, ReduceError> {
    let invalid = |detail: String| ReduceError::InvalidConfiguration {
        kind: cfg.kind(),
        detail,
    };
    let edge = |a: VertexId, b: VertexId| {
        g.edge_between(a, b)
            .ok_or_else(|| invalid(format!("no edge between {a} and {b}")))
    };
    let old = |vertex: VertexId, x: VertexId| -> Result<AuxEnd, ReduceError> {
        Ok(AuxEnd::Old {
            vertex,
            replaces: edge(x, vertex)?,
        })
    };

    let mut plan = Plan::default();
    match cfg {
        Configuration::Disconnected { components } => {
            let parts = components
                .iter()
                .map(|c| {
                    let mut inside = vec![false; g.vertex_count()];
                    c.iter().for_each(|&v| inside[v] = true);
                    contract_part(g, &inside, &[])
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(split_step(cfg.clone(), parts));
        }
        Configuration::CutEdge { edge: e, v1, v2 } => {
            let parts = [*v1, *v2]
                .iter()
                .map(|&s| contract_part(g, &side(g, s, &[*e]), &[*e]))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(split_step(cfg.clone(), parts));
        }
        Configuration::NonAdjacentTwoEdgeCut { e1, e2, u1, w1, .. } => {
            let parts = [*u1, *w1]
                .iter()
                .map(|&s| contract_part(g, &side(g, s, &[*e1, *e2]), &[*e1, *e2]))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(split_step(cfg.clone(), parts));
        }
        Configuration::ParallelEdge { edge: e, .. } => plan.removed_edges.push(*e),
        Configuration::DegreeLeqOne { vertex } => plan.removed_vertices.push(*vertex),
        Configuration::TriangleWith2Vertex { w } => plan.removed_vertices.push(w[0]),
        Configuration::FourCycleWith2Vertex { w } => plan.removed_vertices.push(w[0]),
        Configuration::Triangle { w, .. } => plan.removed_vertices.extend_from_slice(w),
        Configuration::FourCycle { x, y } => {
            plan.removed_vertices.extend_from_slice(x);
            plan.added.push((old(y[0], x[0])?, old(y[2], x[2])?));
            plan.seeding.push((edge(x[0], y[0])?, 0));
            plan.seeding.push((edge(x[2], y[2])?, 0));
        }
        Configuration::TwoVerticesAtDistance1or2(NearPair::Adjacent { v, .. }) => {
            plan.removed_vertices.push(*v)
        }
        Configuration::TwoVerticesAtDistance1or2(NearPair::Through { u, v, x, .. }) => {
            plan.removed_vertices.extend_from_slice(&[*u, *v, *x])
        }
        Configuration::TwoVertexOn5Face { x, y } => {
            plan.removed_vertices.extend_from_slice(x);
            plan.added.push((old(y[1], x[1])?, old(y[3], x[3])?));
            plan.seeding.push((edge(x[3], x[4])?, 0));
            plan.seeding.push((edge(x[1], y[1])?, 0));
        }
        Configuration::TwoVerticesAtDistance3 { x, .. } => plan.removed_vertices.extend_from_slice(&x[1..5]),
        Configuration::FaceBoundaryDistance4Pair { x, y } => {
            plan.removed_vertices.extend_from_slice(&x[1..6]);
            plan.added.push((old(y[0], x[2])?, old(y[2], x[4])?));
            plan.seeding.push((edge(x[2], y[0])?, 0));
            plan.seeding.push((edge(x[4], y[2])?, 0));
        }
        Configuration::TwoVertexOn6Face { x, y } => {
            plan.removed_vertices.extend_from_slice(x);
            for i in [1, 3, 4] {
                plan.added.push((AuxEnd::New(0), old(y[i], x[i])?));
            }
            plan.new_rotations.push(vec![vec![0, 1, 2], vec![0, 2, 1]]);
            plan.seeding.push((edge(x[1], y[1])?, 0));
            plan.seeding.push((edge(x[3], x[4])?, 0));
        }
        Configuration::TwoVertexOn7Face { x, y } => {
            plan.removed_vertices.extend_from_slice(x);
            plan.added.push((old(y[1], x[1])?, old(y[6], x[6])?));
            plan.added.push((old(y[2], x[2])?, old(y[4], x[4])?));
            plan.seeding.push((edge(x[1], y[1])?, 0));
            plan.seeding.push((edge(x[6], y[6])?, 0));
            plan.seeding.push((edge(x[2], y[2])?, 1));
            plan.seeding.push((edge(x[4], y[4])?, 1));
        }
        Configuration::AdjacentFiveFiveFaces { x, y } => {
            plan.removed_vertices.extend_from_slice(x);
            for (k, i) in [1, 2, 3, 5, 6, 7].into_iter().enumerate() {
                let new = if i < 4 { 0 } else { 1 };
                plan.added.push((AuxEnd::New(new), old(y[i], x[i])?));
                plan.seeding.push((edge(x[i], y[i])?, k));
            }
            plan.new_rotations.push(vec![vec![0, 1, 2], vec![0, 2, 1]]);
            plan.new_rotations.push(vec![vec![3, 4, 5], vec![3, 5, 4]]);
        }
        Configuration::FiveSixAdjacentFaces { u, v } => {
            plan.removed_vertices.extend_from_slice(u);
            plan.added.push((old(v[2], u[2])?, old(v[3], u[3])?));
            plan.added.push((old(v[4], u[4])?, old(v[6], u[6])?));
            plan.added.push((old(v[8], u[8])?, old(v[1], u[1])?));
            plan.seeding.push((edge(u[1], v[1])?, 2));
            plan.seeding.push((edge(u[8], v[8])?, 2));
            plan.seeding.push((edge(u[4], v[4])?, 1));
            plan.seeding.push((edge(u[6], v[6])?, 1));
        }
    }
    plan.build(g, cfg)
}

#[derive(Default)]
struct Plan {
    removed_vertices: Vec<VertexId>,
    /// Removed in addition to the edges at removed vertices.
    removed_edges: Vec<EdgeId>,
    added: Vec<(AuxEnd, AuxEnd)>,
    /// For each new vertex, candidate rotations as lists of added-edge
    /// indices.
    new_rotations: Vec<Vec<Vec<usize>>>,
    seeding: Vec<(EdgeId, usize)>,
}

impl Plan {
    fn build(self, g: &PlaneMultigraph, cfg: &Configuration) -> Result<ReductionStep, ReduceError> {
        let invalid = |detail: String| ReduceError::InvalidConfiguration {
            kind: cfg.kind(),
            detail,
        };
        let n = g.vertex_count();
        let removed_v: BTreeSet<VertexId> = self.removed_vertices.iter().copied().collect();
        if removed_v.len() != self.removed_vertices.len() {
            return Err(invalid("witness repeats a vertex".into()));
        }
        let mut removed_e: BTreeSet<EdgeId> = self.removed_edges.iter().copied().collect();
        for &v in &removed_v {
            removed_e.extend(g.rotation(v).iter().copied());
        }

        let mut vertex_map = vec![None; n];
        let mut next = 0;
        for (v, slot) in vertex_map.iter_mut().enumerate() {
            if !removed_v.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let new_base = next;
        let vertex_total = new_base + self.new_rotations.len();

        let mut edge_map = vec![None; g.edge_count()];
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        for e in 0..g.edge_count() {
            if !removed_e.contains(&e) {
                let (a, b) = g.endpoints(e);
                edge_map[e] = Some(edges.len());
                edges.push((vertex_map[a].unwrap(), vertex_map[b].unwrap()));
                edge_origin.push(Some(e));
            }
        }
        let aux_base = edges.len();
        let mut replacement: Vec<(VertexId, EdgeId, usize)> = Vec::new();
        for (i, &(p, q)) in self.added.iter().enumerate() {
            let mut ends = [0; 2];
            for (k, end) in [p, q].into_iter().enumerate() {
                ends[k] = match end {
                    AuxEnd::New(j) => new_base + j,
                    AuxEnd::Old { vertex, replaces } => {
                        let (a, b) = g.endpoints(replaces);
                        if !removed_e.contains(&replaces) || (a != vertex && b != vertex) {
                            return Err(invalid(format!(
                                "auxiliary edge {i} cannot replace edge {replaces} at {vertex}"
                            )));
                        }
                        if replacement.iter().any(|&(v, e, _)| v == vertex && e == replaces) {
                            return Err(invalid(format!("slot of edge {replaces} at {vertex} used twice")));
                        }
                        replacement.push((vertex, replaces, aux_base + i));
                        vertex_map[vertex].ok_or_else(|| invalid(format!("vertex {vertex} is removed")))?
                    }
                };
            }
            edges.push((ends[0], ends[1]));
            edge_origin.push(None);
        }

        let mut rotations: Vec<Vec<EdgeId>> = Vec::with_capacity(vertex_total);
        for v in 0..n {
            if removed_v.contains(&v) {
                continue;
            }
            let rot = g
                .rotation(v)
                .iter()
                .filter_map(|&e| {
                    edge_map[e].or_else(|| {
                        replacement
                            .iter()
                            .find(|&&(w, r, _)| w == v && r == e)
                            .map(|&(_, _, a)| a)
                    })
                })
                .collect();
            rotations.push(rot);
        }

        let mut reembedded = false;
        let graph = {
            let combos = cartesian(&self.new_rotations);
            let mut found = None;
            let mut last_err = None;
            for combo in combos {
                let mut rots = rotations.clone();
                for (j, order) in combo.iter().enumerate() {
                    debug_assert_eq!(rots.len(), new_base + j);
                    rots.push(order.iter().map(|&i| aux_base + i).collect());
                }
                match PlaneMultigraph::new_unchecked_genus(vertex_total, edges.clone(), rots) {
                    Ok(h) if h.check_planar_rotation().is_ok() => {
                        found = Some(h);
                        break;
                    }
                    Ok(_) => {}
                    Err(e) => last_err = Some(e),
                }
            }
            match (found, last_err) {
                (Some(h), _) => h,
                (None, Some(e)) => return Err(invalid(e.to_string())),
                (None, None) => {
                    reembedded = true;
                    embed_edge_list(vertex_total, &edges).map_err(|e| invalid(e.to_string()))?
                }
            }
        };
        if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) > 3) {
            return Err(invalid(format!(
                "reduced vertex {v} has degree {}",
                graph.degree(v)
            )));
        }
        if graph.vertex_count() + graph.edge_count() >= g.vertex_count() + g.edge_count() {
            return Err(invalid("reduction does not shrink the graph".into()));
        }

        let aux_edges = (aux_base..aux_base + self.added.len()).collect();
        Ok(ReductionStep {
            configuration: cfg.clone(),
            removed_vertices: removed_v.into_iter().collect(),
            removed_edges: removed_e.iter().copied().collect(),
            added_vertices: self.new_rotations.len(),
            added_edges: self.added,
            seeding: self.seeding,
            frontier: removed_e.into_iter().collect(),
            reduced: Reduced::Single {
                reduced: ReducedGraph {
                    graph,
                    edge_origin,
                    vertex_map,
                },
                aux_edges,
            },
            reembedded,
        })
    }
}

fn cartesian(options: &[Vec<Vec<usize>>]) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for opts in options {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect();
    }
    out
}

fn split_step(cfg: Configuration, parts: Vec<ReducedGraph>) -> ReductionStep {
    ReductionStep {
        configuration: cfg,
        removed_vertices: Vec::new(),
        removed_edges: Vec::new(),
        added_vertices: 0,
        added_edges: Vec::new(),
        seeding: Vec::new(),
        frontier: Vec::new(),
        reduced: Reduced::Split { parts },
        reembedded: false,
    }
}

/// Vertices reachable from `s` without using `cut`.
fn side(g: &PlaneMultigraph, s: VertexId, cut: &[EdgeId]) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for &e in g.rotation(v) {
            if cut.contains(&e) {
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

/// The subgraph on `inside`, plus (when `cut` is nonempty) one new vertex
/// standing for everything outside, attached by the `cut` edges in order.
/// Rotations are inherited, so cut edges keep their slots.
fn contract_part(g: &PlaneMultigraph, inside: &[bool], cut: &[EdgeId]) -> Result<ReducedGraph, ReduceError> {
    let mut vertex_map = vec![None; g.vertex_count()];
    let mut next = 0;
    for v in 0..g.vertex_count() {
        if inside[v] {
            vertex_map[v] = Some(next);
            next += 1;
        }
    }
    let outside = next;
    let total = next + usize::from(!cut.is_empty());
    let mut edge_map = vec![None; g.edge_count()];
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    for e in 0..g.edge_count() {
        let (a, b) = g.endpoints(e);
        let ends = match (inside[a], inside[b]) {
            (true, true) => (vertex_map[a].unwrap(), vertex_map[b].unwrap()),
            (true, false) if cut.contains(&e) => (vertex_map[a].unwrap(), outside),
            (false, true) if cut.contains(&e) => (outside, vertex_map[b].unwrap()),
            _ => continue,
        };
        edge_map[e] = Some(edges.len());
        edges.push(ends);
        edge_origin.push(Some(e));
    }
    let mut rotations: Vec<Vec<EdgeId>> = (0..g.vertex_count())
        .filter(|&v| inside[v])
        .map(|v| g.rotation(v).iter().filter_map(|&e| edge_map[e]).collect())
        .collect();
    if !cut.is_empty() {
        rotations.push(cut.iter().map(|&e| edge_map[e].unwrap()).collect());
    }
    let graph = PlaneMultigraph::new_unchecked_genus(total, edges.clone(), rotations)?;
    let graph = if graph.check_planar_rotation().is_ok() {
        graph
    } else {
        embed_edge_list(total, &edges)?
    };
    debug_assert!(components(&graph).len() <= 1 || cut.is_empty());
    Ok(ReducedGraph {
        graph,
        edge_origin,
        vertex_map,
    })
}
