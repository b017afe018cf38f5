use super::{ReduceError, Reduced, ReducedGraph, ReductionStep};
use crate::coloring::{
    extend_by_search, sees, verify_strong, Color, PartialColoring, DEFAULT_PALETTE, MAX_PALETTE,
};
use crate::graph::{EdgeId, PlaneMultigraph};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LiftReport {
    /// Search nodes spent extending.
    pub nodes: u64,
    /// The seeded pendant edges had to be recolored.
    pub widened: bool,
}

/// Lifts colorings of the reduced graph (one per part for splits) to a
/// good 9-coloring of `g`.
///
/// Surviving edges keep their colors, seeded edges copy the color of their
/// auxiliary edge, and the rest of the frontier is filled in by search. If
/// that fails the seeds are dropped and the whole frontier is searched.
/// Split parts are merged under a palette permutation found by matching.
pub fn lift_and_extend(
    g: &PlaneMultigraph,
    step: &ReductionStep,
    subs: &[PartialColoring],
) -> Result<(PartialColoring, LiftReport), ReduceError> {
    let impossible = |detail: String| ReduceError::ExtensionImpossible {
        kind: step.kind(),
        detail,
    };
    match &step.reduced {
        Reduced::Single { reduced, aux_edges } => {
            let [sub] = subs else {
                return Err(impossible(format!(
                    "expected one sub-coloring, got {}",
                    subs.len()
                )));
            };
            check_sub(reduced, sub).map_err(impossible)?;
            let mut base = PartialColoring::new(DEFAULT_PALETTE, g.edge_count())?;
            for (r, origin) in reduced.edge_origin.iter().enumerate() {
                if let Some(o) = origin {
                    base.set(*o, sub.get(r).unwrap())?;
                }
            }
            let mut seeded = base.clone();
            for &(e, aux) in &step.seeding {
                seeded.set(e, sub.get(aux_edges[aux]).unwrap())?;
            }
            let mut report = LiftReport::default();
            if seeded.is_good(g) {
                let rest: Vec<EdgeId> = step
                    .frontier
                    .iter()
                    .copied()
                    .filter(|e| !step.seeding.iter().any(|&(s, _)| s == *e))
                    .collect();
                let out = extend_by_search(g, &seeded, &rest)?;
                report.nodes += out.nodes;
                if let Some(c) = out.coloring {
                    return Ok((c, report));
                }
            }
            report.widened = true;
            let out = extend_by_search(g, &base, &step.frontier)?;
            report.nodes += out.nodes;
            match out.coloring {
                Some(c) => Ok((c, report)),
                None => Err(impossible(format!(
                    "no completion of the {}-edge frontier {:?}",
                    step.frontier.len(),
                    step.frontier
                ))),
            }
        }
        Reduced::Split { parts } => {
            if subs.len() != parts.len() {
                return Err(impossible(format!(
                    "expected {} sub-colorings, got {}",
                    parts.len(),
                    subs.len()
                )));
            }
            let mut merged = PartialColoring::new(DEFAULT_PALETTE, g.edge_count())?;
            for (part, sub) in parts.iter().zip(subs) {
                check_sub(part, sub).map_err(impossible)?;
                merge_part(g, &mut merged, part, sub).map_err(impossible)?;
            }
            let violations = verify_strong(g, &merged)?;
            if !violations.is_empty() {
                return Err(impossible(format!(
                    "merged coloring has {} conflicts",
                    violations.len()
                )));
            }
            Ok((merged, LiftReport::default()))
        }
    }
}

fn check_sub(reduced: &ReducedGraph, sub: &PartialColoring) -> Result<(), String> {
    if sub.edge_count() != reduced.graph.edge_count() || !sub.is_total() {
        return Err("sub-coloring is not a total coloring of the reduced graph".into());
    }
    if sub.max_color() > DEFAULT_PALETTE || !sub.is_good(&reduced.graph) {
        return Err("sub-coloring is not a good 9-coloring".into());
    }
    Ok(())
}

/// Copies `sub` into `merged` under a palette permutation. Edges already
/// colored in `merged` (shared cut edges) force their colors; edges that
/// see each other across the parts forbid equal colors.
fn merge_part(
    g: &PlaneMultigraph,
    merged: &mut PartialColoring,
    part: &ReducedGraph,
    sub: &PartialColoring,
) -> Result<(), String> {
    let mut forced = Vec::new();
    let mut forbidden = Vec::new();
    let colored: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| merged.get(e).is_some()).collect();
    for (r, origin) in part.edge_origin.iter().enumerate() {
        let o = origin.expect("split parts have no auxiliary edges");
        let c = sub.get(r).unwrap();
        match merged.get(o) {
            Some(target) => forced.push((c, target)),
            None => {
                for &f in &colored {
                    if sees(g, o, f) {
                        forbidden.push((c, merged.get(f).unwrap()));
                    }
                }
            }
        }
    }
    let perm = merge_permutation(&forced, &forbidden, DEFAULT_PALETTE)
        .ok_or_else(|| format!("no palette permutation: forced {forced:?}, forbidden {forbidden:?}"))?;
    for (r, origin) in part.edge_origin.iter().enumerate() {
        let o = origin.unwrap();
        if merged.get(o).is_none() {
            merged
                .set(o, perm[sub.get(r).unwrap() as usize])
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

/// A permutation `p` of `1..=palette` (indexed by color, `p[0]` unused)
/// with `p[a] == b` for every forced `(a, b)` and `p[a] != b` for every
/// forbidden `(a, b)`, found as a perfect matching. Unconstrained colors
/// prefer to stay fixed.
pub fn merge_permutation(
    forced: &[(Color, Color)],
    forbidden: &[(Color, Color)],
    palette: u8,
) -> Option<Vec<Color>> {
    assert!(palette <= MAX_PALETTE);
    let k = palette as usize;
    // allowed[a][b]
    let mut allowed = vec![vec![true; k + 1]; k + 1];
    for &(a, b) in forbidden {
        allowed[a as usize][b as usize] = false;
    }
    for &(a, b) in forced {
        for t in 1..=k {
            if t != b as usize {
                allowed[a as usize][t] = false;
            }
        }
        for s in 1..=k {
            if s != a as usize {
                allowed[s][b as usize] = false;
            }
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; k + 1];
    for a in 1..=k {
        let mut visited = vec![false; k + 1];
        if !augment(a, &allowed, &mut owner, &mut visited, k) {
            return None;
        }
    }
    let mut perm = vec![0; k + 1];
    for b in 1..=k {
        perm[owner[b].unwrap()] = b as Color;
    }
    Some(perm)
}

fn augment(
    a: usize,
    allowed: &[Vec<bool>],
    owner: &mut [Option<usize>],
    visited: &mut [bool],
    k: usize,
) -> bool {
    // try the identity first, then ascending
    let order = std::iter::once(a).chain((1..=k).filter(|&b| b != a));
    for b in order {
        if !allowed[a][b] || visited[b] {
            continue;
        }
        visited[b] = true;
        let free = match owner[b] {
            None => true,
            Some(other) => augment(other, allowed, owner, visited, k),
        };
        if free {
            owner[b] = Some(a);
            return true;
        }
    }
    false
}
