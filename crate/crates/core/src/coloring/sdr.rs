use super::{Color, ColorSet};
use crate::graph::EdgeId;

/// Picks pairwise distinct colors, one from each demand set, by augmenting
/// paths in the edge/color bipartite graph. `None` iff Hall's condition
/// fails.
pub fn sdr_extend(demands: &[(EdgeId, ColorSet)]) -> Option<Vec<(EdgeId, Color)>> {
    // owner[c] = index of the demand currently holding color c
    let mut owner: [Option<usize>; 64] = [None; 64];
    for i in 0..demands.len() {
        let mut visited = ColorSet::EMPTY;
        if !augment(demands, i, &mut owner, &mut visited) {
            return None;
        }
    }
    let mut out: Vec<(EdgeId, Color)> = Vec::with_capacity(demands.len());
    let mut chosen = vec![0; demands.len()];
    for (c, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            chosen[*i] = c as Color;
        }
    }
    for (i, &(e, _)) in demands.iter().enumerate() {
        out.push((e, chosen[i]));
    }
    Some(out)
}

fn augment(
    demands: &[(EdgeId, ColorSet)],
    i: usize,
    owner: &mut [Option<usize>; 64],
    visited: &mut ColorSet,
) -> bool {
    for c in demands[i].1.iter() {
        if visited.contains(c) {
            continue;
        }
        visited.insert(c);
        let free = match owner[c as usize] {
            None => true,
            Some(j) => augment(demands, j, owner, visited),
        };
        if free {
            owner[c as usize] = Some(i);
            return true;
        }
    }
    false
}
