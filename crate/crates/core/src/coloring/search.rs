use super::{seen_edges, ColorSet, ColoringError, PartialColoring};
use crate::graph::{EdgeId, PlaneMultigraph};

/// Largest frontier [`extend_by_search`] accepts.
pub const MAX_FRONTIER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// The completed coloring, or `None` if no completion exists.
    pub coloring: Option<PartialColoring>,
    /// Color assignments tried.
    pub nodes: u64,
}

/// Colors every frontier edge so the result stays good, by backtracking
/// with forward checking. The uncolored edge with the fewest remaining
/// colors is branched on first, lowest color first. Frontier edges that
/// are currently colored are treated as free and recolored.
pub fn extend_by_search(
    g: &PlaneMultigraph,
    partial: &PartialColoring,
    frontier: &[EdgeId],
) -> Result<SearchOutcome, ColoringError> {
    let mut vars: Vec<EdgeId> = frontier.to_vec();
    vars.sort_unstable();
    vars.dedup();
    if vars.len() > MAX_FRONTIER {
        return Err(ColoringError::FrontierTooLarge(vars.len()));
    }
    let mut base = partial.clone();
    if base.edge_count() != g.edge_count() {
        return Err(ColoringError::SizeMismatch {
            coloring: base.edge_count(),
            graph: g.edge_count(),
        });
    }
    for &e in &vars {
        base.clear(e);
    }
    if let Some((e, f)) = base.first_conflict(g) {
        return Err(ColoringError::NotGood(e, f));
    }

    let n = vars.len();
    let index_of = |e: EdgeId| vars.binary_search(&e).ok();
    let mut domains = Vec::with_capacity(n);
    let mut links: Vec<Vec<usize>> = Vec::with_capacity(n);
    for &e in &vars {
        let mut dom = ColorSet::full(base.palette());
        let mut near = Vec::new();
        for f in seen_edges(g, e) {
            if let Some(j) = index_of(f) {
                near.push(j);
            } else if let Some(c) = base.get(f) {
                dom.remove(c);
            }
        }
        domains.push(dom);
        links.push(near);
    }

    let mut state = Search {
        links: &links,
        assigned: vec![None; n],
        nodes: 0,
    };
    let found = state.solve(&mut domains, n);
    let nodes = state.nodes;
    let coloring = if found {
        for (i, &e) in vars.iter().enumerate() {
            base.set(e, state.assigned[i].unwrap())?;
        }
        Some(base)
    } else {
        None
    };
    Ok(SearchOutcome { coloring, nodes })
}

struct Search<'a> {
    links: &'a [Vec<usize>],
    assigned: Vec<Option<u8>>,
    nodes: u64,
}

impl Search<'_> {
    fn solve(&mut self, domains: &mut [ColorSet], remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let var = (0..domains.len())
            .filter(|&i| self.assigned[i].is_none())
            .min_by_key(|&i| (domains[i].len(), i))
            .unwrap();
        for c in domains[var].iter() {
            self.nodes += 1;
            let mut pruned = Vec::new();
            let mut wiped = false;
            for &j in &self.links[var] {
                if self.assigned[j].is_none() && domains[j].contains(c) {
                    domains[j].remove(c);
                    pruned.push(j);
                    if domains[j].is_empty() {
                        wiped = true;
                    }
                }
            }
            if !wiped {
                self.assigned[var] = Some(c);
                if self.solve(domains, remaining - 1) {
                    return true;
                }
                self.assigned[var] = None;
            }
            for j in pruned {
                domains[j].insert(c);
            }
        }
        false
    }
}
