//! Exact strong chromatic index by DSATUR-style branch and bound on the
//! conflict graph.

use thiserror::Error;

use crate::coloring::{Color, ColorSet, ConflictGraph, PartialColoring, MAX_PALETTE};
use crate::graph::PlaneMultigraph;

/// Default edge-count guard; larger inputs need `force`.
pub const EDGE_GUARD: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("{edges} edges exceeds the exact-solver guard of {limit}; force to override")]
    TooLarge { edges: usize, limit: usize },
    #[error("palette {0} exceeds the supported maximum of {MAX_PALETTE}")]
    PaletteTooLarge(u8),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    /// The strong chromatic index, or `None` if it exceeds `kmax`.
    pub chi_s: Option<u8>,
    pub witness: Option<PartialColoring>,
    /// Clique lower bound used to start the search.
    pub lower_bound: usize,
}

pub fn strong_chromatic_index(g: &PlaneMultigraph, kmax: u8) -> Result<ExactResult, ExactError> {
    strong_chromatic_index_with(g, kmax, false)
}

pub fn strong_chromatic_index_with(
    g: &PlaneMultigraph,
    kmax: u8,
    force: bool,
) -> Result<ExactResult, ExactError> {
    guard(g, kmax, force)?;
    if g.edge_count() == 0 {
        return Ok(ExactResult {
            chi_s: Some(0),
            witness: Some(PartialColoring::new(0, 0).unwrap()),
            lower_bound: 0,
        });
    }
    let cg = ConflictGraph::new(g);
    let clique = cg.greedy_clique();
    for k in clique.len()..=kmax as usize {
        if let Some(c) = solve(&cg, &clique, k as u8) {
            return Ok(ExactResult {
                chi_s: Some(k as u8),
                witness: Some(c),
                lower_bound: clique.len(),
            });
        }
    }
    Ok(ExactResult {
        chi_s: None,
        witness: None,
        lower_bound: clique.len(),
    })
}

/// A strong coloring with palette `k`, or `None` if none exists.
pub fn exact_coloring(g: &PlaneMultigraph, k: u8) -> Result<Option<PartialColoring>, ExactError> {
    exact_coloring_with(g, k, false)
}

pub fn exact_coloring_with(
    g: &PlaneMultigraph,
    k: u8,
    force: bool,
) -> Result<Option<PartialColoring>, ExactError> {
    guard(g, k, force)?;
    let cg = ConflictGraph::new(g);
    let clique = cg.greedy_clique();
    Ok(solve(&cg, &clique, k))
}

fn guard(g: &PlaneMultigraph, k: u8, force: bool) -> Result<(), ExactError> {
    if k > MAX_PALETTE {
        return Err(ExactError::PaletteTooLarge(k));
    }
    if !force && g.edge_count() > EDGE_GUARD {
        return Err(ExactError::TooLarge {
            edges: g.edge_count(),
            limit: EDGE_GUARD,
        });
    }
    Ok(())
}

fn solve(cg: &ConflictGraph, clique: &[usize], k: u8) -> Option<PartialColoring> {
    let n = cg.edge_count();
    if clique.len() > k as usize {
        return None;
    }
    let mut s = State {
        cg,
        k,
        colors: vec![0; n],
        blocked: vec![[0u8; 64]; n],
        free_mask: vec![ColorSet::full(k); n],
    };
    for (i, &e) in clique.iter().enumerate() {
        if !s.free_mask[e].contains(i as Color + 1) {
            return None;
        }
        s.assign(e, i as Color + 1);
    }
    let uncolored = n - clique.len();
    if s.search(uncolored, clique.len() as Color) {
        let colors = s.colors.iter().map(|&c| Some(c)).collect();
        Some(PartialColoring::from_colors(k, colors).unwrap())
    } else {
        None
    }
}

struct State<'a> {
    cg: &'a ConflictGraph,
    k: u8,
    colors: Vec<Color>,
    /// blocked[e][c]: colored neighbours of e holding c
    blocked: Vec<[u8; 64]>,
    free_mask: Vec<ColorSet>,
}

impl State<'_> {
    fn assign(&mut self, e: usize, c: Color) {
        self.colors[e] = c;
        for &f in self.cg.seen_by(e) {
            self.blocked[f][c as usize] += 1;
            self.free_mask[f].remove(c);
        }
    }

    fn unassign(&mut self, e: usize) {
        let c = self.colors[e];
        self.colors[e] = 0;
        for &f in self.cg.seen_by(e) {
            self.blocked[f][c as usize] -= 1;
            if self.blocked[f][c as usize] == 0 {
                self.free_mask[f].insert(c);
            }
        }
    }

    fn search(&mut self, uncolored: usize, max_used: Color) -> bool {
        if uncolored == 0 {
            return true;
        }
        // most saturated edge: fewest free colors, then most uncolored
        // neighbours, then lowest id
        let mut best = usize::MAX;
        let mut best_key = (usize::MAX, usize::MAX);
        for e in 0..self.colors.len() {
            if self.colors[e] != 0 {
                continue;
            }
            let free = self.free_mask[e].len();
            if free == 0 {
                return false;
            }
            let open = self
                .cg
                .seen_by(e)
                .iter()
                .filter(|&&f| self.colors[f] == 0)
                .count();
            let key = (free, usize::MAX - open);
            if key < best_key {
                best_key = key;
                best = e;
            }
        }
        let limit = (max_used + 1).min(self.k);
        let options = self.free_mask[best].intersection(ColorSet::full(limit));
        for c in options.iter() {
            self.assign(best, c);
            if self.search(uncolored - 1, max_used.max(c)) {
                return true;
            }
            self.unassign(best);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_strong;
    use crate::graph::embed_edge_list;

    fn cycle(n: usize) -> PlaneMultigraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        embed_edge_list(n, &edges).unwrap()
    }

    fn chi(g: &PlaneMultigraph) -> u8 {
        let r = strong_chromatic_index(g, 20).unwrap();
        let w = r.witness.unwrap();
        assert!(verify_strong(g, &w).unwrap().is_empty());
        r.chi_s.unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(chi(&cycle(5)), 5);
        assert_eq!(chi(&cycle(6)), 3);
        assert_eq!(chi(&cycle(7)), 4);
        assert_eq!(chi(&embed_edge_list(3, &[(0, 1), (1, 2)]).unwrap()), 2);
    }

    #[test]
    fn prism_is_nine() {
        let g = embed_edge_list(
            6,
            &[
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
        )
        .unwrap();
        assert_eq!(chi(&g), 9);
        assert!(exact_coloring(&g, 8).unwrap().is_none());
        assert!(exact_coloring(&g, 9).unwrap().is_some());
    }

    #[test]
    fn empty_and_guard() {
        let r = strong_chromatic_index(&PlaneMultigraph::empty(), 9).unwrap();
        assert_eq!(r.chi_s, Some(0));
        let big = cycle(61);
        assert!(matches!(
            strong_chromatic_index(&big, 9),
            Err(ExactError::TooLarge { edges: 61, .. })
        ));
        assert_eq!(strong_chromatic_index_with(&big, 9, true).unwrap().chi_s, Some(4));
    }

    #[test]
    fn exceeds_kmax() {
        let r = strong_chromatic_index(&cycle(5), 4).unwrap();
        assert_eq!(r.chi_s, None);
        assert!(r.witness.is_none());
    }
}
