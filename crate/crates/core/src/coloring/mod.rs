//! Strong edge colorings: the sees relation, partial colorings and the
//! operations that extend or check them.
//!
//! Colors are `1..=k`. Two edges *see* each other when they share an
//! endpoint or some third edge touches both; equivalently, when one of them
//! has an endpoint in the closed neighbourhood of the other's endpoints.

mod sdr;
mod search;

pub use sdr::sdr_extend;
pub use search::{extend_by_search, SearchOutcome, MAX_FRONTIER};

use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, PlaneMultigraph, VertexId};

pub type Color = u8;

/// Largest palette a [`ColorSet`] can hold.
pub const MAX_PALETTE: u8 = 63;
/// Palette of the constructive algorithm.
pub const DEFAULT_PALETTE: u8 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("edge {0} is uncolored")]
    UncoloredEdge(EdgeId),
    #[error("edge {0} is already colored")]
    AlreadyColored(EdgeId),
    #[error("color {color} on edge {edge} is outside the palette 1..={palette}")]
    ColorOutOfRange { edge: EdgeId, color: Color, palette: u8 },
    #[error("palette {0} exceeds the supported maximum of {MAX_PALETTE}")]
    PaletteTooLarge(usize),
    #[error("coloring covers {coloring} edges but the graph has {graph}")]
    SizeMismatch { coloring: usize, graph: usize },
    #[error("partial coloring is not good: edges {0} and {1} see each other and share a color")]
    NotGood(EdgeId, EdgeId),
    #[error("frontier of {0} edges exceeds the search limit of {MAX_FRONTIER}")]
    FrontierTooLarge(usize),
    #[error("coloring is not a strong coloring with palette at most 9: {0}")]
    InvalidColoring(String),
}

/// A set of colors from `1..=63`, as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, ..., k}`.
    pub fn full(k: u8) -> Self {
        debug_assert!(k <= MAX_PALETTE);
        ColorSet(((1u64 << k) - 1) << 1)
    }

    pub fn from_bits(bits: u64) -> Self {
        ColorSet(bits & !1)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        c <= MAX_PALETTE && self.0 & (1u64 << c) != 0
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1u64 << c;
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1u64 << c);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Color)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros() as Color;
                bits &= bits - 1;
                Some(c)
            }
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An assignment of optional colors from `1..=palette` to edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    palette: u8,
    colors: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn new(palette: u8, edge_count: usize) -> Result<Self, ColoringError> {
        if palette > MAX_PALETTE {
            return Err(ColoringError::PaletteTooLarge(palette as usize));
        }
        Ok(Self {
            palette,
            colors: vec![None; edge_count],
        })
    }

    pub fn from_colors(palette: u8, colors: Vec<Option<Color>>) -> Result<Self, ColoringError> {
        if palette > MAX_PALETTE {
            return Err(ColoringError::PaletteTooLarge(palette as usize));
        }
        for (edge, c) in colors.iter().enumerate() {
            if let Some(color) = *c {
                if color == 0 || color > palette {
                    return Err(ColoringError::ColorOutOfRange { edge, color, palette });
                }
            }
        }
        Ok(Self { palette, colors })
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.colors[e]
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn set(&mut self, e: EdgeId, color: Color) -> Result<(), ColoringError> {
        if color == 0 || color > self.palette {
            return Err(ColoringError::ColorOutOfRange {
                edge: e,
                color,
                palette: self.palette,
            });
        }
        self.colors[e] = Some(color);
        Ok(())
    }

    pub fn clear(&mut self, e: EdgeId) {
        self.colors[e] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn uncolored(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.colors.len()).filter(|&e| self.colors[e].is_none())
    }

    /// Distinct colors in use.
    pub fn used_colors(&self) -> ColorSet {
        self.colors.iter().flatten().copied().collect()
    }

    /// Largest color in use, 0 if nothing is colored.
    pub fn max_color(&self) -> Color {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Resizes to `edge_count` entries, padding with uncolored edges.
    pub fn resized(mut self, edge_count: usize) -> Self {
        self.colors.resize(edge_count, None);
        self
    }

    fn check_size(&self, g: &PlaneMultigraph) -> Result<(), ColoringError> {
        if self.colors.len() != g.edge_count() {
            return Err(ColoringError::SizeMismatch {
                coloring: self.colors.len(),
                graph: g.edge_count(),
            });
        }
        Ok(())
    }

    /// Colors on the edges at `v`.
    pub fn used_at(&self, g: &PlaneMultigraph, v: VertexId) -> ColorSet {
        g.rotation(v).iter().filter_map(|&e| self.colors[e]).collect()
    }

    /// Colors on the edges at `u` other than `edge`.
    pub fn used_other(&self, g: &PlaneMultigraph, u: VertexId, edge: EdgeId) -> ColorSet {
        g.rotation(u)
            .iter()
            .filter(|&&e| e != edge)
            .filter_map(|&e| self.colors[e])
            .collect()
    }

    /// The first pair of colored edges that see each other and share a
    /// color, if any.
    pub fn first_conflict(&self, g: &PlaneMultigraph) -> Option<(EdgeId, EdgeId)> {
        for e in 0..g.edge_count() {
            let Some(c) = self.colors[e] else { continue };
            for f in seen_edges(g, e) {
                if f > e && self.colors[f] == Some(c) {
                    return Some((e, f));
                }
            }
        }
        None
    }

    pub fn is_good(&self, g: &PlaneMultigraph) -> bool {
        self.colors.len() == g.edge_count() && self.first_conflict(g).is_none()
    }
}

/// Edges seen by `e`, sorted. An edge sees another iff the other has an
/// endpoint in the closed neighbourhood of `e`'s endpoints.
pub fn seen_edges(g: &PlaneMultigraph, e: EdgeId) -> Vec<EdgeId> {
    let (a, b) = g.endpoints(e);
    let mut out = Vec::with_capacity(12);
    for v in [a, b] {
        for &f in g.rotation(v) {
            out.push(f);
            let w = g.other_end(f, v);
            out.extend_from_slice(g.rotation(w));
        }
    }
    out.sort_unstable();
    out.dedup();
    out.retain(|&f| f != e);
    out
}

pub fn sees(g: &PlaneMultigraph, e: EdgeId, f: EdgeId) -> bool {
    if e == f {
        return false;
    }
    let (a, b) = g.endpoints(f);
    let (x, y) = g.endpoints(e);
    let near = |v: VertexId| v == x || v == y || g.neighbors(x).chain(g.neighbors(y)).any(|w| w == v);
    near(a) || near(b)
}

/// The square of the line graph: for every edge, the edges it sees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    seen: Vec<Vec<EdgeId>>,
}

impl ConflictGraph {
    pub fn new(g: &PlaneMultigraph) -> Self {
        Self {
            seen: (0..g.edge_count()).map(|e| seen_edges(g, e)).collect(),
        }
    }

    pub fn seen_by(&self, e: EdgeId) -> &[EdgeId] {
        &self.seen[e]
    }

    pub fn edge_count(&self) -> usize {
        self.seen.len()
    }

    pub fn sees(&self, e: EdgeId, f: EdgeId) -> bool {
        self.seen[e].binary_search(&f).is_ok()
    }

    /// A clique grown greedily from every start edge; the largest found.
    /// Any clique forces that many distinct colors.
    pub fn greedy_clique(&self) -> Vec<EdgeId> {
        let mut best: Vec<EdgeId> = Vec::new();
        for start in 0..self.seen.len() {
            let mut clique = vec![start];
            let mut candidates: Vec<EdgeId> = self.seen[start].clone();
            while !candidates.is_empty() {
                // most connected candidate within the candidate set
                let pick = *candidates
                    .iter()
                    .max_by_key(|&&c| {
                        let inside = candidates.iter().filter(|&&d| self.sees(c, d)).count();
                        (inside, std::cmp::Reverse(c))
                    })
                    .unwrap();
                clique.push(pick);
                candidates.retain(|&d| d != pick && self.sees(pick, d));
            }
            if clique.len() > best.len() {
                best = clique;
            }
        }
        best.sort_unstable();
        best
    }
}

/// A pair of edges that see each other and share a color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub first: EdgeId,
    pub second: EdgeId,
    pub color: Color,
}

/// Checks a total coloring. `Ok(list)` lists every violating pair
/// (`first < second`); an empty list means the coloring is strong.
pub fn verify_strong(
    g: &PlaneMultigraph,
    coloring: &PartialColoring,
) -> Result<Vec<Violation>, ColoringError> {
    coloring.check_size(g)?;
    if let Some(e) = coloring.uncolored().next() {
        return Err(ColoringError::UncoloredEdge(e));
    }
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        let c = coloring.colors[e].unwrap();
        for f in seen_edges(g, e) {
            if f > e && coloring.colors[f] == Some(c) {
                out.push(Violation {
                    first: e,
                    second: f,
                    color: c,
                });
            }
        }
    }
    Ok(out)
}

/// Colors assignable to the uncolored edge `e` keeping `partial` good.
pub fn available_colors(
    g: &PlaneMultigraph,
    partial: &PartialColoring,
    e: EdgeId,
) -> Result<ColorSet, ColoringError> {
    partial.check_size(g)?;
    if partial.colors[e].is_some() {
        return Err(ColoringError::AlreadyColored(e));
    }
    let mut set = ColorSet::full(partial.palette);
    for f in seen_edges(g, e) {
        if let Some(c) = partial.colors[f] {
            set.remove(c);
        }
    }
    Ok(set)
}

/// Greedy strong coloring along `order`: each edge takes the least color
/// not seen. The palette of the result is the number of colors used, at
/// most `2(Δ-1) + 2(Δ-1)^2 + 1`.
pub fn greedy_strong(g: &PlaneMultigraph, order: &[EdgeId]) -> Result<PartialColoring, ColoringError> {
    let bound = greedy_bound(g.max_degree());
    if bound > MAX_PALETTE as usize {
        return Err(ColoringError::PaletteTooLarge(bound));
    }
    let mut colors: Vec<Option<Color>> = vec![None; g.edge_count()];
    for &e in order {
        let mut seen = ColorSet::EMPTY;
        for f in seen_edges(g, e) {
            if let Some(c) = colors[f] {
                seen.insert(c);
            }
        }
        let c = ColorSet::full(MAX_PALETTE).difference(seen).first().unwrap();
        colors[e] = Some(c);
    }
    let palette = colors.iter().flatten().copied().max().unwrap_or(0).max(1);
    PartialColoring::from_colors(palette, colors)
}

/// `2(Δ-1) + 2(Δ-1)^2 + 1`, the most colors greedy can need.
pub fn greedy_bound(max_degree: usize) -> usize {
    let d = max_degree.saturating_sub(1);
    2 * d + 2 * d * d + 1
}

/// The largest color class of a good 9-coloring (lowest color on ties).
/// It is an induced matching with at least `ceil(|E|/9)` edges.
pub fn induced_matching_lower(
    g: &PlaneMultigraph,
    coloring: &PartialColoring,
) -> Result<Vec<EdgeId>, ColoringError> {
    let violations = verify_strong(g, coloring)?;
    if !violations.is_empty() {
        return Err(ColoringError::InvalidColoring(format!(
            "{} conflicting pairs",
            violations.len()
        )));
    }
    if coloring.max_color() > DEFAULT_PALETTE {
        return Err(ColoringError::InvalidColoring(format!(
            "uses color {}",
            coloring.max_color()
        )));
    }
    let mut classes: Vec<Vec<EdgeId>> = vec![Vec::new(); DEFAULT_PALETTE as usize + 1];
    for (e, c) in coloring.colors.iter().enumerate() {
        classes[c.unwrap() as usize].push(e);
    }
    let best = classes
        .into_iter()
        .enumerate()
        .max_by_key(|(c, class)| (class.len(), std::cmp::Reverse(*c)))
        .map(|(_, class)| class)
        .unwrap_or_default();
    for (i, &e) in best.iter().enumerate() {
        for &f in &best[i + 1..] {
            if sees(g, e, f) {
                return Err(ColoringError::InvalidColoring(format!(
                    "class contains edges {e} and {f} that see each other"
                )));
            }
        }
    }
    Ok(best)
}
