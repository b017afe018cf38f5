//! Strong 9-edge-colorings of loopless subcubic planar multigraphs.
//!
//! [`reduce::color_graph`] finds a reducible configuration, colors the
//! smaller graph it reduces to, and extends the coloring back. The
//! [`exact`] solver, the [`discharge`] auditor and the [`generate`] corpus
//! exist to check it.

pub mod coloring;
pub mod discharge;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reduce;
