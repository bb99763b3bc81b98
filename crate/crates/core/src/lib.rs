//! Combinatorics of Auslander-Reiten quivers of Dynkin type A.
//!
//! The crate builds the AR quiver of every orientation of the A_n diagram,
//! derives the adapted reduced words and convex orders attached to it, and
//! evaluates the spectral data (denominator zeros, Dorey triples, Cartan
//! matrices of simple-root subcategories, twisted labels) that the quiver
//! geometry predicts.
//!
//! Module layout:
//!
//! * [`rootsys`] — orientations of the A_n diagram, the segment model of the
//!   positive roots, simple reflections and the Coxeter translation.
//! * [`arquiver`] — the AR quiver itself: two independent constructions,
//!   sectional paths, rays, pairs, and serialization (JSON / DOT / ASCII).
//! * [`orders`] — reduced words for the longest element, the convex total
//!   orders they induce, minimal pairs and commutation classes.
//! * [`duality`] — spectral parameters, denominator zeros, tensor
//!   simplicity, Dorey triples, Cartan data of simple-root vertex sets, and
//!   the twisted relabelling.
//! * [`oracle`] — independent brute-force recomputations and the exhaustive
//!   cross-verification suite over all small-rank orientations.

pub mod arquiver;
pub mod duality;
pub mod oracle;
pub mod orders;
pub mod rootsys;

pub use arquiver::{ARQuiver, ArFormat, Ray, RaySide, RepCoord, RootPair, SectionalKind, SectionalPath};
pub use orders::{ConvexTotalOrder, ReadingStyle, ReducedWord};
pub use rootsys::{DynkinQuiverA, EdgeDir, Segment, Sign, SignedRoot, VertexClass};
