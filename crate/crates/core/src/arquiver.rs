//! The Auslander-Reiten quiver of an oriented A_n diagram.
//!
//! Vertices live in the repetition quiver: coordinates `(i, p)` with
//! `1 <= i <= n` and `p ≡ xi_i (mod 2)`, with arrows `(i,p) -> (j,p+1)` for
//! adjacent rows `|i-j| = 1`.  The quiver of an orientation is the finite
//! strip of `n(n+1)/2` vertices labelled bijectively by the positive roots.
//!
//! Two constructions are provided and kept deliberately independent:
//!
//! * [`build_coxeter`] seeds each row at `(i, xi_i)` with the largest root
//!   `gamma_i` flowing into `i` and walks leftward with the Coxeter
//!   translation until it exits the positive roots;
//! * [`build_hooks`] places each simple root by the local shape of its
//!   vertex and grows the two sectional "hook" diagonals through it, then
//!   labels every vertex as the intersection of one hook of each kind,
//!   never invoking the translation.
//!
//! Agreement of the two builders, bit for bit, is the crate's core
//! correctness check.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{
    classify, gamma_theta_m, parse_quiver, tau, DynkinQuiverA, Segment, VertexClass,
};

/// A coordinate in the repetition quiver: row `i`, column `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RepCoord {
    pub i: usize,
    pub p: i64,
}

impl RepCoord {
    pub fn new(i: usize, p: i64) -> RepCoord {
        RepCoord { i, p }
    }
}

/// Errors from quiver construction and lookups.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ArError {
    #[error("coordinate or root is not a vertex of this quiver: {0}")]
    NotAVertex(String),
    #[error("hook construction is inconsistent: {0}")]
    InconsistentHooks(String),
    #[error("malformed quiver data: {0}")]
    BadInput(String),
}

/// The AR quiver: the root-to-coordinate bijection plus its arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARQuiver {
    quiver: DynkinQuiverA,
    root_of: BTreeMap<RepCoord, Segment>,
    coord_of: BTreeMap<Segment, RepCoord>,
    arrows: BTreeSet<(RepCoord, RepCoord)>,
}

impl ARQuiver {
    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn quiver(&self) -> &DynkinQuiverA {
        &self.quiver
    }

    /// Vertices in (row, column) order.
    pub fn vertices(&self) -> impl Iterator<Item = (RepCoord, Segment)> + '_ {
        self.root_of.iter().map(|(&c, &s)| (c, s))
    }

    pub fn vertex_count(&self) -> usize {
        self.root_of.len()
    }

    pub fn arrows(&self) -> impl Iterator<Item = (RepCoord, RepCoord)> + '_ {
        self.arrows.iter().copied()
    }

    pub fn has_vertex(&self, c: RepCoord) -> bool {
        self.root_of.contains_key(&c)
    }

    /// The root at a coordinate.
    pub fn phi(&self, c: RepCoord) -> Result<Segment, ArError> {
        self.root_of
            .get(&c)
            .copied()
            .ok_or_else(|| ArError::NotAVertex(format!("({},{})", c.i, c.p)))
    }

    /// The coordinate of a positive root.
    pub fn phi_inv(&self, seg: Segment) -> Result<RepCoord, ArError> {
        self.coord_of
            .get(&seg)
            .copied()
            .ok_or_else(|| ArError::NotAVertex(seg.to_string()))
    }

    /// Assembles a quiver from explicit parts, checking only structural
    /// sanity (mutual bijection, arrows between existing vertices).
    pub(crate) fn from_parts(
        quiver: DynkinQuiverA,
        vertices: Vec<(RepCoord, Segment)>,
        arrows: Vec<(RepCoord, RepCoord)>,
    ) -> Result<ARQuiver, ArError> {
        let n = quiver.n();
        let mut root_of = BTreeMap::new();
        let mut coord_of = BTreeMap::new();
        for (c, s) in vertices {
            if !(1..=n).contains(&c.i) || !s.fits(n) {
                return Err(ArError::BadInput(format!("vertex ({},{}) = {s} out of range", c.i, c.p)));
            }
            if root_of.insert(c, s).is_some() {
                return Err(ArError::BadInput(format!("duplicate coordinate ({},{})", c.i, c.p)));
            }
            if coord_of.insert(s, c).is_some() {
                return Err(ArError::BadInput(format!("duplicate root {s}")));
            }
        }
        let arrow_set: BTreeSet<(RepCoord, RepCoord)> = arrows.into_iter().collect();
        for &(u, v) in &arrow_set {
            if !root_of.contains_key(&u) || !root_of.contains_key(&v) {
                return Err(ArError::BadInput(format!(
                    "arrow ({},{}) -> ({},{}) references a missing vertex",
                    u.i, u.p, v.i, v.p
                )));
            }
        }
        Ok(ARQuiver { quiver, root_of, coord_of, arrows: arrow_set })
    }
}

fn arrows_from_vertices(n: usize, root_of: &BTreeMap<RepCoord, Segment>) -> BTreeSet<(RepCoord, RepCoord)> {
    let mut arrows = BTreeSet::new();
    for &c in root_of.keys() {
        for j in [c.i.wrapping_sub(1), c.i + 1] {
            if (1..=n).contains(&j) {
                let t = RepCoord::new(j, c.p + 1);
                if root_of.contains_key(&t) {
                    arrows.insert((c, t));
                }
            }
        }
    }
    arrows
}

/// Builds the AR quiver by Coxeter translation.
///
/// Row `i` starts at `(i, xi_i)` with `gamma_i` and extends one mesh to the
/// left per application of the translation, stopping when the image leaves
/// the positive roots.
pub fn build_coxeter(q: &DynkinQuiverA) -> ARQuiver {
    let n = q.n();
    let mut root_of = BTreeMap::new();
    for i in 1..=n {
        let (gamma, _, _) = gamma_theta_m(q, i);
        let mut p = q.xi(i);
        let mut cur = gamma;
        root_of.insert(RepCoord::new(i, p), cur);
        loop {
            let next = tau(q, cur);
            if !next.is_positive() {
                break;
            }
            p -= 2;
            cur = next.seg;
            root_of.insert(RepCoord::new(i, p), cur);
        }
    }
    let total = n * (n + 1) / 2;
    assert_eq!(root_of.len(), total, "translation orbit must sweep every root exactly once");
    let coord_of: BTreeMap<Segment, RepCoord> = root_of.iter().map(|(&c, &s)| (s, c)).collect();
    assert_eq!(coord_of.len(), total, "roots must be pairwise distinct");
    let arrows = arrows_from_vertices(n, &root_of);
    ARQuiver { quiver: q.clone(), root_of, coord_of, arrows }
}

/// One sectional diagonal through a simple root's vertex.
struct Hook {
    /// `i + p` on rising diagonals, `i - p` on falling ones.
    level: i64,
    rows: std::ops::RangeInclusive<usize>,
}

/// Builds the AR quiver from hook intersections, without the translation.
///
/// Each simple root `[k]` is placed from the local shape of vertex `k`; the
/// rising hook through it spans `n-k+1` consecutive rows and the falling
/// hook spans `k` rows, on whichever side of the placement the shape
/// dictates.  The vertex `[a,b]` is then the unique intersection of the
/// rising hook of `a` with the falling hook of `b`.
pub fn build_hooks(q: &DynkinQuiverA) -> Result<ARQuiver, ArError> {
    let n = q.n();
    let mut rising = Vec::with_capacity(n + 1); // hook of the first endpoint
    let mut falling = Vec::with_capacity(n + 1); // hook of the second endpoint
    rising.push(None);
    falling.push(None);
    for k in 1..=n {
        let class = classify(q, k);
        let xi_k = q.xi(k);
        let (i0, p0): (usize, i64) = match class {
            VertexClass::Source => (k, xi_k),
            VertexClass::Sink => (n + 1 - k, xi_k - n as i64 + 1),
            VertexClass::LeftIntermediate => (1, xi_k - k as i64 + 1),
            VertexClass::RightIntermediate => (n, xi_k - n as i64 + k as i64),
        };
        // The rising hook of k holds the roots [k, *]: n-k+1 rows.  `[k]` is
        // its low end (largest row) at a source or left intermediate, and its
        // high end at a sink or right intermediate.
        let rising_rows = match class {
            VertexClass::Source | VertexClass::LeftIntermediate => {
                let lo = i0;
                let hi = i0 + (n - k);
                lo..=hi
            }
            VertexClass::Sink | VertexClass::RightIntermediate => {
                let hi = i0;
                let lo = i0.checked_sub(n - k).ok_or_else(|| {
                    ArError::InconsistentHooks(format!("rising hook of {k} leaves the strip"))
                })?;
                lo..=hi
            }
        };
        // The falling hook of k holds the roots [*, k]: k rows.  `[k]` is its
        // low end at a source or right intermediate, high end otherwise.
        let falling_rows = match class {
            VertexClass::Source | VertexClass::RightIntermediate => {
                let hi = i0;
                let lo = i0.checked_sub(k - 1).ok_or_else(|| {
                    ArError::InconsistentHooks(format!("falling hook of {k} leaves the strip"))
                })?;
                lo..=hi
            }
            VertexClass::Sink | VertexClass::LeftIntermediate => {
                let lo = i0;
                let hi = i0 + (k - 1);
                lo..=hi
            }
        };
        if *rising_rows.end() > n || *falling_rows.end() > n {
            return Err(ArError::InconsistentHooks(format!("hook of {k} leaves the strip")));
        }
        rising.push(Some(Hook { level: i0 as i64 + p0, rows: rising_rows }));
        falling.push(Some(Hook { level: i0 as i64 - p0, rows: falling_rows }));
    }

    let mut root_of: BTreeMap<RepCoord, Segment> = BTreeMap::new();
    for a in 1..=n {
        for b in a..=n {
            let rise = rising[a].as_ref().expect("hook built above");
            let fall = falling[b].as_ref().expect("hook built above");
            // Solve i + p = rise.level, i - p = fall.level.
            let twice_i = rise.level + fall.level;
            let twice_p = rise.level - fall.level;
            if twice_i % 2 != 0 {
                return Err(ArError::InconsistentHooks(format!(
                    "hooks of {a} and {b} meet off the integer grid"
                )));
            }
            let i = twice_i / 2;
            let p = twice_p / 2;
            if i < 1 {
                return Err(ArError::InconsistentHooks(format!("hooks of {a} and {b} miss the strip")));
            }
            let i = i as usize;
            if !rise.rows.contains(&i) || !fall.rows.contains(&i) {
                return Err(ArError::InconsistentHooks(format!(
                    "hooks of {a} and {b} do not overlap at row {i}"
                )));
            }
            let seg = Segment::new(a, b);
            if let Some(prev) = root_of.insert(RepCoord::new(i, p), seg) {
                return Err(ArError::InconsistentHooks(format!(
                    "{prev} and {seg} both land on ({i},{p})"
                )));
            }
        }
    }
    let coord_of: BTreeMap<Segment, RepCoord> = root_of.iter().map(|(&c, &s)| (s, c)).collect();
    let arrows = arrows_from_vertices(n, &root_of);
    Ok(ARQuiver { quiver: q.clone(), root_of, coord_of, arrows })
}

/// Direction family of a sectional path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SectionalKind {
    /// Steps `(i,p) -> (i-1,p+1)`; constant first endpoint.
    N,
    /// Steps `(i,p) -> (i+1,p+1)`; constant second endpoint.
    S,
}

/// A maximal run of same-direction arrows, listed in arrow order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionalPath {
    pub kind: SectionalKind,
    /// The endpoint shared by every root on the path.
    pub component: usize,
    pub roots: Vec<Segment>,
}

/// All maximal sectional paths of one kind, listed by shared component.
///
/// The rising family (`N`) has one path per first endpoint `a`, with
/// `n - a + 1` vertices; the falling family (`S`) has one path per second
/// endpoint `b`, with `b` vertices.
pub fn maximal_sectional_paths(ar: &ARQuiver, kind: SectionalKind) -> Vec<SectionalPath> {
    let n = ar.n();
    let mut out = Vec::with_capacity(n);
    for c in 1..=n {
        let mut members: Vec<(RepCoord, Segment)> = ar
            .vertices()
            .filter(|(_, s)| match kind {
                SectionalKind::N => s.first() == c,
                SectionalKind::S => s.second() == c,
            })
            .collect();
        match kind {
            // Arrow order: N-paths walk upward through decreasing rows.
            SectionalKind::N => members.sort_by_key(|(coord, _)| std::cmp::Reverse(coord.i)),
            SectionalKind::S => members.sort_by_key(|(coord, _)| coord.i),
        }
        out.push(SectionalPath { kind, component: c, roots: members.into_iter().map(|(_, s)| s).collect() });
    }
    out
}

/// The first and last rows, as ordered root lists.
///
/// The top row is returned right to left (columns descending), the bottom
/// row left to right (columns ascending); in both lists consecutive segments
/// chain as `[a,b], [b+1,c], ...` and the lists jointly sum to `[1,n]`.
pub fn kappa_sigma(ar: &ARQuiver) -> (Vec<Segment>, Vec<Segment>) {
    let n = ar.n();
    let mut kappa: Vec<(i64, Segment)> =
        ar.vertices().filter(|(c, _)| c.i == 1).map(|(c, s)| (c.p, s)).collect();
    kappa.sort_by_key(|&(p, _)| std::cmp::Reverse(p));
    let mut sigma: Vec<(i64, Segment)> =
        ar.vertices().filter(|(c, _)| c.i == n).map(|(c, s)| (c.p, s)).collect();
    sigma.sort_by_key(|&(p, _)| p);
    (kappa.into_iter().map(|(_, s)| s).collect(), sigma.into_iter().map(|(_, s)| s).collect())
}

/// Which of the two sectional-invariant conventions to use for the falling
/// family when reindexing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiConvention {
    /// Rank the falling diagonals by `p - i` descending (matches the worked
    /// tables this crate is validated against).
    WorkedExample,
    /// Rank them by `i - p` descending (the transposed convention).
    PrintedDefinition,
}

/// Reindexing tuples read off the sectional diagonals.
///
/// Returns `(i_tuple, j_tuple)`: the second endpoints sorted by their falling
/// diagonal's invariant, and the first endpoints sorted by `i + p` descending
/// on their rising diagonal.
pub fn chi_reindex(ar: &ARQuiver, convention: ChiConvention) -> (Vec<usize>, Vec<usize>) {
    let n = ar.n();
    // Every root on the falling diagonal of b has the same p - i; every root
    // on the rising diagonal of a has the same i + p.  Read each value off
    // one representative.
    let mut falling: Vec<(i64, usize)> = Vec::with_capacity(n);
    let mut rising: Vec<(i64, usize)> = Vec::with_capacity(n);
    for c in 1..=n {
        let simple = ar.phi_inv(Segment::simple(c)).expect("simple roots are vertices");
        let chi_s = match convention {
            ChiConvention::WorkedExample => simple.p - simple.i as i64,
            ChiConvention::PrintedDefinition => simple.i as i64 - simple.p,
        };
        falling.push((chi_s, c));
        rising.push((simple.i as i64 + simple.p, c));
    }
    falling.sort_by_key(|&(v, _)| std::cmp::Reverse(v));
    rising.sort_by_key(|&(v, _)| std::cmp::Reverse(v));
    (falling.into_iter().map(|(_, c)| c).collect(), rising.into_iter().map(|(_, c)| c).collect())
}

/// Side of a ray through a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RaySide {
    Upper,
    Lower,
}

/// A maximal bent path through a fixed vertex: for the upper ray, the
/// falling run into the vertex followed by the rising run out of it; for the
/// lower ray, the rising run in followed by the falling run out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub side: RaySide,
    pub center: Segment,
    /// Roots in arrow order; `center` is always among them.
    pub roots: Vec<Segment>,
}

impl Ray {
    /// Roots strictly before the center (sources of paths into it).
    pub fn before_center(&self) -> &[Segment] {
        let at = self.roots.iter().position(|s| *s == self.center).expect("center on ray");
        &self.roots[..at]
    }

    /// Roots strictly after the center (targets of paths out of it).
    pub fn after_center(&self) -> &[Segment] {
        let at = self.roots.iter().position(|s| *s == self.center).expect("center on ray");
        &self.roots[at + 1..]
    }
}

/// The upper and lower rays through `gamma`.
pub fn rays(ar: &ARQuiver, gamma: Segment) -> Result<(Ray, Ray), ArError> {
    let c = ar.phi_inv(gamma)?;
    let walk = |mut cur: RepCoord, di: i64, dp: i64| -> Vec<Segment> {
        let mut out = Vec::new();
        loop {
            let ni = cur.i as i64 + di;
            if ni < 1 {
                break;
            }
            let next = RepCoord::new(ni as usize, cur.p + dp);
            match ar.phi(next) {
                Ok(seg) => {
                    out.push(seg);
                    cur = next;
                }
                Err(_) => break,
            }
        }
        out
    };
    let make = |side: RaySide| -> Ray {
        // Incoming run first (walked backwards, then reversed), center, then
        // the outgoing run.
        let (into, out_of) = match side {
            RaySide::Upper => (walk(c, -1, -1), walk(c, -1, 1)),
            RaySide::Lower => (walk(c, 1, -1), walk(c, 1, 1)),
        };
        let mut roots: Vec<Segment> = into.into_iter().rev().collect();
        roots.push(gamma);
        roots.extend(out_of);
        Ray { side, center: gamma, roots }
    };
    Ok((make(RaySide::Upper), make(RaySide::Lower)))
}

/// An additive decomposition `alpha + beta = gamma` located on one ray of
/// `gamma`, with `alpha` on the outgoing side (there is a path from `gamma`
/// to `alpha`) and `beta` on the incoming side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootPair {
    pub alpha: Segment,
    pub beta: Segment,
    pub side: RaySide,
}

/// All decompositions of `gamma` into two positive roots, each tagged with
/// the single ray that carries it.  Simple roots yield the empty list.
pub fn pairs_of(ar: &ARQuiver, gamma: Segment) -> Result<Vec<RootPair>, ArError> {
    let (upper, lower) = rays(ar, gamma)?;
    let (a, b) = (gamma.first(), gamma.second());
    let mut out = Vec::new();
    for c in a..b {
        let left = Segment::new(a, c);
        let right = Segment::new(c + 1, b);
        let mut found = None;
        for ray in [&upper, &lower] {
            let before = ray.before_center();
            let after = ray.after_center();
            let pair = if before.contains(&left) && after.contains(&right) {
                Some(RootPair { alpha: right, beta: left, side: ray.side })
            } else if before.contains(&right) && after.contains(&left) {
                Some(RootPair { alpha: left, beta: right, side: ray.side })
            } else {
                None
            };
            if let Some(p) = pair {
                debug_assert!(found.is_none(), "decomposition {left}+{right} lies on both rays");
                found = Some(p);
            }
        }
        let p = found.ok_or_else(|| {
            ArError::BadInput(format!("decomposition {left} + {right} of {gamma} lies on no ray"))
        })?;
        out.push(p);
    }
    Ok(out)
}

/// Output formats for [`serialize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArFormat {
    Json,
    Dot,
    Ascii,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    i: usize,
    p: i64,
    root: Segment,
}

#[derive(Serialize, Deserialize)]
struct ArJson {
    n: usize,
    orientation: String,
    xi: Vec<i64>,
    vertices: Vec<VertexJson>,
    arrows: Vec<(RepCoord, RepCoord)>,
}

/// Renders the quiver in the requested format.  All formats are
/// deterministic; the JSON form round-trips through [`from_json`].
pub fn serialize(ar: &ARQuiver, format: ArFormat) -> String {
    match format {
        ArFormat::Json => {
            let doc = ArJson {
                n: ar.n(),
                orientation: ar.quiver.orientation_string(),
                xi: ar.quiver.heights().to_vec(),
                vertices: ar
                    .vertices()
                    .map(|(c, s)| VertexJson { i: c.i, p: c.p, root: s })
                    .collect(),
                arrows: ar.arrows().collect(),
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
            text.push('\n');
            text
        }
        ArFormat::Dot => {
            let mut out = String::from("digraph ar_quiver {\n  rankdir=LR;\n");
            for (c, s) in ar.vertices() {
                let _ = writeln!(out, "  \"{}_{}\" [label=\"{}\"];", c.i, c.p, s);
            }
            for (u, v) in ar.arrows() {
                let _ = writeln!(out, "  \"{}_{}\" -> \"{}_{}\";", u.i, u.p, v.i, v.p);
            }
            out.push_str("}\n");
            out
        }
        ArFormat::Ascii => ascii_grid(ar),
    }
}

fn ascii_grid(ar: &ARQuiver) -> String {
    let n = ar.n();
    let pmin = ar.vertices().map(|(c, _)| c.p).min().expect("nonempty");
    let pmax = ar.vertices().map(|(c, _)| c.p).max().expect("nonempty");
    let mut width = ar.vertices().map(|(_, s)| s.to_string().len()).max().unwrap_or(3);
    width = width.max((pmin.to_string().len()).max(pmax.to_string().len()));
    width += 2;
    let cols = (pmax - pmin + 1) as usize;
    let line_len = 5 + cols * width;
    let centered = |text: &str| -> String {
        let pad = width.saturating_sub(text.len());
        let left = pad / 2;
        format!("{}{}{}", " ".repeat(left), text, " ".repeat(pad - left))
    };
    let mut lines: Vec<String> = Vec::new();
    let mut header = String::from(" i\\p ");
    for p in pmin..=pmax {
        header.push_str(&centered(&p.to_string()));
    }
    lines.push(header);
    for i in 1..=n {
        let mut row = format!("{i:>3}  ");
        for p in pmin..=pmax {
            let cell = match ar.phi(RepCoord::new(i, p)) {
                Ok(s) => centered(&s.to_string()),
                Err(_) => " ".repeat(width),
            };
            row.push_str(&cell);
        }
        lines.push(row);
        if i < n {
            // Arrow glyphs sit between the two cell centers they connect.
            let mut glyphs = vec![' '; line_len];
            for p in pmin..pmax {
                let col = 5 + (p - pmin) as usize * width + width - 1;
                let down = (RepCoord::new(i, p), RepCoord::new(i + 1, p + 1));
                let up = (RepCoord::new(i + 1, p), RepCoord::new(i, p + 1));
                if ar.arrows.contains(&down) {
                    glyphs[col] = '\\';
                } else if ar.arrows.contains(&up) {
                    glyphs[col] = '/';
                }
            }
            lines.push(glyphs.into_iter().collect());
        }
    }
    let mut out = String::new();
    for line in lines {
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Parses the JSON form produced by [`serialize`].
pub fn from_json(text: &str) -> Result<ARQuiver, ArError> {
    let doc: ArJson = serde_json::from_str(text).map_err(|e| ArError::BadInput(e.to_string()))?;
    let quiver = parse_quiver(doc.n, &doc.orientation, *doc.xi.first().unwrap_or(&0))
        .map_err(|e| ArError::BadInput(e.to_string()))?;
    if quiver.heights() != doc.xi.as_slice() {
        return Err(ArError::BadInput("height list does not match the orientation".into()));
    }
    let vertices: Vec<(RepCoord, Segment)> =
        doc.vertices.into_iter().map(|v| (RepCoord::new(v.i, v.p), v.root)).collect();
    ARQuiver::from_parts(quiver, vertices, doc.arrows)
}

/// Breadth-first reachability along arrows, used by order comparisons.
pub(crate) fn reachable_from(ar: &ARQuiver, start: RepCoord) -> BTreeSet<RepCoord> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start);
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        for j in [c.i.wrapping_sub(1), c.i + 1] {
            if (1..=ar.n()).contains(&j) {
                let t = RepCoord::new(j, c.p + 1);
                if ar.arrows.contains(&(c, t)) && seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::parse_quiver;

    fn q_ex() -> DynkinQuiverA {
        parse_quiver(5, "><>>", 0).unwrap()
    }

    fn seg(a: usize, b: usize) -> Segment {
        Segment::new(a, b)
    }

    /// The full 15-vertex table for the worked orientation `><>>`.
    fn golden_table() -> Vec<(usize, i64, Segment)> {
        vec![
            (1, -6, seg(5, 5)),
            (1, -4, seg(4, 4)),
            (1, -2, seg(2, 3)),
            (1, 0, seg(1, 1)),
            (2, -5, seg(4, 5)),
            (2, -3, seg(2, 4)),
            (2, -1, seg(1, 3)),
            (3, -4, seg(2, 5)),
            (3, -2, seg(1, 4)),
            (3, 0, seg(3, 3)),
            (4, -5, seg(2, 2)),
            (4, -3, seg(1, 5)),
            (4, -1, seg(3, 4)),
            (5, -4, seg(1, 2)),
            (5, -2, seg(3, 5)),
        ]
    }

    #[test]
    fn coxeter_builder_reproduces_the_golden_table() {
        let ar = build_coxeter(&q_ex());
        assert_eq!(ar.vertex_count(), 15);
        for (i, p, root) in golden_table() {
            assert_eq!(ar.phi(RepCoord::new(i, p)), Ok(root), "at ({i},{p})");
            assert_eq!(ar.phi_inv(root), Ok(RepCoord::new(i, p)), "at {root}");
        }
    }

    #[test]
    fn hooks_builder_matches_coxeter_builder() {
        for n in 1..=6 {
            for bits in 0..(1u32 << (n - 1)) {
                let orient: String =
                    (0..n - 1).map(|k| if bits >> k & 1 == 1 { '<' } else { '>' }).collect();
                let q = parse_quiver(n, &orient, 0).unwrap();
                let cox = build_coxeter(&q);
                let hook = build_hooks(&q).unwrap();
                assert_eq!(cox, hook, "n={n} Q={orient}");
            }
        }
    }

    #[test]
    fn hooks_builder_places_simple_roots_by_vertex_shape() {
        let ar = build_hooks(&q_ex()).unwrap();
        assert_eq!(ar.phi_inv(seg(1, 1)), Ok(RepCoord::new(1, 0))); // source
        assert_eq!(ar.phi_inv(seg(2, 2)), Ok(RepCoord::new(4, -5))); // sink
        assert_eq!(ar.phi_inv(seg(4, 4)), Ok(RepCoord::new(1, -4))); // left intermediate
        assert_eq!(ar.phi_inv(seg(5, 5)), Ok(RepCoord::new(1, -6))); // sink at the right end
    }

    #[test]
    fn phi_rejects_non_vertices() {
        let ar = build_coxeter(&q_ex());
        assert!(matches!(ar.phi(RepCoord::new(1, -1)), Err(ArError::NotAVertex(_))));
        assert!(matches!(ar.phi(RepCoord::new(6, 0)), Err(ArError::NotAVertex(_))));
        assert!(matches!(ar.phi_inv(seg(1, 6)), Err(ArError::NotAVertex(_))));
    }

    #[test]
    fn one_vertex_quiver_is_a_single_cell() {
        let q = parse_quiver(1, "", 4).unwrap();
        let ar = build_coxeter(&q);
        assert_eq!(ar.vertex_count(), 1);
        assert_eq!(ar.phi(RepCoord::new(1, 4)), Ok(seg(1, 1)));
        assert_eq!(ar.arrows().count(), 0);
        assert_eq!(build_hooks(&q).unwrap(), ar);
    }

    #[test]
    fn linear_quiver_bottom_row_holds_the_simples() {
        let q = parse_quiver(3, "<<", 0).unwrap();
        let ar = build_coxeter(&q);
        for k in 1..=3i64 {
            assert_eq!(
                ar.phi_inv(seg(k as usize, k as usize)),
                Ok(RepCoord::new(3, 2 - 2 * (3 - k)))
            );
        }
    }

    #[test]
    fn sectional_paths_run_in_arrow_order() {
        let ar = build_coxeter(&q_ex());
        let ns = maximal_sectional_paths(&ar, SectionalKind::N);
        let n1: Vec<Segment> = ns[0].roots.clone();
        assert_eq!(n1, vec![seg(1, 2), seg(1, 5), seg(1, 4), seg(1, 3), seg(1, 1)]);
        let ss = maximal_sectional_paths(&ar, SectionalKind::S);
        let s5: Vec<Segment> = ss[4].roots.clone();
        assert_eq!(s5, vec![seg(5, 5), seg(4, 5), seg(2, 5), seg(1, 5), seg(3, 5)]);
        // Census: the rising path of a has n-a arrows, the falling path of b
        // has b-1, and consecutive roots are joined by actual arrows.
        for path in ns.iter().chain(ss.iter()) {
            let expect = match path.kind {
                SectionalKind::N => 5 - path.component + 1,
                SectionalKind::S => path.component,
            };
            assert_eq!(path.roots.len(), expect);
            for w in path.roots.windows(2) {
                let u = ar.phi_inv(w[0]).unwrap();
                let v = ar.phi_inv(w[1]).unwrap();
                assert!(ar.arrows.contains(&(u, v)), "missing arrow {} -> {}", w[0], w[1]);
            }
        }
    }

    #[test]
    fn kappa_sigma_fixture() {
        let ar = build_coxeter(&q_ex());
        let (kappa, sigma) = kappa_sigma(&ar);
        assert_eq!(kappa, vec![seg(1, 1), seg(2, 3), seg(4, 4), seg(5, 5)]);
        assert_eq!(sigma, vec![seg(1, 2), seg(3, 5)]);
    }

    #[test]
    fn chi_reindex_fixture() {
        let ar = build_coxeter(&q_ex());
        let (i_tuple, j_tuple) = chi_reindex(&ar, ChiConvention::WorkedExample);
        assert_eq!(i_tuple, vec![1, 3, 4, 5, 2]);
        assert_eq!(j_tuple, vec![3, 1, 2, 4, 5]);
        let (i_alt, j_alt) = chi_reindex(&ar, ChiConvention::PrintedDefinition);
        assert_eq!(i_alt, vec![2, 5, 4, 3, 1]);
        assert_eq!(j_alt, j_tuple);
    }

    #[test]
    fn rays_fixture() {
        let ar = build_coxeter(&q_ex());
        let (upper, lower) = rays(&ar, seg(1, 4)).unwrap();
        assert_eq!(upper.roots, vec![seg(4, 4), seg(2, 4), seg(1, 4), seg(1, 3), seg(1, 1)]);
        assert_eq!(lower.roots, vec![seg(1, 2), seg(1, 5), seg(1, 4), seg(3, 4)]);
    }

    #[test]
    fn pairs_fixture() {
        let ar = build_coxeter(&q_ex());
        let pairs = pairs_of(&ar, seg(1, 4)).unwrap();
        assert_eq!(
            pairs,
            vec![
                RootPair { alpha: Segment::simple(1), beta: seg(2, 4), side: RaySide::Upper },
                RootPair { alpha: seg(3, 4), beta: seg(1, 2), side: RaySide::Lower },
                RootPair { alpha: seg(1, 3), beta: Segment::simple(4), side: RaySide::Upper },
            ]
        );
        assert_eq!(pairs_of(&ar, seg(1, 5)).unwrap().len(), 4);
        assert_eq!(pairs_of(&ar, Segment::simple(3)).unwrap(), vec![]);
    }

    #[test]
    fn json_round_trips_byte_identically() {
        for (n, orient) in [(1usize, ""), (3, "<<"), (5, "><>>"), (6, "><><>")] {
            let q = parse_quiver(n, orient, 0).unwrap();
            let ar = build_coxeter(&q);
            let text = serialize(&ar, ArFormat::Json);
            let loaded = from_json(&text).unwrap();
            assert_eq!(loaded, ar);
            assert_eq!(serialize(&loaded, ArFormat::Json), text);
        }
    }

    #[test]
    fn dot_output_lists_vertices_and_arrows() {
        let ar = build_coxeter(&q_ex());
        let dot = serialize(&ar, ArFormat::Dot);
        assert!(dot.starts_with("digraph ar_quiver {\n  rankdir=LR;\n"));
        assert!(dot.contains("\"4_-3\" [label=\"[1,5]\"];"));
        assert!(dot.contains("\"1_-6\" -> \"2_-5\";"));
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn ascii_output_draws_the_grid() {
        let q1 = parse_quiver(1, "", 0).unwrap();
        let one = serialize(&build_coxeter(&q1), ArFormat::Ascii);
        assert!(one.contains("[1]"));
        let grid = serialize(&build_coxeter(&q_ex()), ArFormat::Ascii);
        let lines: Vec<&str> = grid.lines().collect();
        assert_eq!(lines.len(), 1 + 5 + 4);
        assert!(lines[0].contains("-6"));
        assert!(lines[1].contains("[5]") && lines[1].contains("[1]"));
        assert!(lines[7].contains("[1,5]"));
        assert!(grid.contains('\\') && grid.contains('/'));
    }
}
