//! Reduced words for the longest element and the total orders they induce
//! on the positive roots.
//!
//! A word `(i_1, ..., i_N)` with `N = n(n+1)/2` induces the sequence
//! `beta_z = s_{i_1} ... s_{i_{z-1}} alpha_{i_z}`; the word is reduced for
//! the longest element exactly when the `beta_z` are positive and pairwise
//! distinct, and listing them in order of `z` is then a convex total order.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arquiver::{reachable_from, ARQuiver};
use crate::rootsys::{DynkinQuiverA, EdgeDir, Segment};

/// Errors from word validation.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("not a reduced word for the longest element: {0}")]
    NotReducedW0(String),
}

/// Letters of a word in the simple reflections of A_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    /// Wraps a letter sequence.  Panics when a letter leaves `1..=n`; whether
    /// the word actually is reduced for the longest element is checked by
    /// [`order_from_word`].
    pub fn new(n: usize, letters: Vec<usize>) -> ReducedWord {
        for &l in &letters {
            assert!((1..=n).contains(&l), "letter {l} out of range 1..={n}");
        }
        ReducedWord { n, letters }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// The letters joined by commas, e.g. `1,3,2`.
    pub fn to_comma_string(&self) -> String {
        self.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Reading styles that linearize an AR quiver into an adapted word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadingStyle {
    /// Sweep by `(i - 1) - p` ascending, larger rows first on ties.
    L,
    /// Sweep by `(i - 1) + p` descending, smaller rows first on ties.
    U,
}

/// Reads the quiver into a reduced word: vertices are emitted in the sweep
/// order of `style` and each contributes its row index as a letter.
pub fn reading(ar: &ARQuiver, style: ReadingStyle) -> ReducedWord {
    let mut verts: Vec<(i64, i64, usize)> = ar
        .vertices()
        .map(|(c, _)| {
            let i = c.i as i64;
            match style {
                ReadingStyle::L => (i - 1 - c.p, -i, c.i),
                ReadingStyle::U => (-(i - 1 + c.p), i, c.i),
            }
        })
        .collect();
    verts.sort();
    ReducedWord::new(ar.n(), verts.into_iter().map(|(_, _, i)| i).collect())
}

/// A total order on the positive roots of A_n, indexed from rank 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexTotalOrder {
    n: usize,
    by_rank: Vec<Segment>,
    rank_of: BTreeMap<Segment, usize>,
}

impl ConvexTotalOrder {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Roots from smallest to largest.
    pub fn roots(&self) -> &[Segment] {
        &self.by_rank
    }

    /// Position of a root, 0-based.
    pub fn rank(&self, seg: Segment) -> Option<usize> {
        self.rank_of.get(&seg).copied()
    }
}

/// Evaluates the root sequence of a word and returns the induced total
/// order.  Fails when the word is not reduced for the longest element: wrong
/// length, a root turning negative, or a repeated root.
pub fn order_from_word(w: &ReducedWord) -> Result<ConvexTotalOrder, OrderError> {
    let n = w.n;
    let expected = n * (n + 1) / 2;
    if w.letters.len() != expected {
        return Err(OrderError::NotReducedW0(format!(
            "word has {} letters, the longest element needs {expected}",
            w.letters.len()
        )));
    }
    // image[x] = where the prefix word sends coordinate x (rightmost letter
    // of the prefix acting first).
    let mut image: Vec<usize> = (0..=n + 1).collect();
    let mut by_rank = Vec::with_capacity(expected);
    let mut rank_of = BTreeMap::new();
    for (z, &l) in w.letters.iter().enumerate() {
        let (x, y) = (image[l], image[l + 1]);
        if x > y {
            return Err(OrderError::NotReducedW0(format!(
                "letter {l} at position {} sends alpha_{l} negative",
                z + 1
            )));
        }
        let beta = Segment::new(x, y - 1);
        if rank_of.insert(beta, z).is_some() {
            return Err(OrderError::NotReducedW0(format!(
                "root {beta} repeats at position {}",
                z + 1
            )));
        }
        by_rank.push(beta);
        image.swap(l, l + 1);
    }
    Ok(ConvexTotalOrder { n, by_rank, rank_of })
}

/// Whether every decomposable root sits strictly between its two parts.
pub fn is_convex(o: &ConvexTotalOrder) -> bool {
    let n = o.n;
    for a in 1..=n {
        for b in a + 1..=n {
            let g = o.rank(Segment::new(a, b)).expect("total order covers all roots");
            for c in a..b {
                let x = o.rank(Segment::new(a, c)).expect("covered");
                let y = o.rank(Segment::new(c + 1, b)).expect("covered");
                let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                if !(lo < g && g < hi) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether the word peels a source of the successively reflected quiver at
/// every letter.
pub fn is_adapted(w: &ReducedWord, q: &DynkinQuiverA) -> bool {
    if w.n != q.n() {
        return false;
    }
    let n = q.n();
    let mut edges: Vec<EdgeDir> = q.edge_dirs().to_vec();
    for &i in &w.letters {
        let in_left = i >= 2 && edges[i - 2] == EdgeDir::Right;
        let in_right = i <= n - 1 && edges[i - 1] == EdgeDir::Left;
        if in_left || in_right {
            return false;
        }
        if i >= 2 {
            edges[i - 2] = edges[i - 2].reversed();
        }
        if i <= n - 1 {
            edges[i - 1] = edges[i - 1].reversed();
        }
    }
    true
}

/// The partial order of the quiver: `alpha` precedes `beta` when there is a
/// (possibly empty) arrow path from `beta`'s vertex to `alpha`'s.
pub fn partial_leq(ar: &ARQuiver, alpha: Segment, beta: Segment) -> bool {
    let from = ar.phi_inv(beta).expect("beta must be a positive root of the quiver");
    let to = ar.phi_inv(alpha).expect("alpha must be a positive root of the quiver");
    reachable_from(ar, from).contains(&to)
}

/// Whether the total order refines the quiver's partial order.
pub fn compatible(o: &ConvexTotalOrder, ar: &ARQuiver) -> bool {
    if o.n != ar.n() {
        return false;
    }
    for (c, beta) in ar.vertices() {
        let rank_beta = match o.rank(beta) {
            Some(r) => r,
            None => return false,
        };
        for t in reachable_from(ar, c) {
            let alpha = ar.phi(t).expect("reachable vertices exist");
            if alpha != beta {
                match o.rank(alpha) {
                    Some(r) if r < rank_beta => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// Decompositions `gamma = alpha + beta` minimal in the order: no other
/// decomposition fits strictly inside the interval the pair spans around
/// `gamma`.  Pairs are returned as `(smaller, larger)`, sorted by the rank of
/// the smaller member.
pub fn minimal_pairs(o: &ConvexTotalOrder, gamma: Segment) -> Vec<(Segment, Segment)> {
    let g = o.rank(gamma).expect("gamma must be a root of the order");
    let splits: Vec<(usize, usize)> = splits_of(gamma)
        .into_iter()
        .map(|(left, right)| {
            let x = o.rank(left).expect("covered");
            let y = o.rank(right).expect("covered");
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    let mut out: Vec<(usize, usize)> = splits
        .iter()
        .filter(|&&(lo, hi)| {
            !splits.iter().any(|&(lo2, hi2)| lo < lo2 && lo2 < g && g < hi2 && hi2 < hi)
        })
        .copied()
        .collect();
    out.sort();
    out.into_iter().map(|(lo, hi)| (o.by_rank[lo], o.by_rank[hi])).collect()
}

/// Foata normal form in the trace monoid where letters commute exactly when
/// they are not adjacent (`|a - b| > 1`): successive layers of pairwise
/// independent letters, each movable to the front of what remains.
fn foata_normal_form(letters: &[usize]) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = letters.to_vec();
    let mut layers = Vec::new();
    while !rest.is_empty() {
        let mut layer: Vec<usize> = Vec::new();
        let mut kept: Vec<usize> = Vec::new();
        for &x in &rest {
            let free = |t: &usize| x.abs_diff(*t) > 1;
            if layer.iter().all(free) && kept.iter().all(free) {
                layer.push(x);
            } else {
                kept.push(x);
            }
        }
        layer.sort_unstable();
        layers.push(layer);
        rest = kept;
    }
    layers
}

/// Whether two words are equal up to swapping adjacent commuting letters.
pub fn commutation_equivalent(w1: &ReducedWord, w2: &ReducedWord) -> bool {
    w1.n == w2.n && foata_normal_form(&w1.letters) == foata_normal_form(&w2.letters)
}

/// All decompositions of a root into two segments, in cut-point order.
pub(crate) fn splits_of(gamma: Segment) -> Vec<(Segment, Segment)> {
    let (a, b) = (gamma.first(), gamma.second());
    (a..b).map(|c| (Segment::new(a, c), Segment::new(c + 1, b))).collect()
}
