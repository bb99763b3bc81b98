//! Spectral parameters and the duality data read off the AR quiver:
//! denominator zeros, module labels (plain and twisted), tensor
//! simplicity, coupling triples, and the Cartan matrix cut out by the
//! simple roots.
//!
//! Throughout, a vertex `(i, p)` of the AR quiver stands for the `i`-th
//! fundamental module with spectral parameter `(-q)^p`; the combinatorics
//! of the quiver then predicts which tensor products stay simple.

use serde::Serialize;

use crate::arquiver::{pairs_of, ARQuiver, ArError, RaySide, RootPair};
use crate::rootsys::{classify, Segment, Sign, VertexClass};

/// A spectral parameter of the form `±(-q)^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralParam {
    pub sign: Sign,
    pub exp: i64,
}

impl SpectralParam {
    pub fn new(sign: Sign, exp: i64) -> SpectralParam {
        SpectralParam { sign, exp }
    }

    /// The ratio `self / base`.
    pub fn ratio_to(self, base: SpectralParam) -> SpectralParam {
        SpectralParam { sign: self.sign.times(base.sign), exp: self.exp - base.exp }
    }
}

impl std::fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "(-q)^{}", self.exp),
            Sign::Minus => write!(f, "-(-q)^{}", self.exp),
        }
    }
}

/// The affine algebra a module label refers to: `A1(n)` is untwisted type
/// A_n, `A2(m)` is twisted type A_m (fundamental nodes `1..=(m+1)/2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AffineKind {
    A1(usize),
    A2(usize),
}

impl AffineKind {
    /// Largest node index carrying a fundamental module.
    pub fn node_range(self) -> usize {
        match self {
            AffineKind::A1(n) => n,
            AffineKind::A2(m) => (m + 1) / 2,
        }
    }

    fn check_node(self, k: usize) {
        let top = self.node_range();
        assert!((1..=top).contains(&k), "node {k} out of range 1..={top} for {self}");
    }
}

impl std::fmt::Display for AffineKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AffineKind::A1(n) => write!(f, "A{n}^(1)"),
            AffineKind::A2(m) => write!(f, "A{m}^(2)"),
        }
    }
}

/// A fundamental module `V(w_node)` evaluated at a spectral parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleLabel {
    pub kind: AffineKind,
    pub node: usize,
    pub param: SpectralParam,
}

impl std::fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "V(w{})_{{{}}}", self.node, self.param)
    }
}

/// The parameter shift appearing in the right dual of a fundamental
/// module: `(-q)^(n+1)` untwisted, `(-1)^m (-q)^(m+1)` twisted.
pub fn p_star(kind: AffineKind) -> SpectralParam {
    match kind {
        AffineKind::A1(n) => SpectralParam::new(Sign::Plus, n as i64 + 1),
        AffineKind::A2(m) => {
            let sign = if m % 2 == 0 { Sign::Plus } else { Sign::Minus };
            SpectralParam::new(sign, m as i64 + 1)
        }
    }
}

/// Zeros of the denominator between the `k`-th and `l`-th fundamental
/// modules, as powers of `(-q)`, sorted by exponent.
pub fn denominator_zeros(kind: AffineKind, k: usize, l: usize) -> Vec<SpectralParam> {
    kind.check_node(k);
    kind.check_node(l);
    let gap = k.abs_diff(l) as i64;
    let mut zeros = Vec::new();
    match kind {
        AffineKind::A1(n) => {
            let top = k.min(l).min(n + 1 - k).min(n + 1 - l);
            for s in 1..=top as i64 {
                zeros.push(SpectralParam::new(Sign::Plus, 2 * s + gap));
            }
        }
        AffineKind::A2(m) => {
            let sign = if m % 2 == 0 { Sign::Plus } else { Sign::Minus };
            for s in 1..=k.min(l) as i64 {
                zeros.push(SpectralParam::new(Sign::Plus, 2 * s + gap));
                zeros.push(SpectralParam::new(sign, m as i64 + 1 + 2 * s - (k + l) as i64));
            }
        }
    }
    zeros.sort_by_key(|z| (z.exp, z.sign == Sign::Minus));
    zeros.dedup();
    zeros
}

/// Multiplicity of `x` as a zero of the `(k, l)` denominator.
pub fn zero_order(kind: AffineKind, k: usize, l: usize, x: SpectralParam) -> u32 {
    denominator_zeros(kind, k, l).iter().filter(|&&z| z == x).count() as u32
}

/// Whether the tensor product of two fundamental modules is simple: true
/// exactly when neither ratio of parameters is a denominator zero.
pub fn tensor_simple(v1: &ModuleLabel, v2: &ModuleLabel) -> bool {
    assert_eq!(v1.kind, v2.kind, "labels must live over the same algebra");
    zero_order(v1.kind, v1.node, v2.node, v2.param.ratio_to(v1.param)) == 0
        && zero_order(v1.kind, v2.node, v1.node, v1.param.ratio_to(v2.param)) == 0
}

/// The untwisted label of a root: vertex `(i, p)` becomes the `i`-th
/// fundamental module at `(-q)^p`.
pub fn v_label(ar: &ARQuiver, seg: Segment) -> ModuleLabel {
    let c = ar.phi_inv(seg).expect("root must belong to the quiver");
    ModuleLabel {
        kind: AffineKind::A1(ar.n()),
        node: c.i,
        param: SpectralParam::new(Sign::Plus, c.p),
    }
}

/// The twisted label of a root over `A2(m)` with `m` the rank: rows in the
/// upper half keep their index, rows in the lower half fold onto `m+1-i`
/// and pick up the sign `(-1)^m`.
pub fn star_label(ar: &ARQuiver, seg: Segment) -> ModuleLabel {
    let m = ar.n();
    let half = (m + 1) / 2;
    let c = ar.phi_inv(seg).expect("root must belong to the quiver");
    let (node, sign) = if c.i <= half {
        (c.i, Sign::Plus)
    } else {
        (m + 1 - c.i, if m % 2 == 0 { Sign::Plus } else { Sign::Minus })
    };
    ModuleLabel { kind: AffineKind::A2(m), node, param: SpectralParam::new(sign, c.p) }
}

/// Composition length of the tensor product of the fundamental modules
/// attached to two roots.  Zeros of these denominators are simple, so a
/// non-simple product has length exactly two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LengthClass {
    Simple,
    Length2,
}

impl std::fmt::Display for LengthClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LengthClass::Simple => write!(f, "simple"),
            LengthClass::Length2 => write!(f, "length2"),
        }
    }
}

/// Length of the tensor product of the modules labelling two roots,
/// computed from denominator zeros.
pub fn tensor_length(ar: &ARQuiver, alpha: Segment, beta: Segment) -> LengthClass {
    if tensor_simple(&v_label(ar, alpha), &v_label(ar, beta)) {
        LengthClass::Simple
    } else {
        LengthClass::Length2
    }
}

/// Length of the same tensor product read off the segment combinatorics
/// alone, without touching denominators:
///
/// * equal roots or a shared endpoint: simple;
/// * disjoint with a gap of at least two: simple;
/// * adjacent (the sum is again a root): length two;
/// * meeting in a single letter: simple when the meeting vertex is a
///   source or a sink, length two at an intermediate vertex;
/// * nested or crossing: decided by the diagonal of the rectangle the two
///   AR vertices span — steeper than wide is simple, wider than steep is
///   length two.
pub fn tensor_length_geometric(ar: &ARQuiver, alpha: Segment, beta: Segment) -> LengthClass {
    if alpha == beta {
        return LengthClass::Simple;
    }
    if alpha.first() == beta.first() || alpha.second() == beta.second() {
        return LengthClass::Simple;
    }
    let (lo, hi) = if (alpha.first(), alpha.second()) < (beta.first(), beta.second()) {
        (alpha, beta)
    } else {
        (beta, alpha)
    };
    if hi.first() > lo.second() + 1 {
        return LengthClass::Simple;
    }
    if hi.first() == lo.second() + 1 {
        return LengthClass::Length2;
    }
    if hi.first() == lo.second() {
        // The segments share exactly the letter where they meet.
        return match classify(ar.quiver(), lo.second()) {
            VertexClass::Source | VertexClass::Sink => LengthClass::Simple,
            VertexClass::LeftIntermediate | VertexClass::RightIntermediate => {
                LengthClass::Length2
            }
        };
    }
    let ca = ar.phi_inv(alpha).expect("root must belong to the quiver");
    let cb = ar.phi_inv(beta).expect("root must belong to the quiver");
    let di = ca.i.abs_diff(cb.i) as i64;
    let dp = (ca.p - cb.p).abs();
    if dp > di {
        LengthClass::Length2
    } else {
        LengthClass::Simple
    }
}

/// Whether three labelled nodes `(i, a)`, `(j, b)`, `(k, c)` form a
/// coupling triple of the untwisted algebra of rank `n`: either
/// `k = i + j` with offsets `(-j, i)`, or `k = i + j - n - 1` with offsets
/// `(j - n - 1, n + 1 - i)`.
pub fn dorey_untwisted(
    n: usize,
    beta: (usize, i64),
    alpha: (usize, i64),
    gamma: (usize, i64),
) -> bool {
    let (i, a) = beta;
    let (j, b) = alpha;
    let (k, c) = gamma;
    for node in [i, j, k] {
        assert!((1..=n).contains(&node), "node {node} out of range 1..={n}");
    }
    let h = n as i64 + 1;
    if i + j <= n {
        k == i + j && a - c == -(j as i64) && b - c == i as i64
    } else {
        k + n + 1 == i + j && a - c == j as i64 - h && b - c == h - i as i64
    }
}

/// The coupling triple of a decomposition pair: the `(row, exponent)`
/// coordinates of `beta`, `alpha`, and their sum, in that order.
pub fn dorey_from_pair(ar: &ARQuiver, pair: &RootPair) -> [(usize, i64); 3] {
    let gamma = pair
        .alpha
        .sum(&pair.beta)
        .expect("pair members must sum to a root");
    let coord = |seg: Segment| {
        let c = ar.phi_inv(seg).expect("root must belong to the quiver");
        (c.i, c.p)
    };
    [coord(pair.beta), coord(pair.alpha), coord(gamma)]
}

/// The duality datum carried by the simple roots: their labels, the zero
/// orders between them in both directions, and the resulting Cartan
/// matrix `2 - (d[u][v] + d[v][u])` off the diagonal.
#[derive(Clone, Debug, Serialize)]
pub struct QJDatum {
    pub kind: AffineKind,
    pub labels: Vec<ModuleLabel>,
    pub d: Vec<Vec<u32>>,
    pub cartan: Vec<Vec<i64>>,
}

/// Builds the duality datum of the quiver from the positions of the simple
/// roots, labelled plainly or through the twisted folding.
pub fn build_qj(ar: &ARQuiver, twisted: bool) -> QJDatum {
    let n = ar.n();
    let labels: Vec<ModuleLabel> = (1..=n)
        .map(|k| {
            let seg = Segment::simple(k);
            if twisted {
                star_label(ar, seg)
            } else {
                v_label(ar, seg)
            }
        })
        .collect();
    let kind = labels[0].kind;
    let mut d = vec![vec![0u32; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                d[u][v] = zero_order(
                    kind,
                    labels[u].node,
                    labels[v].node,
                    labels[v].param.ratio_to(labels[u].param),
                );
            }
        }
    }
    let mut cartan = vec![vec![0i64; n]; n];
    for u in 0..n {
        for v in 0..n {
            cartan[u][v] = if u == v { 2 } else { -((d[u][v] + d[v][u]) as i64) };
        }
    }
    QJDatum { kind, labels, d, cartan }
}

/// Whether a Cartan matrix describes a type-A diagram: symmetric with
/// off-diagonal entries 0 or -1, and the underlying graph a single path.
pub fn is_type_a_graph(cartan: &[Vec<i64>]) -> bool {
    let n = cartan.len();
    if cartan.iter().any(|row| row.len() != n) {
        return false;
    }
    let mut edges = 0usize;
    let mut degree = vec![0usize; n];
    for u in 0..n {
        if cartan[u][u] != 2 {
            return false;
        }
        for v in 0..n {
            if u != v {
                let e = cartan[u][v];
                if e != 0 && e != -1 {
                    return false;
                }
                if e != cartan[v][u] {
                    return false;
                }
                if u < v && e == -1 {
                    edges += 1;
                    degree[u] += 1;
                    degree[v] += 1;
                }
            }
        }
    }
    if n == 0 || edges != n - 1 || degree.iter().any(|&d| d > 2) {
        return false;
    }
    // Connected with n-1 edges and maximum degree two: a path.
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if cartan[u][v] == -1 && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// A decomposition pair of `gamma` together with the twisted labels of its
/// members, chosen so that the labels witness the non-simplicity of the
/// twisted tensor product.
#[derive(Clone, Debug)]
pub struct TwistedWitness {
    pub pair: RootPair,
    pub beta_label: ModuleLabel,
    pub alpha_label: ModuleLabel,
    pub gamma_label: ModuleLabel,
    /// True when the twisted product of the pair's labels is non-simple.
    pub necessary_ok: bool,
}

/// Picks a decomposition pair of `gamma` whose twisted labels form a
/// non-simple product.  Rows in the upper half prefer an upper-ray pair,
/// rows in the lower half a lower-ray pair; when the preferred side is
/// empty, a pair adjacent in row to `gamma` steps in.  Returns `None` for
/// simple roots, which decompose in no way at all.
pub fn twisted_witness(ar: &ARQuiver, gamma: Segment) -> Result<Option<TwistedWitness>, ArError> {
    let pairs = pairs_of(ar, gamma)?;
    if pairs.is_empty() {
        return Ok(None);
    }
    let ig = ar.phi_inv(gamma)?.i;
    let half = (ar.n() + 1) / 2;
    let row = |seg: Segment| ar.phi_inv(seg).expect("pair members are roots").i;
    let uppers: Vec<&RootPair> = pairs.iter().filter(|p| p.side == RaySide::Upper).collect();
    let lowers: Vec<&RootPair> = pairs.iter().filter(|p| p.side == RaySide::Lower).collect();
    let chosen = if ig <= half {
        uppers
            .first()
            .copied()
            .or_else(|| {
                lowers
                    .iter()
                    .find(|p| row(p.alpha) == ig + 1 || row(p.beta) == ig + 1)
                    .copied()
            })
            .or_else(|| lowers.first().copied())
    } else {
        lowers
            .first()
            .copied()
            .or_else(|| {
                uppers
                    .iter()
                    .find(|p| row(p.alpha).abs_diff(ig) == 1 || row(p.beta).abs_diff(ig) == 1)
                    .copied()
            })
            .or_else(|| uppers.first().copied())
    }
    .expect("pairs is non-empty");
    let beta_label = star_label(ar, chosen.beta);
    let alpha_label = star_label(ar, chosen.alpha);
    Ok(Some(TwistedWitness {
        pair: chosen.clone(),
        necessary_ok: !tensor_simple(&beta_label, &alpha_label),
        beta_label,
        alpha_label,
        gamma_label: star_label(ar, gamma),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arquiver::build_coxeter;
    use crate::rootsys::parse_quiver;

    fn seg(a: usize, b: usize) -> Segment {
        Segment::new(a, b)
    }

    fn sp(sign: Sign, exp: i64) -> SpectralParam {
        SpectralParam::new(sign, exp)
    }

    fn ar_ex() -> ARQuiver {
        build_coxeter(&parse_quiver(5, "><>>", 0).unwrap())
    }

    #[test]
    fn spectral_params_divide_and_print() {
        let x = sp(Sign::Minus, -5);
        let y = sp(Sign::Plus, 0);
        assert_eq!(y.ratio_to(x), sp(Sign::Minus, 5));
        assert_eq!(x.ratio_to(y), sp(Sign::Minus, -5));
        assert_eq!(x.to_string(), "-(-q)^-5");
        assert_eq!(y.to_string(), "(-q)^0");
    }

    #[test]
    fn untwisted_denominator_zero_tables() {
        let k = AffineKind::A1(5);
        assert_eq!(denominator_zeros(k, 1, 1), vec![sp(Sign::Plus, 2)]);
        assert_eq!(denominator_zeros(k, 2, 1), vec![sp(Sign::Plus, 3)]);
        assert_eq!(
            denominator_zeros(k, 2, 3),
            vec![sp(Sign::Plus, 3), sp(Sign::Plus, 5)]
        );
        assert_eq!(
            denominator_zeros(k, 3, 3),
            vec![sp(Sign::Plus, 2), sp(Sign::Plus, 4), sp(Sign::Plus, 6)]
        );
        // The bound involves the distance to both ends of the diagram.
        assert_eq!(denominator_zeros(k, 1, 4), vec![sp(Sign::Plus, 5)]);
    }

    #[test]
    fn twisted_denominator_zero_tables() {
        let k = AffineKind::A2(5);
        assert_eq!(
            denominator_zeros(k, 1, 1),
            vec![sp(Sign::Plus, 2), sp(Sign::Minus, 6)]
        );
        assert_eq!(
            denominator_zeros(k, 2, 1),
            vec![sp(Sign::Plus, 3), sp(Sign::Minus, 5)]
        );
        assert_eq!(
            denominator_zeros(k, 1, 3),
            vec![sp(Sign::Plus, 4), sp(Sign::Minus, 4)]
        );
        assert_eq!(
            denominator_zeros(k, 3, 3),
            vec![
                sp(Sign::Plus, 2),
                sp(Sign::Minus, 2),
                sp(Sign::Plus, 4),
                sp(Sign::Minus, 4),
                sp(Sign::Plus, 6),
                sp(Sign::Minus, 6),
            ]
        );
        // Even twisted rank uses the plus sign in the second family.
        assert_eq!(
            denominator_zeros(AffineKind::A2(4), 1, 1),
            vec![sp(Sign::Plus, 2), sp(Sign::Plus, 5)]
        );
    }

    #[test]
    fn zero_order_counts_membership() {
        let k = AffineKind::A1(5);
        assert_eq!(zero_order(k, 1, 1, sp(Sign::Plus, 2)), 1);
        assert_eq!(zero_order(k, 1, 1, sp(Sign::Plus, -2)), 0);
        assert_eq!(zero_order(k, 1, 1, sp(Sign::Minus, 2)), 0);
        assert_eq!(zero_order(AffineKind::A2(5), 2, 1, sp(Sign::Minus, 5)), 1);
    }

    #[test]
    fn untwisted_labels_read_off_coordinates() {
        let ar = ar_ex();
        let l = v_label(&ar, seg(1, 5));
        assert_eq!(l.kind, AffineKind::A1(5));
        assert_eq!(l.node, 4);
        assert_eq!(l.param, sp(Sign::Plus, -3));
        assert_eq!(l.to_string(), "V(w4)_{(-q)^-3}");
    }

    #[test]
    fn twisted_labels_fold_the_lower_rows() {
        let ar = ar_ex();
        let cases = [
            (seg(1, 1), 1, Sign::Plus, 0),
            (seg(1, 3), 2, Sign::Plus, -1),
            (seg(3, 3), 3, Sign::Plus, 0),
            (seg(3, 4), 2, Sign::Minus, -1),
            (seg(2, 2), 2, Sign::Minus, -5),
            (seg(1, 2), 1, Sign::Minus, -4),
            (seg(3, 5), 1, Sign::Minus, -2),
        ];
        for (s, node, sign, exp) in cases {
            let l = star_label(&ar, s);
            assert_eq!(l.kind, AffineKind::A2(5), "{s}");
            assert_eq!((l.node, l.param), (node, sp(sign, exp)), "{s}");
        }
    }

    #[test]
    fn tensor_simplicity_fixtures() {
        let ar = ar_ex();
        let pairs = [
            (seg(1, 3), seg(3, 5), true),  // meet at a source
            (seg(1, 2), seg(2, 4), true),  // meet at a sink
            (seg(3, 4), seg(4, 5), false), // meet at an intermediate vertex
            (seg(1, 1), seg(2, 3), false), // adjacent, sum is a root
            (seg(1, 1), seg(3, 3), true),  // gap two
            (seg(1, 5), seg(2, 4), true),  // nested, steep diagonal
            (seg(2, 4), seg(3, 3), false), // nested, wide diagonal
        ];
        for (a, b, simple) in pairs {
            assert_eq!(
                tensor_simple(&v_label(&ar, a), &v_label(&ar, b)),
                simple,
                "{a} (x) {b}"
            );
        }
    }

    #[test]
    fn geometric_length_agrees_with_denominators_everywhere() {
        for orient in ["><>>", ">>>>", "<<<<", "<><>"] {
            let ar = build_coxeter(&parse_quiver(5, orient, 0).unwrap());
            let roots: Vec<Segment> = ar.vertices().map(|(_, s)| s).collect();
            for &a in &roots {
                for &b in &roots {
                    assert_eq!(
                        tensor_length_geometric(&ar, a, b),
                        tensor_length(&ar, a, b),
                        "Q={orient}, {a} (x) {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn coupling_triples_from_decomposition_pairs() {
        let ar = ar_ex();
        let pairs = pairs_of(&ar, seg(1, 4)).unwrap();
        assert_eq!(pairs.len(), 3);
        let triples: Vec<[(usize, i64); 3]> =
            pairs.iter().map(|p| dorey_from_pair(&ar, p)).collect();
        assert_eq!(triples[0], [(2, -3), (1, 0), (3, -2)]);
        assert_eq!(triples[1], [(5, -4), (4, -1), (3, -2)]);
        assert_eq!(triples[2], [(1, -4), (2, -1), (3, -2)]);
        for t in triples {
            assert!(dorey_untwisted(5, t[0], t[1], t[2]));
        }
        // Breaking any one coordinate breaks the coupling.
        assert!(!dorey_untwisted(5, (2, -3), (1, 0), (3, -1)));
        assert!(!dorey_untwisted(5, (2, -3), (1, 1), (3, -2)));
        assert!(!dorey_untwisted(5, (2, -3), (1, 0), (4, -2)));
        // Rows summing to exactly n + 1 admit no coupling at all.
        for c in -8..=8 {
            assert!(!dorey_untwisted(5, (2, -3), (4, -1), (1, c)));
        }
    }

    #[test]
    fn simple_root_datum_forms_a_path() {
        let ar = ar_ex();
        let qj = build_qj(&ar, false);
        assert_eq!(qj.kind, AffineKind::A1(5));
        let expected = [
            [2, -1, 0, 0, 0],
            [-1, 2, -1, 0, 0],
            [0, -1, 2, -1, 0],
            [0, 0, -1, 2, -1],
            [0, 0, 0, -1, 2],
        ];
        for (row, want) in qj.cartan.iter().zip(expected.iter()) {
            assert_eq!(row, want);
        }
        assert!(is_type_a_graph(&qj.cartan));
        assert!(qj.d.iter().flatten().all(|&x| x <= 1));
    }

    #[test]
    fn path_recognition_rejects_branches_and_gaps() {
        // A star on four nodes: node 0 adjacent to all others.
        let star = vec![
            vec![2, -1, -1, -1],
            vec![-1, 2, 0, 0],
            vec![-1, 0, 2, 0],
            vec![-1, 0, 0, 2],
        ];
        assert!(!is_type_a_graph(&star));
        // Two disconnected edges.
        let split = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, 0, 0],
            vec![0, 0, 2, -1],
            vec![0, 0, -1, 2],
        ];
        assert!(!is_type_a_graph(&split));
        // An asymmetric matrix.
        let skew = vec![vec![2, -1], vec![0, 2]];
        assert!(!is_type_a_graph(&skew));
        assert!(is_type_a_graph(&[vec![2]]));
    }

    #[test]
    fn twisted_witness_fixture() {
        let ar = ar_ex();
        let w = twisted_witness(&ar, seg(1, 2)).unwrap().unwrap();
        assert_eq!((w.pair.alpha, w.pair.beta), (seg(1, 1), seg(2, 2)));
        assert_eq!(w.pair.side, RaySide::Upper);
        assert_eq!(w.beta_label.to_string(), "V(w2)_{-(-q)^-5}");
        assert_eq!(w.alpha_label.to_string(), "V(w1)_{(-q)^0}");
        assert_eq!(w.gamma_label.to_string(), "V(w1)_{-(-q)^-4}");
        assert!(w.necessary_ok);
    }

    #[test]
    fn twisted_witness_covers_every_composite_root() {
        let ar = ar_ex();
        for (_, gamma) in ar.vertices() {
            match twisted_witness(&ar, gamma).unwrap() {
                Some(w) => {
                    assert!(gamma.len() >= 2);
                    assert!(w.necessary_ok, "gamma = {gamma}");
                }
                None => assert_eq!(gamma.len(), 1),
            }
        }
    }

    #[test]
    fn dual_shift_values() {
        assert_eq!(p_star(AffineKind::A1(5)), sp(Sign::Plus, 6));
        assert_eq!(p_star(AffineKind::A2(5)), sp(Sign::Minus, 6));
        assert_eq!(p_star(AffineKind::A2(4)), sp(Sign::Plus, 5));
    }
}
