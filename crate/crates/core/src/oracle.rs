//! Exhaustive cross-validation of the whole crate on small ranks.
//!
//! Every structural claim the other modules rely on is re-derived here from
//! first principles — brute-force enumerations, permutation arithmetic, and
//! a second, independent quiver builder — and checked against the fast
//! implementations over every orientation of every rank in range.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arquiver::{
    build_coxeter, build_hooks, chi_reindex, kappa_sigma, maximal_sectional_paths, pairs_of,
    rays, ARQuiver, ChiConvention, RaySide, RepCoord, SectionalKind,
};
use crate::duality::{
    build_qj, dorey_from_pair, dorey_untwisted, is_type_a_graph, tensor_length,
    tensor_length_geometric, twisted_witness, LengthClass,
};
use crate::orders::{
    commutation_equivalent, compatible, is_adapted, is_convex, minimal_pairs, order_from_word,
    reading, ConvexTotalOrder, ReadingStyle,
};
use crate::rootsys::{gamma_theta_m, parse_quiver, star, DynkinQuiverA, Segment};

/// Errors from the verification entry points.
#[derive(Debug, Error)]
pub enum OracleError {
    #[error("rank {0} outside the supported verification range 1..=9")]
    BadRank(usize),
}

/// Outcome of one named check, possibly aggregated over many quivers.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

/// Results of a full sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub max_rank: usize,
    pub quivers: usize,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verified ranks 1..={} ({} quivers)", self.max_rank, self.quivers)?;
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{tag} {:<24} {}", c.name, c.details)?;
        }
        write!(f, "overall: {}", if self.passed { "pass" } else { "FAIL" })
    }
}

/// All positive roots of rank `n`.
pub fn enumerate_roots(n: usize) -> Vec<Segment> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for a in 1..=n {
        for b in a..=n {
            out.push(Segment::new(a, b));
        }
    }
    out
}

/// Minimal decompositions of `gamma` found by brute force: every ordered
/// pair of roots whose coordinate vectors sum to `gamma`, filtered by the
/// no-strictly-inner-pair condition.  Independent of [`minimal_pairs`].
pub fn brute_minimal_pairs(o: &ConvexTotalOrder, gamma: Segment) -> Vec<(Segment, Segment)> {
    let n = o.n();
    let gv = gamma.as_vector(n);
    let g = o.rank(gamma).expect("gamma must be a root of the order");
    let mut cands: Vec<(usize, usize)> = Vec::new();
    for x in o.roots() {
        for y in o.roots() {
            let (rx, ry) = (o.rank(*x).unwrap(), o.rank(*y).unwrap());
            if rx < ry {
                let sum: Vec<i64> =
                    x.as_vector(n).iter().zip(y.as_vector(n)).map(|(u, v)| u + v).collect();
                if sum == gv {
                    cands.push((rx, ry));
                }
            }
        }
    }
    let mut keep: Vec<(usize, usize)> = cands
        .iter()
        .filter(|&&(lo, hi)| {
            !cands.iter().any(|&(l2, h2)| lo < l2 && l2 < g && g < h2 && h2 < hi)
        })
        .copied()
        .collect();
    keep.sort();
    keep.into_iter().map(|(lo, hi)| (o.roots()[lo], o.roots()[hi])).collect()
}

fn ck(name: &str, passed: bool, details: String) -> CheckReport {
    CheckReport { name: name.to_string(), passed, details }
}

fn pass(name: &str) -> CheckReport {
    ck(name, true, String::new())
}

/// Both builders must produce the supplied quiver bit for bit.
fn c_builders(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "builders_agree";
    let cox = build_coxeter(q);
    match build_hooks(q) {
        Ok(hooks) if hooks == cox && *ar == cox => pass(name),
        Ok(hooks) => {
            let which = if hooks != cox { "hook and translation builders differ" } else { "supplied quiver differs from the builders" };
            ck(name, false, which.to_string())
        }
        Err(e) => ck(name, false, format!("hook builder failed: {e}")),
    }
}

/// The vertex set must be exactly the positive roots, once each.
fn c_vertex_census(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "vertex_census";
    let n = q.n();
    let want: BTreeSet<Segment> = enumerate_roots(n).into_iter().collect();
    let got: BTreeSet<Segment> = ar.vertices().map(|(_, s)| s).collect();
    if got != want || ar.vertex_count() != n * (n + 1) / 2 {
        return ck(name, false, format!("{} vertices, want {}", ar.vertex_count(), n * (n + 1) / 2));
    }
    pass(name)
}

/// Row `i` must be the translation orbit seeded at `(i, xi_i)`: correct
/// length, endpoints, spacing, and nothing outside it.
fn c_row_structure(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "row_structure";
    let n = q.n();
    for i in 1..=n {
        let (g, _, m) = gamma_theta_m(q, i);
        let mut row: Vec<(i64, Segment)> =
            ar.vertices().filter(|(c, _)| c.i == i).map(|(c, s)| (c.p, s)).collect();
        row.sort();
        if row.len() != m + 1 {
            return ck(name, false, format!("row {i} has {} vertices, want {}", row.len(), m + 1));
        }
        let (p_hi, right) = *row.last().expect("rows are non-empty");
        if right != g || p_hi != q.xi(i) {
            return ck(name, false, format!("row {i} ends with {right} at {p_hi}, want {g} at {}", q.xi(i)));
        }
        if row.first().expect("non-empty").0 != q.xi(i) - 2 * m as i64 {
            return ck(name, false, format!("row {i} starts at the wrong column"));
        }
        // Left ends relate rows i and i* through the longest element.
        let is = star(i, n);
        let (_, theta, _) = gamma_theta_m(q, is);
        let left = row.first().expect("non-empty").1;
        if left != theta || q.xi(i) - 2 * m as i64 != q.xi(is) - (n as i64 + 1) + 2 {
            return ck(name, false, format!("row {i} starts with {left}, want {theta}"));
        }
        // Exact domain: both parity and the column window.
        for p in (q.xi(i) - 2 * m as i64 - 2)..=(q.xi(i) + 2) {
            let inside =
                p <= q.xi(i) && p >= q.xi(i) - 2 * m as i64 && (q.xi(i) - p) % 2 == 0;
            if ar.has_vertex(RepCoord::new(i, p)) != inside {
                return ck(name, false, format!("row {i} column {p}: membership mismatch"));
            }
        }
    }
    pass(name)
}

/// Arrows must be exactly the mesh neighbours, and adjacent roots must pair
/// to one under the symmetrized form.
fn c_arrows(_q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "arrows_mesh";
    let verts: Vec<RepCoord> = ar.vertices().map(|(c, _)| c).collect();
    let mut want = BTreeSet::new();
    for &u in &verts {
        for &v in &verts {
            if v.p == u.p + 1 && (v.i == u.i + 1 || u.i == v.i + 1) {
                want.insert((u, v));
            }
        }
    }
    let got: BTreeSet<(RepCoord, RepCoord)> = ar.arrows().collect();
    if got != want {
        return ck(name, false, format!("{} arrows, mesh recount {}", got.len(), want.len()));
    }
    for (u, v) in ar.arrows() {
        let (a, b) = (ar.phi(u).expect("arrow ends exist"), ar.phi(v).expect("arrow ends exist"));
        if a.pairing(&b) != 1 {
            return ck(name, false, format!("arrow {a} -> {b} pairs to {}", a.pairing(&b)));
        }
    }
    pass(name)
}

/// Around every interior mesh the outer dimension vectors must sum to the
/// inner ones.
fn c_mesh_additivity(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "mesh_additivity";
    let n = q.n();
    for (c, s) in ar.vertices() {
        let right = RepCoord::new(c.i, c.p + 2);
        if let Ok(t) = ar.phi(right) {
            let mut mid = vec![0i64; n];
            for j in [c.i.wrapping_sub(1), c.i + 1] {
                if let Ok(u) = ar.phi(RepCoord::new(j, c.p + 1)) {
                    for (m, x) in mid.iter_mut().zip(u.as_vector(n)) {
                        *m += x;
                    }
                }
            }
            let sum: Vec<i64> =
                s.as_vector(n).iter().zip(t.as_vector(n)).map(|(x, y)| x + y).collect();
            if sum != mid {
                return ck(name, false, format!("mesh at ({}, {}) is not additive", c.i, c.p));
            }
        }
    }
    pass(name)
}

/// Sectional families: one maximal path per endpoint value, correct length,
/// constant endpoint, steps realized by arrows, jointly covering everything.
fn c_sectional(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "sectional_paths";
    let n = q.n();
    for kind in [SectionalKind::N, SectionalKind::S] {
        let paths = maximal_sectional_paths(ar, kind);
        let comps: Vec<usize> = paths.iter().map(|p| p.component).collect();
        if comps != (1..=n).collect::<Vec<_>>() {
            return ck(name, false, format!("{kind:?} components are {comps:?}"));
        }
        let mut covered = BTreeSet::new();
        for path in &paths {
            let want_len = match kind {
                SectionalKind::N => n + 1 - path.component,
                SectionalKind::S => path.component,
            };
            if path.roots.len() != want_len {
                return ck(name, false, format!("{kind:?} path of {} has {} roots, want {want_len}", path.component, path.roots.len()));
            }
            for s in &path.roots {
                let end = match kind {
                    SectionalKind::N => s.first(),
                    SectionalKind::S => s.second(),
                };
                if end != path.component {
                    return ck(name, false, format!("{s} sits on the {kind:?} path of {}", path.component));
                }
                covered.insert(*s);
            }
            let arrows: BTreeSet<(RepCoord, RepCoord)> = ar.arrows().collect();
            for w in path.roots.windows(2) {
                let u = ar.phi_inv(w[0]).expect("path roots exist");
                let v = ar.phi_inv(w[1]).expect("path roots exist");
                if !arrows.contains(&(u, v)) {
                    return ck(name, false, format!("{} -> {} is not an arrow", w[0], w[1]));
                }
            }
        }
        if covered.len() != n * (n + 1) / 2 {
            return ck(name, false, format!("{kind:?} paths cover {} roots", covered.len()));
        }
    }
    pass(name)
}

/// First and last rows: chained interval partitions of `[1, n]`, with sizes
/// and the highest root's position given by the orbit lengths of the end
/// rows.
fn c_boundary_rows(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "boundary_rows";
    let n = q.n();
    let (kappa, sigma) = kappa_sigma(ar);
    for (label, list) in [("top", &kappa), ("bottom", &sigma)] {
        let mut at = 1;
        for s in list {
            if s.first() != at {
                return ck(name, false, format!("{label} row breaks the chain at {s}"));
            }
            at = s.second() + 1;
        }
        if at != n + 1 {
            return ck(name, false, format!("{label} row stops at {}", at - 1));
        }
    }
    let m1 = gamma_theta_m(q, 1).2;
    let mn = gamma_theta_m(q, n).2;
    if kappa.len() != m1 + 1 || sigma.len() != mn + 1 {
        return ck(name, false, format!("row sizes {} and {}, want {} and {}", kappa.len(), sigma.len(), m1 + 1, mn + 1));
    }
    let top = match ar.phi_inv(Segment::new(1, n)) {
        Ok(c) => c,
        Err(e) => return ck(name, false, e.to_string()),
    };
    let want = RepCoord::new(m1 + 1, q.xi(1) - m1 as i64);
    let want2 = RepCoord::new(n - mn, q.xi(n) - mn as i64);
    if top != want || top != want2 {
        return ck(name, false, format!("highest root at ({}, {}), want ({}, {})", top.i, top.p, want.i, want.p));
    }
    pass(name)
}

/// Both readings must be adapted words whose orders are convex and refine
/// the quiver's partial order.
fn c_readings(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "readings";
    for style in [ReadingStyle::L, ReadingStyle::U] {
        let w = reading(ar, style);
        if !is_adapted(&w, q) {
            return ck(name, false, format!("{style:?} reading is not adapted"));
        }
        let o = match order_from_word(&w) {
            Ok(o) => o,
            Err(e) => return ck(name, false, format!("{style:?} reading: {e}")),
        };
        if !is_convex(&o) {
            return ck(name, false, format!("{style:?} order is not convex"));
        }
        if !compatible(&o, ar) {
            return ck(name, false, format!("{style:?} order is not compatible"));
        }
    }
    pass(name)
}

/// The fast minimal-pair scan must agree with the brute-force one for every
/// root under both reading orders.
fn c_minimal_pairs(_q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "minimal_pairs_brute";
    for style in [ReadingStyle::L, ReadingStyle::U] {
        let o = match order_from_word(&reading(ar, style)) {
            Ok(o) => o,
            Err(e) => return ck(name, false, format!("{style:?} reading: {e}")),
        };
        for (_, gamma) in ar.vertices() {
            if minimal_pairs(&o, gamma) != brute_minimal_pairs(&o, gamma) {
                return ck(name, false, format!("{style:?} order disagrees at {gamma}"));
            }
        }
    }
    pass(name)
}

/// Every decomposition on the upper ray must be a minimal pair of the
/// U-order, and every one on the lower ray a minimal pair of the L-order,
/// so that each pair is realized as minimal by an adapted word.
fn c_ray_theorem(_q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "ray_theorem";
    let unordered = |a: Segment, b: Segment| if a < b { (a, b) } else { (b, a) };
    let mut orders = Vec::new();
    for style in [ReadingStyle::L, ReadingStyle::U] {
        match order_from_word(&reading(ar, style)) {
            Ok(o) => orders.push(o),
            Err(e) => return ck(name, false, format!("{style:?} reading: {e}")),
        }
    }
    for (_, gamma) in ar.vertices() {
        let pairs = match pairs_of(ar, gamma) {
            Ok(p) => p,
            Err(e) => return ck(name, false, e.to_string()),
        };
        for pair in pairs {
            let o = match pair.side {
                RaySide::Lower => &orders[0],
                RaySide::Upper => &orders[1],
            };
            let minimal: BTreeSet<(Segment, Segment)> =
                minimal_pairs(o, gamma).into_iter().map(|(x, y)| unordered(x, y)).collect();
            if !minimal.contains(&unordered(pair.alpha, pair.beta)) {
                return ck(
                    name,
                    false,
                    format!("{:?} pair {} + {} of {gamma} is not minimal", pair.side, pair.beta, pair.alpha),
                );
            }
        }
    }
    pass(name)
}

/// The rows of a decomposition pair must sum to the row of the whole on the
/// upper side and exceed it by `n + 1` on the lower side — never both.
fn c_pair_rows(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "pair_row_identity";
    let n = q.n();
    for (c, gamma) in ar.vertices() {
        let pairs = match pairs_of(ar, gamma) {
            Ok(p) => p,
            Err(e) => return ck(name, false, e.to_string()),
        };
        for pair in pairs {
            let coords = (ar.phi_inv(pair.alpha), ar.phi_inv(pair.beta));
            let (ia, ib) = match coords {
                (Ok(x), Ok(y)) => (x.i, y.i),
                _ => return ck(name, false, format!("a member of a pair of {gamma} is not a vertex")),
            };
            let upper_id = ia + ib == c.i;
            let lower_id = ia + ib == c.i + n + 1;
            let want = match pair.side {
                RaySide::Upper => upper_id && !lower_id,
                RaySide::Lower => lower_id && !upper_id,
            };
            if !want {
                return ck(name, false, format!("rows {ia}+{ib} against {} for {gamma}", c.i));
            }
        }
    }
    pass(name)
}

/// Every decomposition pair must satisfy the coupling relations.
fn c_dorey(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "dorey_coupling";
    let n = q.n();
    for (_, gamma) in ar.vertices() {
        let pairs = match pairs_of(ar, gamma) {
            Ok(p) => p,
            Err(e) => return ck(name, false, e.to_string()),
        };
        for pair in pairs {
            let [b, a, g] = dorey_from_pair(ar, &pair);
            if !dorey_untwisted(n, b, a, g) {
                return ck(name, false, format!("pair {}+{} of {gamma}", pair.alpha, pair.beta));
            }
        }
    }
    pass(name)
}

/// Each decomposition of a root must sit on exactly one of its two rays,
/// and the count must match the number of cut points.
fn c_ray_partition(_q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "ray_partition";
    for (_, gamma) in ar.vertices() {
        let (upper, lower) = match rays(ar, gamma) {
            Ok(r) => r,
            Err(e) => return ck(name, false, e.to_string()),
        };
        let (a, b) = (gamma.first(), gamma.second());
        for c in a..b {
            let left = Segment::new(a, c);
            let right = Segment::new(c + 1, b);
            let mut carriers = 0;
            for ray in [&upper, &lower] {
                let before = ray.before_center();
                let after = ray.after_center();
                if (before.contains(&left) && after.contains(&right))
                    || (before.contains(&right) && after.contains(&left))
                {
                    carriers += 1;
                }
            }
            if carriers != 1 {
                return ck(name, false, format!("{left}+{right} of {gamma} lies on {carriers} rays"));
            }
        }
        let pairs = match pairs_of(ar, gamma) {
            Ok(p) => p,
            Err(e) => return ck(name, false, e.to_string()),
        };
        if pairs.len() != gamma.len() - 1 {
            return ck(name, false, format!("{gamma} has {} pairs", pairs.len()));
        }
    }
    pass(name)
}

/// The duality datum of the simple roots must describe a type-A diagram
/// with zero orders at most one.
fn c_qj(_q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "qj_path";
    let qj = build_qj(ar, false);
    if !is_type_a_graph(&qj.cartan) {
        return ck(name, false, "simple-root Cartan matrix is not a path".to_string());
    }
    if qj.d.iter().flatten().any(|&x| x > 1) {
        return ck(name, false, "a zero order exceeds one".to_string());
    }
    pass(name)
}

/// The positional length rules must reproduce the denominator computation
/// on every pair, and adjacent segments always give length two.
fn c_length_geometry(_q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "length_geometry";
    let roots: Vec<Segment> = ar.vertices().map(|(_, s)| s).collect();
    for &a in &roots {
        for &b in &roots {
            let semantic = tensor_length(ar, a, b);
            if tensor_length_geometric(ar, a, b) != semantic {
                return ck(name, false, format!("{a} (x) {b}"));
            }
            if a.sum(&b).is_some() && semantic != LengthClass::Length2 {
                return ck(name, false, format!("adjacent {a} (x) {b} is simple"));
            }
        }
    }
    pass(name)
}

/// Every composite root must admit a twisted witness pair whose labels
/// form a non-simple product.
fn c_twisted(_q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "twisted_necessity";
    for (_, gamma) in ar.vertices() {
        match twisted_witness(ar, gamma) {
            Ok(Some(w)) if !w.necessary_ok => {
                return ck(name, false, format!("witness pair of {gamma} stays simple"));
            }
            Ok(None) if gamma.len() > 1 => {
                return ck(name, false, format!("no witness for {gamma}"));
            }
            Err(e) => return ck(name, false, e.to_string()),
            _ => {}
        }
    }
    pass(name)
}

/// Rebasing the height function must shift every column uniformly.
fn c_shift(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "shift_invariance";
    let delta = 7;
    let q2 = parse_quiver(q.n(), &q.orientation_string(), q.xi(1) + delta)
        .expect("same orientation stays valid");
    let ar2 = build_coxeter(&q2);
    for (c, s) in ar.vertices() {
        match ar2.phi_inv(s) {
            Ok(d) if d.i == c.i && d.p == c.p + delta => {}
            _ => return ck(name, false, format!("{s} does not shift by {delta}")),
        }
    }
    pass(name)
}

/// Reversing every edge must reflect the quiver: row `i` to row `n+1-i`,
/// columns mirrored about a constant, with unchanged root labels.
fn c_reversal(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "reversal_reflection";
    let n = q.n();
    let ar2 = build_coxeter(&q.reversed());
    let (c0, s0) = ar.vertices().next().expect("quivers are non-empty");
    let d0 = match ar2.phi_inv(s0) {
        Ok(d) => d,
        Err(_) => return ck(name, false, format!("{s0} missing after reversal")),
    };
    let offset = d0.p + c0.p;
    for (c, s) in ar.vertices() {
        match ar2.phi_inv(s) {
            Ok(d) if d.i == n + 1 - c.i && d.p == offset - c.p => {}
            _ => return ck(name, false, format!("{s} does not reflect")),
        }
    }
    pass(name)
}

/// The two readings of one quiver differ only by swaps of far-apart
/// letters.
fn c_commutation(_q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "commutation_class";
    let l = reading(ar, ReadingStyle::L);
    let u = reading(ar, ReadingStyle::U);
    if commutation_equivalent(&l, &u) {
        pass(name)
    } else {
        ck(name, false, "readings fall in different classes".to_string())
    }
}

/// Both reindexing conventions must yield permutations.
fn c_chi(q: &DynkinQuiverA, ar: &ARQuiver) -> CheckReport {
    let name = "chi_permutations";
    let n = q.n();
    for conv in [ChiConvention::WorkedExample, ChiConvention::PrintedDefinition] {
        let (it, jt) = chi_reindex(ar, conv);
        for t in [&it, &jt] {
            let mut sorted = t.clone();
            sorted.sort_unstable();
            if sorted != (1..=n).collect::<Vec<_>>() {
                return ck(name, false, format!("{conv:?} tuple {t:?} is not a permutation"));
            }
        }
    }
    pass(name)
}

/// Runs every check against a supplied quiver, enabling checks on
/// deliberately corrupted data.
pub fn verify_quiver_with(q: &DynkinQuiverA, ar: &ARQuiver) -> Vec<CheckReport> {
    vec![
        c_builders(q, ar),
        c_vertex_census(q, ar),
        c_row_structure(q, ar),
        c_arrows(q, ar),
        c_mesh_additivity(q, ar),
        c_sectional(q, ar),
        c_boundary_rows(q, ar),
        c_readings(q, ar),
        c_minimal_pairs(q, ar),
        c_ray_theorem(q, ar),
        c_pair_rows(q, ar),
        c_dorey(q, ar),
        c_ray_partition(q, ar),
        c_qj(q, ar),
        c_length_geometry(q, ar),
        c_twisted(q, ar),
        c_shift(q, ar),
        c_reversal(q, ar),
        c_commutation(q, ar),
        c_chi(q, ar),
    ]
}

/// Builds the quiver and runs every check.
pub fn verify_quiver(q: &DynkinQuiverA) -> Vec<CheckReport> {
    let ar = build_coxeter(q);
    verify_quiver_with(q, &ar)
}

/// All `2^(n-1)` orientation strings of rank `n`.
pub fn all_orientations(n: usize) -> Vec<String> {
    let e = n - 1;
    (0..1usize << e)
        .map(|bits| (0..e).map(|k| if bits >> k & 1 == 0 { '>' } else { '<' }).collect())
        .collect()
}

/// Runs the whole battery over every orientation of every rank up to
/// `max_rank`, aggregating each check across quivers.
pub fn verify_suite(max_rank: usize) -> Result<VerificationReport, OracleError> {
    if !(1..=9).contains(&max_rank) {
        return Err(OracleError::BadRank(max_rank));
    }
    let mut checks: Vec<CheckReport> = Vec::new();
    let mut quivers = 0;
    for n in 1..=max_rank {
        for orient in all_orientations(n) {
            let q = parse_quiver(n, &orient, 0).expect("generated orientations are valid");
            let reports = verify_quiver(&q);
            if checks.is_empty() {
                checks = reports
                    .iter()
                    .map(|r| CheckReport { name: r.name.clone(), passed: true, details: String::new() })
                    .collect();
            }
            for (agg, r) in checks.iter_mut().zip(&reports) {
                if !r.passed && agg.passed {
                    agg.passed = false;
                    agg.details = format!("n={n} Q=\"{orient}\": {}", r.details);
                }
            }
            quivers += 1;
        }
    }
    for agg in &mut checks {
        if agg.passed {
            agg.details = format!("{quivers} quivers");
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerificationReport { max_rank, quivers, checks, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arquiver::ARQuiver;

    fn seg(a: usize, b: usize) -> Segment {
        Segment::new(a, b)
    }

    #[test]
    fn roots_enumerate_once_each() {
        let roots = enumerate_roots(5);
        assert_eq!(roots.len(), 15);
        let set: BTreeSet<Segment> = roots.into_iter().collect();
        assert_eq!(set.len(), 15);
    }

    #[test]
    fn brute_pairs_match_a_known_case() {
        let ar = build_coxeter(&parse_quiver(5, "><>>", 0).unwrap());
        let u = order_from_word(&reading(&ar, ReadingStyle::U)).unwrap();
        assert_eq!(
            brute_minimal_pairs(&u, seg(1, 5)),
            vec![
                (seg(3, 5), seg(1, 2)),
                (seg(1, 1), seg(2, 5)),
                (seg(1, 3), seg(4, 5)),
                (seg(1, 4), seg(5, 5)),
            ]
        );
        assert_eq!(brute_minimal_pairs(&u, seg(2, 2)), vec![]);
    }

    #[test]
    fn suite_passes_on_small_ranks() {
        let report = verify_suite(4).unwrap();
        assert!(report.passed, "{report}");
        assert_eq!(report.quivers, 1 + 2 + 4 + 8);
        assert_eq!(report.checks.len(), 20);
    }

    #[test]
    fn suite_rejects_out_of_range_ranks() {
        assert!(matches!(verify_suite(0), Err(OracleError::BadRank(0))));
        assert!(matches!(verify_suite(10), Err(OracleError::BadRank(10))));
    }

    #[test]
    fn report_renders_both_ways() {
        let report = verify_suite(2).unwrap();
        let text = report.to_string();
        assert!(text.contains("builders_agree"));
        assert!(text.ends_with("overall: pass"));
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["checks"].as_array().unwrap().len(), 20);
        assert_eq!(json["passed"], serde_json::Value::Bool(true));
    }

    /// Corrupting the quiver must trip the checks that look at the damaged
    /// aspect.
    #[test]
    fn fault_injection_is_detected() {
        let q = parse_quiver(5, "><>>", 0).unwrap();
        let good = build_coxeter(&q);
        let vertices: Vec<_> = good.vertices().collect();
        let arrows: Vec<_> = good.arrows().collect();

        // Drop one arrow.
        let mut fewer = arrows.clone();
        fewer.remove(0);
        let bad = ARQuiver::from_parts(q.clone(), vertices.clone(), fewer).unwrap();
        let by_name = |rs: &[CheckReport], n: &str| {
            rs.iter().find(|r| r.name == n).expect("check exists").passed
        };
        let reports = verify_quiver_with(&q, &bad);
        assert!(!by_name(&reports, "builders_agree"));
        assert!(!by_name(&reports, "arrows_mesh"));

        // Swap the roots of two vertices.
        let mut swapped = vertices.clone();
        let i = swapped.iter().position(|(c, _)| *c == RepCoord::new(1, 0)).unwrap();
        let j = swapped.iter().position(|(c, _)| *c == RepCoord::new(3, 0)).unwrap();
        let (si, sj) = (swapped[i].1, swapped[j].1);
        swapped[i].1 = sj;
        swapped[j].1 = si;
        let bad = ARQuiver::from_parts(q.clone(), swapped, arrows).unwrap();
        let reports = verify_quiver_with(&q, &bad);
        assert!(!by_name(&reports, "builders_agree"));
        assert!(!by_name(&reports, "row_structure"));
        assert!(!by_name(&reports, "sectional_paths"));
    }
}
