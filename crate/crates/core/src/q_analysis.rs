//! Cubical g-vectors of `Q(k, d, n)`.
//!
//! `Q` has `2^n` vertices and is never built explicitly. Its vertex
//! figures are lexicographic diamonds `D_a`, so the short cubical g-vector
//! is a weighted sum of diamond g-vectors (one weight per diamond index),
//! and the long vector follows from the short one.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::constructions::{diamond_boundary, diamond_g_closed, DiamondSpec};
use crate::error::{invalid, Result};
use crate::vector_calculus::{binomial, gc_from_gsc, mchoose, pow2, CubicalG, ShortCubicalG};

/// Parameters of `Q(k, d, n)`: `k >= 1`, `n >= d >= 2k + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QSpec {
    k: usize,
    d: usize,
    n: usize,
}

impl QSpec {
    pub fn new(k: usize, d: usize, n: usize) -> Result<Self> {
        if k < 1 || d < 2 * k + 2 || n < d {
            return Err(invalid(format!(
                "Q(k,d,n) needs k >= 1 and n >= d >= 2k+2, got k={k}, d={d}, n={n}"
            )));
        }
        Ok(QSpec { k, d, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct diamonds, `n - d + 1`.
    pub fn diamond_count(&self) -> usize {
        self.n - self.d + 1
    }
}

/// How many vertices of `Q` have vertex figure `D_a`, per `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexFigureHistogram {
    pub n: usize,
    pub d: usize,
    #[serde(serialize_with = "crate::exact_json::int_map")]
    pub counts: BTreeMap<usize, BigInt>,
}

impl VertexFigureHistogram {
    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }
}

fn check_nd(n: usize, d: usize) -> Result<()> {
    if d < 1 || n < d {
        return Err(invalid(format!("need n >= d >= 1, got n={n}, d={d}")));
    }
    Ok(())
}

/// Diamond index of the vertex with sign vector `plus[i] = (σ_{i+1} = +)`:
/// `a = min({i : σ_i = +} ∪ {n-d+1})`.
pub fn diamond_index(plus: &[bool], d: usize) -> usize {
    let cap = plus.len() - d + 1;
    plus.iter()
        .position(|&p| p)
        .map_or(cap, |i| (i + 1).min(cap))
}

/// Closed count: `2^{n-a}` for `a <= n-d` and `2^d` for `a = n-d+1`.
pub fn vertex_figure_histogram(n: usize, d: usize) -> Result<VertexFigureHistogram> {
    check_nd(n, d)?;
    let mut counts = BTreeMap::new();
    for a in 1..=n - d {
        counts.insert(a, pow2(n - a));
    }
    counts.insert(n - d + 1, pow2(d));
    Ok(VertexFigureHistogram { n, d, counts })
}

/// Same histogram by scanning all `2^n` sign vectors (`n <= 20`).
pub fn vertex_figure_histogram_enumerated(n: usize, d: usize) -> Result<VertexFigureHistogram> {
    check_nd(n, d)?;
    if n > 20 {
        return Err(invalid(format!(
            "enumerating 2^{n} sign vectors is too large"
        )));
    }
    let mut raw: BTreeMap<usize, u64> = BTreeMap::new();
    let mut plus = vec![false; n];
    for bits in 0u64..1 << n {
        for (i, p) in plus.iter_mut().enumerate() {
            *p = bits >> i & 1 == 1;
        }
        *raw.entry(diamond_index(&plus, d)).or_default() += 1;
    }
    Ok(VertexFigureHistogram {
        n,
        d,
        counts: raw.into_iter().map(|(a, c)| (a, BigInt::from(c))).collect(),
    })
}

/// `g^sc(Q)` as the histogram-weighted sum of closed-form diamond g-vectors.
pub fn gsc_q_hetyei(spec: QSpec) -> ShortCubicalG {
    let hist = vertex_figure_histogram(spec.n, spec.d).expect("QSpec guarantees n >= d");
    let len = (spec.d - 1) / 2 + 1;
    let mut entries = vec![BigInt::zero(); len];
    for (&a, count) in &hist.counts {
        let g = diamond_g_closed(spec.k, spec.d, spec.n, a).expect("a in diamond range");
        for (e, gi) in entries.iter_mut().zip(g.entries()) {
            *e += count * gi;
        }
    }
    ShortCubicalG::new(spec.d, entries).expect("length matches d")
}

/// `g^sc(Q)` in closed form: `2^n ((n-d, i))` for `i <= k`,
/// `sum_{a=1}^{n-d} 2^{n-a} ((n-d-a+1, k))` at `i = k+1`, zero above.
pub fn gsc_q_closed(spec: QSpec) -> ShortCubicalG {
    let QSpec { k, d, n } = spec;
    let m = (n - d) as u64;
    let entries = (0..=(d - 1) / 2)
        .map(|i| {
            if i <= k {
                pow2(n) * mchoose(m, i as u64)
            } else if i == k + 1 {
                (1..=n - d)
                    .map(|a| pow2(n - a) * mchoose((n - d - a + 1) as u64, k as u64))
                    .sum()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    ShortCubicalG::new(d, entries).expect("length matches d")
}

/// `g^sc(Q)` from explicitly built diamond boundaries, weighted by the
/// histogram. Cost grows quickly; intended for `n <= 12`.
pub fn gsc_q_explicit(spec: QSpec) -> Result<ShortCubicalG> {
    let hist = vertex_figure_histogram(spec.n, spec.d)?;
    let len = (spec.d - 1) / 2 + 1;
    let mut entries = vec![BigInt::zero(); len];
    for (&a, count) in &hist.counts {
        let g = diamond_boundary(DiamondSpec::new(spec.k, spec.d, spec.n, a)?)?.g_vector();
        for (e, gi) in entries.iter_mut().zip(g.entries()) {
            *e += count * gi;
        }
    }
    ShortCubicalG::new(spec.d, entries)
}

/// `g^c(Q)` from the closed-form short vector through the alternating-sum
/// inversion.
pub fn gc_q_from_short(spec: QSpec) -> CubicalG {
    gc_from_gsc(&gsc_q_closed(spec), spec.d).expect("dimensions agree")
}

/// `g^c(Q)` in closed form: for `1 <= i <= k+1`,
/// `2^n sum_{j=1}^{i} (-1)^{j-1} ((n-d, i-j)) + (-1)^i 2^d`; zero above.
pub fn gc_q_closed(spec: QSpec) -> CubicalG {
    let QSpec { k, d, n } = spec;
    let m = (n - d) as u64;
    let mut entries = vec![pow2(d - 1)];
    for i in 1..=d / 2 {
        if i > k + 1 {
            entries.push(BigInt::zero());
            continue;
        }
        let alt: BigInt = (1..=i)
            .map(|j| {
                let t = mchoose(m, (i - j) as u64);
                if j % 2 == 1 {
                    t
                } else {
                    -t
                }
            })
            .sum();
        let tail = if i % 2 == 0 { pow2(d) } else { -pow2(d) };
        entries.push(pow2(n) * alt + tail);
    }
    CubicalG::new(d, entries).expect("length matches d")
}

/// Both routes for `g^sc` and `g^c`, plus the explicit-diamond route when
/// requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QReport {
    pub spec: QSpec,
    pub gsc_hetyei: ShortCubicalG,
    pub gsc_closed: ShortCubicalG,
    pub gsc_explicit: Option<ShortCubicalG>,
    pub gc_from_short: CubicalG,
    pub gc_closed: CubicalG,
}

impl QReport {
    pub fn routes_agree(&self) -> bool {
        self.gsc_hetyei == self.gsc_closed
            && self
                .gsc_explicit
                .as_ref()
                .is_none_or(|g| *g == self.gsc_closed)
            && self.gc_from_short == self.gc_closed
    }

    /// `g^c_{k+2}`, when it is a stored coordinate.
    pub fn gc_k_plus_2(&self) -> Option<BigInt> {
        let i = self.spec.k + 2;
        (i <= self.spec.d / 2).then(|| self.gc_closed.get(i))
    }
}

pub fn q_report(spec: QSpec, explicit: bool) -> Result<QReport> {
    Ok(QReport {
        spec,
        gsc_hetyei: gsc_q_hetyei(spec),
        gsc_closed: gsc_q_closed(spec),
        gsc_explicit: if explicit {
            Some(gsc_q_explicit(spec)?)
        } else {
            None
        },
        gc_from_short: gc_q_from_short(spec),
        gc_closed: gc_q_closed(spec),
    })
}

/// Both sides of
/// `sum_{a=1}^{m} 2^{m-a} ((m-a+1, k)) = (-1)^{k+1} + 2^m sum_{j=0}^{k} (-1)^j ((m, k-j))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialIdentity {
    pub k: usize,
    pub m: usize,
    #[serde(serialize_with = "crate::exact_json::int")]
    pub left: BigInt,
    #[serde(serialize_with = "crate::exact_json::int")]
    pub right: BigInt,
    pub equal: bool,
}

pub fn binomial_identity_check(k: usize, m: usize) -> Result<BinomialIdentity> {
    if k < 1 {
        return Err(invalid("binomial identity needs k >= 1"));
    }
    let left: BigInt = (1..=m)
        .map(|a| pow2(m - a) * mchoose((m - a + 1) as u64, k as u64))
        .sum();
    let alt: BigInt = (0..=k)
        .map(|j| {
            let t = mchoose(m as u64, (k - j) as u64);
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    let lead = if k % 2 == 1 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    };
    let right = lead + pow2(m) * alt;
    let equal = left == right;
    Ok(BinomialIdentity {
        k,
        m,
        left,
        right,
        equal,
    })
}

/// One row of the ray-convergence table for `Q(k, d, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayRow {
    pub spec: QSpec,
    /// `(g^c_1, ..., g^c_{floor(d/2)})`.
    pub gc: Vec<BigInt>,
    /// `g^c_i / (2^n ((n-d, k)))`, or `None` when the normalizer vanishes.
    pub normalized: Option<Vec<BigRational>>,
    /// 1-based index of the largest coordinate; `None` if no coordinate is positive.
    pub dominant_index: Option<usize>,
}

/// Normalized `g^c(Q(k, d, n))` for each `n` in `n_values`.
pub fn ray_convergence_report(k: usize, d: usize, n_values: &[usize]) -> Result<Vec<RayRow>> {
    n_values
        .iter()
        .map(|&n| {
            let spec = QSpec::new(k, d, n)?;
            let gc = gc_q_closed(spec).coordinates().to_vec();
            let norm = pow2(n) * mchoose((n - d) as u64, k as u64);
            let normalized = (!norm.is_zero()).then(|| {
                gc.iter()
                    .map(|g| BigRational::new(g.clone(), norm.clone()))
                    .collect()
            });
            let dominant_index = gc
                .iter()
                .enumerate()
                .filter(|(_, g)| g.is_positive())
                .fold(None::<(usize, &BigInt)>, |best, (i, g)| match best {
                    Some((_, b)) if b >= g => best,
                    _ => Some((i, g)),
                })
                .map(|(i, _)| i + 1);
            Ok(RayRow {
                spec,
                gc,
                normalized,
                dominant_index,
            })
        })
        .collect()
}

/// `g^c_i(C^d_k) = sum_{j=1}^{k} 2^{d-j} C(j-1, i-1)` for the `k`-elementary
/// cubical polytopes, `1 <= k <= floor(d/2)`.
pub fn blind_blind_gc(d: usize, k: usize) -> Result<CubicalG> {
    if k < 1 || k > d / 2 {
        return Err(invalid(format!(
            "need 1 <= k <= floor(d/2), got d={d}, k={k}"
        )));
    }
    let mut entries = vec![pow2(d - 1)];
    for i in 1..=d / 2 {
        entries.push(
            (1..=k)
                .map(|j| pow2(d - j) * binomial((j - 1) as u64, (i - 1) as u64))
                .sum(),
        );
    }
    CubicalG::new(d, entries)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClbcViolation {
    pub name: String,
    #[serde(serialize_with = "crate::exact_json::int")]
    pub g2: BigInt,
}

/// Result of checking `g^c_2 >= 0` over a family of cubical g-vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClbcReport {
    pub checked: usize,
    /// Vectors with `d < 4`, which have no `g^c_2` coordinate.
    pub skipped: usize,
    pub violations: Vec<ClbcViolation>,
}

impl ClbcReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn clbc_scan<I>(family: I) -> ClbcReport
where
    I: IntoIterator<Item = (String, CubicalG)>,
{
    let mut report = ClbcReport::default();
    for (name, gc) in family {
        if gc.d() < 4 {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        let g2 = gc.get(2);
        if g2.is_negative() {
            report.violations.push(ClbcViolation { name, g2 });
        }
    }
    report
}

/// `g^c(Q)` for every `QSpec` with `k <= max_k`, `d <= max_d`, `n <= max_n`,
/// labelled `Q(k,d,n)`.
pub fn q_family(max_k: usize, max_d: usize, max_n: usize) -> Vec<(String, CubicalG)> {
    q_grid(max_k, max_d, max_n)
        .into_iter()
        .map(|s| (format!("Q({},{},{})", s.k, s.d, s.n), gc_q_closed(s)))
        .collect()
}

/// `g^c(C^d_k)` for `d <= max_d` and all admissible `k`.
pub fn blind_blind_family(max_d: usize) -> Vec<(String, CubicalG)> {
    (2..=max_d)
        .flat_map(|d| (1..=d / 2).map(move |k| (d, k)))
        .map(|(d, k)| {
            (
                format!("C^{d}_{k}"),
                blind_blind_gc(d, k).expect("k in range"),
            )
        })
        .collect()
}

/// All valid `QSpec`s within the bounds, sorted.
pub fn q_grid(max_k: usize, max_d: usize, max_n: usize) -> Vec<QSpec> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for d in 2 * k + 2..=max_d {
            for n in d..=max_n {
                out.push(QSpec { k, d, n });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn histogram_examples() {
        let h = vertex_figure_histogram(9, 6).unwrap();
        let expect: BTreeMap<usize, BigInt> = [(1, 256), (2, 128), (3, 64), (4, 64)]
            .into_iter()
            .map(|(a, c)| (a, BigInt::from(c)))
            .collect();
        assert_eq!(h.counts, expect);
        assert_eq!(vertex_figure_histogram_enumerated(9, 6).unwrap(), h);
        let h = vertex_figure_histogram(6, 6).unwrap();
        assert_eq!(h.counts.len(), 1);
        assert_eq!(h.counts[&1], BigInt::from(64));
        assert!(vertex_figure_histogram(5, 6).is_err());
    }

    #[test]
    fn gsc_examples() {
        let s = QSpec::new(1, 6, 9).unwrap();
        assert_eq!(ints(gsc_q_closed(s).entries()), vec![512, 1536, 1088]);
        assert_eq!(gsc_q_hetyei(s), gsc_q_closed(s));
        let s = QSpec::new(1, 6, 6).unwrap();
        assert_eq!(ints(gsc_q_closed(s).entries()), vec![64, 0, 0]);
        let s = QSpec::new(2, 6, 9).unwrap();
        assert_eq!(ints(gsc_q_closed(s).entries()), vec![512, 1536, 3072]);
    }

    #[test]
    fn explicit_route_small() {
        let s = QSpec::new(1, 6, 9).unwrap();
        assert_eq!(gsc_q_explicit(s).unwrap(), gsc_q_closed(s));
    }

    #[test]
    fn gc_examples() {
        let s = QSpec::new(1, 6, 9).unwrap();
        assert_eq!(ints(gc_q_closed(s).entries()), vec![32, 448, 1088, 0]);
        assert_eq!(gc_q_from_short(s), gc_q_closed(s));
        let s = QSpec::new(1, 6, 6).unwrap();
        assert_eq!(ints(gc_q_closed(s).entries()), vec![32, 0, 0, 0]);
        let s = QSpec::new(1, 8, 10).unwrap();
        assert_eq!(ints(gc_q_closed(s).entries()), vec![128, 768, 1280, 0, 0]);
        assert_eq!(gc_q_from_short(s), gc_q_closed(s));
    }

    #[test]
    fn qspec_errors() {
        assert!(QSpec::new(0, 6, 9).is_err());
        assert!(QSpec::new(2, 5, 9).is_err());
        assert!(QSpec::new(1, 6, 5).is_err());
    }

    #[test]
    fn binomial_identity_examples() {
        let r = binomial_identity_check(1, 0).unwrap();
        assert!(r.equal && r.left.is_zero() && r.right.is_zero());
        let r = binomial_identity_check(1, 3).unwrap();
        assert_eq!(
            (r.left.clone(), r.right.clone()),
            (BigInt::from(17), BigInt::from(17))
        );
        assert!(binomial_identity_check(3, 5).unwrap().equal);
        assert!(binomial_identity_check(0, 5).is_err());
    }

    #[test]
    fn ray_rows() {
        let rows = ray_convergence_report(1, 6, &[6, 30]).unwrap();
        assert!(rows[0].normalized.is_none());
        assert_eq!(rows[0].dominant_index, None);
        let norm = rows[1].normalized.as_ref().unwrap();
        // g^c_1 / (2^30 * 24) = (2^30 - 2^6) / (2^30 * 24)
        let expect = BigRational::new(pow2(30) - pow2(6), pow2(30) * BigInt::from(24));
        assert_eq!(norm[0], expect);
        assert_eq!(rows[1].dominant_index, Some(2));
        let rows = ray_convergence_report(2, 8, &[40]).unwrap();
        assert_eq!(rows[0].dominant_index, Some(3));
    }

    #[test]
    fn blind_blind_examples() {
        assert_eq!(
            ints(blind_blind_gc(6, 2).unwrap().coordinates()),
            vec![48, 16, 0]
        );
        assert_eq!(
            ints(blind_blind_gc(4, 1).unwrap().coordinates()),
            vec![8, 0]
        );
        assert_eq!(blind_blind_gc(12, 5).unwrap().get(5), BigInt::from(128));
        assert!(blind_blind_gc(6, 4).is_err());
        assert!(blind_blind_gc(6, 0).is_err());
    }

    #[test]
    fn clbc_detector() {
        let bad = CubicalG::new(4, vec![8.into(), 3.into(), (-1).into()]).unwrap();
        let r = clbc_scan([("bad".to_string(), bad)]);
        assert!(!r.holds());
        assert_eq!(r.violations[0].g2, BigInt::from(-1));
        let sq = CubicalG::new(3, vec![4.into(), 0.into()]).unwrap();
        let r = clbc_scan([("cube".to_string(), sq)]);
        assert_eq!((r.checked, r.skipped), (0, 1));
        assert!(clbc_scan(q_family(3, 10, 14)).holds());
        assert!(clbc_scan(blind_blind_family(12)).holds());
    }
}
