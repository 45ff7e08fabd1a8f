//! Exact transforms between face-count vectors.
//!
//! Simplicial side: `f -> h -> g`. Cubical side: `f -> h^sc -> h^c -> g^c`
//! together with the short vector `g^sc` and the inverse map `g^sc -> g^c`.
//! Every vector carries the dimension it was computed for, and every
//! transform rejects inputs whose length disagrees with that dimension.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Multichoose `((m, i)) = C(m + i - 1, i)`: the number of size-`i`
/// multisets drawn from `m` elements.
pub fn mchoose(m: u64, i: u64) -> BigInt {
    if i == 0 {
        return BigInt::one();
    }
    if m == 0 {
        return BigInt::zero();
    }
    binomial(m + i - 1, i)
}

/// Signed binomial used inside the alternating sums: `C(n, k)` with
/// `C(n, k) = 0` for `k < 0` or `k > n`, `n >= 0`.
fn binom_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

fn sign(exp: usize) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Face counts `(f_{-1}, f_0, ..., f_dim)` of a complex.
///
/// The entries double as the coefficients of the f-polynomial
/// `f(K, t) = sum_i f_{i-1} t^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector {
    #[serde(serialize_with = "crate::exact_json::ints")]
    counts: Vec<BigInt>,
}

impl FVector {
    /// Builds from `(f_{-1}, f_0, ..., f_dim)`.
    pub fn new(counts: Vec<BigInt>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidParameter("empty f-vector".into()));
        }
        if !counts[0].is_one() {
            return Err(Error::InvalidParameter(format!(
                "f_{{-1}} must be 1, found {}",
                counts[0]
            )));
        }
        if counts.iter().any(|c| c.is_negative()) {
            return Err(Error::InvalidParameter("negative face count".into()));
        }
        Ok(FVector { counts })
    }

    /// Builds from `(f_0, ..., f_dim)`, inserting `f_{-1} = 1`.
    pub fn from_face_counts<I, T>(counts: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut all = vec![BigInt::one()];
        all.extend(counts.into_iter().map(Into::into));
        Self::new(all)
    }

    /// Dimension of the complex (`-1` for the complex `{∅}`).
    pub fn dim(&self) -> isize {
        self.counts.len() as isize - 2
    }

    /// `f_i` for `-1 <= i <= dim`; zero outside that range.
    pub fn get(&self, i: isize) -> BigInt {
        usize::try_from(i + 1)
            .ok()
            .and_then(|idx| self.counts.get(idx).cloned())
            .unwrap_or_default()
    }

    /// `(f_{-1}, ..., f_dim)`, i.e. the f-polynomial coefficients.
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `sum_{i >= 0} (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.counts
            .iter()
            .skip(1)
            .enumerate()
            .map(|(i, c)| sign(i) * c)
            .sum()
    }
}

/// Simplicial h-vector `(h_0, ..., h_D)` of a `(D-1)`-complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HVector {
    #[serde(serialize_with = "crate::exact_json::ints")]
    entries: Vec<BigInt>,
}

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("empty h-vector".into()));
        }
        Ok(HVector { entries })
    }

    /// The `D` the vector was computed for.
    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

/// Simplicial g-vector `(g_0, ..., g_{floor(D/2)})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GVector {
    dim: usize,
    #[serde(serialize_with = "crate::exact_json::ints")]
    entries: Vec<BigInt>,
}

impl GVector {
    /// `dim` is the `D` of the underlying h-vector; `entries` must have
    /// length `floor(D/2) + 1`.
    pub fn new(dim: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != dim / 2 + 1 {
            return Err(Error::DimensionMismatch(format!(
                "g-vector for D={dim} needs {} entries, got {}",
                dim / 2 + 1,
                entries.len()
            )));
        }
        Ok(GVector { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `g_i`, zero past the stored range.
    pub fn get(&self, i: usize) -> BigInt {
        self.entries.get(i).cloned().unwrap_or_default()
    }
}

/// Short cubical h-vector `(h^sc_0, ..., h^sc_{d-1})` of a cubical
/// `d`-polytope boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShortCubicalH {
    d: usize,
    #[serde(serialize_with = "crate::exact_json::ints")]
    entries: Vec<BigInt>,
}

impl ShortCubicalH {
    pub fn new(d: usize, entries: Vec<BigInt>) -> Result<Self> {
        if d == 0 || entries.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "h^sc for d={d} needs {d} entries, got {}",
                entries.len()
            )));
        }
        Ok(ShortCubicalH { d, entries })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

/// Long cubical h-vector `(h^c_0, ..., h^c_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicalH {
    d: usize,
    #[serde(serialize_with = "crate::exact_json::ints")]
    entries: Vec<BigInt>,
}

impl CubicalH {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

/// Short cubical g-vector `(g^sc_0, ..., g^sc_{floor((d-1)/2)})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShortCubicalG {
    d: usize,
    #[serde(serialize_with = "crate::exact_json::ints")]
    entries: Vec<BigInt>,
}

impl ShortCubicalG {
    pub fn new(d: usize, entries: Vec<BigInt>) -> Result<Self> {
        if d == 0 || entries.len() != (d - 1) / 2 + 1 {
            return Err(Error::DimensionMismatch(format!(
                "g^sc for d={d} needs {} entries, got {}",
                d.saturating_sub(1) / 2 + 1,
                entries.len()
            )));
        }
        Ok(ShortCubicalG { d, entries })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

/// Long cubical g-vector `(g^c_0, ..., g^c_{floor(d/2)})`, with
/// `g^c_0 = 2^{d-1}` stored explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicalG {
    d: usize,
    #[serde(serialize_with = "crate::exact_json::ints")]
    entries: Vec<BigInt>,
}

impl CubicalG {
    pub fn new(d: usize, entries: Vec<BigInt>) -> Result<Self> {
        if d == 0 || entries.len() != d / 2 + 1 {
            return Err(Error::DimensionMismatch(format!(
                "g^c for d={d} needs {} entries, got {}",
                d / 2 + 1,
                entries.len()
            )));
        }
        Ok(CubicalG { d, entries })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `g^c_i` with the 1-based coordinate convention of reports;
    /// `get(0)` is the constant `2^{d-1}`. Zero past the stored range.
    pub fn get(&self, i: usize) -> BigInt {
        self.entries.get(i).cloned().unwrap_or_default()
    }

    /// `(g^c_1, ..., g^c_{floor(d/2)})`.
    pub fn coordinates(&self) -> &[BigInt] {
        &self.entries[1..]
    }
}

/// `h(K,t) = (1-t)^D f(K, t/(1-t))`, expanded as
/// `h_i = sum_{j<=i} (-1)^{i-j} C(D-j, i-j) f_{j-1}`.
pub fn f_to_h(f: &FVector, dim: usize) -> Result<HVector> {
    if f.dim() != dim as isize - 1 {
        return Err(Error::DimensionMismatch(format!(
            "f-vector of a {}-complex cannot give h for D={dim}",
            f.dim()
        )));
    }
    let d = dim as i64;
    let entries = (0..=dim)
        .map(|i| {
            (0..=i)
                .map(|j| sign(i - j) * binom_i(d - j as i64, (i - j) as i64) * &f.counts[j])
                .sum()
        })
        .collect();
    HVector::new(entries)
}

/// `g_0 = h_0`, `g_i = h_i - h_{i-1}` for `1 <= i <= floor(D/2)`.
pub fn h_to_g(h: &HVector) -> GVector {
    let dim = h.dim();
    let e = &h.entries;
    let mut entries = vec![e[0].clone()];
    entries.extend((1..=dim / 2).map(|i| &e[i] - &e[i - 1]));
    GVector { dim, entries }
}

/// Rebuilds the full h-vector from a g-vector, assuming `h_i = h_{D-i}`.
pub fn g_to_h(g: &GVector) -> HVector {
    let dim = g.dim;
    let mut entries = vec![BigInt::zero(); dim + 1];
    let mut acc = BigInt::zero();
    for i in 0..=dim / 2 {
        acc += &g.entries[i];
        entries[i] = acc.clone();
        entries[dim - i] = acc.clone();
    }
    HVector { entries }
}

/// Simplicial Dehn-Sommerville: `h_i = h_{D-i}`.
pub fn check_simplicial_ds(h: &HVector) -> bool {
    let e = &h.entries;
    e.iter().eq(e.iter().rev())
}

/// `h^sc(Q,t) = sum_{j=0}^{d-1} f_j (2t)^j (1-t)^{d-1-j}` for a cubical
/// `(d-1)`-complex; the `f_{-1}` entry does not enter the sum.
pub fn f_to_hsc(f: &FVector, d: usize) -> Result<ShortCubicalH> {
    if d == 0 || f.dim() != d as isize - 1 {
        return Err(Error::DimensionMismatch(format!(
            "f-vector of a {}-complex cannot give h^sc for d={d}",
            f.dim()
        )));
    }
    let top = d as i64 - 1;
    let entries = (0..d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    sign(i - j)
                        * binom_i(top - j as i64, (i - j) as i64)
                        * pow2(j)
                        * &f.counts[j + 1]
                })
                .sum()
        })
        .collect();
    ShortCubicalH::new(d, entries)
}

/// `h^c_0 = 2^{d-1}`, `h^c_{i+1} = h^sc_i - h^c_i`.
pub fn hsc_to_hc(hsc: &ShortCubicalH, d: usize) -> Result<CubicalH> {
    if hsc.d != d {
        return Err(Error::DimensionMismatch(format!(
            "h^sc was computed for d={}, asked for d={d}",
            hsc.d
        )));
    }
    let mut entries = Vec::with_capacity(d + 1);
    entries.push(pow2(d - 1));
    for i in 0..d {
        let next = &hsc.entries[i] - &entries[i];
        entries.push(next);
    }
    Ok(CubicalH { d, entries })
}

/// `g^c_0 = h^c_0`, `g^c_i = h^c_i - h^c_{i-1}` for `1 <= i <= floor(d/2)`.
pub fn hc_to_gc(hc: &CubicalH) -> CubicalG {
    let d = hc.d;
    let e = &hc.entries;
    let mut entries = vec![e[0].clone()];
    entries.extend((1..=d / 2).map(|i| &e[i] - &e[i - 1]));
    CubicalG { d, entries }
}

/// `g^sc_0 = h^sc_0`, `g^sc_i = h^sc_i - h^sc_{i-1}` for
/// `1 <= i <= floor((d-1)/2)`.
pub fn hsc_to_gsc(hsc: &ShortCubicalH) -> ShortCubicalG {
    let d = hsc.d;
    let e = &hsc.entries;
    let mut entries = vec![e[0].clone()];
    entries.extend((1..=(d - 1) / 2).map(|i| &e[i] - &e[i - 1]));
    ShortCubicalG { d, entries }
}

/// Long from short cubical g-vector:
/// `g^c_i = sum_{j=1}^{i} (-1)^{j-1} g^sc_{i-j} + (-1)^i 2^d`.
pub fn gc_from_gsc(gsc: &ShortCubicalG, d: usize) -> Result<CubicalG> {
    if gsc.d != d {
        return Err(Error::DimensionMismatch(format!(
            "g^sc was computed for d={}, asked for d={d}",
            gsc.d
        )));
    }
    let mut entries = vec![pow2(d - 1)];
    for i in 1..=d / 2 {
        let mut acc: BigInt = (1..=i).map(|j| sign(j - 1) * &gsc.entries[i - j]).sum();
        acc += sign(i) * pow2(d);
        entries.push(acc);
    }
    CubicalG::new(d, entries)
}

/// Inverse of [`gc_from_gsc`]: `g^sc_0 = 2 g^c_0 + g^c_1` and
/// `g^sc_i = g^c_i + g^c_{i+1}`. For odd `d` the top entry needs
/// `g^c_{floor(d/2)+1}`, which vanishes by `h^c_i = h^c_{d-i}`.
pub fn gsc_from_gc(gc: &CubicalG) -> ShortCubicalG {
    let d = gc.d;
    let mut entries = vec![BigInt::from(2) * gc.get(0) + gc.get(1)];
    entries.extend((1..=(d - 1) / 2).map(|i| gc.get(i) + gc.get(i + 1)));
    ShortCubicalG { d, entries }
}

/// Rebuilds the full long cubical h-vector from `g^c` via `h^c_i = h^c_{d-i}`.
pub fn gc_to_hc(gc: &CubicalG) -> CubicalH {
    let d = gc.d;
    let mut entries = vec![BigInt::zero(); d + 1];
    let mut acc = BigInt::zero();
    for i in 0..=d / 2 {
        acc += &gc.entries[i];
        entries[i] = acc.clone();
        entries[d - i] = acc.clone();
    }
    CubicalH { d, entries }
}

/// Cubical Dehn-Sommerville: `h^c_i = h^c_{d-i}`.
pub fn check_cubical_ds(hc: &CubicalH) -> bool {
    let e = &hc.entries;
    e.iter().eq(e.iter().rev())
}
