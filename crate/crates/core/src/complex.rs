//! Finite abstract simplicial complexes given by their facets.
//!
//! Vertices carry a [`VertexLabel`]; internally each face is a `u64`
//! bitmask over the sorted vertex list, so a complex holds at most 64
//! vertices. The full face set is computed on first use and cached.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::vector_calculus::{f_to_h, h_to_g, FVector, GVector, HVector};

/// Vertex names used throughout the constructions.
///
/// The derived order is the total order used for serialization:
/// the apex first, then cyclic-polytope vertices, then simplex vertices,
/// then plain vertices of generic complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    /// Apex `p` of a lexicographic diamond.
    Apex,
    /// `v_i` of the cyclic factor (1-based).
    CVertex(u32),
    /// `j`-th vertex of the simplex factor `T` (1-based).
    TVertex(u32),
    /// Vertex of a generic complex.
    Plain(u32),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Apex => write!(f, "p"),
            VertexLabel::CVertex(i) => write!(f, "c{i}"),
            VertexLabel::TVertex(j) => write!(f, "t{j}"),
            VertexLabel::Plain(i) => write!(f, "u{i}"),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "p" {
            return Ok(VertexLabel::Apex);
        }
        let bad = || Error::Parse(format!("bad vertex label {s:?}"));
        let (kind, num) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        // canonical decimal only, so parsing inverts Display
        if num.starts_with('+') || (num.len() > 1 && num.starts_with('0')) {
            return Err(bad());
        }
        let idx: u32 = num.parse().map_err(|_| bad())?;
        match kind {
            "c" => Ok(VertexLabel::CVertex(idx)),
            "t" => Ok(VertexLabel::TVertex(idx)),
            "u" => Ok(VertexLabel::Plain(idx)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A vertex set, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<VertexLabel>);

impl Face {
    pub fn new<I: IntoIterator<Item = VertexLabel>>(labels: I) -> Self {
        let mut v: Vec<_> = labels.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<VertexLabel> for Face {
    fn from_iter<I: IntoIterator<Item = VertexLabel>>(iter: I) -> Self {
        Face::new(iter)
    }
}

/// Iterates over all submasks of `mask`, including `0` and `mask`.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

/// Iterates over all `size`-subsets of the low `n` bits, in increasing
/// numeric order.
pub(crate) fn combinations(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1u128 << n;
    let mut cur: Option<u128> = if size > n {
        None
    } else {
        Some((1u128 << size) - 1)
    };
    std::iter::from_fn(move || {
        let c = cur?;
        if c >= limit || (size == 0 && c != 0) {
            cur = None;
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            // Gosper's hack
            let lowest = c & c.wrapping_neg();
            let ripple = c + lowest;
            Some((((ripple ^ c) >> 2) / lowest) | ripple)
        };
        Some(c as u64)
    })
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn lex_key(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

/// Drops duplicates and non-maximal sets, then sorts lexicographically by
/// index list.
fn maximalize(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| m & k == m) {
            kept.push(m);
        }
    }
    kept.sort_by_cached_key(|&m| lex_key(m));
    kept
}

/// A simplicial complex stored by its maximal faces.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: Vec<VertexLabel>,
    facets: Vec<u64>,
    faces: OnceLock<HashSet<u64>>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("dim", &self.dim())
            .field("facets", &self.facets())
            .finish()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from a list of faces; non-maximal entries are
    /// discarded. The vertex set is the union of the given faces. Pass a
    /// single empty face for the complex `{∅}`.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = VertexLabel>,
    {
        let facets: Vec<Vec<VertexLabel>> = facets
            .into_iter()
            .map(|f| f.into_iter().collect())
            .collect();
        if facets.is_empty() {
            return Err(Error::InvalidParameter(
                "a complex needs at least one face".into(),
            ));
        }
        let vertices: Vec<VertexLabel> = facets
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if vertices.len() > 64 {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let index = |v: &VertexLabel| vertices.binary_search(v).expect("vertex collected above");
        let masks = facets
            .iter()
            .map(|f| f.iter().fold(0u64, |m, v| m | 1 << index(v)))
            .collect();
        Ok(Self::from_masks(vertices, masks))
    }

    fn from_masks(vertices: Vec<VertexLabel>, masks: Vec<u64>) -> Self {
        SimplicialComplex {
            vertices,
            facets: maximalize(masks),
            faces: OnceLock::new(),
        }
    }

    /// The full simplex on `labels`.
    pub fn simplex<I: IntoIterator<Item = VertexLabel>>(labels: I) -> Result<Self> {
        Self::from_facets([labels.into_iter().collect::<Vec<_>>()])
    }

    /// The boundary of the simplex on `labels`; `{∅}` for a single vertex.
    pub fn simplex_boundary<I: IntoIterator<Item = VertexLabel>>(labels: I) -> Result<Self> {
        let all: Vec<VertexLabel> = Face::new(labels).0;
        if all.is_empty() {
            return Err(Error::InvalidParameter(
                "boundary of the empty simplex".into(),
            ));
        }
        Self::from_facets((0..all.len()).map(|skip| {
            all.iter()
                .enumerate()
                .filter(move |&(i, _)| i != skip)
                .map(|(_, v)| *v)
                .collect::<Vec<_>>()
        }))
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Maximal faces, each sorted, in lexicographic order.
    pub fn facets(&self) -> Vec<Face> {
        self.facets.iter().map(|&m| self.face_of_mask(m)).collect()
    }

    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|m| m.count_ones() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim() + 1;
        self.facets.iter().all(|m| m.count_ones() as isize == d)
    }

    pub(crate) fn vertex_bit(&self, v: &VertexLabel) -> Option<u64> {
        self.vertices.binary_search(v).ok().map(|i| 1u64 << i)
    }

    pub(crate) fn mask(&self, labels: &[VertexLabel]) -> Option<u64> {
        labels
            .iter()
            .try_fold(0u64, |m, v| self.vertex_bit(v).map(|b| m | b))
    }

    pub(crate) fn face_of_mask(&self, mask: u64) -> Face {
        Face(bits(mask).map(|i| self.vertices[i]).collect())
    }

    pub(crate) fn face_masks(&self) -> &HashSet<u64> {
        self.faces.get_or_init(|| {
            let mut all = HashSet::new();
            for &f in &self.facets {
                if all.contains(&f) {
                    continue;
                }
                all.extend(submasks(f));
            }
            all
        })
    }

    pub(crate) fn contains_mask(&self, mask: u64) -> bool {
        self.face_masks().contains(&mask)
    }

    /// Whether the vertex set `labels` spans a face.
    pub fn contains_face(&self, labels: &[VertexLabel]) -> bool {
        self.mask(labels).is_some_and(|m| self.contains_mask(m))
    }

    /// All faces including `∅`, ordered by size and then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut masks: Vec<u64> = self.face_masks().iter().copied().collect();
        masks.sort_by_cached_key(|&m| (m.count_ones(), lex_key(m)));
        masks.into_iter().map(|m| self.face_of_mask(m)).collect()
    }

    pub fn f_vector(&self) -> FVector {
        let top = (self.dim() + 2) as usize;
        let mut counts = vec![0u64; top];
        for m in self.face_masks() {
            counts[m.count_ones() as usize] += 1;
        }
        FVector::new(counts.into_iter().map(BigInt::from).collect())
            .expect("face enumeration always yields f_{-1} = 1")
    }

    /// `h` with `D = dim + 1`.
    pub fn h_vector(&self) -> HVector {
        f_to_h(&self.f_vector(), (self.dim() + 1) as usize).expect("dimension is consistent")
    }

    pub fn g_vector(&self) -> GVector {
        h_to_g(&self.h_vector())
    }

    fn require_face(&self, f: &[VertexLabel]) -> Result<u64> {
        self.mask(f)
            .filter(|&m| self.contains_mask(m))
            .ok_or_else(|| Error::NotAFace(Face::new(f.iter().copied()).to_string()))
    }

    fn rebuild(&self, masks: Vec<u64>) -> Result<Self> {
        let facets: Vec<Vec<VertexLabel>> = masks
            .into_iter()
            .map(|m| bits(m).map(|i| self.vertices[i]).collect())
            .collect();
        Self::from_facets(facets)
    }

    /// `lk_F(K) = {G : G ∩ F = ∅, G ∪ F ∈ K}`.
    pub fn link(&self, f: &[VertexLabel]) -> Result<Self> {
        let fm = self.require_face(f)?;
        let masks = self
            .facets
            .iter()
            .filter(|&&m| m & fm == fm)
            .map(|&m| m & !fm)
            .collect();
        self.rebuild(masks)
    }

    /// The open star `{G ∈ K : F ⊆ G}`, as a face family.
    pub fn star(&self, f: &[VertexLabel]) -> Result<Vec<Face>> {
        let fm = self.require_face(f)?;
        let mut masks: Vec<u64> = self
            .face_masks()
            .iter()
            .copied()
            .filter(|&m| m & fm == fm)
            .collect();
        masks.sort_by_cached_key(|&m| (m.count_ones(), lex_key(m)));
        Ok(masks.into_iter().map(|m| self.face_of_mask(m)).collect())
    }

    /// `ast_F(K) = {G ∈ K : F ⊄ G}`, returned through its maximal faces.
    pub fn antistar(&self, f: &[VertexLabel]) -> Result<Self> {
        let fm = self.require_face(f)?;
        if fm == 0 {
            return Err(Error::InvalidParameter(
                "the antistar of the empty face is void".into(),
            ));
        }
        let mut masks = Vec::new();
        for &m in &self.facets {
            if m & fm == fm {
                masks.extend(bits(fm).map(|i| m & !(1 << i)));
            } else {
                masks.push(m);
            }
        }
        self.rebuild(masks)
    }

    /// Join of complexes on disjoint vertex sets.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let shared: Vec<_> = self
            .vertices
            .iter()
            .filter(|v| other.vertices.binary_search(v).is_ok())
            .collect();
        if !shared.is_empty() {
            return Err(Error::OverlappingVertices(format!("{shared:?}")));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in self.facets() {
            for b in other.facets() {
                facets.push(a.0.iter().chain(b.0.iter()).copied().collect::<Vec<_>>());
            }
        }
        Self::from_facets(facets)
    }

    /// Cone with a new apex vertex.
    pub fn cone(&self, apex: VertexLabel) -> Result<Self> {
        self.join(&Self::simplex([apex])?)
    }

    /// Union of two complexes (vertex sets may overlap).
    pub fn union(&self, other: &Self) -> Result<Self> {
        Self::from_facets(self.facets().into_iter().chain(other.facets()).map(|f| f.0))
    }

    /// Applies an injective relabeling of the vertices.
    pub fn relabel<M: Fn(VertexLabel) -> VertexLabel>(&self, map: M) -> Result<Self> {
        let image: BTreeSet<_> = self.vertices.iter().map(|&v| map(v)).collect();
        if image.len() != self.vertices.len() {
            return Err(Error::NonInjectiveRelabel(format!("{:?}", self.vertices)));
        }
        Self::from_facets(
            self.facets()
                .into_iter()
                .map(|f| f.0.into_iter().map(&map).collect::<Vec<_>>()),
        )
    }

    /// Whether `lk_{uv} = lk_u ∩ lk_v`.
    pub fn link_condition(&self, u: VertexLabel, v: VertexLabel) -> Result<bool> {
        let ub = self.vertex_bit(&u);
        let vb = self.vertex_bit(&v);
        let (ub, vb) = match (ub, vb) {
            (Some(a), Some(b)) if a != b && self.contains_mask(a | b) => (a, b),
            _ => return Err(Error::NotAnEdge(format!("{u}{v}"))),
        };
        let faces = self.face_masks();
        let uv = ub | vb;
        for &g in faces {
            if g & uv != 0 {
                continue;
            }
            let in_edge_link = faces.contains(&(g | uv));
            let in_both = faces.contains(&(g | ub)) && faces.contains(&(g | vb));
            if in_edge_link != in_both {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Contracts the edge `uv`, keeping the label `u`. Refuses when the
    /// link condition fails.
    pub fn contract_edge(&self, u: VertexLabel, v: VertexLabel) -> Result<Self> {
        if !self.link_condition(u, v)? {
            return Err(Error::LinkCondition(format!("{u}{v}")));
        }
        let ub = self.vertex_bit(&u).expect("checked by link_condition");
        let vb = self.vertex_bit(&v).expect("checked by link_condition");
        let masks = self
            .facets
            .iter()
            .map(|&m| if m & vb != 0 { (m & !vb) | ub } else { m })
            .collect();
        self.rebuild(masks)
    }

    /// Codimension-one faces lying in exactly one facet (the boundary
    /// ridges of a pure pseudomanifold with boundary).
    pub fn boundary_ridges(&self) -> Vec<Face> {
        let mut once: BTreeSet<u64> = BTreeSet::new();
        let mut more: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            for i in bits(f) {
                let r = f & !(1 << i);
                if more.contains(&r) {
                    continue;
                }
                if !once.insert(r) {
                    once.remove(&r);
                    more.insert(r);
                }
            }
        }
        let mut out: Vec<Face> = once.into_iter().map(|m| self.face_of_mask(m)).collect();
        out.sort();
        out
    }

    /// Number of facets containing each codimension-one face.
    pub fn ridge_degrees(&self) -> Vec<(Face, usize)> {
        let mut counts: std::collections::HashMap<u64, usize> = Default::default();
        for &f in &self.facets {
            for i in bits(f) {
                *counts.entry(f & !(1 << i)).or_default() += 1;
            }
        }
        let mut out: Vec<_> = counts
            .into_iter()
            .map(|(m, c)| (self.face_of_mask(m), c))
            .collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ComplexJson {
            dim: self.dim(),
            vertices: self.vertices.clone(),
            facets: self.facets(),
        })
        .expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ComplexJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let k = Self::from_facets(raw.facets.into_iter().map(|f| f.0))?;
        let declared: BTreeSet<_> = raw.vertices.into_iter().collect();
        if declared.iter().ne(k.vertices.iter()) {
            return Err(Error::Parse(
                "vertex list does not match the vertices of the facets".into(),
            ));
        }
        if k.dim() != raw.dim {
            return Err(Error::Parse(format!(
                "declared dim {} but facets have dim {}",
                raw.dim,
                k.dim()
            )));
        }
        Ok(k)
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    dim: isize,
    vertices: Vec<VertexLabel>,
    facets: Vec<Face>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use VertexLabel::*;

    fn plain(ids: &[u32]) -> Vec<VertexLabel> {
        ids.iter().map(|&i| Plain(i)).collect()
    }

    fn complex(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| plain(f))).unwrap()
    }

    fn counts(k: &SimplicialComplex) -> Vec<i64> {
        k.f_vector()
            .counts()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn label_round_trip_and_order() {
        for s in ["p", "c1", "c12", "t3", "u7", "u0"] {
            assert_eq!(s.parse::<VertexLabel>().unwrap().to_string(), s);
        }
        assert!("x1".parse::<VertexLabel>().is_err());
        assert!("c01".parse::<VertexLabel>().is_err());
        assert!("c+1".parse::<VertexLabel>().is_err());
        assert!("c".parse::<VertexLabel>().is_err());
        assert!(Apex < CVertex(1));
        assert!(CVertex(9) < TVertex(1));
        assert!(TVertex(9) < Plain(1));
    }

    #[test]
    fn combinations_enumerate_all() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(combinations(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(combinations(3, 4).count(), 0);
        assert_eq!(combinations(64, 63).count(), 64);
        assert!(combinations(6, 3).all(|m| m.count_ones() == 3 && m < 64));
    }

    #[test]
    fn simplex_boundary_counts() {
        let k = complex(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(counts(&k), vec![1, 4, 6, 4]);
        assert_eq!(
            k,
            SimplicialComplex::simplex_boundary(plain(&[1, 2, 3, 4])).unwrap()
        );
        let pent = complex(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        assert_eq!(counts(&pent), vec![1, 5, 5]);
    }

    #[test]
    fn non_maximal_input_is_dropped() {
        let k = complex(&[&[1, 2, 3], &[1, 2], &[3]]);
        assert_eq!(k.num_facets(), 1);
    }

    #[test]
    fn link_of_vertex_in_tetrahedron_boundary() {
        let k = SimplicialComplex::simplex_boundary(plain(&[1, 2, 3, 4])).unwrap();
        let lk = k.link(&[Plain(1)]).unwrap();
        assert_eq!(
            lk,
            SimplicialComplex::simplex_boundary(plain(&[2, 3, 4])).unwrap()
        );
        assert!(matches!(
            k.link(&plain(&[1, 2, 3, 4])),
            Err(Error::NotAFace(_))
        ));
        assert!(matches!(k.link(&[Plain(9)]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn star_and_antistar() {
        let pent = complex(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let st = pent.star(&[Plain(5)]).unwrap();
        assert_eq!(st.len(), 3);
        let ast = pent.antistar(&[Plain(5)]).unwrap();
        assert_eq!(ast, complex(&[&[1, 2], &[2, 3], &[3, 4]]));
    }

    #[test]
    fn join_of_two_s0_is_square() {
        let a = complex(&[&[1], &[2]]);
        let b = complex(&[&[3], &[4]]);
        let j = a.join(&b).unwrap();
        assert_eq!(j, complex(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
        assert!(matches!(a.join(&a), Err(Error::OverlappingVertices(_))));
    }

    #[test]
    fn cone_over_complex() {
        let pent = complex(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let c = pent.cone(Plain(9)).unwrap();
        let point = SimplicialComplex::simplex([Plain(9)]).unwrap();
        assert_eq!(c, point.join(&pent).unwrap());
        assert_eq!(counts(&c), vec![1, 6, 10, 5]);
    }

    #[test]
    fn empty_face_complex_is_join_identity() {
        let void_face = SimplicialComplex::simplex_boundary([Plain(1)]).unwrap();
        assert_eq!(void_face.dim(), -1);
        assert_eq!(counts(&void_face), vec![1]);
        let pent = complex(&[&[2, 3], &[3, 4], &[4, 2]]);
        assert_eq!(void_face.join(&pent).unwrap(), pent);
    }

    #[test]
    fn contract_square_edge_gives_triangle() {
        let sq = complex(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let t = sq.contract_edge(Plain(1), Plain(2)).unwrap();
        assert_eq!(t, complex(&[&[1, 3], &[3, 4], &[1, 4]]));
        assert!(matches!(
            sq.contract_edge(Plain(1), Plain(3)),
            Err(Error::NotAnEdge(_))
        ));
    }

    #[test]
    fn link_condition_failure_is_refused() {
        // triangle boundary: contracting an edge collapses the missing face 123
        let tri = complex(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(!tri.link_condition(Plain(1), Plain(2)).unwrap());
        assert!(matches!(
            tri.contract_edge(Plain(1), Plain(2)),
            Err(Error::LinkCondition(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let k = SimplicialComplex::from_facets([
            vec![Apex, CVertex(1), TVertex(2)],
            vec![CVertex(1), CVertex(2), TVertex(2)],
        ])
        .unwrap();
        let text = k.to_json();
        assert!(text.contains("\"p\""));
        assert_eq!(SimplicialComplex::from_json(&text).unwrap(), k);
        let bad = r#"{"dim": 1, "vertices": ["u1"], "facets": [["u1","u2"]]}"#;
        assert!(SimplicialComplex::from_json(bad).is_err());
        let bad_dim = r#"{"dim": 3, "vertices": ["u1","u2"], "facets": [["u1","u2"]]}"#;
        assert!(SimplicialComplex::from_json(bad_dim).is_err());
    }

    #[test]
    fn boundary_ridges_of_a_path() {
        let path = complex(&[&[1, 2], &[2, 3], &[3, 4]]);
        let b = path.boundary_ridges();
        assert_eq!(b, vec![Face::new([Plain(1)]), Face::new([Plain(4)])]);
    }

    #[test]
    fn too_many_vertices() {
        let big: Vec<Vec<VertexLabel>> = (1..=65).map(|i| vec![Plain(i)]).collect();
        assert!(matches!(
            SimplicialComplex::from_facets(big),
            Err(Error::TooManyVertices(65))
        ));
    }
}
