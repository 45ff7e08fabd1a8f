//! Boundary complexes of cyclic polytopes, McMullen-Walkup polytopes,
//! their lexicographic subdivisions, and lexicographic diamonds.
//!
//! Vertex conventions: the cyclic factor uses `c1 < c2 < ...` with `x` the
//! last of them; the simplex factor `T` uses `t1, t2, ...`; the diamond
//! apex is `p`. In an MW boundary `x` itself is not a vertex.

use num_bigint::BigInt;
use serde::Serialize;

use crate::complex::{combinations, SimplicialComplex, VertexLabel};
use crate::error::{invalid, Result};
use crate::vector_calculus::{mchoose, GVector};

use VertexLabel::{Apex, CVertex, TVertex};

/// A maximal run of consecutive indices inside a vertex subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Block {
    pub start: u32,
    pub end: u32,
    pub size: u32,
    /// Avoids both the first index and the last index `x`.
    pub inner: bool,
    pub odd: bool,
}

/// Blocks of a subset of `{1, ..., last}` under the linear order; `1` and
/// `last` are never treated as consecutive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    subset: Vec<u32>,
    blocks: Vec<Block>,
    isolated: bool,
}

impl BlockDecomposition {
    pub fn new(subset: &[u32], last: u32) -> Result<Self> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != subset.len() {
            return Err(invalid("subset has repeated indices"));
        }
        if s.first().is_some_and(|&i| i == 0) || s.last().is_some_and(|&i| i > last) {
            return Err(invalid(format!("subset {s:?} not inside 1..={last}")));
        }
        let mut blocks: Vec<Block> = Vec::new();
        for &i in &s {
            match blocks.last_mut() {
                Some(b) if b.end + 1 == i => {
                    b.end = i;
                    b.size += 1;
                }
                _ => blocks.push(Block {
                    start: i,
                    end: i,
                    size: 1,
                    inner: false,
                    odd: false,
                }),
            }
        }
        for b in &mut blocks {
            b.inner = b.start > 1 && b.end < last;
            b.odd = b.size % 2 == 1;
        }
        let isolated = blocks.iter().all(|b| b.size == 1);
        Ok(BlockDecomposition {
            subset: s,
            blocks,
            isolated,
        })
    }

    pub fn subset(&self) -> &[u32] {
        &self.subset
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_isolated(&self) -> bool {
        self.isolated
    }

    pub fn inner_odd_blocks(&self) -> usize {
        self.blocks.iter().filter(|b| b.inner && b.odd).count()
    }

    pub fn all_blocks_even(&self) -> bool {
        self.blocks.iter().all(|b| !b.odd)
    }
}

fn indices_of(mask: u64) -> Vec<u32> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// Gale's evenness condition: between any two indices outside `subset`
/// lies an even number of members.
pub fn is_gale_even(subset: &[u32], m: u32) -> bool {
    let mut since_gap = 0usize;
    let mut seen_gap = false;
    for i in 1..=m {
        if subset.contains(&i) {
            since_gap += 1;
        } else {
            if seen_gap && since_gap % 2 == 1 {
                return false;
            }
            seen_gap = true;
            since_gap = 0;
        }
    }
    true
}

fn check_cyclic(dim: usize, m: usize) -> Result<()> {
    if dim < 2 || dim >= m {
        return Err(invalid(format!(
            "cyclic polytope needs 2 <= K < m, got K={dim}, m={m}"
        )));
    }
    if m > 64 {
        return Err(invalid(format!(
            "cyclic polytope with {m} vertices exceeds 64"
        )));
    }
    Ok(())
}

/// Facets of `∂C(dim, m)` as 1-based index sets, by exhaustive evenness check.
pub fn cyclic_facet_indices(dim: usize, m: usize) -> Result<Vec<Vec<u32>>> {
    check_cyclic(dim, m)?;
    Ok(combinations(m, dim)
        .map(indices_of)
        .filter(|s| is_gale_even(s, m as u32))
        .collect())
}

fn cyclic_with_offset(dim: usize, m: usize, offset: u32) -> Result<SimplicialComplex> {
    let facets = cyclic_facet_indices(dim, m)?;
    SimplicialComplex::from_facets(
        facets
            .into_iter()
            .map(|f| f.into_iter().map(move |i| CVertex(i + offset))),
    )
}

/// Boundary complex of the cyclic polytope `C(dim, m)` on `c1..cm`.
pub fn cyclic_facets(dim: usize, m: usize) -> Result<SimplicialComplex> {
    cyclic_with_offset(dim, m, 0)
}

/// Face test for `C(dim, m)`: a subset of size `i <= dim` is a face iff it
/// has at most `dim - i` inner odd blocks.
pub fn cyclic_is_face(subset: &[u32], dim: usize, m: usize) -> Result<bool> {
    check_cyclic(dim, m)?;
    if subset.len() > dim {
        return Err(invalid(format!(
            "subset of size {} exceeds K={dim}",
            subset.len()
        )));
    }
    let blocks = BlockDecomposition::new(subset, m as u32)?;
    Ok(blocks.inner_odd_blocks() <= dim - subset.len())
}

/// Parameters `(K, D, N)` of the McMullen-Walkup polytope `MW(K, D, N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MwSpec {
    cyclic_dim: usize,
    dim: usize,
    num_vertices: usize,
}

impl MwSpec {
    pub fn new(cyclic_dim: usize, dim: usize, num_vertices: usize) -> Result<Self> {
        if !(2 <= cyclic_dim && cyclic_dim <= dim && dim < num_vertices) {
            return Err(invalid(format!(
                "MW needs 2 <= K <= D < N, got K={cyclic_dim}, D={dim}, N={num_vertices}"
            )));
        }
        Ok(MwSpec {
            cyclic_dim,
            dim,
            num_vertices,
        })
    }

    /// `K`
    pub fn cyclic_dim(&self) -> usize {
        self.cyclic_dim
    }

    /// `D`
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `N`
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Vertices of the cyclic factor `C(K, N-D+K)`, including `x`.
    pub fn cyclic_vertex_count(&self) -> usize {
        self.num_vertices - self.dim + self.cyclic_dim
    }

    /// Vertices of the simplex factor `T`.
    pub fn simplex_vertex_count(&self) -> usize {
        self.dim - self.cyclic_dim + 1
    }

    /// The vertex `x` of the cyclic factor that `T` pierces.
    pub fn x(&self) -> VertexLabel {
        CVertex(self.cyclic_vertex_count() as u32)
    }

    pub fn simplex_labels(&self) -> Vec<VertexLabel> {
        (1..=self.simplex_vertex_count() as u32)
            .map(TVertex)
            .collect()
    }

    /// `v_1 < ... < v_N`: the cyclic vertices other than `x`, then `T`.
    pub fn ordered_vertices(&self) -> Vec<VertexLabel> {
        (1..self.cyclic_vertex_count() as u32)
            .map(CVertex)
            .chain(self.simplex_labels())
            .collect()
    }
}

/// `⟨T⟩ * lk_x(C)  ∪  ∂T * ast_x(C)` for a complex `C` containing `x`.
fn mw_assembly(
    cyclic_part: &SimplicialComplex,
    x: VertexLabel,
    simplex: &[VertexLabel],
) -> Result<SimplicialComplex> {
    let t_full = SimplicialComplex::simplex(simplex.iter().copied())?;
    let t_bd = SimplicialComplex::simplex_boundary(simplex.iter().copied())?;
    let through_x = t_full.join(&cyclic_part.link(&[x])?)?;
    let away_from_x = t_bd.join(&cyclic_part.antistar(&[x])?)?;
    through_x.union(&away_from_x)
}

fn mw_with_offset(spec: MwSpec, offset: u32) -> Result<SimplicialComplex> {
    let m = spec.cyclic_vertex_count();
    let c = cyclic_with_offset(spec.cyclic_dim, m, offset)?;
    mw_assembly(&c, CVertex(m as u32 + offset), &spec.simplex_labels())
}

/// Boundary complex of `MW(K, D, N)` with `x` the last cyclic vertex.
pub fn mw_boundary(spec: MwSpec) -> Result<SimplicialComplex> {
    mw_with_offset(spec, 0)
}

/// Closed-form g-vector of `MW(K, D, N)`: `g_i = ((N-D-1, i))` for
/// `i <= floor(K/2)` and `0` above.
pub fn mw_g_closed(spec: MwSpec) -> GVector {
    let half = spec.cyclic_dim / 2;
    let m = (spec.num_vertices - spec.dim - 1) as u64;
    let entries = (0..=spec.dim / 2)
        .map(|i| {
            if i <= half {
                mchoose(m, i as u64)
            } else {
                BigInt::from(0)
            }
        })
        .collect();
    GVector::new(spec.dim, entries).expect("length matches D")
}

/// The complex that `lk_{v_1}(∂MW(K, D, N))` matches under the shift
/// `c_i -> c_{i-1}`, namely `∂MW(K-1, D-1, N-1)`. For `K = 2` the cyclic
/// factor of the target degenerates to a segment `{c1, x}`, and the
/// target is the boundary of the simplex on `c1` and `T`.
pub fn mw_first_vertex_link_model(spec: MwSpec) -> Result<SimplicialComplex> {
    if spec.cyclic_dim > 2 {
        mw_boundary(MwSpec::new(
            spec.cyclic_dim - 1,
            spec.dim - 1,
            spec.num_vertices - 1,
        )?)
    } else {
        SimplicialComplex::simplex_boundary(
            std::iter::once(CVertex(1)).chain(spec.simplex_labels()),
        )
    }
}

/// The vertex link of `v_1` in `∂MW(K, D, N)`, shifted `c_i -> c_{i-1}`.
pub fn mw_first_vertex_link(spec: MwSpec) -> Result<SimplicialComplex> {
    mw_boundary(spec)?
        .link(&[CVertex(1)])?
        .relabel(|v| match v {
            CVertex(i) => CVertex(i - 1),
            other => other,
        })
}

/// A polytope family closed under deleting its first vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LexBase {
    /// `C(dim, vertices)` on `c1..c_vertices`.
    Cyclic {
        dim: usize,
        vertices: usize,
    },
    Mw(MwSpec),
}

impl LexBase {
    pub fn cyclic(dim: usize, vertices: usize) -> Result<Self> {
        check_cyclic(dim, vertices)?;
        Ok(LexBase::Cyclic { dim, vertices })
    }

    pub fn dim(&self) -> usize {
        match self {
            LexBase::Cyclic { dim, .. } => *dim,
            LexBase::Mw(s) => s.dim(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        match self {
            LexBase::Cyclic { vertices, .. } => *vertices,
            LexBase::Mw(s) => s.num_vertices(),
        }
    }

    /// Largest `a` giving a distinct subdivision; past it the residual
    /// polytope is a simplex.
    pub fn max_lex_index(&self) -> usize {
        self.num_vertices() - self.dim()
    }

    /// `∂conv(v_{removed+1}, ..., v_last)`, with the original labels.
    pub fn residual_boundary(&self, removed: usize) -> Result<SimplicialComplex> {
        if removed >= self.max_lex_index() {
            return Err(invalid(format!(
                "removing {removed} vertices leaves a lower-dimensional polytope"
            )));
        }
        match *self {
            LexBase::Cyclic { dim, vertices } => {
                cyclic_with_offset(dim, vertices - removed, removed as u32)
            }
            LexBase::Mw(s) => mw_with_offset(
                MwSpec::new(s.cyclic_dim, s.dim, s.num_vertices - removed)?,
                removed as u32,
            ),
        }
    }
}

/// `Lex_a(P)`: push `v_1, ..., v_{a-1}` and then pull `v_a`.
///
/// Pushing `v` on the current polytope `P` with `P' = conv(Vert(P) - v)`
/// emits `v * F` for each facet `F` of `∂P'` that is not a facet of `∂P`
/// and continues inside `P'`. Pulling `v` emits `v * F` for each facet of
/// `∂P` missing `v`.
pub fn lex_subdivision(base: LexBase, a: usize) -> Result<SimplicialComplex> {
    if a == 0 || a > base.max_lex_index() {
        return Err(invalid(format!(
            "lexicographic index a={a} outside 1..={}",
            base.max_lex_index()
        )));
    }
    let mut cells: Vec<Vec<VertexLabel>> = Vec::new();
    let mut current = base.residual_boundary(0)?;
    for j in 1..a {
        let v = CVertex(j as u32);
        let next = base.residual_boundary(j)?;
        let old = current.facets();
        for f in next.facets() {
            if old.binary_search(&f).is_err() {
                cells.push(
                    std::iter::once(v)
                        .chain(f.labels().iter().copied())
                        .collect(),
                );
            }
        }
        current = next;
    }
    let v = CVertex(a as u32);
    for f in current.facets() {
        if !f.contains(&v) {
            cells.push(
                std::iter::once(v)
                    .chain(f.labels().iter().copied())
                    .collect(),
            );
        }
    }
    SimplicialComplex::from_facets(cells)
}

/// `Lex_a(MW)` assembled from `Lex_a` of the cyclic factor:
/// `⟨T⟩ * lk_x(Lex_a(C))  ∪  ∂T * ast_x(Lex_a(C))`.
pub fn lex_subdivision_via_cyclic_factor(spec: MwSpec, a: usize) -> Result<SimplicialComplex> {
    let lex_c = lex_subdivision(
        LexBase::cyclic(spec.cyclic_dim, spec.cyclic_vertex_count())?,
        a,
    )?;
    mw_assembly(&lex_c, spec.x(), &spec.simplex_labels())
}

/// `(k, d, n, a)`: the `a`-th lexicographic diamond over
/// `P = MW(2k, d-2, n-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DiamondSpec {
    k: usize,
    d: usize,
    n: usize,
    a: usize,
}

impl DiamondSpec {
    pub fn new(k: usize, d: usize, n: usize, a: usize) -> Result<Self> {
        if k < 1 || d < 2 * k + 2 || n < d {
            return Err(invalid(format!(
                "diamond needs k >= 1 and n >= d >= 2k+2, got k={k}, d={d}, n={n}"
            )));
        }
        if a < 1 || a > n - d + 1 {
            return Err(invalid(format!(
                "diamond index a={a} outside 1..={}",
                n - d + 1
            )));
        }
        Ok(DiamondSpec { k, d, n, a })
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

    pub fn a(&self) -> usize {
        self.a
    }

    /// `P = MW(2k, d-2, n-1)`.
    pub fn base(&self) -> MwSpec {
        MwSpec::new(2 * self.k, self.d - 2, self.n - 1).expect("validated in new")
    }

    /// Number of vertices of the cyclic factor of `P`, i.e. the index of `x`.
    pub fn cyclic_vertex_count(&self) -> usize {
        self.base().cyclic_vertex_count()
    }
}

/// `∂D_a = Lex_a(P) ∪ (p * ∂P)`.
pub fn diamond_boundary(spec: DiamondSpec) -> Result<SimplicialComplex> {
    let base = spec.base();
    let lex = lex_subdivision(LexBase::Mw(base), spec.a)?;
    let cap = mw_boundary(base)?.cone(Apex)?;
    lex.union(&cap)
}

/// Closed-form g-vector of `∂D_a` (`D = d-1`, entries `0..=floor((d-1)/2)`):
/// `((n-d, i))` for `i <= k`, `((n-d-a+1, k))` at `i = k+1`, zero above.
pub fn diamond_g_closed(k: usize, d: usize, n: usize, a: usize) -> Result<GVector> {
    DiamondSpec::new(k, d, n, a)?;
    let top = (d - 1) / 2;
    let entries = (0..=top)
        .map(|i| {
            if i <= k {
                mchoose((n - d) as u64, i as u64)
            } else if i == k + 1 {
                mchoose((n - d + 1 - a) as u64, k as u64)
            } else {
                BigInt::from(0)
            }
        })
        .collect();
    GVector::new(d - 1, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Face;
    use crate::vector_calculus::check_simplicial_ds;

    fn c(ids: &[u32]) -> Face {
        Face::new(ids.iter().map(|&i| CVertex(i)))
    }

    fn ints(g: &GVector) -> Vec<i64> {
        g.entries()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    fn f_ints(k: &SimplicialComplex) -> Vec<i64> {
        k.f_vector()
            .counts()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn pentagon() {
        let k = cyclic_facets(2, 5).unwrap();
        assert_eq!(
            k.facets(),
            vec![c(&[1, 2]), c(&[1, 5]), c(&[2, 3]), c(&[3, 4]), c(&[4, 5])]
        );
    }

    #[test]
    fn cyclic_4_7() {
        let k = cyclic_facets(4, 7).unwrap();
        assert_eq!(k.num_facets(), 14);
        assert_eq!(f_ints(&k), vec![1, 7, 21, 28, 14]);
        assert_eq!(k.f_vector().euler_characteristic(), BigInt::from(0));
    }

    #[test]
    fn gale_example() {
        assert!(is_gale_even(&[1, 2, 4, 5], 6));
        assert!(cyclic_facets(4, 6)
            .unwrap()
            .contains_face(c(&[1, 2, 4, 5]).labels()));
        assert!(!is_gale_even(&[1, 3], 5));
    }

    #[test]
    fn cyclic_parameter_errors() {
        assert!(cyclic_facets(5, 5).is_err());
        assert!(cyclic_facets(1, 5).is_err());
        assert!(cyclic_is_face(&[1, 2, 3], 2, 6).is_err());
    }

    #[test]
    fn block_face_criterion_examples() {
        assert!(!cyclic_is_face(&[2, 4], 2, 6).unwrap());
        assert!(cyclic_is_face(&[1, 6], 2, 6).unwrap());
        assert!(cyclic_is_face(&[2, 3], 2, 6).unwrap());
        let b = BlockDecomposition::new(&[2, 4], 6).unwrap();
        assert!(b.is_isolated());
        assert_eq!(b.inner_odd_blocks(), 2);
        let b = BlockDecomposition::new(&[1, 2, 5, 6], 6).unwrap();
        assert_eq!(b.blocks().len(), 2);
        assert!(b.blocks().iter().all(|b| !b.inner));
    }

    #[test]
    fn mw_2_4_7() {
        let spec = MwSpec::new(2, 4, 7).unwrap();
        let k = mw_boundary(spec).unwrap();
        assert_eq!(k.num_vertices(), 7);
        assert_eq!(k.num_facets(), 11);
        assert!(!k.vertices().contains(&spec.x()));
        assert_eq!(f_ints(&k), vec![1, 7, 18, 22, 11]);
        let h = k.h_vector();
        assert_eq!(h.entries(), &[1, 3, 3, 3, 1].map(BigInt::from)[..]);
        assert_eq!(ints(&k.g_vector()), vec![1, 2, 0]);
        assert_eq!(k.g_vector(), mw_g_closed(spec));
    }

    #[test]
    fn mw_3_4_8_odd_factor() {
        let spec = MwSpec::new(3, 4, 8).unwrap();
        let k = mw_boundary(spec).unwrap();
        assert_eq!(ints(&k.g_vector()), vec![1, 3, 0]);
        assert!(check_simplicial_ds(&k.h_vector()));
    }

    #[test]
    fn mw_type_a_faces_match_join() {
        // ⟨T⟩ * lk_x(C) for MW(2,4,7) is the cone part through T
        let spec = MwSpec::new(2, 4, 7).unwrap();
        let c5 = cyclic_facets(2, 5).unwrap();
        let part = SimplicialComplex::simplex(spec.simplex_labels())
            .unwrap()
            .join(&c5.link(&[spec.x()]).unwrap())
            .unwrap();
        let k = mw_boundary(spec).unwrap();
        let t = spec.simplex_labels();
        let through_t: Vec<Face> = k
            .facets()
            .into_iter()
            .filter(|f| t.iter().all(|v| f.contains(v)))
            .collect();
        assert_eq!(part.facets(), through_t);
    }

    #[test]
    fn mw_param_errors() {
        assert!(MwSpec::new(1, 4, 7).is_err());
        assert!(MwSpec::new(5, 4, 7).is_err());
        assert!(MwSpec::new(2, 4, 4).is_err());
    }

    #[test]
    fn lemma_link_of_first_vertex() {
        let spec = MwSpec::new(2, 4, 8).unwrap();
        let lk = mw_first_vertex_link(spec).unwrap();
        assert_eq!(lk, mw_first_vertex_link_model(spec).unwrap());
        let spec = MwSpec::new(4, 6, 9).unwrap();
        let lk = mw_first_vertex_link(spec).unwrap();
        assert_eq!(lk, mw_boundary(MwSpec::new(3, 5, 8).unwrap()).unwrap());
    }

    #[test]
    fn lex_of_pentagon() {
        let base = LexBase::cyclic(2, 5).unwrap();
        assert_eq!(
            lex_subdivision(base, 1).unwrap().facets(),
            vec![c(&[1, 2, 3]), c(&[1, 3, 4]), c(&[1, 4, 5])]
        );
        assert_eq!(
            lex_subdivision(base, 2).unwrap().facets(),
            vec![c(&[1, 2, 5]), c(&[2, 3, 4]), c(&[2, 4, 5])]
        );
        assert!(lex_subdivision(base, 0).is_err());
        assert!(lex_subdivision(base, 4).is_err());
    }

    #[test]
    fn lex_routes_agree_on_mw_2_4_8() {
        let spec = MwSpec::new(2, 4, 8).unwrap();
        for a in 1..=LexBase::Mw(spec).max_lex_index() {
            let direct = lex_subdivision(LexBase::Mw(spec), a).unwrap();
            let via = lex_subdivision_via_cyclic_factor(spec, a).unwrap();
            assert_eq!(direct, via, "a={a}");
        }
    }

    #[test]
    fn lex_is_a_subdivision() {
        let spec = MwSpec::new(2, 4, 8).unwrap();
        let bd = mw_boundary(spec).unwrap();
        for a in 1..=4 {
            let lex = lex_subdivision(LexBase::Mw(spec), a).unwrap();
            assert!(lex.is_pure());
            assert_eq!(lex.dim(), 4);
            assert_eq!(lex.vertices(), bd.vertices());
            assert_eq!(lex.boundary_ridges(), bd.facets());
            assert!(lex.ridge_degrees().iter().all(|(_, c)| *c <= 2));
        }
    }

    #[test]
    fn diamond_g_vectors() {
        for (a, expect) in [(1, vec![1, 3, 3]), (2, vec![1, 3, 2]), (4, vec![1, 3, 0])] {
            let spec = DiamondSpec::new(1, 6, 9, a).unwrap();
            let k = diamond_boundary(spec).unwrap();
            assert_eq!(k.num_vertices(), 9);
            assert!(k.is_pure());
            assert_eq!(k.dim(), 4);
            assert_eq!(ints(&k.g_vector()), expect);
            assert_eq!(ints(&diamond_g_closed(1, 6, 9, a).unwrap()), expect);
        }
    }

    #[test]
    fn diamond_param_errors() {
        assert!(DiamondSpec::new(1, 6, 9, 5).is_err());
        assert!(DiamondSpec::new(1, 6, 9, 0).is_err());
        assert!(DiamondSpec::new(2, 5, 9, 1).is_err());
        assert!(DiamondSpec::new(1, 6, 5, 1).is_err());
    }
}
