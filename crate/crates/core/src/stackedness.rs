//! Missing faces and stacked triangulations of lexicographic diamonds, and
//! the incompatibility argument showing `Q(k, d, n)` is not cubical
//! `(k+1)`-stacked.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{combinations, submasks, Face, SimplicialComplex, VertexLabel};
use crate::constructions::{diamond_boundary, BlockDecomposition, DiamondSpec};
use crate::error::{invalid, Result};
use crate::q_analysis::diamond_index;

use VertexLabel::{Apex, CVertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FaceTag {
    /// `{p} ∪ F'` with `F'` isolated of size `k+1`, `x ∉ F'`, `min F' = v_a`.
    MissingType1,
    /// Isolated `(k+1)`-set, `x` excluded, minimum not `v_a`.
    MissingType2,
    /// `{p} ∪ (2k even-block set) ∪ Vert(T)`.
    FacetTypeI,
    /// `{v_a} ∪ (2k even-block set above v_a) ∪ Vert(T)`.
    FacetTypeII,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ClassifiedFace {
    pub vertices: Face,
    pub tag: FaceTag,
}

fn stack_spec(k: usize, d: usize, n: usize, a: usize) -> Result<DiamondSpec> {
    if d < 2 * k + 4 {
        return Err(invalid(format!(
            "stackedness analysis needs d >= 2k+4, got k={k}, d={d}"
        )));
    }
    DiamondSpec::new(k, d, n, a)
}

fn cyc(indices: &[u32]) -> impl Iterator<Item = VertexLabel> + '_ {
    indices.iter().map(|&i| CVertex(i))
}

fn subsets_of_range(last: u32, size: usize) -> impl Iterator<Item = Vec<u32>> {
    combinations(last as usize, size).map(|m| {
        (0..64u32)
            .filter(|i| m >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    })
}

/// Predicted missing faces of `∂D_a` of sizes `k+1` and `k+2`.
pub fn predicted_missing_faces(
    k: usize,
    d: usize,
    n: usize,
    a: usize,
) -> Result<Vec<ClassifiedFace>> {
    let spec = stack_spec(k, d, n, a)?;
    let x = spec.cyclic_vertex_count() as u32;
    let mut out = Vec::new();
    for s in subsets_of_range(x - 1, k + 1) {
        if !BlockDecomposition::new(&s, x)?.is_isolated() {
            continue;
        }
        if s[0] as usize == a {
            out.push(ClassifiedFace {
                vertices: Face::new(std::iter::once(Apex).chain(cyc(&s))),
                tag: FaceTag::MissingType1,
            });
        } else {
            out.push(ClassifiedFace {
                vertices: Face::new(cyc(&s)),
                tag: FaceTag::MissingType2,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// All inclusion-minimal non-faces with at most `max_size` vertices, by
/// exhaustive scan in size order.
pub fn brute_missing_faces(complex: &SimplicialComplex, max_size: usize) -> Vec<Face> {
    let nv = complex.num_vertices();
    let mut found: Vec<u64> = Vec::new();
    for size in 1..=max_size.min(nv) {
        for local in combinations(nv, size) {
            if complex.contains_mask(local) {
                continue;
            }
            if found.iter().any(|&m| m & !local == 0) {
                continue;
            }
            let minimal = (0..nv)
                .filter(|i| local >> i & 1 == 1)
                .all(|i| complex.contains_mask(local & !(1 << i)));
            if minimal {
                found.push(local);
            }
        }
    }
    let mut out: Vec<Face> = found.into_iter().map(|m| complex.face_of_mask(m)).collect();
    out.sort();
    out
}

/// Predicted facets of the unique `(k+1)`-stacked triangulation `S(D_a)`.
pub fn predicted_stacked_facets(
    k: usize,
    d: usize,
    n: usize,
    a: usize,
) -> Result<Vec<ClassifiedFace>> {
    let spec = stack_spec(k, d, n, a)?;
    let x = spec.cyclic_vertex_count() as u32;
    let t = spec.base().simplex_labels();
    let mut out = Vec::new();
    for s in subsets_of_range(x - 1, 2 * k) {
        if !BlockDecomposition::new(&s, x)?.all_blocks_even() {
            continue;
        }
        out.push(ClassifiedFace {
            vertices: Face::new(
                std::iter::once(Apex)
                    .chain(cyc(&s))
                    .chain(t.iter().copied()),
            ),
            tag: FaceTag::FacetTypeI,
        });
        if s[0] as usize > a {
            out.push(ClassifiedFace {
                vertices: Face::new(
                    std::iter::once(CVertex(a as u32))
                        .chain(cyc(&s))
                        .chain(t.iter().copied()),
                ),
                tag: FaceTag::FacetTypeII,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// All `d`-subsets of vertices whose subsets of size `<= k+2` are all faces.
pub fn oracle_stacked_facets(complex: &SimplicialComplex, d: usize, k: usize) -> Vec<Face> {
    let nv = complex.num_vertices();
    let mut out: Vec<Face> = combinations(nv, d)
        .filter(|&cand| {
            submasks(cand)
                .filter(|s| s.count_ones() as usize <= k + 2)
                .all(|s| complex.contains_mask(s))
        })
        .map(|m| complex.face_of_mask(m))
        .collect();
    out.sort();
    out
}

/// Evaluates the facet-type predicates of `S(D_a)` on `face`.
pub fn classify_stacked_facet(spec: DiamondSpec, face: &Face) -> FaceTag {
    let x = spec.cyclic_vertex_count() as u32;
    let t = spec.base().simplex_labels();
    if face.len() != spec.d() || !t.iter().all(|v| face.contains(v)) {
        return FaceTag::Unclassified;
    }
    let mut cyclic: Vec<u32> = Vec::new();
    for v in face.labels() {
        match v {
            CVertex(i) if *i < x => cyclic.push(*i),
            VertexLabel::TVertex(_) | Apex => {}
            _ => return FaceTag::Unclassified,
        }
    }
    let even = |s: &[u32]| {
        s.len() == 2 * spec.k() && BlockDecomposition::new(s, x).is_ok_and(|b| b.all_blocks_even())
    };
    if face.contains(&Apex) {
        if even(&cyclic) {
            return FaceTag::FacetTypeI;
        }
        return FaceTag::Unclassified;
    }
    match cyclic.split_first() {
        Some((&first, rest))
            if first as usize == spec.a()
                && rest.first().is_some_and(|&r| r > first)
                && even(rest) =>
        {
            FaceTag::FacetTypeII
        }
        _ => FaceTag::Unclassified,
    }
}

/// A vertex `σ` of `Q`, its neighbor across coordinate `a`, and a facet of
/// `S(D_a)` that `S(D_b)` cannot contain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncompatibilityWitness {
    pub k: usize,
    pub d: usize,
    pub n: usize,
    pub sigma: String,
    pub a: usize,
    pub b: usize,
    pub face: Face,
    pub face_type_in_a: FaceTag,
    pub face_type_in_b: FaceTag,
}

impl IncompatibilityWitness {
    pub fn holds(&self) -> bool {
        self.a < self.b
            && self.face_type_in_a == FaceTag::FacetTypeII
            && self.face_type_in_b == FaceTag::Unclassified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Rechecks the witness against explicitly built diamonds: the face is a
    /// facet of the oracle triangulation of `D_a` and not of `D_b`.
    pub fn confirm_with_complexes(&self) -> Result<bool> {
        let da = diamond_boundary(DiamondSpec::new(self.k, self.d, self.n, self.a)?)?;
        let db = diamond_boundary(DiamondSpec::new(self.k, self.d, self.n, self.b)?)?;
        let in_a = oracle_stacked_facets(&da, self.d, self.k).contains(&self.face);
        let in_b = oracle_stacked_facets(&db, self.d, self.k).contains(&self.face);
        Ok(in_a && !in_b)
    }
}

fn sigma_string(plus: &[bool]) -> String {
    plus.iter().map(|&p| if p { '+' } else { '-' }).collect()
}

/// Witness for the sign vector `plus` (`plus[i]` is `σ_{i+1} = +`).
pub fn incompatibility_witness_for(
    k: usize,
    d: usize,
    plus: &[bool],
) -> Result<IncompatibilityWitness> {
    let n = plus.len();
    stack_spec(k, d, n, 1)?;
    let a = diamond_index(plus, d);
    if a > n - d {
        return Err(invalid(format!(
            "sign vector {} has diamond index {a}; need a < n-d+1",
            sigma_string(plus)
        )));
    }
    let mut flipped = plus.to_vec();
    flipped[a - 1] = !flipped[a - 1];
    let b = diamond_index(&flipped, d);
    let spec_a = DiamondSpec::new(k, d, n, a)?;
    let spec_b = DiamondSpec::new(k, d, n, b)?;
    let face = predicted_stacked_facets(k, d, n, a)?
        .into_iter()
        .filter(|f| f.tag == FaceTag::FacetTypeII)
        .map(|f| f.vertices)
        .min()
        .ok_or_else(|| invalid("no type-II facet exists"))?;
    Ok(IncompatibilityWitness {
        k,
        d,
        n,
        sigma: sigma_string(plus),
        a,
        b,
        face_type_in_a: classify_stacked_facet(spec_a, &face),
        face_type_in_b: classify_stacked_facet(spec_b, &face),
        face,
    })
}

/// Witness at `σ = (+, -, ..., -)`.
pub fn incompatibility_witness(k: usize, d: usize, n: usize) -> Result<IncompatibilityWitness> {
    if n <= d {
        return Err(invalid(format!(
            "no diamond index below n-d+1 when n = d = {d}"
        )));
    }
    let mut plus = vec![false; n];
    plus[0] = true;
    incompatibility_witness_for(k, d, &plus)
}

/// Vertex sets (bitmasks over the `2^n` cube vertices) of all subgraphs of
/// the `n`-cube graph isomorphic to the `m`-cube graph.
pub fn cube_subgraph_vertex_sets(n: usize, m: usize) -> Result<BTreeSet<u32>> {
    if !(1 <= m && m <= n && n <= 4) {
        return Err(invalid(format!(
            "exhaustive search needs 1 <= m <= n <= 4, got n={n}, m={m}"
        )));
    }
    let small = 1usize << m;
    let mut image = vec![0u32; small];
    let mut out = BTreeSet::new();
    fn extend(u: usize, n: usize, m: usize, image: &mut Vec<u32>, out: &mut BTreeSet<u32>) {
        if u == image.len() {
            out.insert(image.iter().fold(0u32, |s, &v| s | 1 << v));
            return;
        }
        let parent = image[u & (u - 1)];
        for bit in 0..n {
            let cand = parent ^ (1 << bit);
            if image[..u].contains(&cand) {
                continue;
            }
            let adjacent_ok = (0..m)
                .map(|j| u ^ (1 << j))
                .filter(|&w| w < u)
                .all(|w| (image[w] ^ cand).count_ones() == 1);
            if adjacent_ok {
                image[u] = cand;
                extend(u + 1, n, m, image, out);
            }
        }
    }
    for start in 0..1u32 << n {
        image[0] = start;
        extend(1, n, m, &mut image, &mut out);
    }
    Ok(out)
}

/// Whether every `m`-cube subgraph of the `n`-cube graph is the 1-skeleton
/// of an `m`-face, and every `m`-face arises.
pub fn cube_graph_face_check(n: usize, m: usize) -> Result<bool> {
    let found = cube_subgraph_vertex_sets(n, m)?;
    let all_faces = found.iter().all(|&set| {
        let verts: Vec<u32> = (0..1u32 << n).filter(|v| set >> v & 1 == 1).collect();
        let varying = verts.iter().fold(0u32, |acc, v| acc | (v ^ verts[0]));
        verts.len() == 1 << m && varying.count_ones() as usize == m
    });
    let face_count = crate::vector_calculus::binomial(n as u64, m as u64) * (1u64 << (n - m));
    Ok(all_faces && num_bigint::BigInt::from(found.len()) == face_count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use VertexLabel::TVertex;

    fn cf(ids: &[u32], apex: bool) -> Face {
        Face::new(cyc(ids).chain(apex.then_some(Apex)))
    }

    fn with_t(mut f: Vec<VertexLabel>) -> Face {
        f.extend((1..=3).map(TVertex));
        Face::new(f)
    }

    #[test]
    fn missing_faces_1_6_9() {
        let p = predicted_missing_faces(1, 6, 9, 1).unwrap();
        let t1: Vec<Face> = p
            .iter()
            .filter(|f| f.tag == FaceTag::MissingType1)
            .map(|f| f.vertices.clone())
            .collect();
        let t2: Vec<Face> = p
            .iter()
            .filter(|f| f.tag == FaceTag::MissingType2)
            .map(|f| f.vertices.clone())
            .collect();
        assert_eq!(
            t1,
            vec![cf(&[1, 3], true), cf(&[1, 4], true), cf(&[1, 5], true)]
        );
        assert_eq!(
            t2,
            vec![cf(&[2, 4], false), cf(&[2, 5], false), cf(&[3, 5], false)]
        );

        let p = predicted_missing_faces(1, 6, 9, 2).unwrap();
        let t1: Vec<Face> = p
            .iter()
            .filter(|f| f.tag == FaceTag::MissingType1)
            .map(|f| f.vertices.clone())
            .collect();
        assert_eq!(t1, vec![cf(&[2, 4], true), cf(&[2, 5], true)]);
        assert_eq!(p.len(), 6);
    }

    #[test]
    fn brute_missing_faces_small() {
        let tet = SimplicialComplex::simplex_boundary((1..=4).map(VertexLabel::Plain)).unwrap();
        assert_eq!(brute_missing_faces(&tet, 3), vec![]);
        let sq = SimplicialComplex::from_facets(
            [[1, 2], [2, 3], [3, 4], [1, 4]].map(|e| e.map(VertexLabel::Plain)),
        )
        .unwrap();
        assert_eq!(brute_missing_faces(&sq, 2).len(), 2);
    }

    #[test]
    fn missing_faces_match_brute_force() {
        for a in 1..=4 {
            let k = diamond_boundary(DiamondSpec::new(1, 6, 9, a).unwrap()).unwrap();
            let mut predicted: Vec<Face> = predicted_missing_faces(1, 6, 9, a)
                .unwrap()
                .into_iter()
                .map(|f| f.vertices)
                .collect();
            predicted.sort();
            assert_eq!(brute_missing_faces(&k, 3), predicted, "a={a}");
        }
    }

    #[test]
    fn stacked_facets_1_6_9() {
        let p = predicted_stacked_facets(1, 6, 9, 2).unwrap();
        let t1: Vec<Face> = p
            .iter()
            .filter(|f| f.tag == FaceTag::FacetTypeI)
            .map(|f| f.vertices.clone())
            .collect();
        let t2: Vec<Face> = p
            .iter()
            .filter(|f| f.tag == FaceTag::FacetTypeII)
            .map(|f| f.vertices.clone())
            .collect();
        let ap = |a: u32, b: u32| with_t(vec![Apex, CVertex(a), CVertex(b)]);
        assert_eq!(t1, vec![ap(1, 2), ap(2, 3), ap(3, 4), ap(4, 5)]);
        let v2 = |a: u32, b: u32| with_t(vec![CVertex(2), CVertex(a), CVertex(b)]);
        assert_eq!(t2, vec![v2(3, 4), v2(4, 5)]);
        assert!(p.iter().all(|f| f.vertices.len() == 6));

        let p1 = predicted_stacked_facets(1, 6, 9, 1).unwrap();
        assert_eq!(p1.len(), 7);
    }

    #[test]
    fn oracle_matches_prediction() {
        for a in 1..=4 {
            let k = diamond_boundary(DiamondSpec::new(1, 6, 9, a).unwrap()).unwrap();
            let mut predicted: Vec<Face> = predicted_stacked_facets(1, 6, 9, a)
                .unwrap()
                .into_iter()
                .map(|f| f.vertices)
                .collect();
            predicted.sort();
            assert_eq!(oracle_stacked_facets(&k, 6, 1), predicted, "a={a}");
        }
    }

    #[test]
    fn oracle_rejects_sets_with_missing_edge() {
        let k = diamond_boundary(DiamondSpec::new(1, 6, 9, 1).unwrap()).unwrap();
        let oracle = oracle_stacked_facets(&k, 6, 1);
        // {c2,c4} is a missing edge of D_1
        assert!(oracle
            .iter()
            .all(|f| !(f.contains(&CVertex(2)) && f.contains(&CVertex(4)))));
    }

    #[test]
    fn witness_1_6_9() {
        let w = incompatibility_witness(1, 6, 9).unwrap();
        assert_eq!(w.sigma, "+--------");
        assert_eq!((w.a, w.b), (1, 4));
        assert_eq!(w.face, with_t(vec![CVertex(1), CVertex(2), CVertex(3)]));
        assert_eq!(w.face_type_in_a, FaceTag::FacetTypeII);
        assert_eq!(w.face_type_in_b, FaceTag::Unclassified);
        assert!(w.holds());
        assert!(w.confirm_with_complexes().unwrap());
        let json = w.to_json();
        for key in ["\"k\"", "\"sigma\"", "\"face\"", "\"face_type_in_b\""] {
            assert!(json.contains(key));
        }
    }

    #[test]
    fn witness_errors() {
        assert!(incompatibility_witness(1, 6, 6).is_err());
        assert!(incompatibility_witness(1, 5, 9).is_err());
        assert!(incompatibility_witness(2, 8, 12).unwrap().holds());
    }

    #[test]
    fn cube_graph_facts() {
        assert_eq!(cube_subgraph_vertex_sets(3, 2).unwrap().len(), 6);
        assert!(cube_graph_face_check(3, 2).unwrap());
        assert!(cube_graph_face_check(4, 2).unwrap());
        assert!(cube_graph_face_check(4, 3).unwrap());
        assert!(cube_graph_face_check(5, 2).is_err());
    }
}
