//! Batch cross-checks of every closed form against enumeration, grouped
//! into suites that the `verify` subcommand runs.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex, VertexLabel};
use crate::constructions::{
    cyclic_facets, cyclic_is_face, diamond_boundary, diamond_g_closed, lex_subdivision,
    lex_subdivision_via_cyclic_factor, mw_boundary, mw_first_vertex_link,
    mw_first_vertex_link_model, mw_g_closed, DiamondSpec, LexBase, MwSpec,
};
use crate::error::Error;
use crate::q_analysis::{
    binomial_identity_check, blind_blind_family, blind_blind_gc, clbc_scan, gc_q_closed,
    gsc_q_closed, q_family, q_grid, q_report, ray_convergence_report, vertex_figure_histogram,
    vertex_figure_histogram_enumerated, QSpec,
};
use crate::stackedness::{
    brute_missing_faces, cube_graph_face_check, incompatibility_witness, oracle_stacked_facets,
    predicted_missing_faces, predicted_stacked_facets,
};
use crate::vector_calculus::{
    binomial, check_cubical_ds, check_simplicial_ds, f_to_h, f_to_hsc, g_to_h, gc_from_gsc,
    gc_to_hc, h_to_g, hsc_to_hc, pow2, FVector,
};

use VertexLabel::{Apex, CVertex, Plain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Transforms,
    Constructions,
    Qvectors,
    Stackedness,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Transforms,
        Suite::Constructions,
        Suite::Qvectors,
        Suite::Stackedness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Transforms => "transforms",
            Suite::Constructions => "constructions",
            Suite::Qvectors => "qvectors",
            Suite::Stackedness => "stackedness",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Parameter bounds for a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub max_k: usize,
    pub max_d: usize,
    pub max_n: usize,
    /// Upper end of the binomial-identity scan.
    pub max_m: usize,
}

impl Grid {
    pub const SMALL: Grid = Grid {
        max_k: 2,
        max_d: 8,
        max_n: 12,
        max_m: 20,
    };

    pub const FULL: Grid = Grid {
        max_k: 3,
        max_d: 10,
        max_n: 14,
        max_m: 30,
    };
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}/{} ({} cases)",
            self.suite, self.name, self.cases
        )?;
        for msg in self.failures.iter().take(5) {
            write!(f, "\n  {msg}")?;
        }
        if self.failures.len() > 5 {
            write!(f, "\n  ... {} more", self.failures.len() - 5)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run<T, F>(suite: Suite, name: &str, cases: Vec<T>, f: F) -> CheckResult
where
    T: Sync + fmt::Debug,
    F: Fn(&T) -> Outcome + Sync,
{
    let failures = cases
        .par_iter()
        .filter_map(|c| f(c).err().map(|e| format!("{c:?}: {e}")))
        .collect();
    CheckResult {
        suite,
        name: name.to_string(),
        cases: cases.len(),
        failures,
    }
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn times_t(a: &[BigInt]) -> Vec<BigInt> {
    std::iter::once(BigInt::zero())
        .chain(a.iter().cloned())
        .collect()
}

fn neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| -x).collect()
}

fn f_poly(k: &SimplicialComplex) -> Vec<BigInt> {
    k.f_vector().counts().to_vec()
}

fn h_poly(k: &SimplicialComplex) -> Vec<BigInt> {
    k.h_vector().entries().to_vec()
}

fn euler_ok(k: &SimplicialComplex) -> Outcome {
    let dim = k.dim();
    let expected = BigInt::one() + if dim % 2 == 0 { 1 } else { -1 };
    let chi = k.f_vector().euler_characteristic();
    ensure(chi == expected, || {
        format!("Euler characteristic {chi}, expected {expected}")
    })
}

fn cyclic_cases(g: Grid) -> Vec<(usize, usize)> {
    (2..=g.max_d)
        .flat_map(|d| (d + 1..=g.max_n).map(move |m| (d, m)))
        .collect()
}

fn mw_cases(g: Grid) -> Vec<MwSpec> {
    let mut out = Vec::new();
    for k in 2..=5 {
        for d in k..=g.max_d {
            for n in d + 1..=g.max_n {
                out.push(MwSpec::new(k, d, n).expect("in range"));
            }
        }
    }
    out
}

fn diamond_cases(g: Grid) -> Vec<DiamondSpec> {
    let mut out = Vec::new();
    for s in q_grid(g.max_k, g.max_d, g.max_n) {
        for a in 1..=s.diamond_count() {
            out.push(DiamondSpec::new(s.k(), s.d(), s.n(), a).expect("in range"));
        }
    }
    out
}

fn stack_cases(g: Grid) -> Vec<DiamondSpec> {
    diamond_cases(g)
        .into_iter()
        .filter(|s| s.d() >= 2 * s.k() + 4)
        .collect()
}

/// f-vectors `(f_0, ..., f_{d-1})` of the boundary of a `d`-cube with
/// `stacks` further cubes glued on facets.
fn stacked_cube_f(d: usize, stacks: usize) -> Vec<BigInt> {
    let cube: Vec<BigInt> = (0..d)
        .map(|j| binomial(d as u64, j as u64) * pow2(d - j))
        .collect();
    // faces of a (d-1)-cube facet, plus the facet itself
    let facet: Vec<BigInt> = (0..d)
        .map(|j| {
            if j + 1 < d {
                binomial(d as u64 - 1, j as u64) * pow2(d - 1 - j)
            } else {
                BigInt::one()
            }
        })
        .collect();
    let mut f = cube.clone();
    for _ in 0..stacks {
        for j in 0..d {
            f[j] += &cube[j] - &facet[j] - &facet[j];
            if j + 1 < d {
                f[j] += &facet[j];
            }
        }
    }
    f
}

pub fn transforms(g: Grid) -> Vec<CheckResult> {
    let s = Suite::Transforms;
    let cyclic = cyclic_cases(g);
    vec![
        run(
            s,
            "h palindromic and g round trip on cyclic spheres",
            cyclic.clone(),
            |&(d, m)| {
                let h = lib(cyclic_facets(d, m))?.h_vector();
                ensure(check_simplicial_ds(&h), || {
                    format!("h={:?} not palindromic", h.entries())
                })?;
                let back = g_to_h(&h_to_g(&h));
                ensure(back == h, || {
                    format!("round trip gave {:?}", back.entries())
                })
            },
        ),
        run(s, "sum of h equals facet count", cyclic, |&(d, m)| {
            let f = lib(cyclic_facets(d, m))?.f_vector();
            let h = lib(f_to_h(&f, d))?;
            let sum: BigInt = h.entries().iter().sum();
            ensure(sum == f.get(d as isize - 1), || format!("sum h = {sum}"))
        }),
        run(
            s,
            "cubical Dehn-Sommerville on stacked cubes",
            (1..=g.max_d)
                .flat_map(|d| (0..4).map(move |t| (d, t)))
                .collect(),
            |&(d, t)| {
                let f = lib(FVector::from_face_counts(stacked_cube_f(d, t)))?;
                let hc = lib(hsc_to_hc(&lib(f_to_hsc(&f, d))?, d))?;
                ensure(check_cubical_ds(&hc), || format!("h^c={:?}", hc.entries()))
            },
        ),
        run(
            s,
            "short and long cubical g re-substitution",
            q_grid(g.max_k, g.max_d, g.max_n),
            |&q| {
                let gsc = gsc_q_closed(q);
                let gc = lib(gc_from_gsc(&gsc, q.d()))?;
                let gci = |i: usize| {
                    if i <= q.d() / 2 {
                        gc.get(i)
                    } else {
                        BigInt::zero()
                    }
                };
                let e = gsc.entries();
                ensure(e[0] == gci(0) * 2 + gci(1), || {
                    "g^sc_0 != 2g^c_0 + g^c_1".into()
                })?;
                for (i, x) in e.iter().enumerate().skip(1) {
                    ensure(*x == gci(i) + gci(i + 1), || format!("g^sc_{i} mismatch"))?;
                }
                Ok(())
            },
        ),
        run(
            s,
            "exact arithmetic past 64 bits",
            vec![70usize, 100, 128, 200],
            |&n| {
                let q = lib(QSpec::new(1, 6, n))?;
                let r = lib(q_report(q, false))?;
                ensure(r.routes_agree(), || "routes disagree".into())?;
                ensure(r.gc_closed.get(1) == pow2(n) - pow2(6), || {
                    "g^c_1 != 2^n - 2^d".into()
                })
            },
        ),
    ]
}

fn lex_is_subdivision(base: LexBase, a: usize) -> Outcome {
    let lex = lib(lex_subdivision(base, a))?;
    let bd = lib(base.residual_boundary(0))?;
    ensure(lex.vertices() == bd.vertices(), || {
        "vertex support differs".into()
    })?;
    ensure(lex.is_pure() && lex.dim() == base.dim() as isize, || {
        "not pure of full dimension".into()
    })?;
    ensure(lex.boundary_ridges() == bd.facets(), || {
        "boundary differs from the polytope boundary".into()
    })
}

pub fn constructions(g: Grid) -> Vec<CheckResult> {
    let s = Suite::Constructions;
    let mws = mw_cases(g);
    let diamonds = diamond_cases(g);
    let lex_cases: Vec<(MwSpec, usize)> = mws
        .iter()
        .flat_map(|&m| (1..=LexBase::Mw(m).max_lex_index()).map(move |a| (m, a)))
        .collect();
    let gale_cases: Vec<(usize, usize)> = (2..=6)
        .flat_map(|d| (d + 1..=12).map(move |m| (d, m)))
        .collect();
    let join_pool: Vec<SimplicialComplex> = vec![
        SimplicialComplex::simplex_boundary((1..=3).map(Plain)).expect("triangle"),
        SimplicialComplex::simplex((1..=2).map(Plain)).expect("edge"),
        SimplicialComplex::from_facets(vec![
            vec![Plain(1), Plain(2)],
            vec![Plain(2), Plain(3)],
            vec![Plain(4)],
        ])
        .expect("path plus point"),
        cyclic_facets(2, 5).expect("pentagon"),
        cyclic_facets(3, 6).expect("C(3,6)"),
    ];
    let join_cases: Vec<(usize, usize)> = (0..join_pool.len())
        .flat_map(|i| (0..join_pool.len()).map(move |j| (i, j)))
        .collect();
    let monotone_cases: Vec<(usize, usize)> = cyclic_cases(g)
        .into_iter()
        .filter(|&(_, m)| m <= 9)
        .collect();
    let lemma_cases: Vec<MwSpec> = mws
        .iter()
        .copied()
        .filter(|m| m.cyclic_dim() % 2 == 0 && m.cyclic_dim() <= 4)
        .filter(|m| m.dim() <= 7 && m.num_vertices() <= 11)
        .collect();

    vec![
        run(
            s,
            "Euler relation and purity of cyclic spheres",
            cyclic_cases(g),
            |&(d, m)| {
                let c = lib(cyclic_facets(d, m))?;
                ensure(c.is_pure(), || "not pure".into())?;
                euler_ok(&c)
            },
        ),
        run(
            s,
            "Gale evenness agrees with face membership",
            gale_cases,
            |&(d, m)| {
                let c = lib(cyclic_facets(d, m))?;
                for size in 0..=d {
                    for mask in crate::complex::combinations(m, size) {
                        let subset: Vec<u32> = (0..m as u32)
                            .filter(|i| mask >> i & 1 == 1)
                            .map(|i| i + 1)
                            .collect();
                        let labels: Vec<VertexLabel> = subset.iter().map(|&i| CVertex(i)).collect();
                        let member = c.contains_face(&labels);
                        ensure(lib(cyclic_is_face(&subset, d, m))? == member, || {
                            format!("{subset:?}: face={member}")
                        })?;
                    }
                }
                Ok(())
            },
        ),
        run(s, "join multiplies f-polynomials", join_cases, |&(i, j)| {
            let a = &join_pool[i];
            let b = lib(join_pool[j].relabel(|v| match v {
                Plain(x) => Plain(x + 100),
                CVertex(x) => Plain(x + 200),
                other => other,
            }))?;
            let joined = lib(a.join(&b))?;
            ensure(f_poly(&joined) == poly_mul(&f_poly(a), &f_poly(&b)), || {
                "f(K*L) != f(K)f(L)".into()
            })
        }),
        run(
            s,
            "removing a facet never increases a face count",
            monotone_cases,
            |&(d, m)| {
                let c = lib(cyclic_facets(d, m))?;
                let full = f_poly(&c);
                let facets = c.facets();
                for skip in 0..facets.len() {
                    let rest: Vec<Face> = facets
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, f)| f.clone())
                        .collect();
                    let smaller = f_poly(&lib(SimplicialComplex::from_facets(
                        rest.iter().map(|f| f.labels().to_vec()),
                    ))?);
                    ensure(smaller.iter().zip(&full).all(|(x, y)| x <= y), || {
                        format!("removing facet {skip}")
                    })?;
                }
                Ok(())
            },
        ),
        run(s, "MW g-vector equals closed form", mws.clone(), |&m| {
            let k = lib(mw_boundary(m))?;
            ensure(k.is_pure(), || "not pure".into())?;
            euler_ok(&k)?;
            let h = k.h_vector();
            ensure(check_simplicial_ds(&h), || "Dehn-Sommerville fails".into())?;
            let g = h_to_g(&h);
            let closed = mw_g_closed(m);
            ensure(g == closed, || {
                format!("g={:?} closed={:?}", g.entries(), closed.entries())
            })
        }),
        run(s, "first vertex link of even MW", lemma_cases, |&m| {
            let link = lib(mw_first_vertex_link(m))?;
            let model = lib(mw_first_vertex_link_model(m))?;
            ensure(link == model, || {
                "link differs from the smaller MW boundary".into()
            })
        }),
        run(s, "Lex routes agree", lex_cases.clone(), |&(m, a)| {
            let direct = lib(lex_subdivision(LexBase::Mw(m), a))?;
            let factored = lib(lex_subdivision_via_cyclic_factor(m, a))?;
            ensure(direct == factored, || "facet sets differ".into())
        }),
        run(s, "Lex is a subdivision", lex_cases, |&(m, a)| {
            lex_is_subdivision(LexBase::Mw(m), a)
        }),
        run(
            s,
            "Lex of cyclic polytopes is a subdivision",
            {
                cyclic_cases(g)
                    .into_iter()
                    .filter(|&(_, m)| m <= 11)
                    .flat_map(|(d, m)| (1..=m - d).map(move |a| (d, m, a)))
                    .collect()
            },
            |&(d, m, a)| lex_is_subdivision(lib(LexBase::cyclic(d, m))?, a),
        ),
        run(
            s,
            "diamond spheres and closed-form g",
            diamonds.clone(),
            |&spec| {
                let k = lib(diamond_boundary(spec))?;
                ensure(k.is_pure(), || "not pure".into())?;
                euler_ok(&k)?;
                let h = k.h_vector();
                ensure(check_simplicial_ds(&h), || "Dehn-Sommerville fails".into())?;
                let closed = lib(diamond_g_closed(spec.k(), spec.d(), spec.n(), spec.a()))?;
                ensure(h_to_g(&h) == closed, || {
                    format!("g={:?}", h_to_g(&h).entries())
                })
            },
        ),
        run(s, "diamond f-relation", diamonds.clone(), |&spec| {
            let base = spec.base();
            let lex = lib(lex_subdivision(LexBase::Mw(base), spec.a()))?;
            let bd = lib(mw_boundary(base))?;
            let rhs = poly_add(&f_poly(&lex), &times_t(&f_poly(&bd)));
            ensure(f_poly(&lib(diamond_boundary(spec))?) == rhs, || {
                "f(D) != f(Lex) + t f(P)".into()
            })?;
            if spec.a() == 1 {
                let lk = lib(bd.link(&[CVertex(1)]))?;
                let ast = poly_add(&f_poly(&bd), &neg(&times_t(&f_poly(&lk))));
                let b1 = poly_mul(&[BigInt::one(), BigInt::one()], &ast);
                ensure(f_poly(&lex) == b1, || "f(Lex_1) != (1+t) f(ast)".into())?;
            }
            Ok(())
        }),
        run(
            s,
            "h-relation under contraction",
            diamonds.into_iter().filter(|s| s.a() >= 2).collect(),
            |&spec| {
                let k = lib(diamond_boundary(spec))?;
                let contracted = lib(k.contract_edge(Apex, CVertex(1)))?;
                let lk = lib(lib(mw_boundary(spec.base()))?.link(&[CVertex(1)]))?;
                let rhs = poly_add(&h_poly(&contracted), &times_t(&h_poly(&lk)));
                ensure(h_poly(&k) == rhs, || "h(D) != h(K) + t h(lk)".into())?;
                let shifted = lib(contracted.relabel(|v| match v {
                    CVertex(i) => CVertex(i - 1),
                    other => other,
                }))?;
                let smaller = lib(diamond_boundary(lib(DiamondSpec::new(
                    spec.k(),
                    spec.d(),
                    spec.n() - 1,
                    spec.a() - 1,
                ))?))?;
                ensure(shifted == smaller, || {
                    "contraction is not the smaller diamond".into()
                })
            },
        ),
    ]
}

pub fn qvectors(g: Grid) -> Vec<CheckResult> {
    let s = Suite::Qvectors;
    let grid = q_grid(g.max_k, g.max_d, g.max_n);
    let ray_cases: Vec<(usize, usize)> = {
        let mut v: Vec<(usize, usize)> = grid.iter().map(|q| (q.k(), q.d())).collect();
        v.dedup();
        v
    };
    vec![
        run(
            s,
            "histogram closed form matches enumeration",
            grid.clone(),
            |q| {
                let closed = lib(vertex_figure_histogram(q.n(), q.d()))?;
                let counted = lib(vertex_figure_histogram_enumerated(q.n(), q.d()))?;
                ensure(closed == counted, || "histograms differ".into())?;
                ensure(closed.total() == pow2(q.n()), || {
                    "counts do not sum to 2^n".into()
                })
            },
        ),
        run(s, "g^sc and g^c routes agree", grid.clone(), |&q| {
            let r = lib(q_report(q, q.n() <= 12))?;
            ensure(r.routes_agree(), || format!("{r:?}"))
        }),
        run(
            s,
            "g^c_{k+2} vanishes",
            grid.iter()
                .copied()
                .filter(|q| q.d() >= 2 * q.k() + 4)
                .collect(),
            |&q| {
                let v = gc_q_closed(q).get(q.k() + 2);
                ensure(v.is_zero(), || format!("g^c_(k+2) = {v}"))
            },
        ),
        run(s, "h^c from g^c is palindromic", grid, |&q| {
            let hc = gc_to_hc(&gc_q_closed(q));
            ensure(check_cubical_ds(&hc), || format!("h^c={:?}", hc.entries()))
        }),
        run(
            s,
            "binomial identity",
            {
                (1..=6)
                    .flat_map(|k| (0..=g.max_m).map(move |m| (k, m)))
                    .collect()
            },
            |&(k, m)| {
                let r = lib(binomial_identity_check(k, m))?;
                ensure(r.equal, || format!("{} != {}", r.left, r.right))
            },
        ),
        run(
            s,
            "ray dominant coordinate does not decrease",
            ray_cases,
            |&(k, d)| {
                let ns: Vec<usize> = (d + 1..=d + 24).collect();
                let rows = lib(ray_convergence_report(k, d, &ns))?;
                let mut last = None;
                for r in &rows {
                    let v = r.normalized.as_ref().ok_or("missing normalization")?[k].clone();
                    if let Some(prev) = &last {
                        ensure(&v >= prev, || format!("decrease at n={}", r.spec.n()))?;
                    }
                    last = Some(v);
                }
                Ok(())
            },
        ),
        run(
            s,
            "Blind-Blind top coordinate",
            {
                (2..=12usize)
                    .flat_map(|d| (1..=d / 2).map(move |k| (d, k)))
                    .collect()
            },
            |&(d, k)| {
                let gc = lib(blind_blind_gc(d, k))?;
                ensure(gc.get(k) == pow2(d - k), || {
                    format!("g^c_k = {}", gc.get(k))
                })?;
                ensure((k + 1..=d / 2).all(|i| gc.get(i).is_zero()), || {
                    "nonzero above k".into()
                })
            },
        ),
        {
            let family: Vec<_> = q_family(g.max_k, g.max_d, g.max_n)
                .into_iter()
                .chain(blind_blind_family(12))
                .collect();
            let n = family.len();
            let report = clbc_scan(family);
            CheckResult {
                suite: s,
                name: "g^c_2 nonnegative".into(),
                cases: n,
                failures: report
                    .violations
                    .iter()
                    .map(|v| format!("{}: g^c_2 = {}", v.name, v.g2))
                    .collect(),
            }
        },
    ]
}

pub fn stackedness(g: Grid) -> Vec<CheckResult> {
    let s = Suite::Stackedness;
    let cases = stack_cases(g);
    let witness_cases: Vec<(usize, usize, usize)> = q_grid(g.max_k, g.max_d, g.max_n)
        .into_iter()
        .filter(|q| q.d() >= 2 * q.k() + 4 && q.n() > q.d())
        .map(|q| (q.k(), q.d(), q.n()))
        .collect();
    vec![
        run(
            s,
            "missing faces match brute force",
            cases.clone(),
            |&spec| {
                let k = lib(diamond_boundary(spec))?;
                let brute = brute_missing_faces(&k, spec.k() + 2);
                ensure(brute.iter().all(|f| f.len() > spec.k()), || {
                    "diamond is not k-neighborly".into()
                })?;
                let mut predicted: Vec<Face> = lib(predicted_missing_faces(
                    spec.k(),
                    spec.d(),
                    spec.n(),
                    spec.a(),
                ))?
                .into_iter()
                .map(|f| f.vertices)
                .collect();
                predicted.sort();
                ensure(brute == predicted, || format!("brute={brute:?}"))
            },
        ),
        run(s, "stacked facets match oracle", cases.clone(), |&spec| {
            let k = lib(diamond_boundary(spec))?;
            let oracle = oracle_stacked_facets(&k, spec.d(), spec.k());
            let mut predicted: Vec<Face> = lib(predicted_stacked_facets(
                spec.k(),
                spec.d(),
                spec.n(),
                spec.a(),
            ))?
            .into_iter()
            .map(|f| f.vertices)
            .collect();
            predicted.sort();
            ensure(oracle == predicted, || format!("oracle={oracle:?}"))
        }),
        run(
            s,
            "stacked facets avoid missing faces",
            cases.clone(),
            |&spec| {
                let (k, d, n, a) = (spec.k(), spec.d(), spec.n(), spec.a());
                let missing = lib(predicted_missing_faces(k, d, n, a))?;
                for f in lib(predicted_stacked_facets(k, d, n, a))? {
                    if let Some(m) = missing.iter().find(|m| m.vertices.is_subset(&f.vertices)) {
                        return Err(format!("{} contains {}", f.vertices, m.vertices));
                    }
                }
                Ok(())
            },
        ),
        run(
            s,
            "stacked triangulation has no low interior faces",
            cases,
            |&spec| {
                let k = lib(diamond_boundary(spec))?;
                let facets = oracle_stacked_facets(&k, spec.d(), spec.k());
                let tri = lib(SimplicialComplex::from_facets(
                    facets.iter().map(|f| f.labels().to_vec()),
                ))?;
                for f in k.facets() {
                    ensure(tri.contains_face(f.labels()), || {
                        format!("boundary facet {f} missing")
                    })?;
                }
                // D_a has dimension d-1, so interior faces need dimension >= d-k-2
                let limit = spec.d() - spec.k() - 2;
                for f in tri.faces() {
                    if f.len() < limit + 1 && !k.contains_face(f.labels()) {
                        return Err(format!(
                            "interior face {f} of dimension {}",
                            f.len() as isize - 1
                        ));
                    }
                }
                Ok(())
            },
        ),
        run(s, "incompatibility witness", witness_cases, |&(k, d, n)| {
            let w = lib(incompatibility_witness(k, d, n))?;
            ensure(w.holds(), || format!("{w:?}"))?;
            ensure(lib(w.confirm_with_complexes())?, || {
                "explicit complexes disagree".into()
            })
        }),
        run(
            s,
            "cube subgraphs are faces",
            {
                (1..=4usize)
                    .flat_map(|n| (1..=n).map(move |m| (n, m)))
                    .collect()
            },
            |&(n, m)| {
                ensure(lib(cube_graph_face_check(n, m))?, || {
                    "non-face subgraph".into()
                })
            },
        ),
    ]
}

/// Runs the given suites in order.
pub fn run_suites(suites: &[Suite], grid: Grid) -> VerifyReport {
    let checks = suites
        .iter()
        .flat_map(|s| match s {
            Suite::Transforms => transforms(grid),
            Suite::Constructions => constructions(grid),
            Suite::Qvectors => qvectors(grid),
            Suite::Stackedness => stackedness(grid),
        })
        .collect();
    VerifyReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TINY: Grid = Grid {
        max_k: 1,
        max_d: 6,
        max_n: 8,
        max_m: 10,
    };

    #[test]
    fn stacked_cube_counts() {
        // two squares glued along an edge: a hexagon
        let f = stacked_cube_f(2, 1);
        assert_eq!(f, vec![BigInt::from(6), BigInt::from(6)]);
        // two 3-cubes glued on a square
        let f = stacked_cube_f(3, 1);
        assert_eq!(f, [12, 20, 10].map(BigInt::from).to_vec());
    }

    #[test]
    fn suites_pass_on_tiny_grid() {
        let report = run_suites(&Suite::ALL, TINY);
        for c in &report.checks {
            assert!(c.passed(), "{c}");
            assert!(c.cases > 0, "{c}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn failure_display_lists_cases() {
        let r = run(Suite::Transforms, "demo", vec![1, 2], |&x| {
            ensure(x == 1, || "bad".into())
        });
        assert!(!r.passed());
        assert_eq!(r.to_string(), "FAIL transforms/demo (2 cases)\n  2: bad");
    }
}
