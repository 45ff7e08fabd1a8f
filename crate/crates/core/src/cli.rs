//! Command-line front end. Data goes to the output stream (or `--output`),
//! diagnostics to the error stream. Exit codes: 0 success, 1 a check
//! failed, 2 bad parameters or input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::complex::{Face, SimplicialComplex};
use crate::constructions::{
    cyclic_facets, diamond_boundary, lex_subdivision, mw_boundary, DiamondSpec, LexBase, MwSpec,
};
use crate::exact_json;
use crate::q_analysis::{q_report, ray_convergence_report, vertex_figure_histogram, QSpec};
use crate::report::{decimal6, rational, ray_table, Table};
use crate::stackedness::{
    brute_missing_faces, incompatibility_witness, oracle_stacked_facets, predicted_missing_faces,
    predicted_stacked_facets,
};
use crate::vector_calculus::{
    check_cubical_ds, check_simplicial_ds, f_to_h, f_to_hsc, h_to_g, hc_to_gc, hsc_to_gsc,
    hsc_to_hc, FVector,
};
use crate::verify::{run_suites, Grid, Suite};

/// Environment variable capping worker threads (0 or unset: automatic).
pub const THREADS_ENV: &str = "POLYGV_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "polygv",
    version,
    about = "Exact face vectors of cyclic, McMullen-Walkup, lexicographic-diamond and cubical Q(k,d,n) polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each subcommand has its own default.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Write data here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a boundary complex or subdivision and print it as JSON.
    Construct(ConstructArgs),
    /// f-vector of a complex JSON file.
    Fvec {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Simplicial or cubical h- and g-vectors.
    Gvec {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "simplicial")]
        kind: GvecKind,
    },
    /// Short and long cubical g-vectors of Q(k,d,n) by every route.
    QReport {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Also sum g-vectors of explicitly built diamonds.
        #[arg(long)]
        explicit: bool,
    },
    /// Normalized g^c(Q(k,d,n)) for a range of n.
    Ray {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
    },
    /// Missing faces, stacked facets and the incompatibility witness.
    Stackedness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// A single diamond index; all indices when omitted.
        #[arg(long)]
        a: Option<usize>,
    },
    /// Run verification suites; exits 1 on any mismatch.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value = "small")]
        grid: GridArg,
    },
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Cyclic dimension.
    #[arg(long = "K", value_name = "K")]
    big_k: Option<usize>,
    /// MW dimension.
    #[arg(long = "D", value_name = "D")]
    big_d: Option<usize>,
    /// MW vertex count.
    #[arg(long = "N", value_name = "N")]
    big_n: Option<usize>,
    /// Cyclic vertex count.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Lexicographic index.
    #[arg(long)]
    a: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Cyclic,
    Mw,
    Lex,
    Diamond,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GvecKind {
    Simplicial,
    CubicalFromF,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Transforms,
    Constructions,
    Qvectors,
    Stackedness,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GridArg {
    Small,
    Full,
}

/// A parameter or input problem, reported with exit code 2.
struct Failure(String);

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure(e.to_string())
    }
}

/// What a subcommand produced: JSON always, a table when the data is
/// tabular, and whether every internal check held.
struct Artifact {
    json: Value,
    table: Option<Table>,
    notes: Vec<String>,
    /// Whether the table form prints the table before the notes.
    text_table: bool,
    /// Diagnostics for the error stream, whatever the format.
    warnings: Vec<String>,
    ok: bool,
}

impl Artifact {
    fn json(json: Value) -> Self {
        Artifact {
            json,
            table: None,
            notes: Vec::new(),
            text_table: true,
            warnings: Vec::new(),
            ok: true,
        }
    }
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(exact_json::value).collect())
}

fn tuple(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn cell(v: &[BigInt], i: usize) -> String {
    v.get(i).map(ToString::to_string).unwrap_or_default()
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure(format!("--family {family} needs --{flag}")))
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

fn complex_artifact(k: &SimplicialComplex) -> Artifact {
    let json: Value = serde_json::from_str(&k.to_json()).expect("complex JSON is valid");
    let mut table = Table::new(["facet"]);
    for f in k.facets() {
        table.push([f.to_string()]);
    }
    Artifact {
        table: Some(table),
        ..Artifact::json(json)
    }
}

fn construct(args: &ConstructArgs) -> Result<Artifact, Failure> {
    let complex = match args.family {
        Family::Cyclic => cyclic_facets(
            need(args.big_k, "K", "cyclic")?,
            need(args.m, "m", "cyclic")?,
        )?,
        Family::Mw => mw_boundary(MwSpec::new(
            need(args.big_k, "K", "mw")?,
            need(args.big_d, "D", "mw")?,
            need(args.big_n, "N", "mw")?,
        )?)?,
        Family::Lex => {
            let a = need(args.a, "a", "lex")?;
            let base = match args.m {
                Some(m) => LexBase::cyclic(need(args.big_k, "K", "lex")?, m)?,
                None => LexBase::Mw(MwSpec::new(
                    need(args.big_k, "K", "lex")?,
                    need(args.big_d, "D", "lex")?,
                    need(args.big_n, "N", "lex")?,
                )?),
            };
            lex_subdivision(base, a)?
        }
        Family::Diamond => diamond_boundary(DiamondSpec::new(
            need(args.k, "k", "diamond")?,
            need(args.d, "d", "diamond")?,
            need(args.n, "n", "diamond")?,
            need(args.a, "a", "diamond")?,
        )?)?,
    };
    Ok(complex_artifact(&complex))
}

fn fvec(input: &PathBuf) -> Result<Artifact, Failure> {
    let k = SimplicialComplex::from_json(&read_input(input)?)?;
    let f = k.f_vector();
    let mut table = Table::new(["i", "f_i"]);
    for (i, c) in f.counts().iter().enumerate() {
        table.push([(i as isize - 1).to_string(), c.to_string()]);
    }
    Ok(Artifact {
        table: Some(table),
        ..Artifact::json(json!({ "dim": f.dim(), "f": ints(f.counts()) }))
    })
}

#[derive(Deserialize)]
struct CubicalInput {
    d: usize,
    f: Vec<serde_json::Number>,
}

fn gvec(input: &PathBuf, kind: GvecKind) -> Result<Artifact, Failure> {
    let text = read_input(input)?;
    match kind {
        GvecKind::Simplicial => {
            let k = SimplicialComplex::from_json(&text)?;
            let f = k.f_vector();
            let dim = (k.dim() + 1) as usize;
            let h = f_to_h(&f, dim)?;
            let g = h_to_g(&h);
            let ds = check_simplicial_ds(&h);
            let mut table = Table::new(["i", "f_(i-1)", "h_i", "g_i"]);
            for i in 0..=dim {
                table.push([
                    i.to_string(),
                    cell(f.counts(), i),
                    cell(h.entries(), i),
                    cell(g.entries(), i),
                ]);
            }
            Ok(Artifact {
                json: json!({
                    "kind": "simplicial",
                    "D": dim,
                    "f": ints(f.counts()),
                    "h": ints(h.entries()),
                    "g": ints(g.entries()),
                    "dehn_sommerville": ds,
                }),
                table: Some(table),
                notes: vec![format!(
                    "Dehn-Sommerville: {}",
                    if ds { "holds" } else { "fails" }
                )],
                text_table: true,
                warnings: Vec::new(),
                ok: true,
            })
        }
        GvecKind::CubicalFromF => {
            let raw: CubicalInput = serde_json::from_str(&text)
                .map_err(|e| Failure(format!("expected {{\"d\": .., \"f\": [f_0, ..]}}: {e}")))?;
            let counts = raw
                .f
                .iter()
                .map(|x| x.to_string().parse::<BigInt>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure(format!("f entries must be integers: {e}")))?;
            let f = FVector::from_face_counts(counts)?;
            let d = raw.d;
            let hsc = f_to_hsc(&f, d)?;
            let hc = hsc_to_hc(&hsc, d)?;
            let gsc = hsc_to_gsc(&hsc);
            let gc = hc_to_gc(&hc);
            let ds = check_cubical_ds(&hc);
            let mut table = Table::new(["i", "h^sc_i", "h^c_i", "g^sc_i", "g^c_i"]);
            for i in 0..=d {
                table.push([
                    i.to_string(),
                    cell(hsc.entries(), i),
                    cell(hc.entries(), i),
                    cell(gsc.entries(), i),
                    cell(gc.entries(), i),
                ]);
            }
            Ok(Artifact {
                json: json!({
                    "kind": "cubical",
                    "d": d,
                    "f": ints(&f.counts()[1..]),
                    "h_sc": ints(hsc.entries()),
                    "h_c": ints(hc.entries()),
                    "g_sc": ints(gsc.entries()),
                    "g_c": ints(gc.entries()),
                    "dehn_sommerville": ds,
                }),
                table: Some(table),
                notes: vec![format!(
                    "cubical Dehn-Sommerville: {}",
                    if ds { "holds" } else { "fails" }
                )],
                text_table: true,
                warnings: Vec::new(),
                ok: true,
            })
        }
    }
}

fn q_report_cmd(k: usize, d: usize, n: usize, explicit: bool) -> Result<Artifact, Failure> {
    let spec = QSpec::new(k, d, n)?;
    let r = q_report(spec, explicit)?;
    let hist = vertex_figure_histogram(n, d)?;
    let agree = r.routes_agree();

    let mut headers = vec!["i", "gsc_hetyei", "gsc_closed"];
    if explicit {
        headers.push("gsc_explicit");
    }
    headers.extend(["gc_from_short", "gc_closed"]);
    let mut table = Table::new(headers);
    for i in 0..=d / 2 {
        let mut row = vec![
            i.to_string(),
            cell(r.gsc_hetyei.entries(), i),
            cell(r.gsc_closed.entries(), i),
        ];
        if let Some(e) = &r.gsc_explicit {
            row.push(cell(e.entries(), i));
        }
        row.extend([
            cell(r.gc_from_short.entries(), i),
            cell(r.gc_closed.entries(), i),
        ]);
        table.push(row);
    }
    let histogram: serde_json::Map<String, Value> = hist
        .counts
        .iter()
        .map(|(a, c)| (a.to_string(), exact_json::value(c)))
        .collect();
    let json = json!({
        "k": k, "d": d, "n": n,
        "histogram": histogram,
        "gsc": {
            "hetyei": ints(r.gsc_hetyei.entries()),
            "closed": ints(r.gsc_closed.entries()),
            "explicit": r.gsc_explicit.as_ref().map(|g| ints(g.entries())),
        },
        "gc": {
            "from_short": ints(r.gc_from_short.entries()),
            "closed": ints(r.gc_closed.entries()),
        },
        "gc_k_plus_2": r.gc_k_plus_2().map(|v| exact_json::value(&v)),
        "routes_agree": agree,
    });
    let notes = vec![
        format!("Q({k},{d},{n})"),
        format!("g^sc = {}", tuple(r.gsc_closed.entries())),
        format!("g^c = {}", tuple(r.gc_closed.entries())),
        format!("routes agree: {}", if agree { "yes" } else { "NO" }),
    ];
    Ok(Artifact {
        json,
        table: Some(table),
        notes,
        text_table: true,
        warnings: Vec::new(),
        ok: agree,
    })
}

fn ray_cmd(k: usize, d: usize, from: usize, to: usize) -> Result<Artifact, Failure> {
    if from > to {
        return Err(Failure(format!("--n-from {from} exceeds --n-to {to}")));
    }
    let ns: Vec<usize> = (from..=to).collect();
    let rows = ray_convergence_report(k, d, &ns)?;
    let mut warnings = Vec::new();
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            if r.normalized.is_none() {
                warnings.push(format!("n={}: normalizer 2^n((n-d,k)) is zero; row left unnormalized", r.spec.n()));
            }
            json!({
                "k": r.spec.k(), "d": r.spec.d(), "n": r.spec.n(),
                "gc": ints(&r.gc),
                "normalized": r.normalized.as_ref().map(|v| v.iter().map(rational).collect::<Vec<_>>()),
                "normalized_decimal": r.normalized.as_ref().map(|v| v.iter().map(decimal6).collect::<Vec<_>>()),
                "dominant_index": r.dominant_index,
            })
        })
        .collect();
    Ok(Artifact {
        json: Value::Array(json_rows),
        table: Some(ray_table(&rows)),
        notes: Vec::new(),
        text_table: true,
        warnings,
        ok: true,
    })
}

fn faces_json(faces: &[Face]) -> Value {
    serde_json::to_value(faces).expect("faces serialize")
}

fn stackedness_cmd(k: usize, d: usize, n: usize, a: Option<usize>) -> Result<Artifact, Failure> {
    let q = QSpec::new(k, d, n)?;
    let indices: Vec<usize> = match a {
        Some(a) => vec![a],
        None => (1..=q.diamond_count()).collect(),
    };
    let mut ok = true;
    let mut diamonds = Vec::new();
    let mut table = Table::new(["a", "tag", "face", "confirmed"]);
    for a in indices {
        let complex = diamond_boundary(DiamondSpec::new(k, d, n, a)?)?;
        let missing = predicted_missing_faces(k, d, n, a)?;
        let stacked = predicted_stacked_facets(k, d, n, a)?;
        let brute = brute_missing_faces(&complex, k + 2);
        let oracle = oracle_stacked_facets(&complex, d, k);
        let mut pm: Vec<Face> = missing.iter().map(|f| f.vertices.clone()).collect();
        let mut ps: Vec<Face> = stacked.iter().map(|f| f.vertices.clone()).collect();
        pm.sort();
        ps.sort();
        let missing_match = pm == brute;
        let stacked_match = ps == oracle;
        ok &= missing_match && stacked_match;
        for f in &missing {
            let seen = brute.contains(&f.vertices);
            table.push([
                a.to_string(),
                format!("{:?}", f.tag),
                f.vertices.to_string(),
                yes(seen),
            ]);
        }
        for f in &stacked {
            let seen = oracle.contains(&f.vertices);
            table.push([
                a.to_string(),
                format!("{:?}", f.tag),
                f.vertices.to_string(),
                yes(seen),
            ]);
        }
        diamonds.push(json!({
            "a": a,
            "predicted_missing": serde_json::to_value(&missing).expect("faces serialize"),
            "brute_missing": faces_json(&brute),
            "missing_match": missing_match,
            "predicted_stacked": serde_json::to_value(&stacked).expect("faces serialize"),
            "oracle_stacked": faces_json(&oracle),
            "stacked_match": stacked_match,
        }));
    }
    let mut notes = Vec::new();
    let witness = if n > d {
        let w = incompatibility_witness(k, d, n)?;
        ok &= w.holds();
        notes.push(format!(
            "witness: sigma={} a={} b={} face={} in D_a: {:?}, in D_b: {:?}",
            w.sigma, w.a, w.b, w.face, w.face_type_in_a, w.face_type_in_b
        ));
        serde_json::to_value(&w).expect("witness serializes")
    } else {
        notes.push("witness: none, n = d leaves a single diamond".to_string());
        Value::Null
    };
    Ok(Artifact {
        json: json!({ "k": k, "d": d, "n": n, "diamonds": diamonds, "witness": witness }),
        table: Some(table),
        notes,
        text_table: true,
        warnings: Vec::new(),
        ok,
    })
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn verify_cmd(suite: SuiteArg, grid: GridArg) -> Artifact {
    let suites: Vec<Suite> = match suite {
        SuiteArg::Transforms => vec![Suite::Transforms],
        SuiteArg::Constructions => vec![Suite::Constructions],
        SuiteArg::Qvectors => vec![Suite::Qvectors],
        SuiteArg::Stackedness => vec![Suite::Stackedness],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let grid = match grid {
        GridArg::Small => Grid::SMALL,
        GridArg::Full => Grid::FULL,
    };
    let report = run_suites(&suites, grid);
    let mut table = Table::new(["suite", "check", "cases", "failures"]);
    for c in &report.checks {
        table.push([
            c.suite.to_string(),
            c.name.clone(),
            c.cases.to_string(),
            c.failures.len().to_string(),
        ]);
    }
    let failed = report.checks.iter().filter(|c| !c.passed()).count();
    Artifact {
        json: serde_json::to_value(&report).expect("report serializes"),
        table: Some(table),
        notes: report
            .checks
            .iter()
            .map(ToString::to_string)
            .chain(std::iter::once(if failed == 0 {
                "all checks passed".to_string()
            } else {
                format!("{failed} checks failed")
            }))
            .collect(),
        text_table: false,
        warnings: Vec::new(),
        ok: failed == 0,
    }
}

fn default_format(c: &Command) -> Format {
    match c {
        Command::QReport { .. } | Command::Verify { .. } => Format::Table,
        Command::Ray { .. } => Format::Csv,
        _ => Format::Json,
    }
}

fn render(a: &Artifact, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&a.json).expect("values serialize") + "\n"),
        Format::Csv => a
            .table
            .as_ref()
            .map(Table::to_csv)
            .ok_or_else(|| Failure("this command has no CSV form".into())),
        Format::Table => {
            let mut out = String::new();
            if let Some(t) = a.table.as_ref().filter(|_| a.text_table) {
                out.push_str(&t.to_text());
            }
            for n in &a.notes {
                out.push_str(n);
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn thread_count() -> Result<usize, Failure> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(s) => s.trim().parse().map_err(|_| {
            Failure(format!(
                "{THREADS_ENV} must be a non-negative integer, got {s:?}"
            ))
        }),
    }
}

fn execute(cli: &Cli) -> Result<(Artifact, Format), Failure> {
    let format = cli.format.unwrap_or_else(|| default_format(&cli.command));
    let artifact = match &cli.command {
        Command::Construct(args) => construct(args)?,
        Command::Fvec { input } => fvec(input)?,
        Command::Gvec { input, kind } => gvec(input, *kind)?,
        Command::QReport { k, d, n, explicit } => q_report_cmd(*k, *d, *n, *explicit)?,
        Command::Ray { k, d, n_from, n_to } => ray_cmd(*k, *d, *n_from, *n_to)?,
        Command::Stackedness { k, d, n, a } => stackedness_cmd(*k, *d, *n, *a)?,
        Command::Verify { suite, grid } => verify_cmd(*suite, *grid),
    };
    Ok((artifact, format))
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = thread_count().and_then(|threads| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Failure(format!("cannot start worker threads: {e}")))?;
        pool.install(|| execute(&cli))
    });
    let (artifact, format) = match result {
        Ok(x) => x,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let text = match render(&artifact, format) {
        Ok(t) => t,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    for w in &artifact.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return 2;
    }
    if artifact.ok {
        0
    } else {
        let _ = writeln!(err, "error: a consistency check failed");
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("polygv").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn construct_mw() {
        let (code, out, _) = call(&[
            "construct",
            "--family",
            "mw",
            "--K",
            "2",
            "--D",
            "4",
            "--N",
            "7",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 7);
        assert_eq!(v["facets"].as_array().unwrap().len(), 11);
    }

    #[test]
    fn q_report_table() {
        let (code, out, _) = call(&["q-report", "--k", "1", "--d", "6", "--n", "9"]);
        assert_eq!(code, 0);
        assert!(out.contains("g^c = (32, 448, 1088, 0)"), "{out}");
    }

    #[test]
    fn parameter_errors_exit_2() {
        let (code, _, err) = call(&["q-report", "--k", "1", "--d", "3", "--n", "9"]);
        assert_eq!(code, 2);
        assert!(err.contains("n >= d >= 2k+2"));
        let (code, _, _) = call(&["construct", "--family", "mw", "--K", "2"]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn reversed_range_is_rejected() {
        let (code, _, _) = call(&[
            "ray", "--k", "1", "--d", "6", "--n-from", "9", "--n-to", "8",
        ]);
        assert_eq!(code, 2);
    }
}
