//! Presentation helpers: exact and 6-significant-digit rational rendering,
//! plain tables, and the ray-convergence CSV layout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::q_analysis::RayRow;

/// Exact rendering: `p/q`, or `p` when the denominator is one.
pub fn rational(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn pow10(e: u32) -> BigInt {
    BigInt::from(10).pow(e)
}

/// `r` rounded half away from zero to 6 significant digits, in plain
/// positional notation.
pub fn decimal6(r: &BigRational) -> String {
    const SIG: i64 = 6;
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let (p, q) = (r.numer().abs(), r.denom().clone());

    // e = floor(log10(p/q))
    let mut e = p.to_string().len() as i64 - q.to_string().len() as i64;
    let ge = |e: i64| -> bool {
        if e >= 0 {
            p >= &q * pow10(e as u32)
        } else {
            &p * pow10((-e) as u32) >= q
        }
    };
    while !ge(e) {
        e -= 1;
    }
    while ge(e + 1) {
        e += 1;
    }

    // digits = round(p/q * 10^shift), shift = SIG-1-e
    let shift = SIG - 1 - e;
    let (num, den) = if shift >= 0 {
        (&p * pow10(shift as u32), q)
    } else {
        (p.clone(), q * pow10((-shift) as u32))
    };
    let (mut digits, rem) = num.div_rem(&den);
    if rem * 2 >= den {
        digits += 1;
    }
    let mut shift = shift;
    if digits == pow10(SIG as u32) {
        digits /= 10;
        shift -= 1;
    }

    let s = digits.to_string();
    let body = if shift <= 0 {
        format!("{s}{}", "0".repeat((-shift) as usize))
    } else {
        let shift = shift as usize;
        if s.len() > shift {
            format!("{}.{}", &s[..s.len() - shift], &s[s.len() - shift..])
        } else {
            format!("0.{}{s}", "0".repeat(shift - s.len()))
        }
    };
    format!("{sign}{body}")
}

/// Header plus rows of already-rendered cells.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(Into::into).collect());
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    /// Space-aligned columns.
    pub fn to_text(&self) -> String {
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|c| {
                std::iter::once(&self.headers[c])
                    .chain(self.rows.iter().filter_map(|r| r.get(c)))
                    .map(|s| s.chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.headers);
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }
}

/// Columns `k,d,n,gc_1..,normalized_1..,dominant_index`. Normalized cells
/// are left empty when the normalizer vanishes, as is the dominant index
/// when no coordinate is positive.
pub fn ray_table(rows: &[RayRow]) -> Table {
    let width = rows.iter().map(|r| r.gc.len()).max().unwrap_or(0);
    let mut t = Table::new(
        ["k", "d", "n"]
            .map(String::from)
            .into_iter()
            .chain((1..=width).map(|i| format!("gc_{i}")))
            .chain((1..=width).map(|i| format!("normalized_{i}")))
            .chain(std::iter::once("dominant_index".to_string())),
    );
    for r in rows {
        let mut cells = vec![
            r.spec.k().to_string(),
            r.spec.d().to_string(),
            r.spec.n().to_string(),
        ];
        cells.extend((0..width).map(|i| r.gc.get(i).map(ToString::to_string).unwrap_or_default()));
        cells.extend((0..width).map(|i| {
            r.normalized
                .as_ref()
                .and_then(|v| v.get(i))
                .map(decimal6)
                .unwrap_or_default()
        }));
        cells.push(r.dominant_index.map(|i| i.to_string()).unwrap_or_default());
        t.push(cells);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q_analysis::ray_convergence_report;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn six_significant_digits() {
        assert_eq!(decimal6(&q(1, 24)), "0.0416667");
        assert_eq!(decimal6(&q(23, 24)), "0.958333");
        assert_eq!(decimal6(&q(1, 1)), "1.00000");
        assert_eq!(decimal6(&q(-2, 3)), "-0.666667");
        assert_eq!(decimal6(&q(1234567, 1)), "1234570");
        assert_eq!(decimal6(&q(9999995, 10000000)), "1.00000");
        assert_eq!(decimal6(&q(1, 3000000)), "0.000000333333");
        assert_eq!(decimal6(&q(0, 1)), "0");
    }

    #[test]
    fn exact_rendering() {
        assert_eq!(rational(&q(6, 4)), "3/2");
        assert_eq!(rational(&q(8, 4)), "2");
    }

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(["a", "b"]);
        t.push(["1", "{c1,c2}"]);
        assert_eq!(t.to_csv(), "a,b\n1,\"{c1,c2}\"\n");
        assert_eq!(t.to_text(), "a  b\n1  {c1,c2}\n");
    }

    #[test]
    fn ray_csv_layout() {
        let rows = ray_convergence_report(1, 6, &[6, 9]).unwrap();
        let csv = ray_table(&rows).to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "k,d,n,gc_1,gc_2,gc_3,normalized_1,normalized_2,normalized_3,dominant_index"
        );
        assert_eq!(lines[1], "1,6,6,0,0,0,,,,");
        // 448/1536, 1088/1536
        assert_eq!(lines[2], "1,6,9,448,1088,0,0.291667,0.708333,0,2");
    }
}
