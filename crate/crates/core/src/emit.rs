//! JSON, CSV and LaTeX renderings.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::format_q;
use crate::springer::{Partition, SpringerRow};
use crate::su_n1::DegreeReport;
use crate::suites::SuiteReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" | "tex" => Ok(Format::Latex),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

/// Header and rows.
pub type CsvTable = (Vec<String>, Vec<Vec<String>>);

pub trait Emit: Serialize {
    fn csv_table(&self) -> CsvTable;
    fn latex(&self) -> String;
}

pub fn emit<T: Emit + ?Sized>(obj: &T, format: Format) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string(obj).map_err(|e| Error::Parse(e.to_string())),
        Format::Csv => write_csv(&obj.csv_table()),
        Format::Latex => Ok(obj.latex()),
    }
}

/// `emit` with the format given by name.
pub fn emit_as<T: Emit + ?Sized>(obj: &T, format: &str) -> Result<String> {
    emit(obj, format.parse()?)
}

fn write_csv((header, rows): &CsvTable) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn latex_monomial(exp: &[u32]) -> String {
    exp.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("X_{{{}}}", i + 1)
            } else {
                format!("X_{{{}}}^{{{}}}", i + 1, e)
            }
        })
        .collect()
}

/// `X1^2` → `X_{1}^{2}`.
fn latex_factored(text: &str) -> String {
    let mut out = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            'X' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                out.push_str(&format!("X_{{{digits}}}"));
            }
            '^' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                out.push_str(&format!("^{{{digits}}}"));
            }
            c => out.push(c),
        }
    }
    out
}

/// `[3,2,2,1,1]` → `[3,2^{2},1^{2}]`.
pub fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        return "\\emptyset".into();
    }
    let mut blocks: Vec<String> = Vec::new();
    let parts = p.parts();
    let mut i = 0;
    while i < parts.len() {
        let m = p.multiplicity(parts[i]);
        blocks.push(if m == 1 {
            parts[i].to_string()
        } else {
            format!("{}^{{{}}}", parts[i], m)
        });
        i += m;
    }
    format!("[{}]", blocks.join(","))
}

fn latex_group(g: &str) -> String {
    g.replace(",R)", ",\\mathbb{R})").replace("SO*", "SO^*")
}

fn latex_escape(s: &str) -> String {
    s.replace('\\', "\\textbackslash{}")
        .replace('&', "\\&")
        .replace('%', "\\%")
        .replace('_', "\\_")
        .replace('#', "\\#")
}

impl Emit for MultiPoly {
    fn csv_table(&self) -> CsvTable {
        let mut header: Vec<String> = (1..=self.vars()).map(|i| format!("X{i}")).collect();
        header.push("coeff".into());
        let rows = self
            .terms()
            .rev()
            .map(|(m, c)| {
                let mut r: Vec<String> = m.0.iter().map(u32::to_string).collect();
                r.push(format_q(c));
                r
            })
            .collect();
        (header, rows)
    }

    fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let neg = c < &crate::rational::q(0);
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = latex_monomial(&m.0);
            let coeff = if a.is_integer() {
                a.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if a == crate::rational::q(1) {
                out.push_str(&mono);
            } else {
                out.push_str(&coeff);
                out.push_str(&mono);
            }
        }
        out
    }
}

const SPRINGER_HEADER: [&str; 5] = ["group", "generator", "springer", "partition", "dim"];

fn springer_csv_row(r: &SpringerRow) -> Vec<String> {
    vec![
        r.group.to_string(),
        r.generator_text.clone(),
        if r.is_springer { "Yes" } else { "No" }.into(),
        r.partition.as_ref().map(|p| p.to_string()).unwrap_or_default(),
        r.orbit_dim.map(|d| d.to_string()).unwrap_or_default(),
    ]
}

fn springer_latex_row(r: &SpringerRow) -> String {
    let part = r.partition.as_ref().map(|p| format!("${}$", latex_partition(p))).unwrap_or_default();
    let dim = r.orbit_dim.map(|d| format!("${d}$")).unwrap_or_default();
    format!(
        "${}$ & ${}$ & {} & {} & {} \\\\",
        latex_group(&r.group.to_string()),
        latex_factored(&r.generator_text),
        if r.is_springer { "Yes" } else { "No" },
        part,
        dim
    )
}

fn springer_latex(rows: &[SpringerRow]) -> String {
    let mut out = String::from(
        "\\begin{tabular}{|l|l|c|l|r|}\n\\hline\n$G$ & generator & Springer? & $\\mathcal{O}_K$ & $\\dim_{\\mathbb{C}}\\mathcal{O}_K$ \\\\\n\\hline\n",
    );
    for r in rows {
        out.push_str(&springer_latex_row(r));
        out.push_str("\n\\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

impl Emit for SpringerRow {
    fn csv_table(&self) -> CsvTable {
        (SPRINGER_HEADER.map(String::from).to_vec(), vec![springer_csv_row(self)])
    }

    fn latex(&self) -> String {
        springer_latex(std::slice::from_ref(self))
    }
}

impl Emit for [SpringerRow] {
    fn csv_table(&self) -> CsvTable {
        (
            SPRINGER_HEADER.map(String::from).to_vec(),
            self.iter().map(springer_csv_row).collect(),
        )
    }

    fn latex(&self) -> String {
        springer_latex(self)
    }
}

impl Emit for Vec<SpringerRow> {
    fn csv_table(&self) -> CsvTable {
        self.as_slice().csv_table()
    }

    fn latex(&self) -> String {
        springer_latex(self)
    }
}

impl Emit for SuiteReport {
    fn csv_table(&self) -> CsvTable {
        (
            ["suite", "id", "pass", "detail"].map(String::from).to_vec(),
            self.cases
                .iter()
                .map(|c| vec![self.suite.clone(), c.id.clone(), c.pass.to_string(), c.detail.clone()])
                .collect(),
        )
    }

    fn latex(&self) -> String {
        let mut out = format!(
            "\\begin{{tabular}}{{|l|c|l|}}\n\\hline\n\\multicolumn{{3}}{{|l|}}{{{}}} \\\\\n\\hline\n",
            latex_escape(&self.suite)
        );
        for c in &self.cases {
            out.push_str(&format!(
                "{} & {} & {} \\\\\n",
                latex_escape(&c.id),
                if c.pass { "pass" } else { "fail" },
                latex_escape(&c.detail)
            ));
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }
}

impl Emit for DegreeReport {
    fn csv_table(&self) -> CsvTable {
        (
            ["n", "i", "gk_dim", "deg_p", "deg_q", "deg_r", "deg_p_over_r", "deg_q_over_r", "matches_formulas"]
                .map(String::from)
                .to_vec(),
            vec![vec![
                self.n.to_string(),
                self.i.to_string(),
                self.gk_dim.to_string(),
                self.deg_p.to_string(),
                self.deg_q.to_string(),
                self.deg_r.to_string(),
                self.deg_p_over_r.to_string(),
                self.deg_q_over_r.to_string(),
                self.matches_formulas.to_string(),
            ]],
        )
    }

    fn latex(&self) -> String {
        format!(
            "$n={}$, $i={}$: $\\deg P={}$, $\\deg Q={}$, $\\deg R={}$, $\\deg P/R={}$, $\\deg Q/R={}$",
            self.n, self.i, self.deg_p, self.deg_q, self.deg_r, self.deg_p_over_r, self.deg_q_over_r
        )
    }
}

/// A JSON document accepted by `emit`, recognised by its keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Poly(MultiPoly),
    Springer(Vec<SpringerRow>),
    Suite(SuiteReport),
    Degrees(DegreeReport),
}

impl Document {
    pub fn from_json(text: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let de = |e: serde_json::Error| Error::Parse(e.to_string());
        let has = |k: &str| v.get(k).is_some();
        if v.is_array() {
            return Ok(Document::Springer(serde_json::from_value(v).map_err(de)?));
        }
        if has("vars") && has("terms") {
            Ok(Document::Poly(serde_json::from_value(v).map_err(de)?))
        } else if has("group") && has("springer") {
            Ok(Document::Springer(vec![serde_json::from_value(v).map_err(de)?]))
        } else if has("suite") {
            Ok(Document::Suite(serde_json::from_value(v).map_err(de)?))
        } else if has("deg_p") {
            Ok(Document::Degrees(serde_json::from_value(v).map_err(de)?))
        } else {
            Err(Error::Parse("unrecognized document".into()))
        }
    }

    pub fn emit(&self, format: Format) -> Result<String> {
        match self {
            Document::Poly(p) => emit(p, format),
            Document::Springer(rows) if rows.len() == 1 && format == Format::Json => emit(&rows[0], format),
            Document::Springer(rows) => emit(rows, format),
            Document::Suite(r) => emit(r, format),
            Document::Degrees(r) => emit(r, format),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::GroupId;
    use crate::springer::springer_row;

    #[test]
    fn poly_json() {
        let p = MultiPoly::var(2, 0).sub(&MultiPoly::var(2, 1));
        assert_eq!(
            emit(&p, Format::Json).unwrap(),
            r#"{"vars":2,"terms":[{"exp":[1,0],"coeff":"1"},{"exp":[0,1],"coeff":"-1"}]}"#
        );
        assert_eq!(emit(&p, Format::Latex).unwrap(), "X_{1} - X_{2}");
        assert_eq!(emit(&p, Format::Csv).unwrap(), "X1,X2,coeff\n1,0,1\n0,1,-1\n");
    }

    #[test]
    fn springer_csv() {
        let r = springer_row(GroupId::SoOdd { p: 2, q: 2 }).unwrap();
        let out = emit(&r, Format::Csv).unwrap();
        let line = out.lines().nth(1).unwrap();
        assert_eq!(line, r#""SO_e(4,5)",(X1^2-X2^2)(X3^2-X4^2)X3X4,Yes,"[3,2,2,1,1]",20"#);
        assert!(emit(&r, Format::Latex).unwrap().contains("$[3,2^{2},1^{2}]$ & $20$"));
    }

    #[test]
    fn unsupported() {
        assert!(matches!("xml".parse::<Format>(), Err(Error::UnsupportedFormat(_))));
    }

    #[test]
    fn documents_roundtrip() {
        let p = MultiPoly::var(3, 0).mul(&MultiPoly::var(3, 2)).scale(&crate::rational::qr(-3, 2));
        let j = emit(&p, Format::Json).unwrap();
        assert_eq!(Document::from_json(&j).unwrap(), Document::Poly(p));
        let rows = crate::springer::springer_table(&[crate::springer::Family::SpReal], 2).unwrap();
        let j = emit(&rows, Format::Json).unwrap();
        let doc = Document::from_json(&j).unwrap();
        assert_eq!(doc.emit(Format::Json).unwrap(), j);
        let rep = crate::suites::run_suite("sl2").unwrap();
        let j = emit(&rep, Format::Json).unwrap();
        assert_eq!(Document::from_json(&j).unwrap(), Document::Suite(rep));
    }
}
