//! JSON, markdown and DOT renderings of hyperplane multiplication tables.

use super::quantum::QuantumChevalley;
use super::variety::{BasisTag, CohomologyClass, SchubertLabel, Variety};
use crate::error::Result;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProductTerm {
    pub label: String,
    pub coeff: i64,
    pub qpow: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChevalleyTable {
    pub case: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub basis: Vec<String>,
    pub products: BTreeMap<String, Vec<ProductTerm>>,
    /// Optional display-line number of each product in a reference listing.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lines: BTreeMap<String, u32>,
}

fn terms_of(x: &Variety, c: &CohomologyClass) -> Vec<ProductTerm> {
    let mut t: Vec<(u32, SchubertLabel, i64)> = c.terms.iter().map(|(&(l, q), &k)| (q, l, k)).collect();
    t.sort_by_key(|(q, l, _)| (*q, l.side, l.node));
    t.into_iter().map(|(qpow, l, coeff)| ProductTerm { label: x.label_name(&l), coeff, qpow }).collect()
}

/// Classical table when `quantum` is false or unavailable.
pub fn chevalley_table(x: &Variety, quantum: bool) -> Result<ChevalleyTable> {
    let basis = x.basis(BasisTag::A);
    let qc = if quantum { Some(QuantumChevalley::new(x)?) } else { None };
    let mut products = BTreeMap::new();
    for a in &basis {
        let p = match &qc {
            Some(qc) => qc.multiply_label(a)?,
            None => x.classical_chevalley_label(a)?,
        };
        products.insert(x.label_name(a), terms_of(x, &p));
    }
    Ok(ChevalleyTable {
        case: x.case.number(),
        n: x.n,
        m: x.m,
        basis: basis.iter().map(|l| x.label_name(l)).collect(),
        products,
        lines: BTreeMap::new(),
    })
}

/// `2 q sigma'(u_2) + tau(v_0)`-style rendering of a class.
pub fn format_class(x: &Variety, c: &CohomologyClass) -> String {
    render_terms(&terms_of(x, c))
}

fn render_terms(terms: &[ProductTerm]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            s += if t.coeff < 0 { " - " } else { " + " };
        } else if t.coeff < 0 {
            s.push('-');
        }
        let a = t.coeff.abs();
        let unit = t.label == "sigma'(u_0)";
        let q = match t.qpow {
            0 => String::new(),
            1 => "q".into(),
            k => format!("q^{k}"),
        };
        let mut piece = String::new();
        if a != 1 || (unit && q.is_empty()) {
            piece += &a.to_string();
        }
        piece += &q;
        if !unit {
            if !piece.is_empty() {
                piece.push(' ');
            }
            piece += &t.label;
        }
        s += &piece;
    }
    s
}

impl ChevalleyTable {
    /// Differences against a reference table, one line per mismatching product.
    pub fn diff(&self, reference: &ChevalleyTable) -> Vec<String> {
        let mut out = vec![];
        let mut a = self.basis.clone();
        let mut b = reference.basis.clone();
        a.sort();
        b.sort();
        if a != b {
            out.push(format!("basis differs: {a:?} vs {b:?}"));
        }
        for (k, v) in &reference.products {
            let mut a = self.products.get(k).cloned().unwrap_or_default();
            let mut b = v.clone();
            a.sort();
            b.sort();
            if a != b {
                out.push(format!("h * {k}: engine `{}`, reference `{}`", render_terms(&a), render_terms(&b)));
            }
        }
        for k in self.products.keys() {
            if !reference.products.contains_key(k) {
                out.push(format!("h * {k}: missing from reference"));
            }
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let rows: Vec<(String, String)> = self
            .basis
            .iter()
            .map(|b| (format!("h * {b}"), render_terms(&self.products[b])))
            .collect();
        let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max("product".len());
        let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max("result".len());
        let mut s = String::new();
        writeln!(s, "| {:w0$} | {:w1$} |", "product", "result").unwrap();
        writeln!(s, "|{}|{}|", "-".repeat(w0 + 2), "-".repeat(w1 + 2)).unwrap();
        for (a, b) in rows {
            writeln!(s, "| {a:w0$} | {b:w1$} |").unwrap();
        }
        s
    }

    /// Quantum Hasse diagram with node attribute `degree` and edge attributes `coeff`, `qpow`.
    pub fn to_dot(&self, x: &Variety) -> Result<String> {
        let mut s = String::from("digraph hasse {\n  rankdir=TB;\n");
        for b in &self.basis {
            let l = x.parse_label(b)?;
            writeln!(s, "  \"{b}\" [degree={}];", x.degree(&l)).unwrap();
        }
        for b in &self.basis {
            for t in &self.products[b] {
                writeln!(s, "  \"{b}\" -> \"{}\" [coeff={}, qpow={}];", t.label, t.coeff, t.qpow).unwrap();
            }
        }
        s += "}\n";
        Ok(s)
    }
}
