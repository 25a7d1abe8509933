//! The dimension table for abelian categories of dimension ≤ 1.
//!
//! Every row is computed, not transcribed: each category is represented by a
//! set of sample objects, each sample is run through the classifiers, and a
//! cell shows the value set over the samples. A Dynkin cell whose values are
//! all `1 − 2/h` for the sample's own Coxeter number is rendered as `1-2/h`.

use std::collections::BTreeSet;

use ncdim_core::quiver::{classify, gl_star_quiver, quiver_dimension_report};
use ncdim_core::{AdeType, CurveSignature, DimensionReport, Quiver, QuiverKind, Rational};
use serde::Serialize;

use crate::format::rational_string;
use crate::CliError;

pub const COLUMNS: [&str; 5] = ["hdim", "rdim", "ddim", "Sdim", "gldim"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub category: String,
    pub hdim: String,
    pub rdim: String,
    pub ddim: String,
    pub sdim: String,
    pub gldim: String,
}

impl Row {
    pub fn cells(&self) -> [&str; 5] {
        [&self.hdim, &self.rdim, &self.ddim, &self.sdim, &self.gldim]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub rows: Vec<Row>,
}

/// One cell: the distinct values over the samples, `"a or b"` if several.
fn cell<T: Ord + ToString>(values: impl IntoIterator<Item = T>) -> String {
    let set: BTreeSet<T> = values.into_iter().collect();
    set.iter().map(ToString::to_string).collect::<Vec<_>>().join(" or ")
}

fn rational_cell(values: impl IntoIterator<Item = Rational>) -> String {
    let set: BTreeSet<Rational> = values.into_iter().collect();
    set.into_iter().map(rational_string).collect::<Vec<_>>().join(" or ")
}

fn row(category: &str, reports: &[DimensionReport]) -> Row {
    Row {
        category: category.to_string(),
        hdim: cell(reports.iter().map(|r| r.hdim)),
        rdim: cell(reports.iter().map(|r| r.rdim)),
        ddim: cell(reports.iter().map(|r| r.ddim)),
        sdim: rational_cell(reports.iter().map(|r| r.sdim)),
        gldim: rational_cell(reports.iter().map(|r| r.gldim)),
    }
}

fn dynkin_samples() -> Vec<AdeType> {
    let mut out: Vec<AdeType> = (2..=8).map(AdeType::A).collect();
    out.extend((4..=8).map(AdeType::D));
    out.extend([AdeType::E6, AdeType::E7, AdeType::E8]);
    out
}

fn non_dynkin_samples() -> Result<Vec<Quiver>, CliError> {
    let mut out = vec![Quiver::kronecker(), Quiver::new(2, vec![(0, 1); 3])?];
    for triple in [[2, 2, 2], [2, 2, 5], [2, 3, 3], [2, 3, 4], [2, 3, 5], [1, 3, 4]] {
        out.push(gl_star_quiver(triple[0], triple[1], triple[2])?.quiver);
    }
    // The star (2, 3, 7): a wild tree.
    out.push(Quiver::new(10, vec![(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)])?);
    Ok(out)
}

fn rational_samples() -> Result<Vec<CurveSignature>, CliError> {
    let orders: [&[u32]; 8] = [&[], &[7], &[2, 2, 9], &[2, 3, 5], &[2, 3, 7], &[3, 3, 3], &[2, 2, 2, 2], &[4, 5, 6]];
    orders.iter().map(|o| Ok(CurveSignature::new(0, o.to_vec())?)).collect()
}

fn irrational_samples() -> Result<Vec<CurveSignature>, CliError> {
    let cases: [(u32, &[u32]); 5] = [(1, &[]), (1, &[2]), (2, &[]), (2, &[2, 2]), (3, &[3, 5, 7])];
    cases.iter().map(|&(g, o)| Ok(CurveSignature::new(g, o.to_vec())?)).collect()
}

fn internal(msg: String) -> CliError {
    CliError::Core(ncdim_core::Error::Internal(msg))
}

pub fn compute() -> Result<Table, CliError> {
    let point = quiver_dimension_report(&Quiver::point())?;

    let mut dynkin = Vec::new();
    for ade in dynkin_samples() {
        let q = ade.diagram();
        let QuiverKind::Dynkin { coxeter, .. } = classify(&q)?.kind else {
            return Err(internal(format!("{ade} diagram not classified as Dynkin")));
        };
        let report = quiver_dimension_report(&q)?;
        let expected = Rational::from_integer(1) - Rational::new(2, i64::from(coxeter));
        if report.sdim != expected || report.gldim != expected {
            return Err(internal(format!("{ade}: Sdim/gldim differ from 1 - 2/h")));
        }
        dynkin.push(report);
    }
    let mut ade_row = row("rep(Q_ADE)", &dynkin);
    ade_row.sdim = "1-2/h".to_string();
    ade_row.gldim = "1-2/h".to_string();

    let non_dynkin: Vec<DimensionReport> = non_dynkin_samples()?
        .iter()
        .map(quiver_dimension_report)
        .collect::<Result<_, _>>()?;
    let rational: Vec<DimensionReport> = rational_samples()?.iter().map(CurveSignature::dimension_report).collect();
    let irrational: Vec<DimensionReport> =
        irrational_samples()?.iter().map(CurveSignature::dimension_report).collect();

    Ok(Table {
        rows: vec![
            row("mod(k)", &[point]),
            ade_row,
            row("rep(Q_non-ADE)", &non_dynkin),
            row("rational orbifold curve", &rational),
            row("irrational orbifold curve", &irrational),
        ],
    })
}

pub fn markdown(table: &Table) -> String {
    let mut out = format!("| A | {} |\n", COLUMNS.join(" | "));
    out.push_str(&format!("|---|{}\n", "---|".repeat(COLUMNS.len())));
    for r in &table.rows {
        out.push_str(&format!("| {} | {} |\n", r.category, r.cells().join(" | ")));
    }
    out
}
