//! Rendering for `graph`, `spectrum` and `table`. Every function returns the
//! full stdout text so it can be tested without a subprocess.

use std::fmt::Write;

use octaspec_core::closed_forms::ClosedForms;
use octaspec_core::exact_algebra::{format_rational, round_half_even};
use octaspec_core::graph_gen::{
    build_linear_octagonal, build_moebius_octagonal, export, ChainKind, ExportFormat,
};
use octaspec_core::laplacian::{block_decompose, format_sig17, normalized_laplacian};
use octaspec_core::oracles::eigenvalues_symmetric;
use octaspec_core::{Error, Result};
use serde::Serialize;
use serde_json::json;

use crate::fixtures;

const EIGEN_TOL: f64 = 1e-13;
pub const KEMENY_PLACES: u32 = 6;
pub const DK_PLACES: u32 = 2;

pub fn graph(n: usize, kind: ChainKind, format: ExportFormat) -> Result<String> {
    let g = match kind {
        ChainKind::Moebius => build_moebius_octagonal(n)?,
        ChainKind::Linear => build_linear_octagonal(n)?,
    };
    Ok(export(&g, format))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SpectrumMatrix {
    Full,
    #[value(name = "A")]
    A,
    #[value(name = "S")]
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DataFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub index: usize,
    pub eigenvalue: f64,
    pub block: &'static str,
}

/// Sorted eigenvalues, 1-based. For the full matrix each value is labelled
/// with the block whose merged spectrum has the same rank.
pub fn spectrum_rows(n: usize, matrix: SpectrumMatrix) -> Result<Vec<SpectrumRow>> {
    let blocks = block_decompose(n)?;
    let mut labelled: Vec<(f64, &'static str)> = Vec::new();
    if matrix != SpectrumMatrix::S {
        labelled.extend(eigenvalues_symmetric(&blocks.l_a, EIGEN_TOL)?.into_iter().map(|v| (v, "A")));
    }
    if matrix != SpectrumMatrix::A {
        labelled.extend(eigenvalues_symmetric(&blocks.l_s, EIGEN_TOL)?.into_iter().map(|v| (v, "S")));
    }
    labelled.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(b.1)));
    if matrix == SpectrumMatrix::Full {
        let q = build_moebius_octagonal(n)?;
        let full = eigenvalues_symmetric(&normalized_laplacian(&q)?, EIGEN_TOL)?;
        for (slot, v) in labelled.iter_mut().zip(full) {
            slot.0 = v;
        }
    }
    Ok(labelled
        .into_iter()
        .enumerate()
        .map(|(i, (eigenvalue, block))| SpectrumRow { index: i + 1, eigenvalue, block })
        .collect())
}

pub fn spectrum(n: usize, matrix: SpectrumMatrix, format: DataFormat) -> Result<String> {
    let rows = spectrum_rows(n, matrix)?;
    Ok(match format {
        DataFormat::Csv => {
            let mut out = String::from("index,eigenvalue,block\n");
            for r in &rows {
                writeln!(out, "{},{},{}", r.index, format_sig17(r.eigenvalue), r.block).unwrap();
            }
            out
        }
        DataFormat::Json => to_json(&rows),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    Dk,
    Trees,
    Kemeny,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub exact: String,
    pub decimal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper: Option<String>,
    /// `match`, `mismatch` or `n/a` (no published value).
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub informational: Option<bool>,
}

pub fn table_rows(which: TableKind, from: u64, to: u64, compare_paper: bool) -> Result<Vec<TableRow>> {
    if from == 0 || from > to {
        return Err(Error::Usage(format!("need 1 ≤ from ≤ to, got from={from} to={to}")));
    }
    let cf = ClosedForms::default();
    (from..=to)
        .map(|n| {
            let (exact, decimal) = match which {
                TableKind::Dk => {
                    let v = cf.dk_index(n)?;
                    (format_rational(&v), round_half_even(&v, DK_PLACES))
                }
                TableKind::Kemeny => {
                    let v = cf.kemeny(n)?;
                    (format_rational(&v), round_half_even(&v, KEMENY_PLACES))
                }
                TableKind::Trees => {
                    let v = cf.spanning_trees(n)?.to_string();
                    (v.clone(), v)
                }
            };
            let mut row = TableRow { n, exact, decimal, paper: None, matches: None, informational: None };
            if compare_paper {
                let published = match which {
                    TableKind::Dk => fixtures::published_dk(n)
                        .map(|p| (p.to_string(), fixtures::dk_is_informational(n))),
                    TableKind::Trees => fixtures::published_trees(n)
                        .map(|(_, v)| (v.to_string(), fixtures::trees_is_informational(n))),
                    TableKind::Kemeny => None,
                };
                match published {
                    Some((p, informational)) => {
                        let ok = p == row.decimal;
                        row.matches = Some(if ok { "match" } else { "mismatch" }.into());
                        row.informational = Some(informational && !ok);
                        row.paper = Some(p);
                    }
                    None => row.matches = Some("n/a".into()),
                }
            }
            Ok(row)
        })
        .collect()
}

pub fn table(which: TableKind, from: u64, to: u64, compare_paper: bool, format: DataFormat) -> Result<String> {
    let rows = table_rows(which, from, to, compare_paper)?;
    Ok(match format {
        DataFormat::Json => to_json(&rows),
        DataFormat::Csv => {
            let mut out = String::from("n,exact,decimal");
            if compare_paper {
                out.push_str(",paper,match,informational");
            }
            out.push('\n');
            for r in &rows {
                write!(out, "{},{},{}", r.n, r.exact, r.decimal).unwrap();
                if compare_paper {
                    write!(
                        out,
                        ",{},{},{}",
                        r.paper.as_deref().unwrap_or(""),
                        r.matches.as_deref().unwrap_or(""),
                        r.informational.unwrap_or(false)
                    )
                    .unwrap();
                }
                out.push('\n');
            }
            out
        }
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(&json!(value)).expect("serializable");
    s.push('\n');
    s
}
