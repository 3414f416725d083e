//! Census tables in Markdown.
//!
//! ```text
//! ## Census: n = 4, index >= 2, twists <= 1
//!
//! | No. | X | D | r | ι | Family |
//! |----:|---|---|--:|--:|--------|
//! | 1 | P[P1;0,0,0,0] | (0;2) | 2 | 2 | p-p (r=2) |
//! ...
//!
//! Matched: 11. Unmatched: none. Absent: none.
//! Out of scope: fano-q (r=2,m=1), tp (r=2,m=1).
//! ```

use std::fmt::Write;

use scrollfano_core::census::{CensusMode, CensusQuery, CensusRow, MatchReport};
use scrollfano_core::logfano::{FamilyId, Params};

fn family(id: FamilyId, params: Params) -> String {
    format!("{id} ({params})")
}

fn list(items: impl Iterator<Item = String>) -> String {
    let v: Vec<String> = items.collect();
    if v.is_empty() {
        "none".to_string()
    } else {
        v.join(", ")
    }
}

pub fn census_table(query: &CensusQuery, rows: &[CensusRow], report: &MatchReport) -> String {
    let mode = match query.mode {
        CensusMode::IndexAtLeast(k) => format!("index >= {k}"),
        CensusMode::PseudoindexAtLeast(k) => format!("pseudoindex >= {k}"),
    };
    let mut out = String::new();
    writeln!(
        out,
        "## Census: n = {}, {mode}, twists <= {}",
        query.n, query.twist_cap
    )
    .unwrap();
    out.push('\n');
    out.push_str("| No. | X | D | r | ι | Family |\n");
    out.push_str("|----:|---|---|--:|--:|--------|\n");
    for (k, row) in rows.iter().enumerate() {
        let iota = row
            .report
            .pseudoindex
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".to_string());
        let fam = row
            .matched
            .map(|(id, p)| family(id, p))
            .unwrap_or_else(|| "unmatched".to_string());
        writeln!(
            out,
            "| {} | {} | {} | {} | {iota} | {fam} |",
            k + 1,
            row.variety,
            row.boundary_class,
            row.report.index,
        )
        .unwrap();
    }
    out.push('\n');
    writeln!(
        out,
        "Matched: {}. Unmatched: {}. Absent: {}.",
        report.matched.len(),
        list(report.unmatched.iter().map(|k| format!("No. {}", k + 1))),
        list(report.absent.iter().map(|&(id, p)| family(id, p))),
    )
    .unwrap();
    writeln!(
        out,
        "Out of scope: {}.",
        list(report.out_of_scope.iter().map(|&(id, p)| family(id, p)))
    )
    .unwrap();
    out
}
