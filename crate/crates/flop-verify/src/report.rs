//! Machine-readable verification reports: one per claim, embedding the
//! conventions that make the numbers reproducible, with lossless JSON
//! round-tripping and a markdown rendering for humans.

use crate::bundle::Firing;
use crate::bwb::{FamilyCertificate, FamilyVerdict};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// Weight and grading conventions embedded in every report. Convention
/// drift is the main reproducibility risk, so a report carries enough to
/// recompute it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub rho_gl4: [i64; 4],
    pub rho_sp4: [i64; 2],
    pub weight_encoding: String,
    pub sigma_pieces: String,
    pub line_summand_shifts: String,
    pub cutting_section: String,
}

pub fn conventions() -> Conventions {
    Conventions {
        rho_gl4: [3, 2, 1, 0],
        rho_sp4: [2, 1],
        weight_encoding: "Gr(2,V): Sigma^{(a,b)}S^ x Sigma^{(c,d)}(V/S)^ <-> (a,b,c,d), \
                          (w2 S)^m contributing (-m,-m); P(V): L^m -> -m in entry 1, \
                          Sym^k(V/L)^ -> (k,0,0) in entries 2-4; LGr(V): Sigma^{(a,b)}S^ <-> (a,b)"
            .to_string(),
        sigma_pieces: "Sigma: sub L at shift 0, quotient L^-2 at shift 1; Sigma^ is the \
                       graded dual (L^2 at shift -1 under L^-1 at shift 0)"
            .to_string(),
        line_summand_shifts: "X- summand L^k carries fiber-degree shift -k, matching the \
                              gradings of the two sides across the flop"
            .to_string(),
        cutting_section: "X- is cut out of Y by the symplectic contraction of the \
                          tautological section, linear of fiber degree 1"
            .to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub point: Vec<i64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionReport {
    pub cell: Option<[String; 2]>,
    pub fiber: u32,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Failed {
        counterexamples: Vec<CounterexampleReport>,
    },
    Indeterminate {
        positions: Vec<PositionReport>,
    },
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Failed { .. } => 1,
            Verdict::Indeterminate { .. } => 2,
        }
    }
}

/// Summary of one parametric-family certificate inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub space: String,
    pub params: Vec<String>,
    pub ranges: Vec<(i64, i64)>,
    pub claim: String,
    pub certified: bool,
    pub stabilized: bool,
    pub lattice_points: u64,
    pub counterexample_points: Vec<Vec<i64>>,
}

impl FamilySummary {
    pub fn from_certificate(cert: &FamilyCertificate) -> Self {
        let points = cert.bounds.points().len() as u64;
        let (certified, counterexample_points) = match &cert.verdict {
            FamilyVerdict::Certified => (true, Vec::new()),
            FamilyVerdict::Counterexamples(list) => {
                (false, list.iter().map(|c| c.point.clone()).collect())
            }
        };
        FamilySummary {
            space: format!("{:?}", cert.space),
            params: cert.weight.params().to_vec(),
            ranges: cert.bounds.ranges.clone(),
            claim: format!("{:?}", cert.claim),
            certified,
            stabilized: cert.stabilized,
            lattice_points: points,
            counterexample_points,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryRow {
    pub bundle: String,
    pub weight: Vec<i64>,
    pub all_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingCell {
    pub pair: [String; 2],
    pub higher_vanishes: bool,
    pub h0_leading: Vec<u64>,
    pub firings: Vec<Firing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareCell {
    pub plus: String,
    pub minus: String,
    pub plus_row: Vec<u64>,
    pub minus_row: Vec<u64>,
    pub equal: bool,
    pub first_mismatch: Option<u32>,
}

/// Per-claim payload carried inside a [`VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClaimData {
    Family {
        families: Vec<FamilySummary>,
        boundary_rows: Vec<BoundaryRow>,
        cross_route_checked: Option<u64>,
    },
    Graded {
        rows: BTreeMap<String, Vec<u64>>,
        notes: Vec<String>,
    },
    Tilting {
        cells: Vec<TiltingCell>,
        notes: Vec<String>,
    },
    Compare {
        cells: Vec<CompareCell>,
        aggregate_plus: Vec<u64>,
        aggregate_minus: Vec<u64>,
        aggregate_equal: bool,
        graded_equal: bool,
        notes: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub claim: String,
    pub statement: String,
    pub verdict: Verdict,
    pub parameters: BTreeMap<String, i64>,
    pub tables: ClaimData,
    pub conventions: Conventions,
    pub version: String,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSet {
    pub schema: u32,
    pub version: String,
    pub reports: Vec<VerificationReport>,
}

impl ReportSet {
    pub fn exit_code(&self) -> i32 {
        if self
            .reports
            .iter()
            .any(|r| matches!(r.verdict, Verdict::Failed { .. }))
        {
            1
        } else if self
            .reports
            .iter()
            .any(|r| matches!(r.verdict, Verdict::Indeterminate { .. }))
        {
            2
        } else {
            0
        }
    }
}

pub fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

pub fn emit(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        Format::Markdown => render_markdown(report),
    }
}

pub fn emit_set(set: &ReportSet, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(set).expect("report set serializes"),
        Format::Markdown => {
            let mut out = String::new();
            for r in &set.reports {
                out.push_str(&render_markdown(r));
                out.push('\n');
            }
            out
        }
    }
}

pub fn parse_report(s: &str) -> Result<VerificationReport, serde_json::Error> {
    serde_json::from_str(s)
}

pub fn parse_report_set(s: &str) -> Result<ReportSet, serde_json::Error> {
    serde_json::from_str(s)
}

/// Serialize with the wall-clock field removed, for byte-level determinism
/// comparisons.
pub fn canonical_json_without_timing(set: &ReportSet) -> String {
    let mut value = serde_json::to_value(set).expect("report set serializes");
    strip_timing(&mut value);
    serde_json::to_string_pretty(&value).expect("value serializes")
}

fn strip_timing(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("wall_time_ms");
            for v in map.values_mut() {
                strip_timing(v);
            }
        }
        serde_json::Value::Array(items) => {
            for v in items {
                strip_timing(v);
            }
        }
        _ => {}
    }
}

fn render_markdown(r: &VerificationReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "## {}", r.claim);
    let _ = writeln!(out);
    let _ = writeln!(out, "{}", r.statement);
    let _ = writeln!(out);
    let verdict = match &r.verdict {
        Verdict::Verified => "**verified**".to_string(),
        Verdict::Failed { counterexamples } => {
            format!("**failed** ({} counterexamples)", counterexamples.len())
        }
        Verdict::Indeterminate { positions } => {
            format!("**indeterminate** ({} positions)", positions.len())
        }
    };
    let _ = writeln!(out, "Verdict: {verdict}");
    if !r.parameters.is_empty() {
        let params: Vec<String> = r
            .parameters
            .iter()
            .map(|(k, v)| format!("{k} = {v}"))
            .collect();
        let _ = writeln!(out, "Parameters: {}", params.join(", "));
    }
    if let Verdict::Failed { counterexamples } = &r.verdict {
        let _ = writeln!(out);
        let _ = writeln!(out, "| point | detail |");
        let _ = writeln!(out, "|---|---|");
        for c in counterexamples {
            let _ = writeln!(out, "| {:?} | {} |", c.point, c.detail);
        }
    }
    if let Verdict::Indeterminate { positions } = &r.verdict {
        let _ = writeln!(out);
        let _ = writeln!(out, "| cell | fiber | degree |");
        let _ = writeln!(out, "|---|---|---|");
        for p in positions {
            let cell = p
                .cell
                .as_ref()
                .map(|[a, b]| format!("({a}, {b})"))
                .unwrap_or_else(|| "-".to_string());
            let _ = writeln!(out, "| {cell} | {} | {} |", p.fiber, p.degree);
        }
    }
    match &r.tables {
        ClaimData::Family {
            families,
            boundary_rows,
            cross_route_checked,
        } => {
            let _ = writeln!(out);
            let _ = writeln!(out, "| space | params | ranges | claim | certified | stabilized |");
            let _ = writeln!(out, "|---|---|---|---|---|---|");
            for f in families {
                let _ = writeln!(
                    out,
                    "| {} | {:?} | {:?} | {} | {} | {} |",
                    f.space, f.params, f.ranges, f.claim, f.certified, f.stabilized
                );
            }
            if !boundary_rows.is_empty() {
                let _ = writeln!(out);
                let _ = writeln!(out, "| boundary bundle | weight | all cohomology zero |");
                let _ = writeln!(out, "|---|---|---|");
                for b in boundary_rows {
                    let _ = writeln!(out, "| {} | {:?} | {} |", b.bundle, b.weight, b.all_zero);
                }
            }
            if let Some(n) = cross_route_checked {
                let _ = writeln!(out);
                let _ = writeln!(out, "Hyperplane cross-route agreed on {n} resolved instances.");
            }
        }
        ClaimData::Graded { rows, notes } => {
            let _ = writeln!(out);
            for (label, row) in rows {
                let _ = writeln!(out, "- {label}: {row:?}");
            }
            for n in notes {
                let _ = writeln!(out, "- note: {n}");
            }
        }
        ClaimData::Tilting { cells, notes } => {
            let _ = writeln!(out);
            let _ = writeln!(out, "| pair | higher vanishes | h0 leading | cup firings |");
            let _ = writeln!(out, "|---|---|---|---|");
            for c in cells {
                let _ = writeln!(
                    out,
                    "| ({}, {}) | {} | {:?} | {:?} |",
                    c.pair[0], c.pair[1], c.higher_vanishes, c.h0_leading, c.firings
                );
            }
            for n in notes {
                let _ = writeln!(out, "- note: {n}");
            }
        }
        ClaimData::Compare {
            cells,
            aggregate_equal,
            graded_equal,
            notes,
            ..
        } => {
            let _ = writeln!(out);
            let _ = writeln!(out, "| cell (+ side) | cell (- side) | equal | first mismatch |");
            let _ = writeln!(out, "|---|---|---|---|");
            for c in cells {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {:?} |",
                    c.plus, c.minus, c.equal, c.first_mismatch
                );
            }
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "Graded equality: {graded_equal}; aggregate equality: {aggregate_equal}."
            );
            for n in notes {
                let _ = writeln!(out, "- note: {n}");
            }
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "_tool {} · schema {} · {} ms_",
        r.version, r.schema, r.wall_time_ms
    );
    out
}
