//! Per-claim verification drivers: the six cohomology lemmas, the two
//! tilting sweeps, and the endomorphism-algebra comparison, each producing
//! a self-describing [`VerificationReport`].

use crate::bundle::{LesOutcome, SliceOutcome};
use crate::bwb::{bwb, bwb_family, lgr_via_hyperplane, Claim, FamilyVerdict, ParamBox, Space};
use crate::report::{
    conventions, BoundaryRow, ClaimData, CompareCell, CounterexampleReport, FamilySummary,
    PositionReport, TiltingCell, VerificationReport, Verdict, SCHEMA_VERSION,
};
use crate::total::{
    hom_table_minus, hom_table_plus, pushforward_graded, xminus_cohomology, BaseBundle,
    GradedTable, MinusSummand, PlusSummand, TotalSpace,
};
use crate::weights::{AffineForm, AffineWeight, RootSystem, Weight};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown claim id {0:?}; expected one of 3.1..3.6")]
    InvalidId(String),
    #[error("ranges for {id} exclude mandatory boundary cases: {detail}")]
    MandatoryBoundaryExcluded { id: String, detail: String },
}

/// The six cohomology claims, by their conventional ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaId {
    L31,
    L32,
    L33,
    L34,
    L35,
    L36,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] = [
        LemmaId::L31,
        LemmaId::L32,
        LemmaId::L33,
        LemmaId::L34,
        LemmaId::L35,
        LemmaId::L36,
    ];

    pub fn parse(s: &str) -> Result<Self, VerifyError> {
        match s {
            "3.1" => Ok(LemmaId::L31),
            "3.2" => Ok(LemmaId::L32),
            "3.3" => Ok(LemmaId::L33),
            "3.4" => Ok(LemmaId::L34),
            "3.5" => Ok(LemmaId::L35),
            "3.6" => Ok(LemmaId::L36),
            other => Err(VerifyError::InvalidId(other.to_string())),
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            LemmaId::L31 => "3.1",
            LemmaId::L32 => "3.2",
            LemmaId::L33 => "3.3",
            LemmaId::L34 => "3.4",
            LemmaId::L35 => "3.5",
            LemmaId::L36 => "3.6",
        }
    }
}

/// Sweep bounds; `None` picks the documented defaults (boxes up to 40,
/// vanishing cutoffs 50, comparison cutoff 20).
#[derive(Debug, Clone, Copy, Default)]
pub struct SweepOptions {
    pub k_max: Option<i64>,
    pub m_max: Option<i64>,
    pub degree_max: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn label(self) -> &'static str {
        match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        }
    }
}

fn finish(
    claim: &str,
    statement: &str,
    verdict: Verdict,
    parameters: BTreeMap<String, i64>,
    tables: ClaimData,
    started: Instant,
) -> VerificationReport {
    VerificationReport {
        schema: SCHEMA_VERSION,
        claim: claim.to_string(),
        statement: statement.to_string(),
        verdict,
        parameters,
        tables,
        conventions: conventions(),
        version: crate::report::tool_version(),
        wall_time_ms: started.elapsed().as_millis() as u64,
    }
}

fn a2(entries: [i64; 2]) -> Weight {
    Weight::new(RootSystem::A(2), entries.to_vec()).expect("length 2")
}

/// The family Sym^k S∨ ⊗ (∧²S)^{−m} over (k, m), on Gr(2,V) or LGr(V).
fn sym_twist_family(space: Space) -> AffineWeight {
    let rank = space.levi_context().rank();
    let mut entries = vec![
        AffineForm::new(0, vec![1, 1]),
        AffineForm::new(0, vec![0, 1]),
    ];
    entries.resize(rank, AffineForm::constant(0, 2));
    AffineWeight::new(space.levi_context(), vec!["k".into(), "m".into()], entries)
        .expect("two parameters")
}

fn check_boundary_rows(space: Space, rows: &[(&str, Vec<i64>)]) -> (Vec<BoundaryRow>, bool) {
    let mut out = Vec::new();
    let mut all_zero = true;
    for (label, entries) in rows {
        let w = Weight::new(space.levi_context(), entries.clone()).expect("context length");
        let zero = bwb(space, &w).expect("levi dominant").is_zero();
        all_zero &= zero;
        out.push(BoundaryRow {
            bundle: label.to_string(),
            weight: entries.clone(),
            all_zero: zero,
        });
    }
    (out, all_zero)
}

pub fn verify_lemma(id: LemmaId, opts: SweepOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    match id {
        LemmaId::L31 | LemmaId::L32 => {
            let (space, m_min, boundary): (Space, i64, Vec<(&str, Vec<i64>)>) = match id {
                LemmaId::L31 => (
                    Space::Gr24,
                    -2,
                    vec![
                        ("S^ (w2S)^3", vec![-2, -3, 0, 0]),
                        ("(w2S)^3", vec![-3, -3, 0, 0]),
                    ],
                ),
                _ => (
                    Space::LGr,
                    -1,
                    vec![("S^ (w2S)^2", vec![-1, -2]), ("(w2S)^2", vec![-2, -2])],
                ),
            };
            let k_max = opts.k_max.unwrap_or(40);
            let m_max = opts.m_max.unwrap_or(40);
            if k_max < 0 || m_max < m_min {
                return Err(VerifyError::MandatoryBoundaryExcluded {
                    id: id.id().to_string(),
                    detail: format!("need k_max >= 0 and m_max >= {m_min}"),
                });
            }
            let family = sym_twist_family(space);
            let bounds = ParamBox::new(vec![(0, k_max), (m_min, m_max)]).expect("valid ranges");
            let cert = bwb_family(space, &family, &bounds, Claim::NoHigherCohomology)
                .expect("ranges match parameters");
            let (rows, rows_zero) = check_boundary_rows(space, &boundary);

            let mut counterexamples: Vec<CounterexampleReport> = Vec::new();
            if let FamilyVerdict::Counterexamples(list) = &cert.verdict {
                counterexamples.extend(list.iter().map(|c| CounterexampleReport {
                    point: c.point.clone(),
                    detail: format!("cohomology in degrees {:?}", c.table.dims()),
                }));
            }
            for row in &rows {
                if !row.all_zero {
                    counterexamples.push(CounterexampleReport {
                        point: row.weight.clone(),
                        detail: format!("boundary bundle {} has cohomology", row.bundle),
                    });
                }
            }

            // The second claim of the LGr lemma admits an independent route
            // through the hyperplane embedding in Gr(2,V); check agreement
            // on every instance the long exact sequence resolves.
            let mut cross_route_checked = None;
            if id == LemmaId::L32 {
                let mut points = bounds.points();
                // Boundary weights (a, b) re-expressed as (k, m) = (a−b, −b).
                points.extend(boundary.iter().map(|(_, w)| vec![w[0] - w[1], -w[1]]));
                let results: Vec<(bool, Option<Vec<i64>>)> = points
                    .par_iter()
                    .map(|p| {
                        let levi = a2([p[0] + p[1], p[1]]);
                        match lgr_via_hyperplane(&levi).expect("dominant") {
                            SliceOutcome::Resolved(dims) => {
                                let direct = bwb(Space::LGr, &levi).expect("dominant").dims();
                                (true, (dims != direct).then(|| p.clone()))
                            }
                            SliceOutcome::Indeterminate(_) => (false, None),
                        }
                    })
                    .collect();
                let mut checked = 0u64;
                for (resolved, mismatch) in results {
                    if resolved {
                        checked += 1;
                    }
                    if let Some(bad) = mismatch {
                        counterexamples.push(CounterexampleReport {
                            point: bad,
                            detail: "hyperplane route disagrees with the direct Sp4 route"
                                .to_string(),
                        });
                    }
                }
                cross_route_checked = Some(checked);
            }

            let verified = matches!(cert.verdict, FamilyVerdict::Certified)
                && rows_zero
                && counterexamples.is_empty();
            let verdict = if verified {
                Verdict::Verified
            } else {
                Verdict::Failed { counterexamples }
            };
            let statement = match id {
                LemmaId::L31 => {
                    "H^{>0}(Gr(2,V), Sym^k S^ (x) (w2S)^{-m}) = 0 for k >= 0, m >= -2; \
                     for m = -3 both listed twists have no cohomology in any degree"
                }
                _ => {
                    "H^{>0}(LGr(V), Sym^k S^ (x) (w2S)^{-m}) = 0 for k >= 0, m >= -1; \
                     for m = -2 both listed twists have no cohomology in any degree; \
                     the hyperplane route through Gr(2,V) agrees wherever it resolves"
                }
            };
            let parameters = BTreeMap::from([
                ("k_min".to_string(), 0),
                ("k_max".to_string(), k_max),
                ("m_min".to_string(), m_min),
                ("m_max".to_string(), m_max),
            ]);
            Ok(finish(
                &format!("lemma-{}", id.id()),
                statement,
                verdict,
                parameters,
                ClaimData::Family {
                    families: vec![FamilySummary::from_certificate(&cert)],
                    boundary_rows: rows,
                    cross_route_checked,
                },
                started,
            ))
        }
        LemmaId::L33 => {
            let degree_max = opts.degree_max.unwrap_or(50);
            // The three item families whose vanishing makes T+ tilting:
            // (w2S)^{-k} for k in [-2,2], S^ (x) (w2S)^{-k} for k in [-2,1],
            // and Sym^2 S^ (x) w2S.
            let mut items: Vec<(String, [i64; 2])> = Vec::new();
            for k in -2..=2i64 {
                items.push((format!("(w2S)^{{{}}}", -k), [k, k]));
            }
            for k in -2..=1i64 {
                items.push((format!("S^ (x) (w2S)^{{{}}}", -k), [k + 1, k]));
            }
            items.push(("Sym^2 S^ (x) w2S".to_string(), [1, -1]));

            let mut rows = BTreeMap::new();
            let mut counterexamples = Vec::new();
            for (label, [a, b]) in &items {
                let expr = crate::bundle::BundleExpression::irrep(
                    crate::bundle::Rank2Irrep::new(*a, *b).expect("dominant"),
                );
                let t = pushforward_graded(
                    TotalSpace::XPlus,
                    &BaseBundle::Homogeneous(expr),
                    degree_max,
                )
                .expect("homogeneous over LGr");
                if !t.higher_vanishes() {
                    counterexamples.push(CounterexampleReport {
                        point: vec![*a, *b],
                        detail: format!("{label} has higher cohomology on X+"),
                    });
                }
                rows.insert(label.clone(), t.h0_row().into_iter().take(6).collect());
            }
            let verdict = if counterexamples.is_empty() {
                Verdict::Verified
            } else {
                Verdict::Failed { counterexamples }
            };
            Ok(finish(
                "lemma-3.3",
                "the bundles generated by End(T+) have no higher cohomology on X+ \
                 in any fiber degree up to the cutoff",
                verdict,
                BTreeMap::from([("degree_max".to_string(), degree_max as i64)]),
                ClaimData::Graded {
                    rows,
                    notes: vec!["rows list the first six H^0 dimensions".to_string()],
                },
                started,
            ))
        }
        LemmaId::L34 => {
            let k_max = opts.k_max.unwrap_or(30);
            let t_max = opts.m_max.unwrap_or(30);
            if k_max < 1 || t_max < 0 {
                return Err(VerifyError::MandatoryBoundaryExcluded {
                    id: "3.4".to_string(),
                    detail: "need k_max >= 1 and m_max >= 0 (m = k-1+t)".to_string(),
                });
            }
            // Sym^k (V/L)^ (x) L^{-m} with m = k-1+t, covering m >= k-1.
            let family = AffineWeight::new(
                RootSystem::A(4),
                vec!["k".into(), "t".into()],
                vec![
                    AffineForm::new(-1, vec![1, 1]),
                    AffineForm::new(0, vec![1, 0]),
                    AffineForm::constant(0, 2),
                    AffineForm::constant(0, 2),
                ],
            )
            .expect("two parameters");
            let bounds = ParamBox::new(vec![(1, k_max), (0, t_max)]).expect("valid");
            let cert = bwb_family(Space::PV, &family, &bounds, Claim::NoHigherCohomology)
                .expect("ranges match");
            let verdict = match &cert.verdict {
                FamilyVerdict::Certified => Verdict::Verified,
                FamilyVerdict::Counterexamples(list) => Verdict::Failed {
                    counterexamples: list
                        .iter()
                        .map(|c| CounterexampleReport {
                            point: c.point.clone(),
                            detail: format!("cohomology in degrees {:?}", c.table.dims()),
                        })
                        .collect(),
                },
            };
            Ok(finish(
                "lemma-3.4",
                "H^{>0}(P(V), Sym^k (V/L)^ (x) L^{-m}) = 0 for k >= 1 and m >= k-1 \
                 (swept over m = k-1+t)",
                verdict,
                BTreeMap::from([
                    ("k_min".to_string(), 1),
                    ("k_max".to_string(), k_max),
                    ("t_min".to_string(), 0),
                    ("t_max".to_string(), t_max),
                ]),
                ClaimData::Family {
                    families: vec![FamilySummary::from_certificate(&cert)],
                    boundary_rows: vec![],
                    cross_route_checked: None,
                },
                started,
            ))
        }
        LemmaId::L35 => {
            let m_max = opts.m_max.unwrap_or(40);
            let degree_max = opts.degree_max.unwrap_or(50);
            if m_max < -2 {
                return Err(VerifyError::MandatoryBoundaryExcluded {
                    id: "3.5".to_string(),
                    detail: "need m_max >= -2".to_string(),
                });
            }
            let results: Vec<(i64, LesOutcome)> = (-2..=m_max)
                .into_par_iter()
                .map(|m| (m, xminus_cohomology(-m, degree_max)))
                .collect();
            let mut counterexamples = Vec::new();
            let mut positions = Vec::new();
            for (m, outcome) in &results {
                match outcome {
                    LesOutcome::Resolved { table, .. } => {
                        if !table.higher_vanishes() {
                            counterexamples.push(CounterexampleReport {
                                point: vec![*m],
                                detail: format!("H^{{>0}}(X-, L^{{{}}}) is nonzero", -m),
                            });
                        }
                    }
                    LesOutcome::Indeterminate(pos) => {
                        positions.extend(pos.iter().map(|&(n, i)| PositionReport {
                            cell: None,
                            fiber: n,
                            degree: i,
                        }));
                    }
                }
            }
            let verdict = if !positions.is_empty() {
                Verdict::Indeterminate { positions }
            } else if !counterexamples.is_empty() {
                Verdict::Failed { counterexamples }
            } else {
                Verdict::Verified
            };
            Ok(finish(
                "lemma-3.5",
                "H^{>0}(X-, L^{-m}) = 0 for m >= -2, in every fiber degree up to the \
                 cutoff, with every Koszul position resolved",
                verdict,
                BTreeMap::from([
                    ("m_min".to_string(), -2),
                    ("m_max".to_string(), m_max),
                    ("degree_max".to_string(), degree_max as i64),
                ]),
                ClaimData::Graded {
                    rows: BTreeMap::new(),
                    notes: vec![format!(
                        "checked L^(-m) for m in [-2, {m_max}] at fiber degrees <= {degree_max}"
                    )],
                },
                started,
            ))
        }
        LemmaId::L36 => {
            let degree_max = opts.degree_max.unwrap_or(50);
            let outcome = xminus_cohomology(3, degree_max);
            let (verdict, rows) = match outcome {
                LesOutcome::Resolved { table, .. } => {
                    let h1: Vec<(u32, u64)> = table
                        .iter()
                        .filter(|&((_, i), _)| i == 1)
                        .map(|((n, _), d)| (n, d))
                        .collect();
                    let above = table.iter().any(|((_, i), _)| i > 1);
                    let ok = h1 == vec![(1, 1)] && !above;
                    let mut rows = BTreeMap::new();
                    rows.insert(
                        "H^1 by fiber degree".to_string(),
                        (0..=degree_max.min(5)).map(|n| table.get(n, 1)).collect(),
                    );
                    let verdict = if ok {
                        Verdict::Verified
                    } else {
                        Verdict::Failed {
                            counterexamples: vec![CounterexampleReport {
                                point: vec![3],
                                detail: format!("H^1 table {h1:?}, degrees above 1: {above}"),
                            }],
                        }
                    };
                    (verdict, rows)
                }
                LesOutcome::Indeterminate(pos) => (
                    Verdict::Indeterminate {
                        positions: pos
                            .into_iter()
                            .map(|(n, i)| PositionReport {
                                cell: None,
                                fiber: n,
                                degree: i,
                            })
                            .collect(),
                    },
                    BTreeMap::new(),
                ),
            };
            Ok(finish(
                "lemma-3.6",
                "H^1(X-, L^3) is one-dimensional, concentrated in fiber degree 1, \
                 and H^{>1}(X-, L^3) = 0 up to the cutoff",
                verdict,
                BTreeMap::from([("degree_max".to_string(), degree_max as i64)]),
                ClaimData::Graded {
                    rows,
                    notes: vec![],
                },
                started,
            ))
        }
    }
}

/// Ext vanishing for the sixteen ordered pairs of tilting summands on one
/// side, up to the given fiber degree.
pub fn verify_tilting(side: Side, degree_max: u32) -> VerificationReport {
    let started = Instant::now();
    let mut cells = Vec::new();
    let mut counterexamples = Vec::new();
    let mut positions = Vec::new();
    match side {
        Side::Plus => {
            let pairs: Vec<(PlusSummand, PlusSummand)> = PlusSummand::ALL
                .iter()
                .flat_map(|&a| PlusSummand::ALL.iter().map(move |&b| (a, b)))
                .collect();
            let tables: Vec<GradedTable> = pairs
                .par_iter()
                .map(|&(a, b)| hom_table_plus(a, b, degree_max))
                .collect();
            for ((a, b), table) in pairs.into_iter().zip(tables) {
                let ok = table.higher_vanishes();
                if !ok {
                    counterexamples.push(CounterexampleReport {
                        point: vec![],
                        detail: format!(
                            "Ext^{{>0}}({}, {}) is nonzero on X+",
                            a.label(),
                            b.label()
                        ),
                    });
                }
                cells.push(TiltingCell {
                    pair: [a.label().to_string(), b.label().to_string()],
                    higher_vanishes: ok,
                    h0_leading: table.h0_row().into_iter().take(4).collect(),
                    firings: vec![],
                });
            }
        }
        Side::Minus => {
            let pairs: Vec<(MinusSummand, MinusSummand)> = MinusSummand::ALL
                .iter()
                .flat_map(|&a| MinusSummand::ALL.iter().map(move |&b| (a, b)))
                .collect();
            let outcomes: Vec<LesOutcome> = pairs
                .par_iter()
                .map(|&(a, b)| hom_table_minus(a, b, degree_max))
                .collect();
            for ((a, b), outcome) in pairs.into_iter().zip(outcomes) {
                match outcome {
                    LesOutcome::Resolved { table, firings } => {
                        let ok = table.higher_vanishes();
                        if !ok {
                            counterexamples.push(CounterexampleReport {
                                point: vec![],
                                detail: format!(
                                    "Ext^{{>0}}({}, {}) is nonzero on X-",
                                    a.label(),
                                    b.label()
                                ),
                            });
                        }
                        cells.push(TiltingCell {
                            pair: [a.label().to_string(), b.label().to_string()],
                            higher_vanishes: ok,
                            h0_leading: table.h0_row().into_iter().take(4).collect(),
                            firings,
                        });
                    }
                    LesOutcome::Indeterminate(pos) => {
                        positions.extend(pos.into_iter().map(|(n, i)| PositionReport {
                            cell: Some([a.label().to_string(), b.label().to_string()]),
                            fiber: n,
                            degree: i,
                        }));
                        cells.push(TiltingCell {
                            pair: [a.label().to_string(), b.label().to_string()],
                            higher_vanishes: false,
                            h0_leading: vec![],
                            firings: vec![],
                        });
                    }
                }
            }
        }
    }
    let mut notes = Vec::new();
    if degree_max == 0 {
        notes.push("cutoff 0 checks fiber degree 0 only; raise --degree-max for a \
                    meaningful sweep"
            .to_string());
    }
    let verdict = if !positions.is_empty() {
        Verdict::Indeterminate { positions }
    } else if !counterexamples.is_empty() {
        Verdict::Failed { counterexamples }
    } else {
        Verdict::Verified
    };
    finish(
        &format!("tilting-{}", side.label()),
        "all sixteen ordered Hom tables between tilting summands vanish in \
         cohomological degree > 0 up to the fiber-degree cutoff",
        verdict,
        BTreeMap::from([("degree_max".to_string(), degree_max as i64)]),
        ClaimData::Tilting { cells, notes },
        started,
    )
}

/// Degree-by-degree comparison of the 4 × 4 graded Hom matrices of the two
/// endomorphism algebras, plus the aggregate (summed) comparison.
pub fn compare_end_algebras(degree_max: u32) -> VerificationReport {
    let started = Instant::now();
    let pairs: Vec<(MinusSummand, MinusSummand)> = MinusSummand::ALL
        .iter()
        .flat_map(|&a| MinusSummand::ALL.iter().map(move |&b| (a, b)))
        .collect();
    let computed: Vec<(Vec<u64>, Option<Vec<u64>>)> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let plus = hom_table_plus(a.partner(), b.partner(), degree_max).h0_row();
            let minus = match hom_table_minus(a, b, degree_max) {
                LesOutcome::Resolved { table, .. } => Some(table.h0_row()),
                LesOutcome::Indeterminate(_) => None,
            };
            (plus, minus)
        })
        .collect();

    let mut cells = Vec::new();
    let mut positions = Vec::new();
    let mut aggregate_plus = vec![0u64; degree_max as usize + 1];
    let mut aggregate_minus = vec![0u64; degree_max as usize + 1];
    for ((a, b), (plus_row, minus_row)) in pairs.into_iter().zip(computed) {
        match minus_row {
            Some(minus_row) => {
                let equal = plus_row == minus_row;
                let first_mismatch = plus_row
                    .iter()
                    .zip(&minus_row)
                    .position(|(x, y)| x != y)
                    .map(|i| i as u32);
                for n in 0..=degree_max as usize {
                    aggregate_plus[n] += plus_row[n];
                    aggregate_minus[n] += minus_row[n];
                }
                cells.push(CompareCell {
                    plus: format!(
                        "({}, {})",
                        a.partner().label(),
                        b.partner().label()
                    ),
                    minus: format!("({}, {})", a.label(), b.label()),
                    plus_row,
                    minus_row,
                    equal,
                    first_mismatch,
                });
            }
            None => positions.push(PositionReport {
                cell: Some([a.label().to_string(), b.label().to_string()]),
                fiber: 0,
                degree: 0,
            }),
        }
    }
    let graded_equal = cells.iter().all(|c| c.equal);
    let aggregate_equal = aggregate_plus == aggregate_minus;
    let mut notes = Vec::new();
    if !graded_equal && aggregate_equal {
        notes.push(
            "graded tables disagree although the aggregate dimensions match: the \
             fiber-degree gradings of the two sides are misaligned"
                .to_string(),
        );
    }
    let verdict = if !positions.is_empty() {
        Verdict::Indeterminate { positions }
    } else if graded_equal {
        Verdict::Verified
    } else {
        Verdict::Failed {
            counterexamples: cells
                .iter()
                .filter(|c| !c.equal)
                .map(|c| CounterexampleReport {
                    point: vec![c.first_mismatch.unwrap_or(0) as i64],
                    detail: format!("cell {} vs {} differs", c.plus, c.minus),
                })
                .collect(),
        }
    };
    finish(
        "end-compare",
        "the 4 x 4 matrices of graded Hom dimensions of End(T+) and End(T-) agree \
         degree by degree up to the cutoff",
        verdict,
        BTreeMap::from([("degree_max".to_string(), degree_max as i64)]),
        ClaimData::Compare {
            cells,
            aggregate_plus,
            aggregate_minus,
            aggregate_equal,
            graded_equal,
            notes,
        },
        started,
    )
}

/// Run every claim with its default bounds: the six lemmas, both tilting
/// sides at cutoff 50, and the comparison at cutoff 20.
pub fn run_all(opts: SweepOptions) -> crate::report::ReportSet {
    let mut reports = Vec::new();
    for id in LemmaId::ALL {
        reports.push(verify_lemma(id, opts).expect("default options are valid"));
    }
    let tilting_cutoff = opts.degree_max.unwrap_or(50);
    reports.push(verify_tilting(Side::Plus, tilting_cutoff));
    reports.push(verify_tilting(Side::Minus, tilting_cutoff));
    reports.push(compare_end_algebras(20));
    crate::report::ReportSet {
        schema: SCHEMA_VERSION,
        version: crate::report::tool_version(),
        reports,
    }
}
