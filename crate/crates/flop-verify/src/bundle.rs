//! Formal bundle algebra: rank-2 Clebsch-Gordan/Pieri decomposition,
//! symmetric powers, filtered bundles with extension data, and the
//! long-exact-sequence dimension resolvers.
//!
//! Everything here is bookkeeping on dimension tables; no cohomology is
//! computed in this module. The resolvers refuse to guess: a connecting map
//! of unknown rank between two nonzero spaces yields `Indeterminate`, never
//! a silent choice.

use crate::total::GradedTable;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BundleError {
    #[error("rank-2 irrep requires a >= b, got ({0}, {1})")]
    NotDominant(i64, i64),
    #[error("unsupported plethysm: Sym^n of ({0}, {1}) with a - b >= 2")]
    UnsupportedPlethysm(i64, i64),
    #[error("filtered bundle needs one extension flag per adjacent pair")]
    FlagCountMismatch,
    #[error("inconsistent dimension tables: {0}")]
    Inconsistent(String),
}

/// The GL₂-irreducible `Σ^{(a,b)}` of a rank-2 bundle, a ≥ b. On the
/// Grassmannian bases this is applied to S∨, so line powers are the special
/// case a = b: `(∧²S)^m ↔ (−m, −m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rank2Irrep {
    a: i64,
    b: i64,
}

impl Rank2Irrep {
    pub fn new(a: i64, b: i64) -> Result<Self, BundleError> {
        if a < b {
            return Err(BundleError::NotDominant(a, b));
        }
        Ok(Rank2Irrep { a, b })
    }

    pub fn a(self) -> i64 {
        self.a
    }

    pub fn b(self) -> i64 {
        self.b
    }

    /// Dual irrep: Σ^{(a,b)}∨ = Σ^{(−b,−a)}.
    pub fn dual(self) -> Rank2Irrep {
        Rank2Irrep {
            a: -self.b,
            b: -self.a,
        }
    }

    pub fn dim(self) -> u64 {
        (self.a - self.b + 1) as u64
    }
}

/// Formal nonnegative sum of rank-2 irreducibles over a fixed space,
/// canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleExpression {
    terms: BTreeMap<Rank2Irrep, u64>,
}

impl BundleExpression {
    pub fn zero() -> Self {
        BundleExpression {
            terms: BTreeMap::new(),
        }
    }

    pub fn irrep(x: Rank2Irrep) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(x, 1);
        BundleExpression { terms }
    }

    pub fn add(&mut self, x: Rank2Irrep, mult: u64) {
        if mult > 0 {
            *self.terms.entry(x).or_insert(0) += mult;
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Rank2Irrep, u64)> + '_ {
        self.terms.iter().map(|(&x, &m)| (x, m))
    }

    pub fn total_dim(&self) -> u64 {
        self.terms.iter().map(|(x, m)| x.dim() * m).sum()
    }
}

/// Clebsch-Gordan for GL₂:
/// `(a,b) ⊗ (c,d) = ⊕_{i=0}^{min(a−b, c−d)} (a+c−i, b+d+i)`, multiplicity 1.
pub fn cg_tensor_rank2(x: Rank2Irrep, y: Rank2Irrep) -> BundleExpression {
    let mut out = BundleExpression::zero();
    let cap = (x.a - x.b).min(y.a - y.b);
    for i in 0..=cap {
        out.add(
            Rank2Irrep {
                a: x.a + y.a - i,
                b: x.b + y.b + i,
            },
            1,
        );
    }
    out
}

/// Symmetric power of a rank-2 irrep in the near-fundamental range a−b ≤ 1:
/// `Sym^n (a,b) = (na, nb)`. `Sym^0` is the trivial bundle for any input;
/// general plethysm is rejected loudly.
pub fn sym_power_rank2(x: Rank2Irrep, n: u32) -> Result<BundleExpression, BundleError> {
    if n == 0 {
        return Ok(BundleExpression::irrep(Rank2Irrep { a: 0, b: 0 }));
    }
    if x.a - x.b >= 2 {
        return Err(BundleError::UnsupportedPlethysm(x.a, x.b));
    }
    Ok(BundleExpression::irrep(Rank2Irrep {
        a: x.a * n as i64,
        b: x.b * n as i64,
    }))
}

/// One line-power piece of a filtered bundle. A piece at fiber-degree shift
/// `s` contributes its cohomology at fiber degree `n − s` to graded degree
/// `n` of the filtered bundle (Serre-twist bookkeeping).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinePiece {
    pub exponent: i64,
    pub shift: i64,
}

/// What is known about the extension class between two adjacent pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtFlag {
    /// The sequence splits; connecting maps vanish.
    Zero,
    /// The class is a nonzero multiple of the distinguished extension class
    /// (possibly tensored by a line power); cup with it is an isomorphism
    /// onto the 1-dimensional receptacle it spans.
    Nonzero,
    /// No information; connecting maps are resolved only when one side
    /// vanishes.
    Unknown,
}

/// An iterated extension of line powers, listed sub-first: `pieces[0]` is the
/// deepest sub-bundle, `pieces[last]` the outermost quotient. `flags[t]`
/// classifies the extension between `pieces[t]` (sub side) and
/// `pieces[t+1]` (quotient side).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilteredBundle {
    pieces: Vec<LinePiece>,
    flags: Vec<ExtFlag>,
}

impl FilteredBundle {
    pub fn new(pieces: Vec<LinePiece>, flags: Vec<ExtFlag>) -> Result<Self, BundleError> {
        if flags.len() + 1 != pieces.len() {
            return Err(BundleError::FlagCountMismatch);
        }
        Ok(FilteredBundle { pieces, flags })
    }

    pub fn line(exponent: i64, shift: i64) -> Self {
        FilteredBundle {
            pieces: vec![LinePiece { exponent, shift }],
            flags: vec![],
        }
    }

    pub fn rank(&self) -> usize {
        self.pieces.len()
    }

    pub fn pieces(&self) -> &[LinePiece] {
        &self.pieces
    }

    pub fn flags(&self) -> &[ExtFlag] {
        &self.flags
    }

    /// Dual bundle: pieces reversed with negated exponents and shifts. The
    /// dual of a nonsplit extension is nonsplit, so flags survive reversal.
    pub fn dual(&self) -> FilteredBundle {
        let pieces = self
            .pieces
            .iter()
            .rev()
            .map(|p| LinePiece {
                exponent: -p.exponent,
                shift: -p.shift,
            })
            .collect();
        let flags = self.flags.iter().rev().copied().collect();
        FilteredBundle { pieces, flags }
    }
}

/// Tensor product of filtered bundles. Associated-graded pieces are all
/// pairwise products of line powers with added shifts; the linearization
/// orders the left factor's filtration outermost. Extension flags propagate:
/// tensoring an adjacent pair by a single line power preserves its flag,
/// every cross-filtration adjacency becomes `Unknown`.
pub fn filtered_tensor(x: &FilteredBundle, y: &FilteredBundle) -> FilteredBundle {
    let mut pieces = Vec::with_capacity(x.rank() * y.rank());
    let mut flags = Vec::new();
    for (i, px) in x.pieces.iter().enumerate() {
        for (j, py) in y.pieces.iter().enumerate() {
            pieces.push(LinePiece {
                exponent: px.exponent + py.exponent,
                shift: px.shift + py.shift,
            });
            let last = i + 1 == x.rank() && j + 1 == y.rank();
            if !last {
                if j + 1 < y.rank() {
                    flags.push(y.flags[j]);
                } else if y.rank() == 1 {
                    flags.push(x.flags[i]);
                } else {
                    flags.push(ExtFlag::Unknown);
                }
            }
        }
    }
    FilteredBundle { pieces, flags }
}

/// Connecting-map classification for one graded position of a long exact
/// sequence `… → H^i(A) → H^i(B) → H^i(C) →δ→ H^{i+1}(A) → …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Connecting {
    /// The caller guarantees δ = 0 (split sequence, or a vanishing side).
    ForcedZero,
    /// δ is cup product with a nonzero extension class spanning a
    /// 1-dimensional target; surjective, and injective on a 1-dimensional
    /// source.
    NonzeroCup,
    /// Nothing is known; rank is forced only when source or target vanish.
    Unknown,
}

/// A record of the nonzero-cup rule actually firing at a graded position:
/// the δ⁰ at fiber degree `fiber` had rank 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Firing {
    pub fiber: u32,
    pub degree: u32,
}

/// Graded position `(fiber degree, cohomological degree)` left unresolved.
pub type Position = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LesOutcome {
    Resolved {
        table: GradedTable,
        firings: Vec<Firing>,
    },
    Indeterminate(Vec<Position>),
}

impl LesOutcome {
    pub fn expect_resolved(self, what: &str) -> (GradedTable, Vec<Firing>) {
        match self {
            LesOutcome::Resolved { table, firings } => (table, firings),
            LesOutcome::Indeterminate(pos) => {
                panic!("{what}: indeterminate positions {pos:?}")
            }
        }
    }
}

/// A short exact sequence `A → B → C` of graded objects with known dimension
/// tables for `A` and `C`, plus a connecting-map classification per graded
/// position. `rule(n, i)` classifies `δ^i : H^i(C)_n → H^{i+1}(A)_n`.
pub struct LesProblem<'a> {
    pub sub: &'a GradedTable,
    pub quotient: &'a GradedTable,
    pub rules: BTreeMap<Position, Connecting>,
    pub default_rule: Connecting,
}

impl<'a> LesProblem<'a> {
    pub fn new(sub: &'a GradedTable, quotient: &'a GradedTable, default_rule: Connecting) -> Self {
        LesProblem {
            sub,
            quotient,
            rules: BTreeMap::new(),
            default_rule,
        }
    }

    fn rule(&self, n: u32, i: u32) -> Connecting {
        self.rules.get(&(n, i)).copied().unwrap_or(self.default_rule)
    }

    /// Euler characteristic per fiber degree is exact regardless of the
    /// connecting maps: χ(B) = χ(A) + χ(C).
    pub fn euler_row(&self, cutoff: u32) -> Vec<i64> {
        (0..=cutoff)
            .map(|n| self.sub.euler(n) + self.quotient.euler(n))
            .collect()
    }
}

/// Exact-sequence dimension chase for the middle object `B` of
/// `A → B → C`. Per graded position:
/// `dim H^i(B) = (dim H^i(A) − rk δ^{i−1}) + (dim H^i(C) − rk δ^i)`.
///
/// Rank rules: δ with a vanishing source or target has rank 0; a
/// `NonzeroCup` map into a 1-dimensional target is surjective (rank 1); an
/// `Unknown` map between two nonzero spaces yields `Indeterminate` listing
/// the offending positions. Inconsistent inputs (a `NonzeroCup` whose target
/// is not 1-dimensional, or a negative intermediate dimension) are hard
/// errors: they indicate a bug upstream, not a mathematical ambiguity.
pub fn les_resolve(problem: &LesProblem) -> Result<LesOutcome, BundleError> {
    let a = problem.sub;
    let c = problem.quotient;
    assert_eq!(
        a.cutoff(),
        c.cutoff(),
        "les_resolve requires equal cutoffs"
    );
    let cutoff = a.cutoff();
    let max_i = a.max_degree().max(c.max_degree()) + 1;
    let mut table = GradedTable::new(cutoff);
    let mut firings = Vec::new();
    let mut indeterminate = Vec::new();
    for n in 0..=cutoff {
        // rank[i] = rank of δ^{i-1} : H^{i-1}(C) -> H^i(A); rank[0] = 0.
        let mut rank = vec![0u64; max_i as usize + 2];
        for i in 0..=max_i {
            let src = c.get(n, i);
            let tgt = a.get(n, i + 1);
            let r = if src == 0 || tgt == 0 {
                0
            } else {
                match problem.rule(n, i) {
                    Connecting::ForcedZero => 0,
                    Connecting::NonzeroCup => {
                        if tgt != 1 {
                            return Err(BundleError::Inconsistent(format!(
                                "nonzero-cup target at fiber {n}, degree {} has dimension {tgt}, expected 1",
                                i + 1
                            )));
                        }
                        firings.push(Firing {
                            fiber: n,
                            degree: i,
                        });
                        1
                    }
                    Connecting::Unknown => {
                        indeterminate.push((n, i));
                        0
                    }
                }
            };
            rank[i as usize + 1] = r;
        }
        for i in 0..=max_i {
            let a_part = a
                .get(n, i)
                .checked_sub(rank[i as usize])
                .ok_or_else(|| {
                    BundleError::Inconsistent(format!(
                        "negative dimension at fiber {n}, degree {i} (sub side)"
                    ))
                })?;
            let c_part = c
                .get(n, i)
                .checked_sub(rank[i as usize + 1])
                .ok_or_else(|| {
                    BundleError::Inconsistent(format!(
                        "negative dimension at fiber {n}, degree {i} (quotient side)"
                    ))
                })?;
            table.add(n, i, a_part + c_part);
        }
    }
    if indeterminate.is_empty() {
        Ok(LesOutcome::Resolved { table, firings })
    } else {
        Ok(LesOutcome::Indeterminate(indeterminate))
    }
}

/// Per-degree dimension table of a single (ungraded) object, sparse.
pub type DegTable = BTreeMap<u32, u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SliceOutcome {
    Resolved(DegTable),
    Indeterminate(Vec<u32>),
}

/// Dimension chase for the quotient `C` of an inclusion `A ↪ B` with known
/// tables for `A` and `B`. The interior maps `φ^i : H^i(A) → H^i(B)` obey:
/// `φ⁰` is injective (left exactness); for i ≥ 1 the rank is forced only
/// when a side vanishes, otherwise the position is indeterminate.
/// `dim H^i(C) = (dim H^i(B) − rk φ_i) + (dim H^{i+1}(A) − rk φ_{i+1})`.
pub fn resolve_quotient(a: &DegTable, b: &DegTable) -> Result<SliceOutcome, BundleError> {
    let max_i = a
        .keys()
        .chain(b.keys())
        .copied()
        .max()
        .unwrap_or(0)
        + 1;
    let get = |t: &DegTable, i: u32| t.get(&i).copied().unwrap_or(0);
    let mut rank = vec![0u64; max_i as usize + 2];
    let mut indeterminate = Vec::new();
    for i in 0..=max_i {
        let ai = get(a, i);
        let bi = get(b, i);
        rank[i as usize] = if i == 0 {
            if ai > bi {
                return Err(BundleError::Inconsistent(format!(
                    "H^0 inclusion with dim A = {ai} > dim B = {bi}"
                )));
            }
            ai
        } else if ai == 0 || bi == 0 {
            0
        } else {
            indeterminate.push(i);
            0
        };
    }
    if !indeterminate.is_empty() {
        return Ok(SliceOutcome::Indeterminate(indeterminate));
    }
    let mut out = DegTable::new();
    for i in 0..=max_i {
        let b_part = get(b, i)
            .checked_sub(rank[i as usize])
            .ok_or_else(|| BundleError::Inconsistent(format!("negative cokernel at degree {i}")))?;
        let a_part = get(a, i + 1) - rank[i as usize + 1];
        let dim = b_part + a_part;
        if dim > 0 {
            out.insert(i, dim);
        }
    }
    Ok(SliceOutcome::Resolved(out))
}
