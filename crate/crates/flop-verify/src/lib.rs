//! Exact-arithmetic verification of the cohomology facts behind the derived
//! equivalence of two Calabi-Yau 5-folds related by a flop (the Abuaf flop).
//!
//! Let V be a 4-dimensional complex symplectic vector space. The two sides of
//! the flop are total spaces of rank-2 bundles over homogeneous bases:
//!
//! * `X+ = Tot(S ⊗ ∧²S → LGr(V))`, where `LGr(V)` is the Lagrangian
//!   Grassmannian (a quadric 3-fold) and `S` its tautological bundle;
//! * `X- = Tot((L⊥/L) ⊗ L² → P(V))`, where `L` is the tautological line
//!   bundle and `L⊥` its symplectic orthogonal.
//!
//! Each side carries a tilting bundle, `T+ = O ⊕ S∨ ⊕ ∧²S∨ ⊕ (∧²S∨)²` and
//! `T- = O ⊕ Σ∨ ⊕ L ⊕ L²` (with `Σ` the rank-2 extension of `L⁻²` by `L`
//! glued along the tautological section), and the equivalence reduces to
//! finitely checkable facts: Borel-Weil-Bott vanishing statements on the
//! closed bases, graded Ext vanishing on the total spaces, and equality of
//! the graded dimensions of `End(T+)` and `End(T-)`. This crate computes all
//! of those facts in exact integer arithmetic and reports machine-readable
//! verdicts.
//!
//! Module map:
//!
//! * [`weights`] — root-system combinatorics: ρ-vectors, the dotted Weyl
//!   action for types A and C, Weyl dimension formulas;
//! * [`bwb`] — Borel-Weil-Bott cohomology on the three bases, single-weight
//!   and parametric-family modes, plus the hyperplane-section cross-route
//!   for `LGr(V) ⊂ Gr(2,V)`;
//! * [`bundle`] — rank-2 Clebsch-Gordan/Pieri calculus, filtered bundles
//!   with extension data, and the long-exact-sequence dimension resolvers;
//! * [`total`] — graded cohomology on the non-compact total spaces and the
//!   graded Hom tables of the tilting summands;
//! * [`verify`] — per-claim verification drivers;
//! * [`report`] — report types, JSON/markdown emission.

pub mod bundle;
pub mod bwb;
pub mod report;
pub mod total;
pub mod verify;
pub mod weights;
