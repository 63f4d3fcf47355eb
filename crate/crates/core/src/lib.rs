//! Crystal structures on semistandard set-valued tableaux.
//!
//! The central object is the set `svssyt^n(λ)` of semistandard set-valued
//! tableaux of shape `λ` with entries at most `n`, which carries a type
//! `A_{n-1}` crystal structure whose character is the symmetric Grothendieck
//! polynomial `G_λ(x_1..x_n; β)`. This crate implements:
//!
//! * shapes, weights and tableau enumeration ([`shape`], [`tableaux`]);
//! * the crystal operators, crystal graphs and the classical and K-theoretic
//!   involutions (Bender–Knuth, evacuation, Lusztig) ([`crystal`]);
//! * exact sparse polynomials over `Z[β]` with the divided-difference,
//!   Demazure and Demazure–Lascoux operator calculus, plus key, Lascoux,
//!   Schur and Grothendieck generators ([`poly`]);
//! * Schur expansions of Grothendieck polynomials, flagged increasing
//!   tableaux, the uncrowding bijection and single-row isomorphisms
//!   ([`expand`]);
//! * excited Young diagrams and marked Gelfand–Tsetlin patterns with their
//!   bijections to set-valued tableaux ([`models`]);
//! * Hecke insertion on two-line arrays and truncated stable Grothendieck
//!   series ([`hecke`]);
//! * jeu de taquin for set-valued tableaux via K-Bender–Knuth infusion
//!   ([`kjdt`]);
//! * K-crystal operators and K-Demazure crystals for single rows and single
//!   columns ([`kcrystal`]);
//! * batch verification suites shared by the CLI and the test harness
//!   ([`verify`]).

pub mod crystal;
pub mod error;
pub mod expand;
pub mod hecke;
pub mod kcrystal;
pub mod kjdt;
pub mod models;
pub mod perm;
pub mod poly;
pub mod shape;
pub mod tableaux;
pub mod verify;

pub use crystal::{CrystalGraph, EdgeKind};
pub use error::Error;
pub use expand::ExpansionTable;
pub use hecke::{HeckeWord, TwoLineArray};
pub use kjdt::LayeredTableau;
pub use models::{ExcitedYoungDiagram, MarkedGTPattern};
pub use poly::{BetaPolynomial, OperatorKind, ReducedWord};
pub use shape::{Partition, SkewShape, WeakComposition};
pub use tableaux::{FlaggedIncreasingTableau, IncreasingTableau, SetValuedTableau};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
