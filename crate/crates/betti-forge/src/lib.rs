//! betti-forge: exact computation of graded free resolutions of Jacobian
//! algebras of hypersurfaces in projective 3-space, and of the numeric
//! invariants carried by their graded Betti numbers (Tjurina numbers,
//! Hilbert polynomials, du Plessis–Wall windows, type invariants, syzygies
//! of pencil surfaces).
//!
//! The pipeline is: parse f -> Jacobian ideal -> Gröbner basis -> iterated
//! Schreyer syzygies -> minimal graded free resolution -> Betti data ->
//! invariant arithmetic. Everything is exact, over Q or GF(p).

pub mod error;
pub mod field;
pub mod monomial;
pub mod poly;

pub mod form;
pub mod gcd;
pub mod parse;

pub mod groebner;
pub mod module;
pub mod order;

pub mod resolution;

pub mod hilbert;

pub mod analyzer;
pub mod pencil;

pub mod corpus;
pub mod report;
pub mod resfmt;

pub use error::{EngineError, ParseError};
pub use field::{Field, FieldTag, PrimeField, Rationals, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use poly::{Polynomial, VarSet};
