//! Exact analysis of rational languages through their syntactic monoids,
//! linear representations and syntactic algebras.
//!
//! ```
//! use synalg::{compile, is_completely_reducible, parse_regex, Alphabet, Config, Rational};
//!
//! let ab = Alphabet::parse("ab")?;
//! let dfa = compile(&parse_regex("(ab)*a", None)?, &ab)?;
//! let report = is_completely_reducible::<Rational>(&dfa, &Config::default())?;
//! assert!(report.completely_reducible);
//! # Ok::<(), synalg::Error>(())
//! ```

pub mod algebra;
pub mod automata;
pub mod classify;
pub mod config;
pub mod error;
pub mod field;
mod graph;
pub mod lang;
pub mod linalg;
pub mod monoid;
pub mod poly;
pub mod representation;
pub mod traces;

#[cfg(test)]
mod testutil;

pub use algebra::{
    completely_reducible_verdict, decompose, is_completely_reducible, syntactic_algebra, MatrixAlgebra,
    ReducibilityReport,
};
pub use classify::{classify, is_birecurrent, is_cyclic, is_repeating, strongly_cyclic_language};
pub use automata::{compile, minimize, Dfa};
pub use config::Config;
pub use error::{Error, Result};
pub use field::{Field, Fp};
pub use lang::{parse_regex, Alphabet, DfaFile, Letter, Regex, Word};
pub use linalg::{Matrix, Subspace};
pub use monoid::{syntactic_monoid, transition_monoid, FiniteMonoid};
pub use poly::Poly;
pub use representation::{rep_from_dfa, syntactic_rep, LinRep, SyntacticRep};
pub use traces::{external_power, trace_k, SignedAutomaton};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type QMatrix = Matrix<Rational>;
