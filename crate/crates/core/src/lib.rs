//! Monomial ideals, generic initial ideals, lexsegment ideals and graded
//! Betti numbers over a field of characteristic zero, together with two
//! families of ideals whose Betti numbers separate `I`, `Gin(I)` and
//! `Lex(I)`.

pub mod betti;
pub mod binomial;
pub mod error;
pub mod families;
pub mod field;
pub mod format;
pub mod gin;
pub mod groebner;
pub mod ideal;
pub mod lex;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod verify;

pub use betti::{BettiMethod, BettiTable, FieldMode};
pub use error::{Error, Result};
pub use gin::{gin, gin_with_retries, GinOptions, GinOutcome};
pub use ideal::{HilbertFunction, MonomialIdeal, Truncation};
pub use lex::lex_ideal;
pub use monomial::{Monomial, TermOrder};
pub use poly::{LinearChange, Polynomial};
