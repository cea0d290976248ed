//! Exact computation with finitely generated marked groups.
//!
//! The crate is organised bottom-up:
//!
//! - [`word`]: free-group words, reduction, cyclic reduction, shortlex order.
//! - [`presentation`]: finite presentations, symmetrized relator sets and the
//!   `C'(λ)` small cancellation check.
//! - [`oracle`]: word-problem backends behind one normal-form contract,
//!   including Dehn's algorithm for `C'(1/6)` presentations.
//! - [`families`]: constructors for the explicit groups used throughout
//!   (`W_n(k)`, surface groups, `A_p`, `B_p`, `H_p`, ...).
//! - [`marked`]: Cayley balls, ball signatures, r-similarity and the marked
//!   ultrametric, Nielsen moves, kernel words and basic open sets,
//!   injectivity radii and lacunary certificates.
//! - [`logic`]: first-order formulas over `{1, ·, ⁻¹}` and model checking on
//!   finite multiplication tables.

pub mod error;
pub mod families;
pub mod logic;
pub mod marked;
pub mod oracle;
pub mod presentation;
pub mod rational;
pub mod word;

pub use error::{LogicError, MarkedError, OracleError, PresentationError, TableError, WordParseError};
pub use families::{build_family, FamilySpec};
pub use marked::MarkedGroup;
pub use oracle::{build_oracle, CanonicalKey, GroupOracle};
pub use presentation::{Presentation, SymmetrizedSet};
pub use word::{Alphabet, Letter, Sign, Word};
