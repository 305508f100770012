//! Exact computation in the q-shuffle algebra on two letters.
//!
//! Elements are finite sums of words in `x`, `y` with coefficients in the
//! Laurent polynomials over an integer type. The crate builds the Catalan
//! elements `C_n`, the images of PBW root vectors, and checks families of
//! identities among them by exact comparison.
//!
//! Everything is generic over [`Coefficient`]; the aliases at the crate root
//! fix it to [`BigInt`](num_bigint::BigInt).
//!
//! ```
//! use qshuffle::{Element, ShuffleEngine};
//!
//! let engine = ShuffleEngine::new();
//! let x = Element::from_word("x".parse().unwrap());
//! let y = Element::from_word("y".parse().unwrap());
//! assert_eq!(engine.product(&x, &y).to_string(), "xy + q^-2*yx");
//! ```

pub mod algebra;
pub mod catalan;
pub mod error;
pub mod format;
pub mod freealg;
pub mod laurent;
pub mod linalg;
pub mod pbw;
pub mod relations;
pub mod report;
pub mod scalar;
pub mod shuffle;

use num_bigint::BigInt;

pub use algebra::Named;
pub use catalan::{CoefficientRule, Elevation, Profile};
pub use error::{Error, Result};
pub use format::OutputFormat;
pub use freealg::{AlgElt, Letter, Word};
pub use laurent::{qfact, qint, qint_signed, LaurentPoly};
pub use pbw::{DeltaRecursion, PbwKind, PbwLabel, Prefactor};
pub use relations::SuiteConfig;
pub use report::{Status, SuiteReport, VerificationReport};
pub use scalar::Coefficient;
pub use shuffle::ShuffleEngine;

pub type Laurent = LaurentPoly<BigInt>;
pub type Element = AlgElt<BigInt>;
pub type Engine = ShuffleEngine<BigInt>;
pub type Algebra = algebra::Algebra<BigInt>;
pub type Pbw<'a> = pbw::Pbw<'a, BigInt>;
pub type Report = VerificationReport<BigInt>;
pub type Suite = SuiteReport<BigInt>;
