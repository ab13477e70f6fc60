//! The deformed enveloping algebra on three generators A, B, C.
//!
//! Elements are stored on the ordered monomial basis `A^i B^j C^k`; the
//! symmetrized basis is exposed through [`sym`]. Products are computed by
//! rewriting against a [`CommutatorTable`].

mod element;
mod reduce;
pub mod series_gen;
pub mod sym;
mod table;

pub use element::{parse_word, AlgElement, Gen, Monomial, Word};
pub use series_gen::{generator_series, SeriesKind};
pub use table::{CommutatorTable, JacobiResiduals, PoissonTable};
