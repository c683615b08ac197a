//! The free Abelian group on string symbols.
//!
//! A [`Frab`] is a finite formal sum `n1*x1 + ... + nk*xk` of symbols with
//! real coefficients, always kept in canonical form (symbols unique, no zero
//! coefficients). Addition is keyed by symbol, never by position.
//!
//! The names and values of a `Frab` are exposed only as [`Disord`] views,
//! unordered collections that may be combined elementwise only with views of
//! the same snapshot. [`tabulation`] counts tokens into a `Frab`, where
//! merging two tables is simply addition.

pub mod cli;
pub mod disord;
pub mod error;
pub mod format;
pub mod frab;
pub mod symbol;
pub mod tabulation;
pub mod text;
pub mod views;

pub use disord::{consistent, DisIndex, Disord, ProvenanceToken};
pub use error::{Error, Result};
pub use frab::Frab;
pub use symbol::{Coefficient, Symbol};
pub use tabulation::{merge_counts, reconstruct, tabulate, TokenStream};
pub use text::{parse_frab_text, render_frab_text};
pub use views::{FrabView, Relation};
