//! Unordered collections with provenance tokens.
//!
//! A [`Disord`] holds its items in some hidden order. Elementwise work is
//! allowed only between collections that carry the same [`ProvenanceToken`]
//! (and therefore share that order), or against a length-one collection,
//! which broadcasts. Asking for "the first element" is always an error.

use std::fmt;

use crate::error::{Error, Result};
use crate::format;
use crate::symbol::Symbol;

/// Opaque 160-bit marker certifying a shared hidden ordering.
///
/// Tokens are random, not content hashes: two collections built
/// independently from the same items get different tokens.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProvenanceToken([u8; 20]);

impl ProvenanceToken {
    /// A fresh token from the thread-local CSPRNG.
    pub fn fresh() -> Self {
        ProvenanceToken(rand::random())
    }

    pub fn as_bytes(&self) -> &[u8; 20] {
        &self.0
    }
}

impl fmt::Display for ProvenanceToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ProvenanceToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProvenanceToken({self})")
    }
}

/// A finite collection of values stored in an unspecified order.
#[derive(Clone, Debug)]
pub struct Disord<T> {
    items: Vec<T>,
    token: ProvenanceToken,
}

/// Boolean collection used to select or replace entries by predicate.
pub type DisIndex = Disord<bool>;

/// Whether two collections may be combined elementwise: same token, or
/// either has exactly one element.
pub fn consistent<A, B>(a: &Disord<A>, b: &Disord<B>) -> bool {
    a.token == b.token || a.len() == 1 || b.len() == 1
}

impl<T> Disord<T> {
    /// Wraps `items` under a freshly generated token.
    pub fn new(items: Vec<T>) -> Self {
        Self::with_token(items, ProvenanceToken::fresh())
    }

    pub(crate) fn with_token(items: Vec<T>, token: ProvenanceToken) -> Self {
        Disord { items, token }
    }

    pub fn token(&self) -> ProvenanceToken {
        self.token
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn is_consistent_with<U>(&self, other: &Disord<U>) -> bool {
        consistent(self, other)
    }

    /// Applies `f` to every item; the result keeps this collection's token.
    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Disord<U> {
        Disord::with_token(self.items.iter().map(f).collect(), self.token)
    }

    /// Fallible [`Disord::map`]; the first error from `f` is returned.
    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Disord<U>, E> {
        let items = self.items.iter().map(f).collect::<Result<Vec<U>, E>>()?;
        Ok(Disord::with_token(items, self.token))
    }

    /// Pairwise application of `f` in the shared hidden order.
    ///
    /// A length-one operand is broadcast against the other, whose token the
    /// result keeps. Two length-one operands with different tokens give a
    /// fresh token.
    pub fn zip_with<U, V>(
        &self,
        other: &Disord<U>,
        mut f: impl FnMut(&T, &U) -> V,
    ) -> Result<Disord<V>> {
        if self.token == other.token {
            debug_assert_eq!(self.len(), other.len());
            let items = self
                .items
                .iter()
                .zip(&other.items)
                .map(|(a, b)| f(a, b))
                .collect();
            return Ok(Disord::with_token(items, self.token));
        }
        match (self.len(), other.len()) {
            (1, 1) => Ok(Disord::new(vec![f(&self.items[0], &other.items[0])])),
            (1, _) => {
                let a = &self.items[0];
                let items = other.items.iter().map(|b| f(a, b)).collect();
                Ok(Disord::with_token(items, other.token))
            }
            (_, 1) => {
                let b = &other.items[0];
                let items = self.items.iter().map(|a| f(a, b)).collect();
                Ok(Disord::with_token(items, self.token))
            }
            _ => Err(inconsistent(self.token, other.token)),
        }
    }

    /// Keeps the items where `mask` is true. The result is a new collection
    /// with a fresh token: its order is not related to this one's.
    pub fn filter_by(&self, mask: &DisIndex) -> Result<Disord<T>>
    where
        T: Clone,
    {
        if !consistent(self, mask) {
            return Err(inconsistent(self.token, mask.token));
        }
        let items = if self.token == mask.token {
            self.items
                .iter()
                .zip(&mask.items)
                .filter(|(_, keep)| **keep)
                .map(|(item, _)| item.clone())
                .collect()
        } else if mask.len() == 1 {
            if mask.items[0] {
                self.items.clone()
            } else {
                Vec::new()
            }
        } else {
            return Err(Error::LengthMismatch {
                expected: mask.len(),
                found: self.len(),
            });
        };
        Ok(Disord::new(items))
    }

    /// Positional access has no meaning for an unordered collection; this
    /// always fails.
    pub fn get_by_position(&self, index: i64) -> Result<&T> {
        Err(Error::discipline(format!(
            "positional extraction [{index}] not implemented for disord objects"
        )))
    }

    /// The items, in no particular order.
    pub fn elements(&self) -> &[T] {
        &self.items
    }

    pub fn into_elements(self) -> Vec<T> {
        self.items
    }
}

pub(crate) fn inconsistent(a: ProvenanceToken, b: ProvenanceToken) -> Error {
    Error::discipline(format!("inconsistent disord objects (hash {a} vs {b})"))
}

/// How the items of a [`Disord`] are rendered in its display.
pub trait DisplayItems: Sized {
    fn display_items(items: &[Self]) -> Vec<String>;
}

impl DisplayItems for f64 {
    fn display_items(items: &[Self]) -> Vec<String> {
        format::display_column(items)
    }
}

impl DisplayItems for bool {
    fn display_items(items: &[Self]) -> Vec<String> {
        items
            .iter()
            .map(|b| if *b { "TRUE" } else { "FALSE" }.to_string())
            .collect()
    }
}

impl DisplayItems for Symbol {
    fn display_items(items: &[Self]) -> Vec<String> {
        items.iter().map(|s| format!("{:?}", s.as_str())).collect()
    }
}

impl DisplayItems for String {
    fn display_items(items: &[Self]) -> Vec<String> {
        items.iter().map(|s| format!("{s:?}")).collect()
    }
}

impl<T: DisplayItems> fmt::Display for Disord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "A disord object with hash {} and elements", self.token)?;
        let mut cells = T::display_items(&self.items);
        format::pad_common(&mut cells);
        write!(f, "[1]")?;
        for cell in &cells {
            write!(f, " {cell}")?;
        }
        writeln!(f)?;
        writeln!(f, "(in some order)")
    }
}
