//! Names and values of a [`Frab`] as unordered views, and the replacement
//! idioms built on them.
//!
//! The names view and values view of one `Frab` value share a provenance
//! token, assigned on first use. Any `Frab` produced by an operation starts
//! without one, so views taken from an earlier value cannot be applied to a
//! later one by accident.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::disord::{inconsistent, DisIndex, Disord, ProvenanceToken};
use crate::error::{Error, Result};
use crate::frab::Frab;
use crate::symbol::{check_finite, Symbol};

/// Paired names and values views of one `Frab` snapshot.
#[derive(Clone, Debug)]
pub struct FrabView {
    pub names: Disord<Symbol>,
    pub values: Disord<f64>,
}

/// Comparison used by [`Frab::compare_values`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

impl Relation {
    pub fn holds(self, lhs: f64, rhs: f64) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "<" => Relation::Lt,
            "<=" => Relation::Le,
            ">" => Relation::Gt,
            ">=" => Relation::Ge,
            "==" | "=" => Relation::Eq,
            "!=" => Relation::Ne,
            other => return Err(Error::Parse(format!("unknown relation {other:?}"))),
        })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Eq => "==",
            Relation::Ne => "!=",
        })
    }
}

/// How a replacement collection lines up against a frab's entries.
enum Aligned<'a, T> {
    PerEntry(&'a [T]),
    Broadcast(&'a T),
}

impl<'a, T> Aligned<'a, T> {
    fn at(&self, i: usize) -> &'a T {
        match self {
            Aligned::PerEntry(items) => &items[i],
            Aligned::Broadcast(item) => item,
        }
    }
}

impl Frab {
    /// The token shared by this value's names and values views.
    pub fn snapshot_token(&self) -> ProvenanceToken {
        *self.snapshot.get_or_init(ProvenanceToken::fresh)
    }

    /// The symbols of the support, in hidden order.
    pub fn names(&self) -> Disord<Symbol> {
        Disord::with_token(self.symbols().cloned().collect(), self.snapshot_token())
    }

    /// The coefficients, in the same hidden order as [`Frab::names`].
    pub fn values(&self) -> Disord<f64> {
        Disord::with_token(self.iter().map(|(_, v)| v).collect(), self.snapshot_token())
    }

    pub fn view(&self) -> FrabView {
        FrabView {
            names: self.names(),
            values: self.values(),
        }
    }

    fn align<'a, T>(&self, other: &'a Disord<T>) -> Result<Aligned<'a, T>> {
        if other.token() == self.snapshot_token() {
            debug_assert_eq!(other.len(), self.len());
            Ok(Aligned::PerEntry(other.elements()))
        } else if other.len() == 1 {
            Ok(Aligned::Broadcast(&other.elements()[0]))
        } else if self.len() == 1 {
            Err(Error::LengthMismatch {
                expected: 1,
                found: other.len(),
            })
        } else {
            Err(inconsistent(self.snapshot_token(), other.token()))
        }
    }

    /// Replaces the symbol at each hidden position. Names that collide after
    /// renaming are summed, and zero totals dropped.
    pub fn with_names<S: AsRef<str>>(&self, new_names: &Disord<S>) -> Result<Frab> {
        let aligned = self.align(new_names)?;
        let pairs = self
            .iter()
            .enumerate()
            .map(|(i, (_, v))| Ok((Symbol::new(aligned.at(i))?, v)))
            .collect::<Result<Vec<_>>>()?;
        Frab::accumulate(pairs)
    }

    /// Replaces the coefficient at each hidden position; zeros are dropped.
    pub fn with_values(&self, new_values: &Disord<f64>) -> Result<Frab> {
        let aligned = self.align(new_values)?;
        let mut entries = BTreeMap::new();
        for (i, (symbol, _)) in self.iter().enumerate() {
            let v = check_finite(*aligned.at(i))?;
            if v != 0.0 {
                entries.insert(symbol.clone(), v);
            }
        }
        Ok(Frab::from_canonical(entries))
    }

    /// Restriction to the given symbols. Symbols outside the support
    /// contribute nothing.
    pub fn extract_by_symbols<I, S>(&self, symbols: I) -> Result<Frab>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut entries = BTreeMap::new();
        for s in symbols {
            let s = s.as_ref();
            if s.is_empty() {
                return Err(Error::EmptySymbol);
            }
            if let Some((symbol, &v)) = self.entries().get_key_value(s) {
                entries.insert(symbol.clone(), v);
            }
        }
        Ok(Frab::from_canonical(entries))
    }

    /// Entries have no position; this always fails.
    pub fn extract_by_position(&self, index: i64) -> Result<Frab> {
        Err(Error::discipline(format!(
            "positional extraction [{index}] not implemented for frab objects"
        )))
    }

    /// Boolean view, consistent with [`Frab::values`], marking where
    /// `value <relation> threshold` holds.
    pub fn compare_values(&self, relation: Relation, threshold: f64) -> Result<DisIndex> {
        check_finite(threshold)?;
        Ok(Disord::with_token(
            self.iter()
                .map(|(_, v)| relation.holds(v, threshold))
                .collect(),
            self.snapshot_token(),
        ))
    }

    /// Sets the coefficient to `value` wherever `mask` is true.
    pub fn replace_where(&self, mask: &DisIndex, value: f64) -> Result<Frab> {
        let aligned = self.align(mask)?;
        check_finite(value)?;
        let mut entries = BTreeMap::new();
        for (i, (symbol, v)) in self.iter().enumerate() {
            let v = if *aligned.at(i) { value } else { v };
            if v != 0.0 {
                entries.insert(symbol.clone(), v);
            }
        }
        Ok(Frab::from_canonical(entries))
    }

    /// Sets the coefficient of one symbol, inserting or removing it as
    /// needed.
    pub fn replace_by_symbol(&self, symbol: &str, value: f64) -> Result<Frab> {
        let symbol = Symbol::new(symbol)?;
        check_finite(value)?;
        let mut entries = self.entries().clone();
        if value == 0.0 {
            entries.remove(&symbol);
        } else {
            entries.insert(symbol, value);
        }
        Ok(Frab::from_canonical(entries))
    }
}
