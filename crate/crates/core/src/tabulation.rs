//! Counting tokens into a [`Frab`], and expanding counts back into tokens.
//!
//! Merging two count tables is plain group addition: the table of a
//! concatenated stream is the sum of the tables of its parts.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::frab::Frab;
use crate::symbol::Symbol;

/// Off-integer slack allowed in [`reconstruct`] before rounding.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-9;

/// A finite sequence of non-empty tokens.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TokenStream(Vec<Symbol>);

impl TokenStream {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        tokens
            .into_iter()
            .map(Symbol::new)
            .collect::<Result<Vec<_>>>()
            .map(TokenStream)
    }

    /// Splits on any run of whitespace. Empty input gives an empty stream.
    pub fn parse(text: &str) -> Self {
        TokenStream(
            text.split_whitespace()
                .map(|t| Symbol::new(t).expect("split_whitespace yields non-empty tokens"))
                .collect(),
        )
    }

    pub fn tokens(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &TokenStream) -> TokenStream {
        let mut tokens = Vec::with_capacity(self.len() + other.len());
        tokens.extend_from_slice(&self.0);
        tokens.extend_from_slice(&other.0);
        TokenStream(tokens)
    }
}

impl From<Vec<Symbol>> for TokenStream {
    fn from(tokens: Vec<Symbol>) -> Self {
        TokenStream(tokens)
    }
}

impl FromIterator<Symbol> for TokenStream {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        TokenStream(iter.into_iter().collect())
    }
}

/// One token per line.
impl fmt::Display for TokenStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Occurrence counts of each token.
pub fn tabulate(stream: &TokenStream) -> Frab {
    let mut counts: HashMap<&Symbol, u64> = HashMap::new();
    for t in stream.tokens() {
        *counts.entry(t).or_default() += 1;
    }
    Frab::from_canonical(
        counts
            .into_iter()
            .map(|(s, n)| (s.clone(), n as f64))
            .collect::<BTreeMap<_, _>>(),
    )
}

/// Tabulates a stream given as raw strings.
pub fn tabulate_strs<I, S>(tokens: I) -> Result<Frab>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    TokenStream::new(tokens).map(|ts| tabulate(&ts))
}

/// Combines two count tables. Identical to [`Frab::add`]; named for the
/// counting use case.
pub fn merge_counts(x: &Frab, y: &Frab) -> Frab {
    x.add(y)
}

/// Expands a table of counts into a sorted token stream with each symbol
/// repeated its count times.
///
/// Every coefficient must be a nonnegative integer, up to
/// [`INTEGRALITY_TOLERANCE`].
pub fn reconstruct(f: &Frab) -> Result<TokenStream> {
    let mut counts = Vec::with_capacity(f.len());
    for (symbol, value) in f.sorted_entries() {
        let rounded = value.round();
        let off = (value - rounded).abs() > INTEGRALITY_TOLERANCE;
        if rounded < 0.0 || (value < 0.0 && off) {
            return Err(Error::NegativeCount {
                symbol: symbol.to_string(),
                value,
            });
        }
        if off {
            return Err(Error::NonIntegralCount {
                symbol: symbol.to_string(),
                value,
            });
        }
        counts.push((symbol, rounded as usize));
    }
    let total = counts.iter().map(|(_, n)| n).sum();
    let mut tokens = Vec::with_capacity(total);
    for (symbol, n) in counts {
        tokens.extend(std::iter::repeat_n(symbol.clone(), n));
    }
    Ok(TokenStream(tokens))
}
