use std::borrow::Borrow;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A generator of the group: a non-empty string, ordered by its bytes.
///
/// Cloning is a reference-count bump, so symbols can be shared freely between
/// a `Frab` and the views taken from it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(text: impl AsRef<str>) -> Result<Self> {
        let text = text.as_ref();
        if text.is_empty() {
            return Err(Error::EmptySymbol);
        }
        Ok(Symbol(Arc::from(text)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for Symbol {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Symbol {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&*self.0, f)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symbol::new(s)
    }
}

impl TryFrom<&str> for Symbol {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        Symbol::new(s)
    }
}

impl TryFrom<String> for Symbol {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySymbol);
        }
        Ok(Symbol(Arc::from(s)))
    }
}

/// A finite real coefficient. NaN and the infinities are rejected.
#[derive(Clone, Copy, PartialEq, PartialOrd, Debug)]
pub struct Coefficient(f64);

impl Coefficient {
    pub fn new(value: f64) -> Result<Self> {
        check_finite(value).map(Coefficient)
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl From<Coefficient> for f64 {
    fn from(c: Coefficient) -> f64 {
        c.0
    }
}

impl TryFrom<f64> for Coefficient {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Coefficient::new(value)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub(crate) fn check_finite(value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteCoefficient(value))
    }
}
