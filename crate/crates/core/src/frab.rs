//! The group element: a finite map from symbols to nonzero real coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use crate::disord::ProvenanceToken;
use crate::error::{Error, Result};
use crate::format;
use crate::symbol::{check_finite, Coefficient, Symbol};

/// An element of the free Abelian group on string symbols, with real
/// coefficients.
///
/// Always held in canonical form: every symbol appears once and no stored
/// coefficient is exactly zero. Two `Frab`s are equal when their supports
/// match and the coefficients compare equal as reals, independent of how
/// they were built.
///
/// Values are immutable; every operation returns a new `Frab`.
#[derive(Clone, Default)]
pub struct Frab {
    entries: BTreeMap<Symbol, f64>,
    /// Provenance shared by the names/values views of this value. Assigned
    /// lazily on the first view and never carried over to derived values.
    pub(crate) snapshot: OnceLock<ProvenanceToken>,
}

impl Frab {
    /// The identity element.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from already-canonical entries.
    pub(crate) fn from_canonical(entries: BTreeMap<Symbol, f64>) -> Self {
        debug_assert!(entries.values().all(|v| *v != 0.0 && v.is_finite()));
        Frab {
            entries,
            snapshot: OnceLock::new(),
        }
    }

    /// Builds a `Frab` from `(name, coefficient)` pairs.
    ///
    /// Repeated names are summed left to right in input order, and any name
    /// whose total is exactly zero is dropped.
    ///
    /// ```
    /// use frab::Frab;
    /// let f = Frab::from_pairs([("t", 3.0), ("q", 2.0), ("t", 4.0), ("q", -1.0)]).unwrap();
    /// assert_eq!(f.get("t"), 7.0);
    /// assert_eq!(f.get("q"), 1.0);
    /// ```
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: AsRef<str>,
    {
        let validated = pairs
            .into_iter()
            .map(|(name, value)| Ok((Symbol::new(name)?, check_finite(value)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::accumulate(validated)
    }

    /// As [`Frab::from_pairs`], for pre-validated symbols and coefficients.
    pub fn from_entries<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Symbol, Coefficient)>,
    {
        Self::accumulate(entries.into_iter().map(|(s, c)| (s, c.get())).collect())
    }

    /// Sums duplicate symbols in input order and drops exact zeros.
    pub(crate) fn accumulate(mut pairs: Vec<(Symbol, f64)>) -> Result<Self> {
        // stable: equal symbols keep their input order for summation
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Symbol, f64)> = Vec::with_capacity(pairs.len());
        for (symbol, value) in pairs {
            match merged.last_mut() {
                Some((last, total)) if *last == symbol => *total += value,
                _ => merged.push((symbol, value)),
            }
        }
        let mut entries = BTreeMap::new();
        for (symbol, total) in merged {
            check_finite(total)?;
            if total != 0.0 {
                entries.insert(symbol, total);
            }
        }
        Ok(Self::from_canonical(entries))
    }

    /// Group addition, keyed by symbol.
    ///
    /// Fails only if some coefficient sum overflows to infinity.
    pub fn try_add(&self, other: &Frab) -> Result<Frab> {
        if other.is_empty() {
            return Ok(Self::from_canonical(self.entries.clone()));
        }
        if self.is_empty() {
            return Ok(Self::from_canonical(other.entries.clone()));
        }
        // both maps iterate in ascending order; merge them in one pass
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let mut left = self.entries.iter().peekable();
        let mut right = other.entries.iter().peekable();
        loop {
            let l = left.peek().map(|&(s, v)| (s, *v));
            let r = right.peek().map(|&(s, v)| (s, *v));
            let (symbol, value) = match (l, r) {
                (Some((ls, lv)), Some((rs, rv))) => match ls.cmp(rs) {
                    Ordering::Less => {
                        left.next();
                        (ls, lv)
                    }
                    Ordering::Greater => {
                        right.next();
                        (rs, rv)
                    }
                    Ordering::Equal => {
                        left.next();
                        right.next();
                        let total = check_finite(lv + rv)?;
                        if total == 0.0 {
                            continue;
                        }
                        (ls, total)
                    }
                },
                (Some((ls, lv)), None) => {
                    left.next();
                    (ls, lv)
                }
                (None, Some((rs, rv))) => {
                    right.next();
                    (rs, rv)
                }
                (None, None) => break,
            };
            merged.push((symbol.clone(), value));
        }
        Ok(Self::from_canonical(merged.into_iter().collect()))
    }

    /// Group addition.
    ///
    /// # Panics
    ///
    /// If a coefficient sum overflows to infinity; use [`Frab::try_add`] to
    /// handle that case.
    pub fn add(&self, other: &Frab) -> Frab {
        self.try_add(other)
            .expect("coefficient overflow in frab addition")
    }

    /// Additive inverse: every coefficient sign-flipped.
    pub fn negate(&self) -> Frab {
        Self::from_canonical(self.entries.iter().map(|(s, v)| (s.clone(), -v)).collect())
    }

    pub fn try_subtract(&self, other: &Frab) -> Result<Frab> {
        self.try_add(&other.negate())
    }

    /// `self + (-other)`.
    ///
    /// # Panics
    ///
    /// On coefficient overflow, as for [`Frab::add`].
    pub fn subtract(&self, other: &Frab) -> Frab {
        self.try_subtract(other)
            .expect("coefficient overflow in frab subtraction")
    }

    /// Multiplies every coefficient by `scalar`. Products that are exactly
    /// zero (including underflow) are dropped.
    pub fn scalar_multiply(&self, scalar: f64) -> Result<Frab> {
        check_finite(scalar)?;
        let mut entries = BTreeMap::new();
        for (symbol, value) in &self.entries {
            let product = check_finite(value * scalar)?;
            if product != 0.0 {
                entries.insert(symbol.clone(), product);
            }
        }
        Ok(Self::from_canonical(entries))
    }

    /// Coefficient of `symbol`, or `0.0` when it is not in the support.
    pub fn coefficient_of(&self, symbol: &str) -> Result<f64> {
        if symbol.is_empty() {
            return Err(Error::EmptySymbol);
        }
        Ok(self.get(symbol))
    }

    /// Like [`Frab::coefficient_of`], treating `""` as simply absent.
    pub fn get(&self, symbol: &str) -> f64 {
        self.entries.get(symbol).copied().unwrap_or(0.0)
    }

    pub fn contains(&self, symbol: &str) -> bool {
        self.entries.contains_key(symbol)
    }

    /// Number of symbols with a nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Removes every entry with `|coefficient| <= tol`.
    pub fn zap(&self, tol: f64) -> Result<Frab> {
        check_finite(tol)?;
        if tol < 0.0 {
            return Err(Error::NegativeTolerance(tol));
        }
        Ok(Self::from_canonical(
            self.entries
                .iter()
                .filter(|(_, v)| v.abs() > tol)
                .map(|(s, v)| (s.clone(), *v))
                .collect(),
        ))
    }

    /// Entries of the support. Callers should not rely on the order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = (&Symbol, f64)> + '_ {
        self.entries.iter().map(|(s, v)| (s, *v))
    }

    pub fn symbols(&self) -> impl ExactSizeIterator<Item = &Symbol> + '_ {
        self.entries.keys()
    }

    /// Entries in ascending byte order of symbol, the canonical rendering
    /// order.
    pub fn sorted_entries(&self) -> impl ExactSizeIterator<Item = (&Symbol, f64)> + '_ {
        self.entries.iter().map(|(s, v)| (s, *v))
    }

    pub(crate) fn entries(&self) -> &BTreeMap<Symbol, f64> {
        &self.entries
    }
}

impl PartialEq for Frab {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

// Coefficients are finite, so `==` on them is an equivalence relation.
impl Eq for Frab {}

impl fmt::Debug for Frab {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

/// The tabular display: a header line, then symbols in ascending order with
/// their coefficients aligned beneath.
///
/// ```text
/// A frab object with entries
///  a  p  q  t
///  3  6  1 12
/// ```
impl fmt::Display for Frab {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "A frab object with no entries");
        }
        writeln!(f, "A frab object with entries")?;
        let values: Vec<f64> = self.entries.values().copied().collect();
        let mut cells: Vec<String> = self.entries.keys().map(|s| s.to_string()).collect();
        cells.extend(format::display_column(&values));
        format::pad_common(&mut cells);
        let (names, values) = cells.split_at(self.len());
        for row in [names, values] {
            for cell in row {
                write!(f, "{cell} ")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Add for &Frab {
    type Output = Frab;

    fn add(self, rhs: &Frab) -> Frab {
        Frab::add(self, rhs)
    }
}

impl Add for Frab {
    type Output = Frab;

    fn add(self, rhs: Frab) -> Frab {
        Frab::add(&self, &rhs)
    }
}

impl Sub for &Frab {
    type Output = Frab;

    fn sub(self, rhs: &Frab) -> Frab {
        self.subtract(rhs)
    }
}

impl Sub for Frab {
    type Output = Frab;

    fn sub(self, rhs: Frab) -> Frab {
        self.subtract(&rhs)
    }
}

impl Neg for &Frab {
    type Output = Frab;

    fn neg(self) -> Frab {
        self.negate()
    }
}

impl Neg for Frab {
    type Output = Frab;

    fn neg(self) -> Frab {
        self.negate()
    }
}

impl Sum for Frab {
    fn sum<I: Iterator<Item = Frab>>(iter: I) -> Frab {
        iter.fold(Frab::new(), |acc, f| acc + f)
    }
}

impl<'a> Sum<&'a Frab> for Frab {
    fn sum<I: Iterator<Item = &'a Frab>>(iter: I) -> Frab {
        iter.fold(Frab::new(), |acc, f| Frab::add(&acc, f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frab(pairs: &[(&str, f64)]) -> Frab {
        Frab::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn assert_canonical(f: &Frab) {
        assert!(f.iter().all(|(_, v)| v != 0.0 && v.is_finite()));
    }

    #[test]
    fn construction_sorts() {
        let f = frab(&[("z", 2.0), ("y", 7.0), ("x", 1.0)]);
        let got: Vec<_> = f.sorted_entries().map(|(s, v)| (s.as_str(), v)).collect();
        assert_eq!(got, [("x", 1.0), ("y", 7.0), ("z", 2.0)]);
    }

    #[test]
    fn construction_sums_repeats() {
        let f = frab(&[
            ("t", 3.0),
            ("q", 2.0),
            ("t", 4.0),
            ("q", -1.0),
            ("p", 6.0),
            ("a", 3.0),
            ("t", 5.0),
        ]);
        assert_eq!(f, frab(&[("a", 3.0), ("p", 6.0), ("q", 1.0), ("t", 12.0)]));
        assert_eq!(f.support_size(), 4);
    }

    #[test]
    fn construction_drops_zeros_and_cancellations() {
        let f = frab(&[
            ("pear", 1.0),
            ("kiwi", 0.0),
            ("fig", 3.0),
            ("lime", 2.0),
            ("fig", -3.0),
        ]);
        assert_eq!(f, frab(&[("lime", 2.0), ("pear", 1.0)]));
        assert!(!f.contains("kiwi"));
        assert!(!f.contains("fig"));
        assert_eq!(f.coefficient_of("kiwi").unwrap(), 0.0);
        assert_canonical(&f);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Frab::from_pairs([("a", 1.0), ("", 2.0)]),
            Err(Error::EmptySymbol)
        );
        assert!(matches!(
            Frab::from_pairs([("a", f64::NAN)]),
            Err(Error::NonFiniteCoefficient(_))
        ));
        assert!(matches!(
            Frab::from_pairs([("a", f64::MAX), ("a", f64::MAX)]),
            Err(Error::NonFiniteCoefficient(_))
        ));
        assert!(Frab::from_pairs(Vec::<(&str, f64)>::new())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn negative_zero_is_dropped() {
        assert!(frab(&[("a", -0.0)]).is_empty());
    }

    #[test]
    fn duplicate_accumulation_is_left_to_right() {
        // (0.1 + 0.2) + 0.3 differs from 0.1 + (0.2 + 0.3) in binary64
        let f = frab(&[("a", 0.1), ("b", 1.0), ("a", 0.2), ("a", 0.3)]);
        assert_eq!(f.get("a"), (0.1 + 0.2) + 0.3);
    }

    #[test]
    fn keyed_addition() {
        let a = frab(&[("x", 2.0), ("y", 1.0), ("z", 3.0)]);
        let b = frab(&[("y", 3.0), ("x", 3.0), ("u", 1.0)]);
        let sum = &a + &b;
        assert_eq!(sum, frab(&[("u", 1.0), ("x", 5.0), ("y", 4.0), ("z", 3.0)]));
        assert_eq!(sum.support_size(), 4);
        assert_eq!(a.support_size(), 3);
        assert_eq!(&a + &Frab::new(), a);
    }

    #[test]
    fn addition_cancels_to_empty() {
        let a = frab(&[("a", 3.0), ("p", 6.0), ("q", 1.0), ("t", 12.0)]);
        let z = Frab::add(&a, &a.negate());
        assert!(z.is_empty());
    }

    #[test]
    fn addition_overflow_is_reported() {
        let a = frab(&[("a", f64::MAX)]);
        assert!(matches!(a.try_add(&a), Err(Error::NonFiniteCoefficient(_))));
    }

    #[test]
    fn negation() {
        assert_eq!(
            frab(&[("x", 2.0), ("y", -1.0)]).negate(),
            frab(&[("x", -2.0), ("y", 1.0)])
        );
        assert!(Frab::new().negate().is_empty());
    }

    #[test]
    fn subtraction() {
        assert!((frab(&[("x", 5.0)]) - frab(&[("x", 5.0)])).is_empty());
        assert_eq!(
            frab(&[("x", 5.0), ("y", 1.0)]) - frab(&[("y", 1.0)]),
            frab(&[("x", 5.0)])
        );
        let sum = frab(&[("u", 1.0), ("x", 5.0), ("y", 4.0), ("z", 3.0)]);
        let b = frab(&[("y", 3.0), ("x", 3.0), ("u", 1.0)]);
        assert_eq!(sum - b, frab(&[("x", 2.0), ("y", 1.0), ("z", 3.0)]));
    }

    #[test]
    fn scaling() {
        let f = frab(&[("x", 1.0), ("y", -3.0)]);
        assert_eq!(
            f.scalar_multiply(2.0).unwrap(),
            frab(&[("x", 2.0), ("y", -6.0)])
        );
        assert!(f.scalar_multiply(0.0).unwrap().is_empty());
        let a = frab(&[("a", 3.0), ("p", 6.0), ("q", 1.0), ("t", 12.0)]);
        assert_eq!(a.scalar_multiply(1.0).unwrap(), a);
        assert!(matches!(
            f.scalar_multiply(f64::INFINITY),
            Err(Error::NonFiniteCoefficient(_))
        ));
        // underflow to zero is dropped
        let tiny = frab(&[("x", 5e-324), ("y", 1.0)]);
        assert_eq!(tiny.scalar_multiply(0.5).unwrap(), frab(&[("y", 0.5)]));
    }

    #[test]
    fn lookup() {
        let a = frab(&[("x", 2.0), ("y", 1.0), ("u", 8.0), ("z", 3.0), ("v", 5.0)]);
        assert_eq!(a.coefficient_of("x").unwrap(), 2.0);
        assert_eq!(Frab::new().coefficient_of("x").unwrap(), 0.0);
        assert_eq!(a.coefficient_of(""), Err(Error::EmptySymbol));
    }

    #[test]
    fn zapping() {
        let f = frab(&[("a", 4.0), ("p", 1.776357e-15)]);
        assert_eq!(f.zap(1e-12).unwrap(), frab(&[("a", 4.0)]));
        assert_eq!(f.zap(0.0).unwrap(), f);
        assert_eq!(
            frab(&[("x", 0.5), ("y", 2.0)]).zap(1.0).unwrap(),
            frab(&[("y", 2.0)])
        );
        // boundary is inclusive
        assert!(frab(&[("x", 1.0)]).zap(1.0).unwrap().is_empty());
        assert_eq!(f.zap(-1.0), Err(Error::NegativeTolerance(-1.0)));
        assert!(matches!(
            f.zap(f64::NAN),
            Err(Error::NonFiniteCoefficient(_))
        ));
    }

    #[test]
    fn roundoff_residual_is_kept() {
        use std::f64::consts::PI;
        let ep = PI.exp();
        let x = frab(&[("a", 4.0), ("u", PI), ("p", ep)]);
        let y = frab(&[("p", -ep / 3.0), ("u", -PI)]);
        let z = frab(&[("p", -ep * 2.0 / 3.0)]);
        let s = &(&x + &y) + &z;
        assert_eq!(s.get("a"), 4.0);
        assert!(!s.contains("u"));
        assert!(s.get("p").abs() <= 1e-12);
        assert_eq!(s.zap(1e-12).unwrap(), frab(&[("a", 4.0)]));
    }

    #[test]
    fn display_matches_tabular_layout() {
        let f = frab(&[("z", 2.0), ("y", 7.0), ("x", 1.0)]);
        assert_eq!(
            f.to_string(),
            "A frab object with entries\nx y z \n1 7 2 \n"
        );
        let f = frab(&[("pear", 1.0), ("lime", 2.0)]);
        assert_eq!(
            f.to_string(),
            "A frab object with entries\nlime pear \n   2    1 \n"
        );
        let f = frab(&[
            ("x", 2.0),
            ("y", -1.0),
            ("z", 3.0),
            ("p", -4.0),
            ("u", 20.0),
        ]);
        assert_eq!(
            f.to_string(),
            "A frab object with entries\n p  u  x  y  z \n-4 20  2 -1  3 \n"
        );
        let f = frab(&[("a", 4.0), ("p", 1.776357e-15)]);
        assert_eq!(
            f.to_string(),
            "A frab object with entries\n           a            p \n4.000000e+00 1.776357e-15 \n"
        );
    }

    #[test]
    fn sum_of_many() {
        let parts = [
            frab(&[("a", 1.0)]),
            frab(&[("b", 2.0)]),
            frab(&[("a", -1.0)]),
        ];
        let total: Frab = parts.iter().sum();
        assert_eq!(total, frab(&[("b", 2.0)]));
    }
}
