use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::coefficients::{Coefficient, CoefficientError, Parameter};

use super::word::{Generator, Word};

/// A finite linear combination of words with [`Coefficient`] weights.
///
/// No stored term has a zero coefficient. Arithmetic here is in the free
/// algebra; reduction modulo relations lives in [`super::RewriteSystem`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Coefficient>,
}

impl NCPoly {
    pub fn zero() -> NCPoly {
        NCPoly::default()
    }

    pub fn one() -> NCPoly {
        NCPoly::scalar(Coefficient::one())
    }

    pub fn scalar(c: Coefficient) -> NCPoly {
        NCPoly::term(c, Word::empty())
    }

    pub fn word(w: Word) -> NCPoly {
        NCPoly::term(Coefficient::one(), w)
    }

    pub fn letter(g: Generator) -> NCPoly {
        NCPoly::word(Word::letter(g))
    }

    /// Product of single letters, e.g. `NCPoly::letters(&[A, D])`.
    pub fn letters(gs: &[Generator]) -> NCPoly {
        NCPoly::word(Word::new(gs.to_vec()))
    }

    pub fn term(c: Coefficient, w: Word) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Coefficient)>>(terms: I) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn pop_largest(&mut self) -> Option<(Word, Coefficient)> {
        self.terms.pop_last()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Coefficient)> {
        self.terms.into_iter()
    }

    pub fn words(&self) -> impl DoubleEndedIterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coefficient(&self, w: &Word) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The single coefficient of the empty word, if that is the only term.
    pub fn as_scalar(&self) -> Option<Coefficient> {
        match self.terms.len() {
            0 => Some(Coefficient::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Coefficient::from_int(-1))
    }

    pub fn scale(&self, c: &Coefficient) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Concatenation product in the free algebra (no reduction).
    pub fn mul_free(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    pub fn letters_used(&self) -> impl Iterator<Item = Generator> + '_ {
        self.terms.keys().flat_map(|w| w.letters().iter().copied())
    }

    /// Applies a coefficient map termwise.
    pub fn try_map_coefficients<F>(&self, mut f: F) -> Result<NCPoly, CoefficientError>
    where
        F: FnMut(&Coefficient) -> Result<Coefficient, CoefficientError>,
    {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn substitute(
        &self,
        bindings: &BTreeMap<Parameter, Coefficient>,
    ) -> Result<NCPoly, CoefficientError> {
        self.try_map_coefficients(|c| c.substitute(bindings))
    }

    /// Replaces every letter by a polynomial and multiplies out (free).
    pub fn substitute_letters<F>(&self, mut image: F) -> NCPoly
    where
        F: FnMut(Generator) -> NCPoly,
    {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::scalar(c.clone());
            for &g in w.letters() {
                acc = acc.mul_free(&image(g));
            }
            out = out.add(&acc);
        }
        out
    }

    /// True when `self = lambda * other` for some nonzero scalar `lambda`;
    /// returns `lambda`.
    pub fn proportional_to(&self, other: &NCPoly) -> Option<Coefficient> {
        let (w, c) = other.terms.iter().next()?;
        let lambda = self.coefficient(w).div(c).ok()?;
        if lambda.is_zero() {
            return None;
        }
        (self.sub(&other.scale(&lambda)))
            .is_zero()
            .then_some(lambda)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let term = if w.is_empty() {
                if c.is_compound() && self.terms.len() > 1 {
                    format!("({c})")
                } else {
                    c.to_string()
                }
            } else if c.is_one() {
                w.to_string()
            } else if (-c).is_one() {
                format!("-{w}")
            } else if c.is_compound() {
                format!("({c}) {w}")
            } else {
                format!("{c} {w}")
            };
            match (i, term.strip_prefix('-')) {
                (0, _) => f.write_str(&term)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

impl From<Generator> for NCPoly {
    fn from(g: Generator) -> Self {
        NCPoly::letter(g)
    }
}

impl From<Word> for NCPoly {
    fn from(w: Word) -> Self {
        NCPoly::word(w)
    }
}
