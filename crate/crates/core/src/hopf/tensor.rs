use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::coefficients::Coefficient;
use crate::freealg::{FreeAlgError, NCPoly, RewriteSystem, Word};

/// An element of the tensor square of the free algebra: a linear
/// combination of word pairs `a ⊗ b`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Coefficient>,
}

impl TensorPoly {
    pub fn zero() -> TensorPoly {
        TensorPoly::default()
    }

    pub fn one() -> TensorPoly {
        TensorPoly::term(Coefficient::one(), Word::empty(), Word::empty())
    }

    pub fn term(c: Coefficient, left: Word, right: Word) -> TensorPoly {
        let mut t = TensorPoly::zero();
        t.add_term(left, right, c);
        t
    }

    /// `a ⊗ b` for polynomials, expanded bilinearly.
    pub fn tensor(a: &NCPoly, b: &NCPoly) -> TensorPoly {
        let mut t = TensorPoly::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(wa.clone(), wb.clone(), ca * cb);
            }
        }
        t
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Coefficient)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        self.add(&other.scale(&Coefficient::from_int(-1)))
    }

    pub fn scale(&self, c: &Coefficient) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), x * c);
        }
        out
    }

    /// Factorwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd` without reduction.
    pub fn mul_free(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                out.add_term(a.concat(c), b.concat(d), x * y);
            }
        }
        out
    }

    /// Normal-orders each factor independently under `rules`.
    pub fn reduce(&self, rules: &RewriteSystem) -> Result<TensorPoly, FreeAlgError> {
        let mut cache: BTreeMap<Word, NCPoly> = BTreeMap::new();
        let mut nf = |w: &Word| -> Result<NCPoly, FreeAlgError> {
            if let Some(p) = cache.get(w) {
                return Ok(p.clone());
            }
            let p = rules.normal_order(&NCPoly::word(w.clone()))?;
            cache.insert(w.clone(), p.clone());
            Ok(p)
        };
        let mut out = TensorPoly::zero();
        for ((a, b), c) in &self.terms {
            let (na, nb) = (nf(a)?, nf(b)?);
            for (wa, ca) in na.terms() {
                for (wb, cb) in nb.terms() {
                    out.add_term(wa.clone(), wb.clone(), c * ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Factorwise product followed by reduction.
    pub fn mul(
        &self,
        other: &TensorPoly,
        rules: &RewriteSystem,
    ) -> Result<TensorPoly, FreeAlgError> {
        self.mul_free(other).reduce(rules)
    }

    /// Collects terms by their left factor: `Σ a ⊗ (poly in b)`.
    pub fn by_left(&self) -> BTreeMap<Word, NCPoly> {
        let mut out: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry(a.clone())
                .or_default()
                .add_term(b.clone(), c.clone());
        }
        out
    }

    /// Collects terms by their right factor: `Σ (poly in a) ⊗ b`.
    pub fn by_right(&self) -> BTreeMap<Word, NCPoly> {
        let mut out: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry(b.clone())
                .or_default()
                .add_term(a.clone(), c.clone());
        }
        out
    }

    /// Applies a linear functional to the left factor.
    pub fn contract_left(&self, f: impl Fn(&Word) -> Coefficient) -> NCPoly {
        let mut out = NCPoly::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(b.clone(), c * &f(a));
        }
        out
    }

    /// Applies a linear functional to the right factor.
    pub fn contract_right(&self, f: impl Fn(&Word) -> Coefficient) -> NCPoly {
        let mut out = NCPoly::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), c * &f(b));
        }
        out
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
            } else if (-c).is_one() {
                f.write_str("-")?;
            } else if c.is_compound() {
                write!(f, "({c}) ")?;
            } else {
                write!(f, "{c} ")?;
            }
            write!(f, "{a} ⊗ {b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly({self})")
    }
}
