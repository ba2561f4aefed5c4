use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, RngCore};

use crate::coefficients::{Coefficient, CoefficientError, Parameter};

use super::ncpoly::NCPoly;
use super::word::{Generator, Word};
use super::FreeAlgError;

/// One pair-swap rule `g h -> rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteRule {
    pub lhs: (Generator, Generator),
    pub rhs: NCPoly,
}

impl RewriteRule {
    /// Validates the shape constraints that guarantee termination and grading.
    pub fn new(g: Generator, h: Generator, rhs: NCPoly) -> Result<RewriteRule, FreeAlgError> {
        let invalid = |reason: &str| FreeAlgError::InvalidRule {
            lhs: (g, h),
            reason: reason.to_string(),
        };
        if !(g > h || (g == h && g.parity() == 1)) {
            return Err(invalid("left side is already normal"));
        }
        let lhs_word = Word::new(vec![g, h]);
        for w in rhs.words() {
            if w.len() > 2 {
                return Err(invalid("right side word longer than 2"));
            }
            if *w >= lhs_word {
                return Err(invalid("right side word is not smaller than the left side"));
            }
            if w.parity() != lhs_word.parity() {
                return Err(invalid("right side changes parity"));
            }
        }
        Ok(RewriteRule { lhs: (g, h), rhs })
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} -> {}", self.lhs.0, self.lhs.1, self.rhs)
    }
}

/// Which redex to contract first.
pub enum Strategy<'a> {
    Leftmost,
    Rightmost,
    Random(&'a mut dyn RngCore),
}

/// An ordered set of pair-swap rules defining an algebra presentation.
///
/// In a strict system every out-of-order adjacent pair met during reduction
/// must have a rule. A lenient system leaves rule-less pairs in place, which
/// is how generators are kept free of relations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteSystem {
    name: String,
    rules: BTreeMap<(Generator, Generator), NCPoly>,
    lenient: bool,
}

impl RewriteSystem {
    pub fn new(name: impl Into<String>) -> RewriteSystem {
        RewriteSystem {
            name: name.into(),
            rules: BTreeMap::new(),
            lenient: false,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_lenient(&self) -> bool {
        self.lenient
    }

    /// Same rules, but rule-less out-of-order pairs are left alone.
    pub fn lenient(mut self) -> RewriteSystem {
        self.lenient = true;
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> RewriteSystem {
        self.name = name.into();
        self
    }

    pub fn add_rule(&mut self, rule: RewriteRule) -> Result<(), FreeAlgError> {
        match self.rules.get(&rule.lhs) {
            Some(existing) if *existing != rule.rhs => Err(FreeAlgError::ConflictingRule {
                lhs: rule.lhs,
                system: self.name.clone(),
            }),
            _ => {
                self.rules.insert(rule.lhs, rule.rhs);
                Ok(())
            }
        }
    }

    /// Adds `g h -> rhs` after validation.
    pub fn with_rule(
        mut self,
        g: Generator,
        h: Generator,
        rhs: NCPoly,
    ) -> Result<RewriteSystem, FreeAlgError> {
        self.add_rule(RewriteRule::new(g, h, rhs)?)?;
        Ok(self)
    }

    /// Union of several systems; identical duplicate rules are merged.
    pub fn union(
        name: impl Into<String>,
        parts: &[&RewriteSystem],
    ) -> Result<RewriteSystem, FreeAlgError> {
        let mut out = RewriteSystem::new(name);
        for part in parts {
            out.lenient |= part.lenient;
            for (lhs, rhs) in &part.rules {
                out.add_rule(RewriteRule {
                    lhs: *lhs,
                    rhs: rhs.clone(),
                })?;
            }
        }
        Ok(out)
    }

    pub fn rule(&self, g: Generator, h: Generator) -> Option<&NCPoly> {
        self.rules.get(&(g, h))
    }

    pub fn rules(&self) -> impl Iterator<Item = RewriteRule> + '_ {
        self.rules.iter().map(|(lhs, rhs)| RewriteRule {
            lhs: *lhs,
            rhs: rhs.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Applies a coefficient substitution to every rule.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Parameter, Coefficient>,
    ) -> Result<RewriteSystem, CoefficientError> {
        let mut out = self.clone();
        for rhs in out.rules.values_mut() {
            *rhs = rhs.substitute(bindings)?;
        }
        Ok(out)
    }

    fn redexes(&self, w: &Word) -> Result<Vec<usize>, FreeAlgError> {
        let mut out = Vec::new();
        for (i, pair) in w.letters().windows(2).enumerate() {
            let (g, h) = (pair[0], pair[1]);
            if g > h || (g == h && g.parity() == 1) {
                if self.rules.contains_key(&(g, h)) {
                    out.push(i);
                } else if !self.lenient {
                    return Err(FreeAlgError::MissingRule(g, h));
                }
            }
        }
        Ok(out)
    }

    /// True when no rule applies anywhere in `w`.
    pub fn is_irreducible(&self, w: &Word) -> Result<bool, FreeAlgError> {
        Ok(self.redexes(w)?.is_empty())
    }

    /// Normal form under the leftmost-first strategy.
    pub fn normal_order(&self, poly: &NCPoly) -> Result<NCPoly, FreeAlgError> {
        self.normal_order_with(poly, Strategy::Leftmost)
    }

    /// Normal form under an explicit strategy.
    ///
    /// Every rewrite strictly decreases a word in the length-then-rank
    /// order, so pending words are processed largest first and each word is
    /// expanded at most once, with like terms merged as they appear.
    pub fn normal_order_with(
        &self,
        poly: &NCPoly,
        mut strategy: Strategy<'_>,
    ) -> Result<NCPoly, FreeAlgError> {
        let mut pending = poly.clone();
        let mut done = NCPoly::zero();
        while let Some((w, c)) = pending.pop_largest() {
            let redexes = self.redexes(&w)?;
            if redexes.is_empty() {
                done.add_term(w, c);
                continue;
            }
            let pos = match &mut strategy {
                Strategy::Leftmost => redexes[0],
                Strategy::Rightmost => *redexes.last().expect("non-empty"),
                Strategy::Random(rng) => redexes[rng.gen_range(0..redexes.len())],
            };
            let letters = w.letters();
            let rhs = &self.rules[&(letters[pos], letters[pos + 1])];
            for (mid, rc) in rhs.terms() {
                pending.add_term(w.splice(pos, mid), &c * rc);
            }
        }
        Ok(done)
    }

    /// Normal form of the concatenation product.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, FreeAlgError> {
        self.normal_order(&a.mul_free(b))
    }

    /// Reduces `lhs - rhs`; the identity holds iff the result is zero.
    pub fn residual(&self, lhs: &NCPoly, rhs: &NCPoly) -> Result<NCPoly, FreeAlgError> {
        self.normal_order(&lhs.sub(rhs))
    }
}

/// Free-function form of [`RewriteSystem::normal_order`].
pub fn normal_order(poly: &NCPoly, rules: &RewriteSystem) -> Result<NCPoly, FreeAlgError> {
    rules.normal_order(poly)
}

/// Free-function form of [`RewriteSystem::mul`].
pub fn nc_mul(a: &NCPoly, b: &NCPoly, rules: &RewriteSystem) -> Result<NCPoly, FreeAlgError> {
    rules.mul(a, b)
}

/// A word whose normal form depends on the reduction strategy.
#[derive(Clone, Debug, PartialEq)]
pub struct Divergence {
    pub word: Word,
    pub kind: DivergenceKind,
}

#[derive(Clone, Debug, PartialEq)]
pub enum DivergenceKind {
    Mismatch {
        first: NCPoly,
        second: NCPoly,
        /// `first - second`, already normal.
        difference: NCPoly,
    },
    Failed(String),
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            DivergenceKind::Mismatch { difference, .. } => {
                write!(f, "{}: strategies differ by {}", self.word, difference)
            }
            DivergenceKind::Failed(msg) => write!(f, "{}: {}", self.word, msg),
        }
    }
}

fn compare_strategies(
    rules: &RewriteSystem,
    word: Word,
    second: Strategy<'_>,
) -> Option<Divergence> {
    let poly = NCPoly::word(word.clone());
    let a = rules.normal_order_with(&poly, Strategy::Leftmost);
    let b = rules.normal_order_with(&poly, second);
    match (a, b) {
        (Ok(a), Ok(b)) if a == b => None,
        (Ok(a), Ok(b)) => Some(Divergence {
            word,
            kind: DivergenceKind::Mismatch {
                difference: a.sub(&b),
                first: a,
                second: b,
            },
        }),
        (Err(e), _) | (_, Err(e)) => Some(Divergence {
            word,
            kind: DivergenceKind::Failed(e.to_string()),
        }),
    }
}

/// Local confluence audit: every length-3 word over `alphabet` is reduced
/// leftmost-first and rightmost-first and the normal forms are compared.
pub fn check_critical_pairs(rules: &RewriteSystem, alphabet: &[Generator]) -> Vec<Divergence> {
    let mut out = Vec::new();
    for &g in alphabet {
        for &h in alphabet {
            for &i in alphabet {
                let w = Word::new(vec![g, h, i]);
                if let Some(d) = compare_strategies(rules, w, Strategy::Rightmost) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Reduces `samples` random words (length `0..=max_len`) leftmost-first and
/// with uniformly random redex choice, reporting every disagreement.
pub fn check_strategy_independence(
    rules: &RewriteSystem,
    alphabet: &[Generator],
    samples: usize,
    max_len: usize,
    rng: &mut dyn RngCore,
) -> Vec<Divergence> {
    let mut out = Vec::new();
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len);
        let w: Word = (0..len)
            .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
            .collect();
        if let Some(d) = compare_strategies(rules, w, Strategy::Random(&mut *rng)) {
            out.push(d);
        }
    }
    out
}

/// Dimension of the span of `polys` over the coefficient field.
pub fn linear_rank(polys: &[NCPoly]) -> usize {
    let mut pivots: BTreeMap<Word, NCPoly> = BTreeMap::new();
    for p in polys {
        let mut r = p.clone();
        let mut bound: Option<Word> = None;
        loop {
            let next = r
                .words()
                .rev()
                .find(|w| bound.as_ref().is_none_or(|b| *w < b) && pivots.contains_key(*w))
                .cloned();
            let Some(w) = next else { break };
            let c = r.coefficient(&w);
            r = r.sub(&pivots[&w].scale(&c));
            bound = Some(w);
        }
        let lead = r.words().next_back().cloned();
        if let Some(lead) = lead {
            let c = r
                .coefficient(&lead)
                .inv()
                .expect("nonzero leading coefficient");
            pivots.insert(lead, r.scale(&c));
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{int, par};
    use Generator::*;

    fn swap(name: &str, c: Coefficient) -> RewriteSystem {
        RewriteSystem::new(name)
            .with_rule(B, A, NCPoly::term(c, Word::new(vec![A, B])))
            .unwrap()
    }

    #[test]
    fn rule_validation() {
        assert!(RewriteRule::new(A, B, NCPoly::letters(&[A, B])).is_err());
        assert!(RewriteRule::new(B, A, NCPoly::letters(&[B, A])).is_err());
        assert!(RewriteRule::new(B, A, NCPoly::letters(&[A, A, B])).is_err());
        assert!(RewriteRule::new(Dy, X, NCPoly::letters(&[Dx, Dy])).is_err());
        assert!(RewriteRule::new(Dx, Dx, NCPoly::zero()).is_ok());
        assert!(RewriteRule::new(X, X, NCPoly::zero()).is_err());
    }

    #[test]
    fn missing_rule_is_reported() {
        let sys = swap("ab", par(Parameter::P));
        let err = sys.normal_order(&NCPoly::letters(&[C, A])).unwrap_err();
        assert_eq!(err, FreeAlgError::MissingRule(C, A));
        let lenient = sys.clone().lenient();
        assert_eq!(
            lenient.normal_order(&NCPoly::letters(&[C, A])).unwrap(),
            NCPoly::letters(&[C, A])
        );
    }

    #[test]
    fn reduction_is_linear_and_merges_terms() {
        let sys = swap("ab", int(2));
        let poly = NCPoly::letters(&[B, A, A]).add(&NCPoly::letters(&[A, B, A]).scale(&int(-2)));
        // B A A -> 4 A A B and A B A -> 2 A A B, so the total vanishes
        assert!(sys.normal_order(&poly).unwrap().is_zero());
    }

    #[test]
    fn conflicting_union_is_rejected() {
        let a = swap("a", int(2));
        let b = swap("b", int(3));
        assert!(RewriteSystem::union("ab", &[&a, &b]).is_err());
        assert!(RewriteSystem::union("aa", &[&a, &a.clone()]).is_ok());
    }

    #[test]
    fn rank_of_dependent_set() {
        let ab = NCPoly::letters(&[A, B]);
        let ba = NCPoly::letters(&[B, A]);
        let polys = vec![
            ab.clone(),
            ba.clone(),
            ab.add(&ba).scale(&par(Parameter::Q)),
        ];
        assert_eq!(linear_rank(&polys), 2);
        assert_eq!(linear_rank(&[]), 0);
    }
}
