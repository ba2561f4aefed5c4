//! Comultiplication, counit, quantum determinant and antipode identities.
//!
//! `Δ(T) = T ⊗ T` entrywise:
//!
//! ```text
//! Δ(A) = A⊗A + B⊗C    Δ(B) = A⊗B + B⊗D
//! Δ(C) = C⊗A + D⊗C    Δ(D) = C⊗B + D⊗D
//! ```
//!
//! The determinant `𝒟 = AD - pBC` is never inverted in the ring. The
//! antipode is the adjugate with the `𝒟⁻¹` factor kept to one side and moved
//! past generators using the determinant's commutation relations.

mod tensor;

use thiserror::Error;

use crate::coefficients::{int, par, Coefficient, CoefficientError, Parameter};
use crate::freealg::{FreeAlgError, Generator, NCPoly, RewriteSystem, Word};
use crate::presets::{glpq_rules, solve_linear, PresetError};

pub use tensor::TensorPoly;

use Generator::*;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("`{0}` is not a group generator")]
    NotGroup(Generator),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Preset(#[from] PresetError),
    #[error(transparent)]
    Coefficient(#[from] CoefficientError),
}

/// A named polynomial identity; it holds iff `residual` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub residual: NCPoly,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

fn pairs(g: Generator) -> Result<[(Generator, Generator); 2], HopfError> {
    Ok(match g {
        A => [(A, A), (B, C)],
        B => [(A, B), (B, D)],
        C => [(C, A), (D, C)],
        D => [(C, B), (D, D)],
        other => return Err(HopfError::NotGroup(other)),
    })
}

/// `Δ(g)` for a single group generator.
pub fn delta_generator(g: Generator) -> Result<TensorPoly, HopfError> {
    let mut t = TensorPoly::zero();
    for (a, b) in pairs(g)? {
        t.add_term(Word::letter(a), Word::letter(b), Coefficient::one());
    }
    Ok(t)
}

/// `Δ` extended multiplicatively, with no reduction.
pub fn delta_free(poly: &NCPoly) -> Result<TensorPoly, HopfError> {
    let mut out = TensorPoly::zero();
    for (w, c) in poly.terms() {
        let mut acc = TensorPoly::one().scale(c);
        for &g in w.letters() {
            acc = acc.mul_free(&delta_generator(g)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// `Δ(poly)` with each tensor factor normal-ordered under `rules`.
pub fn delta(poly: &NCPoly, rules: &RewriteSystem) -> Result<TensorPoly, HopfError> {
    Ok(delta_free(poly)?.reduce(rules)?)
}

/// `Δ(relation)` reduced factorwise; zero iff `Δ` respects the relation.
pub fn delta_residual(relation: &NCPoly, rules: &RewriteSystem) -> Result<TensorPoly, HopfError> {
    delta(relation, rules)
}

/// `ε(A) = ε(D) = 1`, `ε(B) = ε(C) = 0`, extended multiplicatively.
pub fn counit_word(w: &Word) -> Result<Coefficient, HopfError> {
    for &g in w.letters() {
        match g {
            A | D => {}
            B | C => return Ok(Coefficient::zero()),
            other => return Err(HopfError::NotGroup(other)),
        }
    }
    Ok(Coefficient::one())
}

pub fn counit(poly: &NCPoly) -> Result<Coefficient, HopfError> {
    let mut out = Coefficient::zero();
    for (w, c) in poly.terms() {
        out = out + c * &counit_word(w)?;
    }
    Ok(out)
}

/// `(ε ⊗ id)Δ(g) - g` and `(id ⊗ ε)Δ(g) - g` for each generator.
pub fn counit_check() -> Result<Vec<Identity>, HopfError> {
    let eps = |w: &Word| counit_word(w).expect("group words");
    let mut out = Vec::new();
    for g in Generator::GROUP {
        let d = delta_generator(g)?;
        let gp = NCPoly::letter(g);
        out.push(Identity {
            name: format!("(ε⊗id)Δ({g}) = {g}"),
            residual: d.contract_left(eps).sub(&gp),
        });
        out.push(Identity {
            name: format!("(id⊗ε)Δ({g}) = {g}"),
            residual: d.contract_right(eps).sub(&gp),
        });
    }
    Ok(out)
}

/// The six defining relations of `GL_{p,q'}(2)` as polynomials that vanish.
pub fn glpq_relations(
    p: &Coefficient,
    qp: &Coefficient,
) -> Result<Vec<(String, NCPoly)>, HopfError> {
    let l = NCPoly::letters;
    let qpi = qp.inv()?;
    Ok(vec![
        ("AB = p BA".into(), l(&[A, B]).sub(&l(&[B, A]).scale(p))),
        ("CD = p DC".into(), l(&[C, D]).sub(&l(&[D, C]).scale(p))),
        ("AC = q' CA".into(), l(&[A, C]).sub(&l(&[C, A]).scale(qp))),
        ("BD = q' DB".into(), l(&[B, D]).sub(&l(&[D, B]).scale(qp))),
        (
            "p BC = q' CB".into(),
            l(&[B, C]).scale(p).sub(&l(&[C, B]).scale(qp)),
        ),
        (
            "AD - DA = (p - 1/q') BC".into(),
            l(&[A, D])
                .sub(&l(&[D, A]))
                .sub(&l(&[B, C]).scale(&(p - &qpi))),
        ),
    ])
}

/// A scalar condition read off a Δ-residual: the coefficient must vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarCondition {
    pub source: String,
    pub word: (Word, Word),
    pub coefficient: Coefficient,
}

/// Everything recovered from the Δ-residuals of the four candidate
/// q-commutation relations with free exponents `q1 .. q4`.
#[derive(Clone, Debug)]
pub struct HopfConstraintReport {
    pub residuals: Vec<(String, TensorPoly)>,
    pub scalar_conditions: Vec<ScalarCondition>,
    pub exchange_relations: Vec<(String, NCPoly)>,
    /// A scalar condition whose only solution is `q2 = q1`.
    pub q1_equals_q2: bool,
    /// A scalar condition whose only solution is `q4 = q3`.
    pub q3_equals_q4: bool,
    /// Relation from the `q1` residual at `q1 = q2 = q'`, normalized.
    pub first_exchange: Option<NCPoly>,
    /// Relation from the `q3` residual at `q3 = q4 = p`, normalized.
    pub second_exchange: Option<NCPoly>,
    /// `first_exchange = AD - DA - q'CB + q'^{-1}BC`.
    pub first_matches: bool,
    /// `second_exchange = AD - DA - pBC + p^{-1}CB`.
    pub second_matches: bool,
    /// `first - second = λ (q'CB - pBC)`; `λ` carries the factor `pq' + 1`.
    pub difference_factor: Option<Coefficient>,
    /// `λ pq' / (pq' + 1)` is a nonzero integer.
    pub exclusion_recovered: bool,
}

fn qn(i: usize) -> Coefficient {
    par(Parameter::swap_exponent(i))
}

/// Scales so that the `A D` coefficient is 1.
fn normalize_ad(p: &NCPoly) -> Option<NCPoly> {
    let c = p.coefficient(&Word::new(vec![A, D]));
    Some(p.scale(&c.inv().ok()?))
}

/// Computes Δ-residuals of `AC - q1 CA`, `BD - q2 DB`, `AB - q3 BA`,
/// `CD - q4 DC` modulo only those four relations and reads off what they
/// force.
pub fn derive_hopf_constraints() -> Result<HopfConstraintReport, HopfError> {
    let (q1, q2, q3, q4) = (qn(1), qn(2), qn(3), qn(4));
    let rule = |c: &Coefficient, a, b| -> Result<NCPoly, HopfError> {
        Ok(NCPoly::letters(&[a, b]).scale(&c.inv()?))
    };
    let sys = RewriteSystem::new("candidate")
        .with_rule(C, A, rule(&q1, A, C)?)?
        .with_rule(D, B, rule(&q2, B, D)?)?
        .with_rule(B, A, rule(&q3, A, B)?)?
        .with_rule(D, C, rule(&q4, C, D)?)?
        .lenient();
    let l = NCPoly::letters;
    let candidates = [
        ("AC = q1 CA", l(&[A, C]).sub(&l(&[C, A]).scale(&q1))),
        ("BD = q2 DB", l(&[B, D]).sub(&l(&[D, B]).scale(&q2))),
        ("AB = q3 BA", l(&[A, B]).sub(&l(&[B, A]).scale(&q3))),
        ("CD = q4 DC", l(&[C, D]).sub(&l(&[D, C]).scale(&q4))),
    ];

    let mut residuals = Vec::new();
    let mut scalar_conditions = Vec::new();
    let mut exchange_relations = Vec::new();
    for (name, rel) in &candidates {
        let r = delta_residual(rel, &sys)?;
        let (left, right) = (r.by_left(), r.by_right());
        // group on the side that splits the residual into fewer pieces
        let (groups, fixed_right) = if right.len() <= left.len() {
            (right, true)
        } else {
            (left, false)
        };
        for (fixed, poly) in groups {
            if poly.len() == 1 {
                let (w, c) = poly.terms().next().expect("one term");
                let word = if fixed_right {
                    (w.clone(), fixed.clone())
                } else {
                    (fixed.clone(), w.clone())
                };
                scalar_conditions.push(ScalarCondition {
                    source: name.to_string(),
                    word,
                    coefficient: c.clone(),
                });
            } else {
                exchange_relations.push((name.to_string(), poly));
            }
        }
        residuals.push((name.to_string(), r));
    }

    let solves = |v: Parameter, target: &Coefficient| {
        scalar_conditions
            .iter()
            .any(|s| solve_linear(&s.coefficient, v).as_ref() == Some(target))
    };
    let q1_equals_q2 = solves(Parameter::swap_exponent(2), &q1);
    let q3_equals_q4 = solves(Parameter::swap_exponent(4), &q3);

    let (p, qp) = (par(Parameter::P), par(Parameter::QP));
    let specialize = |source: &str, bind: Vec<(Parameter, Coefficient)>| -> Option<NCPoly> {
        let b = bind.into_iter().collect();
        exchange_relations
            .iter()
            .find(|(s, _)| s == source)
            .and_then(|(_, r)| r.substitute(&b).ok())
            .and_then(|r| normalize_ad(&r))
    };
    let first_exchange = specialize(
        "AC = q1 CA",
        vec![
            (Parameter::swap_exponent(1), qp.clone()),
            (Parameter::swap_exponent(2), qp.clone()),
        ],
    );
    let second_exchange = specialize(
        "AB = q3 BA",
        vec![
            (Parameter::swap_exponent(3), p.clone()),
            (Parameter::swap_exponent(4), p.clone()),
        ],
    );
    let ad_da = l(&[A, D]).sub(&l(&[D, A]));
    let eq17 = ad_da
        .sub(&l(&[C, B]).scale(&qp))
        .add(&l(&[B, C]).scale(&qp.inv()?));
    let eq18 = ad_da
        .sub(&l(&[B, C]).scale(&p))
        .add(&l(&[C, B]).scale(&p.inv()?));
    let first_matches = first_exchange.as_ref() == Some(&eq17);
    let second_matches = second_exchange.as_ref() == Some(&eq18);

    let mut difference_factor = None;
    let mut exclusion_recovered = false;
    if let (Some(f), Some(s)) = (&first_exchange, &second_exchange) {
        let target = l(&[C, B]).scale(&qp).sub(&l(&[B, C]).scale(&p));
        if let Some(lambda) = f.sub(s).proportional_to(&target) {
            let pq = &p * &qp;
            let stripped = (&lambda * &pq).div(&(&pq + &int(1)))?;
            exclusion_recovered = stripped.as_integer().is_some();
            difference_factor = Some(lambda);
        }
    }

    Ok(HopfConstraintReport {
        residuals,
        scalar_conditions,
        exchange_relations,
        q1_equals_q2,
        q3_equals_q4,
        first_exchange,
        second_exchange,
        first_matches,
        second_matches,
        difference_factor,
        exclusion_recovered,
    })
}

/// A 2×2 matrix over the group algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMatrix {
    pub entries: [[NCPoly; 2]; 2],
}

impl GroupMatrix {
    /// The defining matrix `T = (A, B; C, D)`.
    pub fn t() -> GroupMatrix {
        GroupMatrix {
            entries: [[A.into(), B.into()], [C.into(), D.into()]],
        }
    }

    /// `poly · I`.
    pub fn scalar(poly: &NCPoly) -> GroupMatrix {
        GroupMatrix {
            entries: [
                [poly.clone(), NCPoly::zero()],
                [NCPoly::zero(), poly.clone()],
            ],
        }
    }

    pub fn mul(
        &self,
        other: &GroupMatrix,
        rules: &RewriteSystem,
    ) -> Result<GroupMatrix, FreeAlgError> {
        let mut entries: [[NCPoly; 2]; 2] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let s = self.entries[i][0]
                    .mul_free(&other.entries[0][j])
                    .add(&self.entries[i][1].mul_free(&other.entries[1][j]));
                *e = rules.normal_order(&s)?;
            }
        }
        Ok(GroupMatrix { entries })
    }

    /// Entrywise `self - other` as named identities.
    pub fn identities(&self, other: &GroupMatrix, label: &str) -> Vec<Identity> {
        let mut out = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                out.push(Identity {
                    name: format!("{label} ({},{})", i + 1, j + 1),
                    residual: self.entries[i][j].sub(&other.entries[i][j]),
                });
            }
        }
        out
    }
}

/// `𝒟 = AD - pBC`, normal-ordered under `rules`.
pub fn quantum_det(p: &Coefficient, rules: &RewriteSystem) -> Result<NCPoly, FreeAlgError> {
    let l = NCPoly::letters;
    rules.normal_order(&l(&[A, D]).sub(&l(&[B, C]).scale(p)))
}

/// The other spelling `DA - p^{-1}CB`, normal-ordered.
pub fn quantum_det_alt(p: &Coefficient, rules: &RewriteSystem) -> Result<NCPoly, HopfError> {
    let l = NCPoly::letters;
    Ok(rules.normal_order(&l(&[D, A]).sub(&l(&[C, B]).scale(&p.inv()?)))?)
}

/// `adj(T) = (D, -p^{-1}B; -pC, A)`.
pub fn adjugate(p: &Coefficient) -> Result<GroupMatrix, HopfError> {
    Ok(GroupMatrix {
        entries: [
            [D.into(), NCPoly::letter(B).scale(&-p.inv()?)],
            [NCPoly::letter(C).scale(&-p), A.into()],
        ],
    })
}

/// `λ_g` in `g 𝒟 = λ_g 𝒟 g`: 1 for `A`, `D`; `q'/p` for `B`; `p/q'` for `C`.
pub fn det_twist(
    g: Generator,
    p: &Coefficient,
    qp: &Coefficient,
) -> Result<Coefficient, HopfError> {
    Ok(match g {
        A | D => int(1),
        B => qp.div(p)?,
        C => p.div(qp)?,
        other => return Err(HopfError::NotGroup(other)),
    })
}

/// `g 𝒟 - λ_g 𝒟 g` for each generator, reduced under `GL_{p,q'}`.
pub fn det_relations_check(p: &Coefficient, qp: &Coefficient) -> Result<Vec<Identity>, HopfError> {
    let rules = glpq_rules(p, qp)?;
    let det = quantum_det(p, &rules)?;
    let mut out = Vec::new();
    for g in Generator::GROUP {
        let lambda = det_twist(g, p, qp)?;
        let gp = NCPoly::letter(g);
        let lhs = gp.mul_free(&det);
        let rhs = det.mul_free(&gp).scale(&lambda);
        let name = if lambda.is_one() {
            format!("{g}𝒟 = 𝒟{g}")
        } else {
            format!("{g}𝒟 = ({lambda}) 𝒟{g}")
        };
        out.push(Identity {
            name,
            residual: rules.residual(&lhs, &rhs)?,
        });
    }
    Ok(out)
}

/// The adjugate with `𝒟⁻¹` moved to the far left: each entry `c·g` of
/// `adj(T)·𝒟⁻¹` equals `𝒟⁻¹·(c λ_g^{-1})·g` because `g 𝒟⁻¹ = λ_g^{-1} 𝒟⁻¹ g`.
pub fn twisted_adjugate(p: &Coefficient, qp: &Coefficient) -> Result<GroupMatrix, HopfError> {
    let adj = adjugate(p)?;
    let mut entries: [[NCPoly; 2]; 2] = Default::default();
    for (row, adj_row) in entries.iter_mut().zip(&adj.entries) {
        for (slot, a) in row.iter_mut().zip(adj_row) {
            for (w, c) in a.terms() {
                let g = w.letters()[0];
                slot.add_term(w.clone(), c * &det_twist(g, p, qp)?.inv()?);
            }
        }
    }
    Ok(GroupMatrix { entries })
}

/// `T·adj(T) = 𝒟 I` and `adj(T) 𝒟⁻¹ T = I`, the latter checked as
/// `twisted_adjugate · T = 𝒟 I` after cancelling the leading `𝒟⁻¹`.
pub fn antipode_identities(p: &Coefficient, qp: &Coefficient) -> Result<Vec<Identity>, HopfError> {
    let rules = glpq_rules(p, qp)?;
    let det = GroupMatrix::scalar(&quantum_det(p, &rules)?);
    let t = GroupMatrix::t();
    let right = t.mul(&adjugate(p)?, &rules)?;
    let left = twisted_adjugate(p, qp)?.mul(&t, &rules)?;
    let mut out = right.identities(&det, "T·adj(T) = 𝒟I");
    out.extend(left.identities(&det, "adj(T)𝒟⁻¹T = I"));
    Ok(out)
}

/// `adj(T)·T - 𝒟 I` taken literally. Holds only when `p = q'`.
pub fn naive_left_adjugate(p: &Coefficient, qp: &Coefficient) -> Result<Vec<Identity>, HopfError> {
    let rules = glpq_rules(p, qp)?;
    let det = GroupMatrix::scalar(&quantum_det(p, &rules)?);
    let left = adjugate(p)?.mul(&GroupMatrix::t(), &rules)?;
    Ok(left.identities(&det, "adj(T)·T = 𝒟I"))
}

/// `Δ(det) - det ⊗ det`, reduced factorwise under `rules`.
pub fn delta_grouplike_residual(
    det: &NCPoly,
    rules: &RewriteSystem,
) -> Result<TensorPoly, HopfError> {
    let d = delta(det, rules)?;
    Ok(d.sub(&TensorPoly::tensor(det, det)).reduce(rules)?)
}

/// `Δ(𝒟) - 𝒟 ⊗ 𝒟` under `GL_{p,q'}`.
pub fn delta_det_check(p: &Coefficient, qp: &Coefficient) -> Result<TensorPoly, HopfError> {
    let rules = glpq_rules(p, qp)?;
    let det = quantum_det(p, &rules)?;
    delta_grouplike_residual(&det, &rules)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Coefficient {
        par(Parameter::P)
    }
    fn qp() -> Coefficient {
        par(Parameter::QP)
    }

    #[test]
    fn delta_of_generators() {
        let d = delta_generator(A).unwrap();
        assert_eq!(d.to_string(), "A ⊗ A + B ⊗ C");
        assert_eq!(delta_free(&NCPoly::one()).unwrap(), TensorPoly::one());
        assert_eq!(delta_free(&NCPoly::letters(&[A, B])).unwrap().len(), 4);
        assert!(delta_generator(X).is_err());
    }

    #[test]
    fn delta_respects_glpq() {
        let rules = glpq_rules(&p(), &qp()).unwrap();
        for (name, rel) in glpq_relations(&p(), &qp()).unwrap() {
            assert!(delta_residual(&rel, &rules).unwrap().is_zero(), "{name}");
        }
        let eps = par(Parameter::EPS);
        let bad = NCPoly::letters(&[A, D]).sub(&NCPoly::letters(&[D, A]).scale(&eps));
        assert!(!delta_residual(&bad, &rules).unwrap().is_zero());
    }

    #[test]
    fn counit() {
        assert!(counit_check().unwrap().iter().all(Identity::holds));
    }

    #[test]
    fn hopf_constraints() {
        let r = derive_hopf_constraints().unwrap();
        assert!(r.q1_equals_q2 && r.q3_equals_q4);
        assert!(r.first_matches, "{:?}", r.first_exchange);
        assert!(r.second_matches, "{:?}", r.second_exchange);
        assert!(r.exclusion_recovered, "{:?}", r.difference_factor);
    }

    #[test]
    fn determinant() {
        let rules = glpq_rules(&p(), &qp()).unwrap();
        assert_eq!(
            quantum_det(&p(), &rules).unwrap(),
            quantum_det_alt(&p(), &rules).unwrap()
        );
        assert!(det_relations_check(&p(), &qp())
            .unwrap()
            .iter()
            .all(Identity::holds));
        assert!(antipode_identities(&p(), &qp())
            .unwrap()
            .iter()
            .all(Identity::holds));
        assert!(delta_det_check(&p(), &qp()).unwrap().is_zero());
    }

    #[test]
    fn naive_left_adjugate_needs_p_equal_qp() {
        assert!(naive_left_adjugate(&p(), &qp())
            .unwrap()
            .iter()
            .any(|i| !i.holds()));
        assert!(naive_left_adjugate(&qp(), &qp())
            .unwrap()
            .iter()
            .all(Identity::holds));
    }

    #[test]
    fn sabotaged_determinant_is_not_grouplike() {
        let rules = glpq_rules(&p(), &qp()).unwrap();
        let q = par(Parameter::Q);
        let bad = NCPoly::letters(&[A, D]).sub(&NCPoly::letters(&[B, C]).scale(&q));
        assert!(!delta_grouplike_residual(&bad, &rules).unwrap().is_zero());
    }
}
