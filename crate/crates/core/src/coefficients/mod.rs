//! Exact arithmetic in the field of rational functions over the integers in
//! a fixed registry of named parameters (`p`, `q`, `q'`, `qbar`, `k`, ...).
//!
//! Everything downstream uses [`Coefficient`] as its scalar type, and every
//! "identity holds" check in the crate bottoms out in
//! [`Coefficient::is_zero`].

mod params;
mod poly;
mod rational;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use params::{Parameter, UnknownParameter, NPARAMS};
pub use poly::{cmp_deglex, gcd, Exps, Poly, ZERO_EXPS};
pub use rational::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoefficientError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution makes the denominator of `{0}` vanish")]
    SingularSubstitution(String),
    #[error(transparent)]
    UnknownParameter(#[from] UnknownParameter),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Shorthand for `Coefficient::param`.
pub fn par(p: Parameter) -> Coefficient {
    Coefficient::param(p)
}

/// Shorthand for an integer coefficient.
pub fn int(n: i64) -> Coefficient {
    Coefficient::from_int(n)
}

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    coeff: &BigInt,
    exps: &[i32],
    leading: bool,
) -> fmt::Result {
    let negative = coeff.is_negative();
    let abs = coeff.abs();
    if !leading {
        f.write_str(if negative { " - " } else { " + " })?;
    } else if negative {
        f.write_str("-")?;
    }
    let mut first = true;
    if !abs.is_one() || exps.iter().all(|&e| e == 0) {
        write!(f, "{abs}")?;
        first = false;
    }
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        f.write_str(Parameter::from_index(i).name())?;
        match e {
            1 => {}
            e if e < 0 => write!(f, "^{{{e}}}")?,
            e => write!(f, "^{e}")?,
        }
    }
    Ok(())
}

fn write_poly(f: &mut fmt::Formatter<'_>, poly: &Poly, shift: &[i32]) -> fmt::Result {
    if poly.is_zero() {
        return f.write_str("0");
    }
    for (i, (e, c)) in poly.terms().iter().enumerate() {
        let exps: Vec<i32> = e.iter().zip(shift).map(|(&x, &s)| x as i32 - s).collect();
        write_monomial(f, c, &exps, i == 0)?;
    }
    Ok(())
}

impl Coefficient {
    /// True when the rendering needs parentheses to be used as a factor.
    pub fn is_compound(&self) -> bool {
        self.numerator().terms().len() > 1
            || (!self.denominator().is_one() && !self.has_monomial_unit_denominator())
    }

    fn has_monomial_unit_denominator(&self) -> bool {
        self.denominator().is_monomial()
            && self
                .denominator()
                .leading()
                .is_some_and(|(_, c)| c.is_one())
    }
}

/// Canonical textual form: polynomials with deg-lex sorted monomials; a unit
/// monomial denominator is folded into negative exponents (`q'^{-1}`),
/// anything else is rendered as `(num) / (den)`.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = [0i32; NPARAMS];
        if self.denominator().is_one() {
            return write_poly(f, self.numerator(), &zero);
        }
        if self.has_monomial_unit_denominator() {
            let (e, _) = self.denominator().leading().expect("nonzero");
            let shift: Vec<i32> = e.iter().map(|&x| x as i32).collect();
            return write_poly(f, self.numerator(), &shift);
        }
        if self.numerator().terms().len() > 1 {
            f.write_str("(")?;
            write_poly(f, self.numerator(), &zero)?;
            f.write_str(")")?;
        } else {
            write_poly(f, self.numerator(), &zero)?;
        }
        f.write_str(" / (")?;
        write_poly(f, self.denominator(), &zero)?;
        f.write_str(")")
    }
}

impl FromStr for Coefficient {
    type Err = CoefficientError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::text::parse_coefficient(s)
    }
}

impl Coefficient {
    /// Numerator of `self - other` over the common denominator, i.e. the
    /// cross-multiplication residual `num(a) den(b) - num(b) den(a)`.
    pub fn cross_residual(&self, other: &Coefficient) -> Poly {
        self.numerator()
            .mul(other.denominator())
            .sub(&other.numerator().mul(self.denominator()))
    }

    /// Evaluates at integer values for the parameters (unlisted ones are 0);
    /// `None` when the denominator vanishes there. Tests use this as an
    /// independent spot check of the canonical forms.
    pub fn eval_integers(&self, values: &[(Parameter, i64)]) -> Option<BigRational> {
        let eval = |poly: &Poly| -> BigInt {
            let mut total = BigInt::zero();
            for (e, c) in poly.terms() {
                let mut t = c.clone();
                for (i, &x) in e.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    let p = Parameter::from_index(i);
                    let v = values.iter().find(|(q, _)| *q == p).map_or(0, |(_, v)| *v);
                    t *= BigInt::from(v).pow(x as u32);
                }
                total += t;
            }
            total
        };
        let d = eval(self.denominator());
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(eval(self.numerator()), d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Coefficient {
        par(Parameter::P)
    }
    fn q() -> Coefficient {
        par(Parameter::Q)
    }
    fn qp() -> Coefficient {
        par(Parameter::QP)
    }
    fn qbar() -> Coefficient {
        par(Parameter::QBAR)
    }
    fn inv(c: &Coefficient) -> Coefficient {
        c.inv().unwrap()
    }

    #[test]
    fn add_examples() {
        assert!((p() + (-p())).is_zero());
        let expected = Coefficient::from_parts(
            p().numerator().mul(qp().numerator()).add(&Poly::one()),
            qp().numerator().clone(),
        )
        .unwrap();
        assert_eq!(p() + inv(&qp()), expected);
        assert_eq!((q() - inv(&p())) + inv(&p()), q());
    }

    #[test]
    fn mul_examples() {
        assert!((q() * inv(&q())).is_one());
        // (qbar/p) * (qbar q / (q' p)) * p = q qbar^2 / (q' p)
        let lhs = (qbar() * inv(&p())) * (qbar() * q() * inv(&(qp() * p()))) * p();
        let rhs = q() * qbar() * qbar() * inv(&(qp() * p()));
        assert_eq!(lhs, rhs);
        assert_eq!((p() - inv(&qp())) * qp(), p() * qp() - int(1));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(inv(&p()), Coefficient::param_pow(Parameter::P, -1));
        let a = (p() * qp() - int(1)) * inv(&qp());
        assert_eq!(inv(&a), qp() * inv(&(p() * qp() - int(1))));
        assert_eq!(
            Coefficient::zero().inv(),
            Err(CoefficientError::DivisionByZero)
        );
    }

    #[test]
    fn substitute_examples() {
        let a = p() - inv(&qp());
        let mut b = std::collections::BTreeMap::new();
        b.insert(Parameter::P, q());
        b.insert(Parameter::QP, q());
        assert_eq!(a.substitute(&b).unwrap(), q() - inv(&q()));

        let c = qbar() * inv(&p());
        assert!(c.subs(Parameter::QBAR, &p()).unwrap().is_one());

        let d = qp() * inv(&(p() * qp() - int(1)));
        assert!(matches!(
            d.subs(Parameter::P, &inv(&qp())),
            Err(CoefficientError::SingularSubstitution(_))
        ));
    }

    #[test]
    fn is_zero_examples() {
        assert!((q() * qbar() - qbar() * q()).is_zero());
        assert!(!(p() - q()).is_zero());
        let a = (p() * qp() - int(1)) * inv(&qp());
        assert!((a - p() + inv(&qp())).is_zero());
    }

    #[test]
    fn canonical_denominator_sign() {
        let a = int(1).div(&(int(1) - p())).unwrap();
        let (_, lc) = a.denominator().leading().unwrap();
        assert!(lc.is_positive());
        assert_eq!(a.to_string(), "-1 / (p - 1)");
    }

    #[test]
    fn rendering() {
        assert_eq!((qbar() * inv(&p())).to_string(), "p^{-1} qbar");
        assert_eq!(inv(&qp()).to_string(), "q'^{-1}");
        assert_eq!((p() - inv(&qp())).to_string(), "p - q'^{-1}");
        assert_eq!((p() * p() * int(3) - int(2)).to_string(), "3 p^2 - 2");
        let k = qp() * (q() * p() - int(1)) * inv(&(p() * (qp() * p() - int(1))));
        assert_eq!(k.to_string(), "(p q q' - q') / (p^2 q' - p)");
        assert_eq!(Coefficient::zero().to_string(), "0");
    }
}
