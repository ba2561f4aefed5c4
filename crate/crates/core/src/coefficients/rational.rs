use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::params::Parameter;
use super::poly::{gcd, Poly, ZERO_EXPS};
use super::CoefficientError;

/// An exact rational function with integer coefficients in the registered
/// parameters.
///
/// The stored form is canonical: numerator and denominator are coprime
/// ordinary polynomials and the deg-lex leading coefficient of the
/// denominator is positive. Structural equality is therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coefficient {
    num: Poly,
    den: Poly,
}

impl Coefficient {
    pub fn zero() -> Coefficient {
        Coefficient {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Coefficient {
        Coefficient::from_int(1)
    }

    pub fn from_int(n: i64) -> Coefficient {
        Coefficient::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Coefficient {
        Coefficient {
            num: Poly::constant(n),
            den: Poly::one(),
        }
    }

    pub fn param(p: Parameter) -> Coefficient {
        Coefficient {
            num: Poly::var(p),
            den: Poly::one(),
        }
    }

    /// `p^n` for any integer `n`.
    pub fn param_pow(p: Parameter, n: i32) -> Coefficient {
        let mut e = ZERO_EXPS;
        e[p.index()] = n.unsigned_abs() as u16;
        let m = Poly::monomial(e, BigInt::one());
        if n >= 0 {
            Coefficient {
                num: m,
                den: Poly::one(),
            }
        } else {
            Coefficient {
                num: Poly::one(),
                den: m,
            }
        }
    }

    pub fn from_poly(num: Poly) -> Coefficient {
        Coefficient {
            num,
            den: Poly::one(),
        }
    }

    /// Canonicalizes `num / den`.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Coefficient, CoefficientError> {
        if den.is_zero() {
            return Err(CoefficientError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Coefficient {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Coefficient::zero();
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            Coefficient {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            Coefficient { num, den }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The integer value when the coefficient is a constant integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// True when no parameter occurs.
    pub fn is_constant(&self) -> bool {
        self.num.as_constant().is_some() && self.den.as_constant().is_some()
    }

    pub fn inv(&self) -> Result<Coefficient, CoefficientError> {
        if self.is_zero() {
            return Err(CoefficientError::DivisionByZero);
        }
        let (num, den) = if self.num.leading().is_some_and(|(_, c)| c.is_negative()) {
            (self.den.neg(), self.num.neg())
        } else {
            (self.den.clone(), self.num.clone())
        };
        Ok(Coefficient { num, den })
    }

    pub fn div(&self, other: &Coefficient) -> Result<Coefficient, CoefficientError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, n: i32) -> Result<Coefficient, CoefficientError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs();
        Ok(Coefficient {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Parameters occurring in numerator or denominator.
    pub fn variables(&self) -> Vec<Parameter> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v.sort();
        v.dedup();
        v
    }

    /// Replaces bound parameters by coefficients; the result is canonical in
    /// the remaining parameters.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Parameter, Coefficient>,
    ) -> Result<Coefficient, CoefficientError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let num = eval_poly(&self.num, bindings);
        let den = eval_poly(&self.den, bindings);
        if den.is_zero() {
            return Err(CoefficientError::SingularSubstitution(self.to_string()));
        }
        num.div(&den)
    }

    /// Single-binding convenience wrapper around [`Coefficient::substitute`].
    pub fn subs(&self, p: Parameter, value: &Coefficient) -> Result<Coefficient, CoefficientError> {
        let mut b = BTreeMap::new();
        b.insert(p, value.clone());
        self.substitute(&b)
    }
}

fn eval_poly(poly: &Poly, bindings: &BTreeMap<Parameter, Coefficient>) -> Coefficient {
    let mut powers: BTreeMap<(Parameter, u16), Coefficient> = BTreeMap::new();
    let mut total = Coefficient::zero();
    for (exps, c) in poly.terms() {
        let mut free = ZERO_EXPS;
        let mut term = Coefficient::from_bigint(c.clone());
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = Parameter::from_index(i);
            match bindings.get(&p) {
                Some(value) => {
                    let pw = powers
                        .entry((p, e))
                        .or_insert_with(|| value.pow(e as i32).expect("positive power"));
                    term = &term * &*pw;
                }
                None => free[i] = e,
            }
        }
        let mono = Coefficient::from_poly(Poly::monomial(free, BigInt::one()));
        total = &total + &(&term * &mono);
    }
    total
}

impl Default for Coefficient {
    fn default() -> Self {
        Coefficient::zero()
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

impl From<Parameter> for Coefficient {
    fn from(p: Parameter) -> Self {
        Coefficient::param(p)
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: &'a Coefficient) -> Coefficient {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Coefficient::canonical(self.num.add(&rhs.num), self.den.clone());
        }
        // cancel the shared part of the denominators before cross-multiplying
        let g = gcd(&self.den, &rhs.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                rhs.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = self.num.mul(&db).add(&rhs.num.mul(&da));
        let den = self.den.mul(&db);
        Coefficient::canonical(num, den)
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;

    fn sub(self, rhs: &'a Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: &'a Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // both inputs are reduced, so only the cross pairs can share factors
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let an = self.num.div_exact(&g1).expect("gcd divides");
        let bd = rhs.den.div_exact(&g1).expect("gcd divides");
        let bn = rhs.num.div_exact(&g2).expect("gcd divides");
        let ad = self.den.div_exact(&g2).expect("gcd divides");
        let num = an.mul(&bn);
        let den = ad.mul(&bd);
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            Coefficient {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            Coefficient { num, den }
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;

    fn neg(self) -> Coefficient {
        Coefficient {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: &'a Coefficient) -> Coefficient {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Coefficient> for &'a Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Coefficient {
    type Output = Coefficient;

    fn neg(self) -> Coefficient {
        -&self
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coefficient({self})")
    }
}
