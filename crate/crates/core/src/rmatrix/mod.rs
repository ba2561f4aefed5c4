//! The R-matrix `R_{p,q}`, Yang–Baxter residuals and the RTT relations.
//!
//! Index convention: `C² ⊗ C²` has basis `e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2`
//! (row-major Kronecker, first leg outermost), so `(T ⊗ I)` has entry
//! `T_ij δ_kl` at row `(i,k)`, column `(j,l)`.

use std::fmt;

use crate::coefficients::{int, Coefficient, CoefficientError, Parameter};
use crate::freealg::{linear_rank, FreeAlgError, Generator, NCPoly, RewriteSystem};
use crate::presets::{glpq_rules, PresetError};

use std::collections::BTreeMap;

/// A square matrix of [`Coefficient`]s.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    n: usize,
    entries: Vec<Coefficient>,
}

impl ScalarMatrix {
    pub fn zero(n: usize) -> ScalarMatrix {
        ScalarMatrix {
            n,
            entries: vec![Coefficient::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> ScalarMatrix {
        let mut m = ScalarMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, Coefficient::one());
        }
        m
    }

    /// The flip `P(u ⊗ v) = v ⊗ u` on `C² ⊗ C²`.
    pub fn flip() -> ScalarMatrix {
        let mut m = ScalarMatrix::zero(4);
        for i in 0..2 {
            for k in 0..2 {
                m.set(2 * i + k, 2 * k + i, Coefficient::one());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// 0-based entry.
    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Coefficient) {
        self.entries[i * self.n + j] = c;
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = ScalarMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let s = out.get(i, j) + &(a * b);
                        out.set(i, j, s);
                    }
                }
            }
        }
        out
    }

    /// `self ⊗ other`, row-major with `self` outermost.
    pub fn kron(&self, other: &ScalarMatrix) -> ScalarMatrix {
        let (n, m) = (self.n, other.n);
        let mut out = ScalarMatrix::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.set(i * m + k, j * m + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        ScalarMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn substitute(
        &self,
        bindings: &BTreeMap<Parameter, Coefficient>,
    ) -> Result<ScalarMatrix, CoefficientError> {
        Ok(ScalarMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|c| c.substitute(bindings))
                .collect::<Result<_, _>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Coefficient::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`, 0-based.
    pub fn nonzero(&self) -> Vec<(usize, usize, &Coefficient)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                let c = self.get(i, j);
                (!c.is_zero()).then_some((i, j, c))
            })
            .collect()
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ScalarMatrix {}x{}", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A square matrix of [`NCPoly`]s; scalars act from either side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    n: usize,
    entries: Vec<NCPoly>,
}

impl OperatorMatrix {
    pub fn zero(n: usize) -> OperatorMatrix {
        OperatorMatrix {
            n,
            entries: vec![NCPoly::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: NCPoly) {
        self.entries[i * self.n + j] = p;
    }

    /// `T = (A, B; C, D)`.
    pub fn t() -> OperatorMatrix {
        use Generator::*;
        let mut m = OperatorMatrix::zero(2);
        for (idx, g) in [A, B, C, D].into_iter().enumerate() {
            m.set(idx / 2, idx % 2, g.into());
        }
        m
    }

    /// `T ⊗ I`: `T_ij δ_kl`.
    pub fn t1() -> OperatorMatrix {
        OperatorMatrix::t().kron_identity(true)
    }

    /// `I ⊗ T`: `δ_ij T_kl`.
    pub fn t2() -> OperatorMatrix {
        OperatorMatrix::t().kron_identity(false)
    }

    fn kron_identity(&self, first: bool) -> OperatorMatrix {
        let n = self.n;
        let mut out = OperatorMatrix::zero(2 * n);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..n {
                    for l in 0..n {
                        let (row, col, e) = if first {
                            (
                                k * 2 + i,
                                l * 2 + j,
                                (i == j).then(|| self.get(k, l).clone()),
                            )
                        } else {
                            (
                                i * n + k,
                                j * n + l,
                                (i == j).then(|| self.get(k, l).clone()),
                            )
                        };
                        if let Some(e) = e {
                            out.set(row, col, e);
                        }
                    }
                }
            }
        }
        out
    }

    /// Free product (no reduction).
    pub fn mul(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let n = self.n;
        let mut out = OperatorMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = NCPoly::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul_free(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// `s · self`.
    pub fn scalar_left(&self, s: &ScalarMatrix) -> OperatorMatrix {
        let n = self.n;
        let mut out = OperatorMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = NCPoly::zero();
                for k in 0..n {
                    let c = s.get(i, k);
                    if !c.is_zero() {
                        acc = acc.add(&self.get(k, j).scale(c));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// `self · s`.
    pub fn scalar_right(&self, s: &ScalarMatrix) -> OperatorMatrix {
        let n = self.n;
        let mut out = OperatorMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = NCPoly::zero();
                for k in 0..n {
                    let c = s.get(k, j);
                    if !c.is_zero() {
                        acc = acc.add(&self.get(i, k).scale(c));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn sub(&self, other: &OperatorMatrix) -> OperatorMatrix {
        OperatorMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> OperatorMatrix {
        OperatorMatrix {
            n: self.n,
            entries: self.entries.iter().map(NCPoly::neg).collect(),
        }
    }

    pub fn reduce(&self, rules: &RewriteSystem) -> Result<OperatorMatrix, FreeAlgError> {
        Ok(OperatorMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|e| rules.normal_order(e))
                .collect::<Result<_, _>>()?,
        })
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }
}

/// `R_{p,q}` with a chosen `(3,2)` entry; [`build_r`] uses `q - 1/p`.
pub fn build_r_with(
    p: &Coefficient,
    q: &Coefficient,
    off_diagonal: Coefficient,
) -> Result<ScalarMatrix, CoefficientError> {
    let mut r = ScalarMatrix::zero(4);
    r.set(0, 0, q.clone());
    r.set(1, 1, int(1));
    r.set(2, 2, q.div(p)?);
    r.set(3, 3, q.clone());
    r.set(2, 1, off_diagonal);
    Ok(r)
}

/// `R_{p,q}`: diagonal `(q, 1, q/p, q)` and `(3,2)` entry `q - 1/p`.
pub fn build_r(p: &Coefficient, q: &Coefficient) -> Result<ScalarMatrix, CoefficientError> {
    build_r_with(p, q, q - &p.inv()?)
}

/// The classical one-parameter `R_q`, written out directly.
pub fn r_q(q: &Coefficient) -> Result<ScalarMatrix, CoefficientError> {
    let mut r = ScalarMatrix::zero(4);
    r.set(0, 0, q.clone());
    r.set(1, 1, int(1));
    r.set(2, 2, int(1));
    r.set(3, 3, q.clone());
    r.set(2, 1, q - &q.inv()?);
    Ok(r)
}

/// Residuals of the two Yang–Baxter conventions on `(C²)^{⊗3}`.
#[derive(Clone, Debug)]
pub struct YbeReport {
    /// `R12 R13 R23 - R23 R13 R12`.
    pub quantum: ScalarMatrix,
    /// `(Ř⊗I)(I⊗Ř)(Ř⊗I) - (I⊗Ř)(Ř⊗I)(I⊗Ř)` with `Ř = P R`.
    pub braid: ScalarMatrix,
}

impl YbeReport {
    pub fn quantum_holds(&self) -> bool {
        self.quantum.is_zero()
    }

    pub fn braid_holds(&self) -> bool {
        self.braid.is_zero()
    }
}

pub fn ybe_residuals(r: &ScalarMatrix) -> YbeReport {
    let i2 = ScalarMatrix::identity(2);
    let p23 = i2.kron(&ScalarMatrix::flip());
    let r12 = r.kron(&i2);
    let r23 = i2.kron(r);
    let r13 = p23.mul(&r12).mul(&p23);
    let quantum = r12.mul(&r13).mul(&r23).sub(&r23.mul(&r13).mul(&r12));

    let rh = ScalarMatrix::flip().mul(r);
    let a = rh.kron(&i2);
    let b = i2.kron(&rh);
    let braid = a.mul(&b).mul(&a).sub(&b.mul(&a).mul(&b));
    YbeReport { quantum, braid }
}

/// Yang–Baxter residuals of `R_{p,q}`.
pub fn ybe_check(p: &Coefficient, q: &Coefficient) -> Result<YbeReport, CoefficientError> {
    Ok(ybe_residuals(&build_r(p, q)?))
}

/// `R T1 T2 - T2 T1 R` in the free algebra on `A..D`.
pub fn rtt_matrix(r: &ScalarMatrix) -> OperatorMatrix {
    let (t1, t2) = (OperatorMatrix::t1(), OperatorMatrix::t2());
    t1.mul(&t2).scalar_left(r).sub(&t2.mul(&t1).scalar_right(r))
}

/// The 16 entries of `R T1 T2 - T2 T1 R` for `R = R_{p,q'}`, unreduced.
pub fn rtt_residuals(p: &Coefficient, qp: &Coefficient) -> Result<Vec<NCPoly>, CoefficientError> {
    Ok(rtt_matrix(&build_r(p, qp)?).entries().to_vec())
}

/// The RTT entries after reduction under `rules`.
pub fn rtt_reduced(r: &ScalarMatrix, rules: &RewriteSystem) -> Result<Vec<NCPoly>, FreeAlgError> {
    Ok(rtt_matrix(r).reduce(rules)?.entries().to_vec())
}

/// How the unreduced RTT entries relate to a list of relations.
#[derive(Clone, Debug)]
pub struct SpanReport {
    pub nonzero_entries: usize,
    pub entry_rank: usize,
    pub relation_rank: usize,
    pub joint_rank: usize,
    /// For each relation, whether some entry is a scalar multiple of it.
    pub relation_hit: Vec<bool>,
}

impl SpanReport {
    /// The entries and the relations span the same space.
    pub fn same_span(&self) -> bool {
        self.entry_rank == self.relation_rank && self.joint_rank == self.relation_rank
    }
}

pub fn rtt_span(entries: &[NCPoly], relations: &[NCPoly]) -> SpanReport {
    let nonzero: Vec<NCPoly> = entries.iter().filter(|e| !e.is_zero()).cloned().collect();
    let joint: Vec<NCPoly> = nonzero.iter().chain(relations).cloned().collect();
    SpanReport {
        nonzero_entries: nonzero.len(),
        entry_rank: linear_rank(&nonzero),
        relation_rank: linear_rank(relations),
        joint_rank: linear_rank(&joint),
        relation_hit: relations
            .iter()
            .map(|rel| nonzero.iter().any(|e| e.proportional_to(rel).is_some()))
            .collect(),
    }
}

/// Conjugating the RTT residual by the flip swaps the legs:
/// `P (R T1T2 - T2T1 R) P = -(T1T2 R21 - R21 T2T1)` with `R21 = P R P`.
/// Returns the difference of the two sides, which must vanish.
pub fn rtt_flip_consistency(r: &ScalarMatrix) -> OperatorMatrix {
    let p = ScalarMatrix::flip();
    let lhs = rtt_matrix(r).scalar_left(&p).scalar_right(&p);
    let r21 = p.mul(r).mul(&p);
    let (t1, t2) = (OperatorMatrix::t1(), OperatorMatrix::t2());
    let rhs = t1
        .mul(&t2)
        .scalar_right(&r21)
        .sub(&t2.mul(&t1).scalar_left(&r21))
        .neg();
    lhs.sub(&rhs)
}

/// Builds `glpq_rules` and checks that every RTT entry reduces to zero.
pub fn rtt_reduces_to_zero(p: &Coefficient, qp: &Coefficient) -> Result<bool, PresetError> {
    let rules = glpq_rules(p, qp)?;
    let r = build_r(p, qp)?;
    Ok(rtt_reduced(&r, &rules)?.iter().all(NCPoly::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::par;
    use crate::presets::glq_rules;

    fn p() -> Coefficient {
        par(Parameter::P)
    }
    fn q() -> Coefficient {
        par(Parameter::Q)
    }

    #[test]
    fn r_entries_and_limit() {
        let r = build_r(&p(), &q()).unwrap();
        assert_eq!(r.get(2, 1), &(q() - p().inv().unwrap()));
        assert!(r.get(0, 1).is_zero());
        let b = [(Parameter::P, q())].into_iter().collect();
        assert_eq!(r.substitute(&b).unwrap(), r_q(&q()).unwrap());
    }

    #[test]
    fn flip_and_kron() {
        let f = ScalarMatrix::flip();
        assert_eq!(f.mul(&f), ScalarMatrix::identity(4));
        assert_eq!(
            ScalarMatrix::identity(2).kron(&ScalarMatrix::identity(2)),
            ScalarMatrix::identity(4)
        );
    }

    #[test]
    fn rtt_t1_t2_layout() {
        let prod = OperatorMatrix::t1().mul(&OperatorMatrix::t2());
        // row (1,1) col (1,2): T_11 T_12 = A B
        assert_eq!(
            prod.get(0, 1),
            &NCPoly::letters(&[Generator::A, Generator::B])
        );
        let prod = OperatorMatrix::t2().mul(&OperatorMatrix::t1());
        assert_eq!(
            prod.get(0, 1),
            &NCPoly::letters(&[Generator::B, Generator::A])
        );
    }

    #[test]
    fn rtt_gives_glpq() {
        let qp = par(Parameter::QP);
        assert!(rtt_reduces_to_zero(&p(), &qp).unwrap());
        let r = build_r(&p(), &qp).unwrap();
        let wrong = rtt_reduced(&r, &glq_rules(&q()).unwrap()).unwrap();
        assert!(wrong.iter().any(|e| !e.is_zero()));
        assert!(rtt_flip_consistency(&r)
            .entries()
            .iter()
            .all(NCPoly::is_zero));
    }
}
