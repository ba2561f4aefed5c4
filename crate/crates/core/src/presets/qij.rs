//! Cross-commutation tables `q_ij`: `x G_j = q_1j G_j x`, `y G_j = q_2j G_j y`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coefficients::{int, par, Coefficient, Parameter};

use super::PresetError;

/// Where a table comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// The one-parameter family in `k`.
    General,
    /// `qbar = q` with `k` fixed by invariance of the differential relations.
    Case1,
    /// `Case1` at `q' = q`.
    OneParam,
    /// `k = q12`, before specializing `p`.
    Case2Pre,
    /// `k = q12` at `p = q'`.
    Case2,
    /// All entries 1 at the one-parameter point.
    Manin,
    /// All entries 1 with `p`, `q'` left free; not a solution.
    Commuting,
    /// Entries are the free parameters `q11 .. q24`.
    Symbolic,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::General => "general-k",
            Provenance::Case1 => "case1-k",
            Provenance::OneParam => "one-param",
            Provenance::Case2Pre => "case2-pre",
            Provenance::Case2 => "case2",
            Provenance::Manin => "manin",
            Provenance::Commuting => "commuting",
            Provenance::Symbolic => "symbolic",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The group and plane parameters a table is defined against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableContext {
    pub p: Coefficient,
    pub qp: Coefficient,
    pub q: Coefficient,
    pub qbar: Coefficient,
}

impl TableContext {
    pub fn symbolic() -> TableContext {
        TableContext {
            p: par(Parameter::P),
            qp: par(Parameter::QP),
            q: par(Parameter::Q),
            qbar: par(Parameter::QBAR),
        }
    }
}

/// A named consistency condition on a table; holds iff `residual` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableConstraint {
    pub name: &'static str,
    pub residual: Coefficient,
}

impl TableConstraint {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QijTable {
    entries: [[Coefficient; 4]; 2],
    provenance: Provenance,
    context: TableContext,
}

impl QijTable {
    /// Builds a table and checks it against [`QijTable::constraints`].
    pub fn new(
        provenance: Provenance,
        entries: [[Coefficient; 4]; 2],
        context: TableContext,
    ) -> Result<QijTable, PresetError> {
        let t = QijTable::new_unchecked(provenance, entries, context)?;
        let failed: Vec<_> = t
            .constraints()?
            .into_iter()
            .filter(|c| !c.holds())
            .map(|c| format!("{}: {}", c.name, c.residual))
            .collect();
        if failed.is_empty() {
            Ok(t)
        } else {
            Err(PresetError::ConstraintViolation {
                table: provenance.label().to_string(),
                failed,
            })
        }
    }

    /// Builds a table without the consistency check; entries must still be
    /// nonzero.
    pub fn new_unchecked(
        provenance: Provenance,
        entries: [[Coefficient; 4]; 2],
        context: TableContext,
    ) -> Result<QijTable, PresetError> {
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() {
                    return Err(PresetError::ZeroEntry(i + 1, j + 1));
                }
            }
        }
        Ok(QijTable {
            entries,
            provenance,
            context,
        })
    }

    /// `q_ij` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        &self.entries[i - 1][j - 1]
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn context(&self) -> &TableContext {
        &self.context
    }

    /// Entries in the order `q11, q12, q13, q14, q21, .., q24`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Coefficient)> {
        self.entries.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, e)| ((i + 1, j + 1), e))
        })
    }

    /// Binds the free parameters `q11 .. q24` to this table's entries.
    pub fn bindings(&self) -> BTreeMap<Parameter, Coefficient> {
        self.entries()
            .map(|((i, j), e)| (Parameter::cross(i, j), e.clone()))
            .collect()
    }

    pub fn substitute(
        &self,
        bindings: &BTreeMap<Parameter, Coefficient>,
    ) -> Result<QijTable, PresetError> {
        let mut entries = self.entries.clone();
        for row in entries.iter_mut() {
            for e in row.iter_mut() {
                *e = e.substitute(bindings)?;
            }
        }
        let c = &self.context;
        let context = TableContext {
            p: c.p.substitute(bindings)?,
            qp: c.qp.substitute(bindings)?,
            q: c.q.substitute(bindings)?,
            qbar: c.qbar.substitute(bindings)?,
        };
        QijTable::new_unchecked(self.provenance, entries, context)
    }

    /// True when every entry agrees with `other`'s.
    pub fn same_entries(&self, other: &QijTable) -> bool {
        self.entries == other.entries
    }

    /// `q1 = qbar q11 / q13`, the ratio in `AC = q1 CA`.
    pub fn q1(&self) -> Result<Coefficient, PresetError> {
        Ok(self.context.qbar.div(self.get(1, 3))? * self.get(1, 1))
    }

    /// `q2 = qbar q22 / q24`, the ratio in `BD = q2 DB`.
    pub fn q2(&self) -> Result<Coefficient, PresetError> {
        Ok(self.context.qbar.div(self.get(2, 4))? * self.get(2, 2))
    }

    /// `q3 = qbar q11 / q12`, the ratio in `AB = q3 BA`.
    pub fn q3(&self) -> Result<Coefficient, PresetError> {
        Ok(self.context.qbar.div(self.get(1, 2))? * self.get(1, 1))
    }

    /// `q4 = qbar q23 / q24`, the ratio in `CD = q4 DC`.
    pub fn q4(&self) -> Result<Coefficient, PresetError> {
        Ok(self.context.qbar.div(self.get(2, 4))? * self.get(2, 3))
    }

    /// The six conditions tying the table to `GL_{p,q'}` and the planes:
    ///
    /// ```text
    /// q' = qbar q11/q13 = qbar q22/q24
    /// p  = qbar q11/q12 = qbar q23/q24
    /// q q14 = qbar q21
    /// p - 1/q' = qbar q13/q14 - (p / (q q')) q22/q14
    /// ```
    pub fn constraints(&self) -> Result<Vec<TableConstraint>, PresetError> {
        let TableContext { p, qp, q, qbar } = &self.context;
        let g = |i, j| self.get(i, j);
        let mut out = vec![
            TableConstraint {
                name: "q' = qbar q11 / q13",
                residual: qp - &self.q1()?,
            },
            TableConstraint {
                name: "q' = qbar q22 / q24",
                residual: qp - &self.q2()?,
            },
            TableConstraint {
                name: "p = qbar q11 / q12",
                residual: p - &self.q3()?,
            },
            TableConstraint {
                name: "p = qbar q23 / q24",
                residual: p - &self.q4()?,
            },
            TableConstraint {
                name: "q q14 = qbar q21",
                residual: q * g(1, 4) - qbar * g(2, 1),
            },
        ];
        let lhs = p - &qp.inv()?;
        let rhs = (qbar * g(1, 3)).div(g(1, 4))? - (p * g(2, 2)).div(&(q * qp * g(1, 4)))?;
        out.push(TableConstraint {
            name: "p - 1/q' = qbar q13/q14 - p q22/(q q' q14)",
            residual: lhs - rhs,
        });
        Ok(out)
    }
}

impl fmt::Display for QijTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q_ij table ({})", self.provenance)?;
        for ((i, j), e) in self.entries() {
            writeln!(f, "  q{i}{j} = {e}")?;
        }
        Ok(())
    }
}

fn q(c: &Coefficient) -> Coefficient {
    c.clone()
}

/// The one-parameter family solving the constraints with `q11 = 1`.
/// `q21` is taken as `q q'^-1 k`; the alternative spelling `q qbar^-1 q14`
/// is checked in tests.
pub fn qij_general(
    q_: &Coefficient,
    qbar: &Coefficient,
    p: &Coefficient,
    qp: &Coefficient,
    k: &Coefficient,
) -> Result<QijTable, PresetError> {
    let pi = p.inv()?;
    let qpi = qp.inv()?;
    let e = qbar - &((p - &qpi) * k);
    let entries = [
        [int(1), qbar * &pi, qbar * &qpi, qbar * &qpi * k],
        [
            q_ * &qpi * k,
            q_ * qbar * &pi * &e,
            q_ * qbar * &qpi * &e,
            q_ * qbar * qbar * &qpi * &pi * &e,
        ],
    ];
    QijTable::new(
        Provenance::General,
        entries,
        TableContext {
            p: q(p),
            qp: q(qp),
            q: q(q_),
            qbar: q(qbar),
        },
    )
}

/// `k = q'(qp - 1) / (p(q'p - 1))`.
pub fn case1_k(
    q_: &Coefficient,
    p: &Coefficient,
    qp: &Coefficient,
) -> Result<Coefficient, PresetError> {
    let one = int(1);
    Ok((qp * &(q_ * p - &one)).div(&(p * &(qp * p - &one)))?)
}

/// Case I (`qbar = q`) with its `k`, written out entry by entry.
pub fn qij_case1(
    q_: &Coefficient,
    p: &Coefficient,
    qp: &Coefficient,
) -> Result<QijTable, PresetError> {
    let one = int(1);
    let pi = p.inv()?;
    let qpi = qp.inv()?;
    let q14 = (q_ * &(q_ * p - &one)).div(&(p * &(qp * p - &one)))?;
    let q2 = q_ * q_;
    let entries = [
        [one.clone(), q_ * &pi, q_ * &qpi, q14.clone()],
        [
            q14,
            &q2 * &pi * &pi,
            &q2 * &qpi * &pi,
            &q2 * q_ * &qpi * &pi * &pi,
        ],
    ];
    QijTable::new(
        Provenance::Case1,
        entries,
        TableContext {
            p: q(p),
            qp: q(qp),
            q: q(q_),
            qbar: q(q_),
        },
    )
}

/// Case I at `q' = q`.
pub fn qij_one_param(q_: &Coefficient, p: &Coefficient) -> Result<QijTable, PresetError> {
    let r = q_.div(p)?;
    let r2 = &r * &r;
    let entries = [
        [int(1), r.clone(), int(1), r.clone()],
        [r.clone(), r2.clone(), r, r2],
    ];
    QijTable::new(
        Provenance::OneParam,
        entries,
        TableContext {
            p: q(p),
            qp: q(q_),
            q: q(q_),
            qbar: q(q_),
        },
    )
}

/// Case II before specializing: `k = q12 = qbar/p`.
pub fn qij_case2_pre(
    q_: &Coefficient,
    qbar: &Coefficient,
    p: &Coefficient,
    qp: &Coefficient,
) -> Result<QijTable, PresetError> {
    let pi = p.inv()?;
    let qpi = qp.inv()?;
    let qb2 = qbar * qbar;
    let entries = [
        [int(1), qbar * &pi, qbar * &qpi, &qb2 * &qpi * &pi],
        [
            q_ * qbar * &qpi * &pi,
            q_ * &qb2 * &qpi * &pi * &pi,
            q_ * &qb2 * &qpi * &qpi * &pi,
            q_ * &qb2 * qbar * &qpi * &qpi * &pi * &pi,
        ],
    ];
    QijTable::new(
        Provenance::Case2Pre,
        entries,
        TableContext {
            p: q(p),
            qp: q(qp),
            q: q(q_),
            qbar: q(qbar),
        },
    )
}

/// Case II: `k = q12` and `p = q'`.
pub fn qij_case2(
    q_: &Coefficient,
    qbar: &Coefficient,
    qp: &Coefficient,
) -> Result<QijTable, PresetError> {
    let r = qbar.div(qp)?;
    let r2 = &r * &r;
    let r3 = &r2 * &r;
    let s = q_.div(qp)?;
    let entries = [
        [int(1), r.clone(), r.clone(), r2.clone()],
        [&s * &r, &s * &r2, &s * &r2, &s * &r3],
    ];
    QijTable::new(
        Provenance::Case2,
        entries,
        TableContext {
            p: q(qp),
            qp: q(qp),
            q: q(q_),
            qbar: q(qbar),
        },
    )
}

fn ones() -> [[Coefficient; 4]; 2] {
    std::array::from_fn(|_| std::array::from_fn(|_| int(1)))
}

/// All entries 1 over `GL_q`: the plane is carried to itself.
pub fn qij_manin(q_: &Coefficient) -> Result<QijTable, PresetError> {
    QijTable::new(
        Provenance::Manin,
        ones(),
        TableContext {
            p: q(q_),
            qp: q(q_),
            q: q(q_),
            qbar: q(q_),
        },
    )
}

/// All entries 1 with the group parameters left free. This is not a
/// solution of the constraints unless `p = q' = q`, so it is not checked.
pub fn qij_commuting(
    p: &Coefficient,
    qp: &Coefficient,
    q_: &Coefficient,
) -> Result<QijTable, PresetError> {
    QijTable::new_unchecked(
        Provenance::Commuting,
        ones(),
        TableContext {
            p: q(p),
            qp: q(qp),
            q: q(q_),
            qbar: q(q_),
        },
    )
}

/// Entries are the free parameters `q11 .. q24`.
pub fn qij_symbolic() -> QijTable {
    let entries =
        std::array::from_fn(|i| std::array::from_fn(|j| par(Parameter::cross(i + 1, j + 1))));
    QijTable::new_unchecked(Provenance::Symbolic, entries, TableContext::symbolic())
        .expect("parameters are nonzero")
}
