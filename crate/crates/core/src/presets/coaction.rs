use std::collections::BTreeMap;
use std::fmt;

use crate::coefficients::Coefficient;
use crate::freealg::{FreeAlgError, Generator, NCPoly, RewriteSystem, Word};

use super::qij::QijTable;
use super::relations::{cross_rules, plane_rules};
use super::PresetError;

use Generator::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoactionKind {
    T,
    Transpose,
}

/// Left coaction of the group matrix on the plane and its differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    kind: CoactionKind,
    images: BTreeMap<Generator, NCPoly>,
}

fn lin(g1: Generator, c1: Generator, g2: Generator, c2: Generator) -> NCPoly {
    NCPoly::letters(&[g1, c1]).add(&NCPoly::letters(&[g2, c2]))
}

impl Coaction {
    /// `x -> A x + B y`, `y -> C x + D y`, and the same on `dx, dy`.
    pub fn t() -> Coaction {
        Coaction::with_matrix(CoactionKind::T, [[A, B], [C, D]])
    }

    /// `x -> A x + C y`, `y -> B x + D y`, and the same on `dx, dy`.
    pub fn transpose() -> Coaction {
        Coaction::with_matrix(CoactionKind::Transpose, [[A, C], [B, D]])
    }

    fn with_matrix(kind: CoactionKind, m: [[Generator; 2]; 2]) -> Coaction {
        let mut images = BTreeMap::new();
        images.insert(X, lin(m[0][0], X, m[0][1], Y));
        images.insert(Y, lin(m[1][0], X, m[1][1], Y));
        images.insert(Dx, lin(m[0][0], Dx, m[0][1], Dy));
        images.insert(Dy, lin(m[1][0], Dx, m[1][1], Dy));
        Coaction { kind, images }
    }

    pub fn kind(&self) -> CoactionKind {
        self.kind
    }

    pub fn label(&self) -> &'static str {
        match self.kind {
            CoactionKind::T => "T",
            CoactionKind::Transpose => "T^t",
        }
    }

    pub fn image(&self, g: Generator) -> Option<&NCPoly> {
        self.images.get(&g)
    }

    /// Substitutes images without reducing. Group letters pass through.
    pub fn substitute(&self, poly: &NCPoly) -> NCPoly {
        poly.substitute_letters(|g| self.images.get(&g).cloned().unwrap_or_else(|| g.into()))
    }

    pub fn apply(&self, poly: &NCPoly, rules: &RewriteSystem) -> Result<NCPoly, FreeAlgError> {
        rules.normal_order(&self.substitute(poly))
    }
}

impl fmt::Display for Coaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Applies `c` to a polynomial in the plane letters and normal-orders the
/// result under `rules`.
pub fn apply_coaction(
    c: &Coaction,
    poly: &NCPoly,
    rules: &RewriteSystem,
) -> Result<NCPoly, FreeAlgError> {
    c.apply(poly, rules)
}

/// One vanishing condition read off from a transformed plane relation: the
/// group-letter polynomial multiplying a fixed coordinate monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coordinates: Word,
    pub relation: NCPoly,
}

impl Constraint {
    /// Writes the relation as `lhs = r * rhs` and returns `r`, provided the
    /// relation involves exactly these two words.
    pub fn ratio(&self, lhs: &Word, rhs: &Word) -> Option<Coefficient> {
        if self.relation.len() != 2 {
            return None;
        }
        let a = self.relation.coefficient(lhs);
        let b = self.relation.coefficient(rhs);
        if a.is_zero() || b.is_zero() {
            return None;
        }
        Some(-(b.div(&a).ok()?))
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} = 0", self.coordinates, self.relation)
    }
}

/// Transforms `x y - q y x` by `transform` into `x'y' - qbar y'x'` with the
/// group letters left free, moves the coordinates right with the table and
/// the plane relation, and returns one constraint per coordinate monomial.
pub fn extract_constraints(
    transform: &Coaction,
    table: &QijTable,
    q: &Coefficient,
    qbar: &Coefficient,
) -> Result<Vec<Constraint>, PresetError> {
    let sys =
        RewriteSystem::union("free-group", &[&cross_rules(table)?, &plane_rules(q)?])?.lenient();
    let xp = transform.image(X).expect("x has an image");
    let yp = transform.image(Y).expect("y has an image");
    let expr = xp.mul_free(yp).sub(&yp.mul_free(xp).scale(qbar));
    let reduced = sys.normal_order(&expr)?;
    let mut by_coords: BTreeMap<Word, NCPoly> = BTreeMap::new();
    for (w, c) in reduced.terms() {
        let (group, coords) = w.split_group_prefix();
        by_coords
            .entry(coords)
            .or_default()
            .add_term(group, c.clone());
    }
    Ok(by_coords
        .into_iter()
        .filter(|(_, r)| !r.is_zero())
        .map(|(coordinates, relation)| Constraint {
            coordinates,
            relation,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{par, Parameter};
    use crate::presets::qij::{qij_general, qij_symbolic};

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn images() {
        let t = Coaction::t();
        assert_eq!(t.image(Dy).unwrap(), &lin(C, Dx, D, Dy));
        let tt = Coaction::transpose();
        assert_eq!(tt.image(X).unwrap(), &lin(A, X, C, Y));
    }

    #[test]
    fn symbolic_extraction_under_t() {
        let q = par(Parameter::Q);
        let qbar = par(Parameter::QBAR);
        let table = qij_symbolic();
        let cs = extract_constraints(&Coaction::t(), &table, &q, &qbar).unwrap();
        assert_eq!(cs.len(), 3);
        let xx = cs.iter().find(|c| c.coordinates == w("x x")).unwrap();
        let q1 = xx.ratio(&w("A C"), &w("C A")).unwrap();
        let expected = (&qbar * &par(Parameter::cross(1, 1)))
            .div(&par(Parameter::cross(1, 3)))
            .unwrap();
        assert_eq!(q1, expected);
        let xy = cs.iter().find(|c| c.coordinates == w("x y")).unwrap();
        assert_eq!(xy.relation.len(), 4);
    }

    #[test]
    fn general_table_makes_extracted_relations_consistent() {
        let (q, qbar) = (par(Parameter::Q), par(Parameter::QBAR));
        let (p, qp, k) = (par(Parameter::P), par(Parameter::QP), par(Parameter::K));
        let table = qij_general(&q, &qbar, &p, &qp, &k).unwrap();
        let cs = extract_constraints(&Coaction::t(), &table, &q, &qbar).unwrap();
        let xx = cs.iter().find(|c| c.coordinates == w("x x")).unwrap();
        assert_eq!(xx.ratio(&w("A C"), &w("C A")).unwrap(), qp);
    }
}
