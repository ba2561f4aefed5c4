use std::fmt;

/// Number of registered parameters.
pub const NPARAMS: usize = 19;

/// Canonical ASCII names, in registry order. The order fixes the deg-lex
/// tie-break used for canonical signs and rendering.
const NAMES: [&str; NPARAMS] = [
    "p", "q", "q'", "qbar", "k", "qbbar", "eps", "q1", "q2", "q3", "q4", "q11", "q12", "q13",
    "q14", "q21", "q22", "q23", "q24",
];

/// Alternative spellings accepted by the parser.
const ALIASES: [(&str, &str); 5] = [
    ("q′", "q'"),
    ("qp", "q'"),
    ("q̄", "qbar"),
    ("q̄̄", "qbbar"),
    ("ε", "eps"),
];

/// A named scalar parameter from the fixed registry.
///
/// Every parameter is formally nonzero, so inversion is always defined
/// symbolically. Comparison is by registry position, which is also the
/// variable order of the deg-lex monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Parameter(u8);

impl Parameter {
    pub const P: Parameter = Parameter(0);
    pub const Q: Parameter = Parameter(1);
    pub const QP: Parameter = Parameter(2);
    pub const QBAR: Parameter = Parameter(3);
    pub const K: Parameter = Parameter(4);
    pub const QBBAR: Parameter = Parameter(5);
    pub const EPS: Parameter = Parameter(6);

    /// The free exponents `q1 .. q4` of the candidate group relations.
    pub fn swap_exponent(i: usize) -> Parameter {
        assert!((1..=4).contains(&i), "q{i} is not registered");
        Parameter(6 + i as u8)
    }

    /// The symbolic cross-commutation constant `q_ij` (row 1..=2, column 1..=4).
    pub fn cross(row: usize, col: usize) -> Parameter {
        assert!((1..=2).contains(&row) && (1..=4).contains(&col));
        Parameter(11 + ((row - 1) * 4 + (col - 1)) as u8)
    }

    pub fn from_name(name: &str) -> Result<Parameter, UnknownParameter> {
        let canonical = ALIASES
            .iter()
            .find(|(alias, _)| *alias == name)
            .map(|(_, c)| *c)
            .unwrap_or(name);
        NAMES
            .iter()
            .position(|n| *n == canonical)
            .map(|i| Parameter(i as u8))
            .ok_or_else(|| UnknownParameter(name.to_string()))
    }

    pub fn name(self) -> &'static str {
        NAMES[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Parameter {
        assert!(i < NPARAMS);
        Parameter(i as u8)
    }

    pub fn all() -> impl Iterator<Item = Parameter> {
        (0..NPARAMS).map(|i| Parameter(i as u8))
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown parameter `{0}`")]
pub struct UnknownParameter(pub String);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in Parameter::all() {
            assert_eq!(Parameter::from_name(p.name()).unwrap(), p);
        }
        assert_eq!(Parameter::from_name("q′").unwrap(), Parameter::QP);
        assert_eq!(Parameter::from_name("q̄").unwrap(), Parameter::QBAR);
        assert_eq!(Parameter::cross(2, 4).name(), "q24");
        assert_eq!(Parameter::swap_exponent(3).name(), "q3");
    }

    #[test]
    fn typos_are_rejected() {
        assert!(Parameter::from_name("qq").is_err());
        assert!(Parameter::from_name("Q").is_err());
    }
}
