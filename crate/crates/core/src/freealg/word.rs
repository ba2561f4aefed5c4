use std::cmp::Ordering;
use std::fmt;

/// A generator of the graded free algebra.
///
/// The derived order is the fixed rank `A < B < C < D < dx < dy < x < y`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    A,
    B,
    C,
    D,
    Dx,
    Dy,
    X,
    Y,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::A,
        Generator::B,
        Generator::C,
        Generator::D,
        Generator::Dx,
        Generator::Dy,
        Generator::X,
        Generator::Y,
    ];

    pub const GROUP: [Generator; 4] = [Generator::A, Generator::B, Generator::C, Generator::D];

    pub const COORDINATES: [Generator; 2] = [Generator::X, Generator::Y];

    pub const FORMS: [Generator; 4] = [Generator::Dx, Generator::Dy, Generator::X, Generator::Y];

    pub fn rank(self) -> u8 {
        self as u8
    }

    /// 1 for the differentials, 0 otherwise.
    pub fn parity(self) -> u8 {
        matches!(self, Generator::Dx | Generator::Dy) as u8
    }

    pub fn is_group(self) -> bool {
        self.rank() < 4
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Generator::A => "A",
            Generator::B => "B",
            Generator::C => "C",
            Generator::D => "D",
            Generator::Dx => "dx",
            Generator::Dy => "dy",
            Generator::X => "x",
            Generator::Y => "y",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.symbol() == s)
    }

    /// The exterior differential of a coordinate.
    pub fn differential(self) -> Option<Generator> {
        match self {
            Generator::X => Some(Generator::Dx),
            Generator::Y => Some(Generator::Dy),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A finite sequence of generators; the empty word is the identity.
///
/// Words are ordered by length first and then lexicographically by rank.
/// Every rewrite rule strictly decreases a word in this order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Word {
        Word(letters)
    }

    pub fn letter(g: Generator) -> Word {
        Word(vec![g])
    }

    /// Parses juxtaposed symbols separated by spaces, e.g. `"D A"`.
    pub fn parse(s: &str) -> Option<Word> {
        s.split_whitespace()
            .map(Generator::from_symbol)
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Sum of letter parities mod 2.
    pub fn parity(&self) -> u8 {
        self.0.iter().map(|g| g.parity()).sum::<u8>() % 2
    }

    /// Non-decreasing in rank with no adjacent repeated odd letter.
    pub fn is_normal(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| w[0] < w[1] || (w[0] == w[1] && w[0].parity() == 0))
    }

    /// Replaces the pair at `pos, pos + 1` with `middle`.
    pub(crate) fn splice(&self, pos: usize, middle: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() - 2 + middle.0.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&self.0[pos + 2..]);
        Word(v)
    }

    /// Splits off the maximal trailing run of non-group letters.
    pub fn split_group_prefix(&self) -> (Word, Word) {
        let cut = self
            .0
            .iter()
            .rposition(|g| g.is_group())
            .map_or(0, |i| i + 1);
        (Word(self.0[..cut].to_vec()), Word(self.0[cut..].to_vec()))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(g.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn concat_examples() {
        assert_eq!(
            Word::letter(A).concat(&Word::letter(D)),
            Word::new(vec![A, D])
        );
        assert_eq!(
            Word::empty().concat(&Word::new(vec![X, Y])),
            Word::new(vec![X, Y])
        );
        assert_eq!(
            Word::letter(Dx).concat(&Word::letter(Dx)),
            Word::new(vec![Dx, Dx])
        );
    }

    #[test]
    fn normality() {
        assert!(Word::new(vec![A, A, D, Dx, Dy, X, X]).is_normal());
        assert!(!Word::new(vec![D, A]).is_normal());
        assert!(!Word::new(vec![Dx, Dx]).is_normal());
        assert!(Word::empty().is_normal());
    }

    #[test]
    fn order_is_length_then_rank() {
        assert!(Word::new(vec![Y]) < Word::new(vec![A, A]));
        assert!(Word::new(vec![A, D]) < Word::new(vec![D, A]));
        assert!(Word::new(vec![Dy, X]) < Word::new(vec![X, Dy]));
    }

    #[test]
    fn parse_and_display() {
        let w = Word::parse("x dy A").unwrap();
        assert_eq!(w, Word::new(vec![X, Dy, A]));
        assert_eq!(w.to_string(), "x dy A");
        assert!(Word::parse("x z").is_none());
    }

    #[test]
    fn group_prefix_split() {
        let (g, c) = Word::parse("A D x y").unwrap().split_group_prefix();
        assert_eq!(g, Word::parse("A D").unwrap());
        assert_eq!(c, Word::parse("x y").unwrap());
    }
}
