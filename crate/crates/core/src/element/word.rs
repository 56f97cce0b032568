use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    X0,
    X1,
    X0Inv,
    X1Inv,
}

impl Generator {
    pub const ALL: [Generator; 4] = [
        Generator::X0,
        Generator::X1,
        Generator::X0Inv,
        Generator::X1Inv,
    ];

    pub fn inverse(self) -> Generator {
        match self {
            Generator::X0 => Generator::X0Inv,
            Generator::X1 => Generator::X1Inv,
            Generator::X0Inv => Generator::X0,
            Generator::X1Inv => Generator::X1,
        }
    }

    /// Compact letter: `a = x0`, `b = x1`, `A = x0^-1`, `B = x1^-1`.
    pub fn letter(self) -> char {
        match self {
            Generator::X0 => 'a',
            Generator::X1 => 'b',
            Generator::X0Inv => 'A',
            Generator::X1Inv => 'B',
        }
    }

    pub fn from_letter(c: char) -> Option<Generator> {
        match c {
            'a' => Some(Generator::X0),
            'b' => Some(Generator::X1),
            'A' => Some(Generator::X0Inv),
            'B' => Some(Generator::X1Inv),
            _ => None,
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            Generator::X0 => "x0",
            Generator::X1 => "x1",
            Generator::X0Inv => "x0^-1",
            Generator::X1Inv => "x1^-1",
        }
    }

    pub fn is_x0_type(self) -> bool {
        matches!(self, Generator::X0 | Generator::X0Inv)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A word over `{x0, x1, x0^-1, x1^-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
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

    /// The prefix of length `t`; the whole word once `t >= len`.
    pub fn prefix(&self, t: usize) -> Word {
        Word(self.0[..t.min(self.0.len())].to_vec())
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    /// `g^n` appended.
    pub fn power(mut self, g: Generator, n: usize) -> Word {
        self.0.extend(std::iter::repeat_n(g, n));
        self
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    /// Space separated long form, e.g. `x0 x1^-1`.
    pub fn to_long_form(&self) -> String {
        self.0
            .iter()
            .map(|g| g.long_name())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    /// Compact letters, e.g. `ABaaaaBAA`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a word in compact (`aAbB`) or long (`x0 x1^-1`) form; the two may
/// be mixed and whitespace is ignored. A letter may carry a non-negative
/// exponent (`a^3`, `x1^2`); the only negative exponent accepted is the `^-1`
/// that spells an inverse generator in long form.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let g = if let Some(g) = Generator::from_letter(c) {
            i += 1;
            g
        } else if c == 'x' {
            let g = match bytes.get(i + 1) {
                Some(b'0') => Generator::X0,
                Some(b'1') => Generator::X1,
                _ => return Err(ParseError::new(i, "expected x0 or x1")),
            };
            i += 2;
            if text[i..].starts_with("^-1") {
                i += 3;
                g.inverse()
            } else {
                g
            }
        } else {
            return Err(ParseError::new(i, format!("unexpected character {c:?}")));
        };
        let mut count = 1usize;
        if bytes.get(i) == Some(&b'^') {
            let exp_start = i + 1;
            if bytes.get(exp_start) == Some(&b'-') {
                return Err(ParseError::new(
                    exp_start,
                    "negative exponents are not allowed; use an inverse letter",
                ));
            }
            let mut j = exp_start;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if j == exp_start {
                return Err(ParseError::new(
                    exp_start,
                    "expected a non-negative exponent",
                ));
            }
            count = text[exp_start..j]
                .parse()
                .map_err(|_| ParseError::new(exp_start, "exponent too large"))?;
            i = j;
        }
        if text[start..i].starts_with('x')
            && bytes.get(i).is_some_and(|b| b.is_ascii_alphanumeric())
        {
            return Err(ParseError::new(
                i,
                "missing separator after long-form letter",
            ));
        }
        if count == 0 {
            continue;
        }
        out.extend(std::iter::repeat_n(g, count));
    }
    Ok(Word(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_word("ABaaaaBAA").unwrap(),
            Word::new(vec![X0Inv, X1Inv, X0, X0, X0, X0, X1Inv, X0Inv, X0Inv])
        );
        assert_eq!(parse_word("").unwrap(), Word::empty());
        assert_eq!(parse_word("x0 x1^-1").unwrap(), Word::new(vec![X0, X1Inv]));
        assert_eq!(
            parse_word(" a b\tA\nB ").unwrap(),
            Word::new(vec![X0, X1, X0Inv, X1Inv])
        );
        assert_eq!(
            parse_word("a^3B").unwrap(),
            Word::new(vec![X0, X0, X0, X1Inv])
        );
        assert_eq!(
            parse_word("x0^-1 x1^2").unwrap(),
            Word::new(vec![X0Inv, X1, X1])
        );
        assert_eq!(parse_word("a^0").unwrap(), Word::empty());
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(parse_word("ab c").unwrap_err().position, 3);
        assert_eq!(parse_word("A^-2").unwrap_err().position, 2);
        assert_eq!(parse_word("x2").unwrap_err().position, 0);
        assert_eq!(parse_word("a^").unwrap_err().position, 2);
        assert!(parse_word("x0x1").is_err());
    }

    #[test]
    fn printer_roundtrip() {
        let w = parse_word("x0^-1 x1^-1 x0 x0").unwrap();
        assert_eq!(w.to_string(), "ABaa");
        assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        assert_eq!(parse_word(&w.to_long_form()).unwrap(), w);
    }

    #[test]
    fn prefixes() {
        let w = parse_word("abAB").unwrap();
        assert_eq!(w.prefix(0), Word::empty());
        assert_eq!(w.prefix(2).to_string(), "ab");
        assert_eq!(w.prefix(10), w);
        assert_eq!(w.inverse().to_string(), "baBA");
    }
}
