//! Letters, signed labels and words over `X ∪ X⁻¹`.
//!
//! Generators are lowercase ASCII letters; the inverse of a generator is
//! written as the matching uppercase letter. The empty word prints as `1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid character {0:?} in word (expected ASCII letters or `1`)")]
    BadCharacter(char),
    #[error("invalid generator {0:?} (expected one lowercase ASCII letter)")]
    BadLetter(String),
}

/// A generator symbol from the alphabet `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(c: char) -> Result<Self, WordError> {
        if c.is_ascii_lowercase() {
            Ok(Letter(c as u8))
        } else {
            Err(WordError::BadLetter(c.to_string()))
        }
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }

    pub fn positive(self) -> Label {
        Label {
            letter: self,
            inverse: false,
        }
    }

    pub fn negative(self) -> Label {
        Label {
            letter: self,
            inverse: true,
        }
    }
}

impl FromStr for Letter {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if c.is_ascii_lowercase() => Ok(Letter(c as u8)),
            _ => Err(WordError::BadLetter(s.to_string())),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A letter together with an orientation: `x` or `x⁻¹`.
///
/// Labels order as `a < A < b < B < ...`; every traversal that needs a
/// canonical order over a star uses this one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub letter: Letter,
    pub inverse: bool,
}

impl Label {
    pub fn from_char(c: char) -> Result<Self, WordError> {
        if c.is_ascii_lowercase() {
            Ok(Letter(c as u8).positive())
        } else if c.is_ascii_uppercase() {
            Ok(Letter(c.to_ascii_lowercase() as u8).negative())
        } else {
            Err(WordError::BadCharacter(c))
        }
    }

    pub fn inv(self) -> Label {
        Label {
            letter: self.letter,
            inverse: !self.inverse,
        }
    }

    pub fn is_positive(self) -> bool {
        !self.inverse
    }

    pub fn as_char(self) -> char {
        if self.inverse {
            self.letter.as_char().to_ascii_uppercase()
        } else {
            self.letter.as_char()
        }
    }

    /// Both labels of every letter in `letters`, in canonical order.
    pub fn all_over(letters: impl IntoIterator<Item = Letter>) -> Vec<Label> {
        let mut out: Vec<Label> = letters
            .into_iter()
            .flat_map(|l| [l.positive(), l.negative()])
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word over `X ∪ X⁻¹`.
///
/// Words compare in shortlex order (length first, then label order), so the
/// smallest word in a set is a shortest one.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Label>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_labels(labels: Vec<Label>) -> Self {
        Word(labels)
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, label: Label) {
        self.0.push(label);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut labels = Vec::with_capacity(self.len() + other.len());
        labels.extend_from_slice(&self.0);
        labels.extend_from_slice(&other.0);
        Word(labels)
    }

    /// Reversed, letter-inverted word.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Free reduction: cancel adjacent `x x⁻¹` pairs until none remain.
    pub fn reduce(&self) -> Word {
        let mut stack: Vec<Label> = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if stack.last() == Some(&l.inv()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inv())
    }

    /// True for Dyck words, i.e. words that freely reduce to `1`.
    pub fn is_dyck(&self) -> bool {
        self.reduce().is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().map(|l| l.letter)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::empty());
        }
        s.chars().map(Label::from_char).collect::<Result<_, _>>().map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromIterator<Label> for Word {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}
