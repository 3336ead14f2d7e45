use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Finite word over `{1, 2, 3}`; letter 1 is `f_A`, 2 is `f_B`, 3 is `f_C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| !(1..=3).contains(*l)) {
            return Err(Error::InvalidWord(format!("letter {bad} not in {{1,2,3}}")));
        }
        Ok(Self(letters))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `letter · self`.
    pub fn prepend(&self, letter: u8) -> Result<Word> {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word::new(v)
    }

    /// Every word of length `k` in lexicographic order.
    pub fn all_of_length(k: usize) -> impl Iterator<Item = Word> {
        let count = 3usize.pow(k as u32);
        (0..count).map(move |mut index| {
            let mut letters = vec![1u8; k];
            for slot in letters.iter_mut().rev() {
                *slot = (index % 3) as u8 + 1;
                index /= 3;
            }
            Word(letters)
        })
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                '3' => Ok(3),
                _ => Err(Error::InvalidWord(format!("{s:?}: unexpected {c:?}"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Eventually periodic address `prefix · period · period · …`. An empty
/// period makes the stream finite, holding only the prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaStream {
    prefix: Vec<u8>,
    period: Vec<u8>,
}

impl ThetaStream {
    pub fn periodic(prefix: Word, period: Word) -> Self {
        Self { prefix: prefix.0, period: period.0 }
    }

    pub fn finite(letters: Word) -> Self {
        Self { prefix: letters.0, period: Vec::new() }
    }

    /// Number of available letters; `None` when unbounded.
    pub fn bound(&self) -> Option<usize> {
        self.period.is_empty().then_some(self.prefix.len())
    }

    /// Letter at zero-based position `i`.
    pub fn letter(&self, i: usize) -> Option<u8> {
        if i < self.prefix.len() {
            Some(self.prefix[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.prefix.len()) % self.period.len()])
        }
    }

    /// `θ|k`.
    pub fn prefix(&self, k: usize) -> Result<Word> {
        (0..k)
            .map(|i| self.letter(i))
            .collect::<Option<Vec<u8>>>()
            .map(Word)
            .ok_or(Error::WordLengthMismatch { expected: k, actual: self.prefix.len() })
    }
}

impl FromStr for ThetaStream {
    type Err = Error;

    /// `3(12)` is 3,1,2,1,2,…; `(1)` is 1,1,…; `121` is finite.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.find('(') {
            None => Ok(Self::finite(s.parse()?)),
            Some(open) => {
                let inner = s[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidWord(format!("{s:?}: period must end with ')'")))?;
                let period: Word = inner.parse()?;
                if period.is_empty() {
                    return Err(Error::InvalidWord(format!("{s:?}: empty period")));
                }
                Ok(Self::periodic(s[..open].parse()?, period))
            }
        }
    }
}

impl fmt::Display for ThetaStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.prefix.iter().try_for_each(|l| write!(f, "{l}"))?;
        if !self.period.is_empty() {
            write!(f, "(")?;
            self.period.iter().try_for_each(|l| write!(f, "{l}"))?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Serialize for ThetaStream {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
