//! Words over the two-letter alphabet `{a, b}` with `b > a`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Letter {
    A = 0,
    B = 1,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// A finite word over `{a, b}`. Positions are 1-based in every statistic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push_run(&mut self, letter: Letter, count: usize) {
        self.letters.extend(std::iter::repeat_n(letter, count));
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Positions `i` with `w_i = b` and `w_{i+1} = a`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.letters
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Letter::B && w[1] == Letter::A)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Number of pairs `i < j` with `w_i = b` and `w_j = a`.
    pub fn inv(&self) -> usize {
        let mut seen_b = 0;
        let mut total = 0;
        for &l in &self.letters {
            match l {
                Letter::B => seen_b += 1,
                Letter::A => total += seen_b,
            }
        }
        total
    }

    /// Lengths of the maximal runs of `b`, left to right.
    pub fn b_runs(&self) -> Vec<usize> {
        self.letters
            .chunk_by(|x, y| x == y)
            .filter(|run| run[0] == Letter::B)
            .map(<[Letter]>::len)
            .collect()
    }

    /// The word with its first letter removed.
    pub fn tail(&self) -> Word {
        Word::new(self.letters.iter().skip(1).copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// Case-insensitive `a`/`b`; `0`/`1` are accepted with `0 = a`. Whitespace is
/// ignored so that spaced-out words like `b a b a` parse.
impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                'a' | 'A' | '0' => letters.push(Letter::A),
                'b' | 'B' | '1' => letters.push(Letter::B),
                c if c.is_whitespace() => {}
                other => {
                    return Err(ParseError::new(
                        i + 1,
                        format!("unexpected letter {other:?}; words use a/b or 0/1"),
                    ))
                }
            }
        }
        Ok(Word::new(letters))
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

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn descent_statistics() {
        let code = w("babaaabbba");
        assert_eq!(code.descent_set(), vec![1, 3, 9]);
        assert_eq!(code.des(), 3);
        assert_eq!(code.maj(), 13);
        assert_eq!(w("a").descent_set(), Vec::<usize>::new());
        assert_eq!((w("a").des(), w("a").maj()), (0, 0));
        let fig = w("ababbaba");
        assert_eq!(fig.descent_set(), vec![2, 5, 7]);
        assert_eq!(fig.maj(), 14);
    }

    #[test]
    fn inversion_counts() {
        let brute = |word: &Word| {
            let l = word.letters();
            (0..l.len())
                .flat_map(|i| (i + 1..l.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| l[i] == Letter::B && l[j] == Letter::A)
                .count()
        };
        let code = w("babaaabbba");
        assert_eq!(brute(&code), 12);
        assert_eq!(code.inv(), 12);
        assert_eq!(code.inv(), brute(&code));
        assert_eq!(w("aaabbb").inv(), 0);
        assert_eq!(w("ba").inv(), 1);
    }

    #[test]
    fn parsing_accepts_binary_and_case() {
        assert_eq!(w("ABba"), w("abba"));
        assert_eq!(w("0110"), w("abba"));
        assert_eq!(w("b a b"), w("bab"));
        assert_eq!("abc".parse::<Word>().unwrap_err().column, 3);
        assert_eq!(w("abbaba").to_string(), "abbaba");
    }

    #[test]
    fn runs() {
        assert_eq!(w("abbaaabaaba").b_runs(), vec![2, 1, 1]);
        assert!(w("aaa").b_runs().is_empty());
    }
}
