//! Burge's operators `a`, `b`, `∂` on frequency sequences, the Burge code
//! `Ω`, and the descent map `P ↦ Des(Ω(P))`.
//!
//! All three operators first read off `𝖫(f)` or `𝖱(f)` from the input and
//! then apply every unit transfer at once. The pairs they touch are
//! disjoint, so the transfers commute.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::partition::{FrequencySeq, Partition};
use crate::word::{Letter, Word};

/// `f ∈ 𝓑` iff `1 ∈ 𝖱(f)`, i.e. 1 lies in a spread of odd size.
pub fn in_class_b(f: &FrequencySeq) -> bool {
    match f.spreads().first() {
        Some(s) if s.lo == 1 => s.len() % 2 == 1,
        _ => false,
    }
}

/// Promotes each forward pair: `(f_i, f_{i+1}) → (f_i − 1, f_{i+1} + 1)` for
/// `i ∈ 𝖫(f)`. The result lies in `𝒜`.
pub fn apply_a(f: &FrequencySeq) -> FrequencySeq {
    let left = f.left_set();
    let mut out = f.entries().to_vec();
    out.resize(f.max_index() + 1, 0);
    for i in left {
        out[i - 1] -= 1;
        out[i] += 1;
    }
    FrequencySeq::from_vec(out)
}

/// `b(f) = (f_1 + 1, a(f_2, f_3, ...))`. The result lies in `𝓑`.
pub fn apply_b(f: &FrequencySeq) -> FrequencySeq {
    let promoted = apply_a(&f.shifted(1));
    let mut out = Vec::with_capacity(promoted.max_index() + 1);
    out.push(f.get(1) + 1);
    out.extend_from_slice(promoted.entries());
    FrequencySeq::from_vec(out)
}

/// Demotes each backward pair: `(f_{j−1}, f_j) → (f_{j−1} + 1, f_j − 1)` for
/// `j ∈ 𝖱(f)`; at `j = 1` only `f_1` drops.
pub fn apply_del(f: &FrequencySeq) -> FrequencySeq {
    let right = f.right_set();
    let mut out = f.entries().to_vec();
    for j in right {
        out[j - 1] -= 1;
        if j >= 2 {
            out[j - 2] += 1;
        }
    }
    FrequencySeq::from_vec(out)
}

/// A word in `𝒲 = (a*b)*a`: it ends in `a`, and that `a` is alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BurgeWord(Word);

impl BurgeWord {
    pub fn new(word: Word) -> Result<Self> {
        let l = word.letters();
        let reason = match l {
            [] => Some("the empty word is not a code"),
            [.., last] if *last != Letter::A => Some("a code must end in a"),
            [.., Letter::A, Letter::A] => Some("a code must end in a single a"),
            _ => None,
        };
        match reason {
            Some(r) => Err(Error::NotBurgeWord {
                word: word.to_string(),
                reason: r.to_owned(),
            }),
            None => Ok(Self(word)),
        }
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn descent_set(&self) -> Vec<usize> {
        self.0.descent_set()
    }

    pub fn des(&self) -> usize {
        self.0.des()
    }

    pub fn maj(&self) -> usize {
        self.0.maj()
    }
}

impl fmt::Display for BurgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BurgeWord {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let word: Word = s.parse()?;
        BurgeWord::new(word).map_err(|e| ParseError::new(s.trim_end().len().max(1), e.to_string()))
    }
}

impl Serialize for BurgeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BurgeWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = Word::deserialize(deserializer)?;
        BurgeWord::new(w).map_err(serde::de::Error::custom)
    }
}

/// The Burge chain `f, ∂f, ..., ∂^k f = ε` together with its code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurgeChain {
    pub states: Vec<FrequencySeq>,
    pub word: BurgeWord,
}

pub fn chain(f: &FrequencySeq) -> BurgeChain {
    let mut states = vec![f.clone()];
    let mut letters = Vec::new();
    loop {
        let cur = states.last().unwrap();
        letters.push(if in_class_b(cur) { Letter::B } else { Letter::A });
        if cur.is_empty() {
            break;
        }
        let next = apply_del(cur);
        states.push(next);
    }
    let word = BurgeWord::new(Word::new(letters)).expect("Burge chain codes always lie in (a*b)*a");
    BurgeChain { states, word }
}

/// `Ω(f)`.
pub fn encode(f: &FrequencySeq) -> BurgeWord {
    chain(f).word
}

/// `Ω⁻¹(w)`: apply the letters right to left starting from ε.
pub fn decode(w: &BurgeWord) -> FrequencySeq {
    w.as_word()
        .letters()
        .iter()
        .rev()
        .fold(FrequencySeq::empty(), |f, &l| match l {
            Letter::A => apply_a(&f),
            Letter::B => apply_b(&f),
        })
}

/// Parses and validates a word before decoding.
pub fn decode_word(w: &Word) -> Result<FrequencySeq> {
    Ok(decode(&BurgeWord::new(w.clone())?))
}

pub fn encode_partition(p: &Partition) -> BurgeWord {
    encode(&p.to_frequency())
}

/// The descent map: `Des(Ω(P))` read as a super-distinct partition.
pub fn descent_map(p: &Partition) -> Partition {
    let mut parts = encode_partition(p).descent_set();
    parts.reverse();
    Partition::from_sorted_unchecked(parts)
}

/// The seven equivalent conditions characterising super-distinct partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperDistinctReport {
    pub super_distinct: bool,
    pub length_equals_two_measure: bool,
    pub code_avoids_bb: bool,
    pub frequencies_are_right_set_indicator: bool,
    pub del_is_shift: bool,
    pub del_is_reduction: bool,
    pub descent_map_fixes: bool,
}

impl SuperDistinctReport {
    pub fn as_array(&self) -> [bool; 7] {
        [
            self.super_distinct,
            self.length_equals_two_measure,
            self.code_avoids_bb,
            self.frequencies_are_right_set_indicator,
            self.del_is_shift,
            self.del_is_reduction,
            self.descent_map_fixes,
        ]
    }

    pub fn consistent(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

pub fn characterize_superdistinct(p: &Partition) -> SuperDistinctReport {
    let f = p.to_frequency();
    let code = encode(&f);
    let right = f.right_set();
    let del = apply_del(&f);
    SuperDistinctReport {
        super_distinct: p.is_super_distinct(),
        length_equals_two_measure: p.length() == f.two_measure(),
        code_avoids_bb: !code.as_word().letters().windows(2).any(|w| w == [Letter::B, Letter::B]),
        frequencies_are_right_set_indicator: (1..=f.max_index())
            .all(|i| f.get(i) == usize::from(right.binary_search(&i).is_ok())),
        del_is_shift: del == f.shifted(1),
        del_is_reduction: del.to_partition() == p.reduce(),
        descent_map_fixes: descent_map(p) == *p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn f(entries: &[usize]) -> FrequencySeq {
        FrequencySeq::from_vec(entries.to_vec())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bw(s: &str) -> BurgeWord {
        s.parse().unwrap()
    }

    #[test]
    fn class_membership() {
        assert!(!in_class_b(&f(&[1, 1])));
        assert!(in_class_b(&f(&[2])));
        assert!(!in_class_b(&FrequencySeq::empty()));
        assert!(in_class_b(&f(&[2, 2, 1, 3, 1, 0, 4, 0, 0, 2, 1])));
    }

    #[test]
    fn operators_on_worked_example() {
        let g = f(&[2, 2, 1, 3, 1, 0, 4, 0, 0, 2, 1]);
        assert_eq!(apply_a(&g), f(&[1, 3, 0, 4, 0, 1, 3, 1, 0, 1, 2]));
        assert_eq!(apply_b(&g), f(&[3, 1, 2, 2, 2, 0, 3, 1, 0, 1, 2]));
        assert_eq!(apply_del(&g), f(&[1, 3, 0, 4, 0, 1, 3, 0, 0, 3]));
        assert_eq!(apply_del(&apply_a(&g)), g);
        assert_eq!(apply_del(&apply_b(&g)), g);
        assert_eq!(apply_b(&apply_del(&g)), g);
        assert_eq!(apply_a(&apply_del(&g)), f(&[0, 4, 0, 3, 1, 0, 4, 0, 0, 2, 1]));
    }

    #[test]
    fn operators_on_small_inputs() {
        assert_eq!(apply_a(&FrequencySeq::empty()), FrequencySeq::empty());
        assert_eq!(apply_a(&f(&[0, 1])), f(&[0, 0, 1]));
        assert_eq!(apply_del(&f(&[0, 0, 1])), f(&[0, 1]));
        assert_eq!(apply_b(&FrequencySeq::empty()), f(&[1]));
        assert_eq!(apply_b(&f(&[2])), f(&[3]));
        assert_eq!(apply_del(&f(&[1])), FrequencySeq::empty());
        assert_eq!(apply_del(&f(&[1, 2, 1, 0, 1])), f(&[0, 3, 0, 1]));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&f(&[1, 2, 1, 0, 1])), bw("babaaabbba"));
        assert_eq!(encode(&FrequencySeq::empty()), bw("a"));
        assert_eq!(encode(&f(&[1, 1, 0, 0, 1])), bw("abbaba"));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&bw("abbaba")), f(&[1, 1, 0, 0, 1]));
        assert_eq!(decode(&bw("a")), FrequencySeq::empty());
        assert_eq!(decode(&bw("aabaaabaaba")), p(&[10, 7, 3]).to_frequency());
        assert_eq!(decode(&bw("aaba")), f(&[0, 0, 1]));
    }

    #[test]
    fn decode_rejects_words_outside_the_code_language() {
        for bad in ["", "b", "ab", "abaa", "aa", "babb"] {
            let w: Word = bad.parse().unwrap();
            assert!(decode_word(&w).is_err(), "{bad} should be rejected");
        }
        assert!(decode_word(&"aaba".parse().unwrap()).is_ok());
    }

    #[test]
    fn chain_of_worked_example() {
        let c = chain(&f(&[1, 2, 1, 0, 1]));
        let expected: Vec<FrequencySeq> = vec![
            f(&[1, 2, 1, 0, 1]),
            f(&[0, 3, 0, 1]),
            f(&[1, 2, 1]),
            f(&[0, 3]),
            f(&[1, 2]),
            f(&[2, 1]),
            f(&[3]),
            f(&[2]),
            f(&[1]),
            FrequencySeq::empty(),
        ];
        assert_eq!(c.states, expected);
        assert_eq!(c.word, bw("babaaabbba"));

        let trivial = chain(&FrequencySeq::empty());
        assert_eq!(trivial.states, vec![FrequencySeq::empty()]);
        assert_eq!(trivial.word, bw("a"));

        assert_eq!(chain(&f(&[1, 1, 0, 1, 0, 0, 1])).word, bw("ababbaba"));
    }

    #[test]
    fn descent_map_examples() {
        assert_eq!(descent_map(&p(&[5, 3, 2, 2, 1])), p(&[9, 3, 1]));
        assert_eq!(descent_map(&p(&[10, 7, 3])), p(&[10, 7, 3]));
        assert_eq!(descent_map(&p(&[7, 4, 2, 1])), p(&[7, 5, 2]));
        assert_eq!(descent_map(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn characterization_examples() {
        assert_eq!(characterize_superdistinct(&p(&[10, 7, 3])).as_array(), [true; 7]);
        assert_eq!(characterize_superdistinct(&p(&[4, 3])).as_array(), [false; 7]);
        assert_eq!(characterize_superdistinct(&Partition::empty()).as_array(), [true; 7]);
    }

    #[test]
    fn characterization_agrees_up_to_fourteen() {
        for q in partitions_up_to(14) {
            assert!(characterize_superdistinct(&q).consistent(), "{q}");
        }
    }
}
