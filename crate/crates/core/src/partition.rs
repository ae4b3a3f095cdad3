//! Partitions, frequency sequences and the statistics built on them.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts. A
//! [`FrequencySeq`] stores the multiplicities `(f_1, f_2, ...)`; the implicit
//! `f_0` is always zero and never stored, and trailing zeros are trimmed so
//! that equality is structural.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};

/// Largest part accepted by [`Partition::new`].
pub const DEFAULT_PART_LIMIT: usize = 1_000_000;

/// A partition of a non-negative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition ε.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Self::with_limit(parts, DEFAULT_PART_LIMIT)
    }

    /// Validates `parts` against a custom part limit.
    pub fn with_limit(parts: Vec<usize>, limit: usize) -> Result<Self> {
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::InvalidPartition(format!("part {p} is not positive")));
        }
        if let Some(&p) = parts.iter().find(|&&p| p > limit) {
            return Err(Error::InvalidPartition(format!("part {p} exceeds the limit {limit}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts before validating, treating the input as a multiset.
    pub fn from_multiset(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// Builds a partition from parts known to be valid. Used internally where
    /// the invariant holds by construction.
    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|P|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(P)`, the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-based, with zero padding.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn to_frequency(&self) -> FrequencySeq {
        let mut freq = vec![0; self.parts.first().copied().unwrap_or(0)];
        for &p in &self.parts {
            freq[p - 1] += 1;
        }
        FrequencySeq::from_vec(freq)
    }

    pub fn two_measure(&self) -> usize {
        self.to_frequency().two_measure()
    }

    /// True iff successive parts differ by at least two.
    pub fn is_super_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1] + 2)
    }

    /// `P - 1`: every part decremented, zero parts dropped.
    pub fn reduce(&self) -> Partition {
        Self::from_sorted_unchecked(self.parts.iter().filter(|&&p| p > 1).map(|&p| p - 1).collect())
    }

    /// The conjugate partition (column lengths of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Self::from_sorted_unchecked(
            (1..=width)
                .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Dominance order: every prefix sum of `self` is at least the
    /// corresponding prefix sum of `other`. Only defined within a size class.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Comma-separated form, `"e"` for ε.
    pub fn to_comma_string(&self) -> String {
        if self.is_empty() {
            return "e".to_owned();
        }
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the part lists; only used for deterministic sorting.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

/// Multiset bracket form: `[9,5,1^6]`, `[]` for ε.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{run}")?;
            }
            i += run;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_partition(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses every accepted text form of a partition:
/// `10,7,3`, `[10,7,3]`, `(10,7,3)`, `[4^2,3,2^2]`, `e`, `[]`, and the frequency form
/// `f:(0,2,1,2)`.
pub fn parse_partition(input: &str) -> std::result::Result<Partition, ParseError> {
    let trimmed = input.trim();
    let lead = input.len() - input.trim_start().len();
    if trimmed.is_empty() {
        return Err(ParseError::new(1, "empty partition text"));
    }
    if trimmed == "e" || trimmed == "ε" {
        return Ok(Partition::empty());
    }
    if let Some(rest) = trimmed.strip_prefix("f:") {
        let freq = parse_frequency_body(rest, lead + 2)?;
        return Ok(freq.to_partition());
    }
    let close = match trimmed.chars().next() {
        Some('[') => Some(']'),
        Some('(') => Some(')'),
        _ => None,
    };
    let (body, offset) = match close {
        Some(c) => match trimmed[1..].strip_suffix(c) {
            Some(body) => (body, lead + 1),
            None => {
                return Err(ParseError::new(
                    lead + trimmed.len() + 1,
                    format!("missing closing '{c}'"),
                ))
            }
        },
        None => (trimmed, lead),
    };
    let mut parts = Vec::new();
    if body.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut col = offset;
    for item in body.split(',') {
        let item_col = col + 1 + (item.len() - item.trim_start().len());
        let token = item.trim();
        let (value, mult) = match token.split_once('^') {
            Some((v, m)) => (v, Some((m, item_col + v.len() + 1))),
            None => (token, None),
        };
        let part: usize = value
            .parse()
            .map_err(|_| ParseError::new(item_col, format!("expected a positive integer, found {value:?}")))?;
        if part == 0 {
            return Err(ParseError::new(item_col, "parts must be positive"));
        }
        if part > DEFAULT_PART_LIMIT {
            return Err(ParseError::new(
                item_col,
                format!("part {part} exceeds the limit {DEFAULT_PART_LIMIT}"),
            ));
        }
        let count = match mult {
            Some((m, mcol)) => m
                .parse::<usize>()
                .map_err(|_| ParseError::new(mcol, format!("expected a multiplicity, found {m:?}")))?,
            None => 1,
        };
        parts.extend(std::iter::repeat_n(part, count));
        col += item.len() + 1;
    }
    Partition::from_multiset(parts).map_err(|e| ParseError::new(offset + 1, e.to_string()))
}

fn parse_frequency_body(body: &str, offset: usize) -> std::result::Result<FrequencySeq, ParseError> {
    let inner = body
        .trim()
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| ParseError::new(offset + 1, "expected a parenthesised list like (0,2,1)"))?;
    if inner.trim().is_empty() {
        return Ok(FrequencySeq::empty());
    }
    let mut col = offset + 1 + (body.len() - body.trim_start().len());
    let mut freq = Vec::new();
    for item in inner.split(',') {
        let token = item.trim();
        let value = token
            .parse::<usize>()
            .map_err(|_| ParseError::new(col + 1, format!("expected a non-negative integer, found {token:?}")))?;
        freq.push(value);
        col += item.len() + 1;
    }
    Ok(FrequencySeq::from_vec(freq))
}

/// A maximal run `[lo, hi]` of consecutive indices in the support of a
/// frequency sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Spread {
    pub lo: usize,
    pub hi: usize,
}

impl Spread {
    pub fn is_trivial(&self) -> bool {
        self.lo == self.hi
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Multiplicities `(f_1, f_2, ...)` of a partition.
///
/// Entry `i` (1-based) is the number of parts equal to `i`. Trailing zeros
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrequencySeq {
    freq: Vec<usize>,
}

impl FrequencySeq {
    pub fn empty() -> Self {
        Self { freq: Vec::new() }
    }

    /// Takes `(f_1, f_2, ...)` and trims trailing zeros.
    pub fn from_vec(mut freq: Vec<usize>) -> Self {
        while freq.last() == Some(&0) {
            freq.pop();
        }
        Self { freq }
    }

    /// The stored entries; `entries()[0]` is `f_1`.
    pub fn entries(&self) -> &[usize] {
        &self.freq
    }

    /// `f_i` for any `i`, with `f_0 = 0` and zero beyond the support.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.freq.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest index in the support, 0 for ε.
    pub fn max_index(&self) -> usize {
        self.freq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.freq.is_empty()
    }

    pub fn size(&self) -> usize {
        self.freq.iter().enumerate().map(|(i, &f)| (i + 1) * f).sum()
    }

    pub fn length(&self) -> usize {
        self.freq.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.max_index()).filter(|&i| self.get(i) > 0).collect()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.length());
        for i in (1..=self.max_index()).rev() {
            parts.extend(std::iter::repeat_n(i, self.get(i)));
        }
        Partition::from_sorted_unchecked(parts)
    }

    pub fn spreads(&self) -> Vec<Spread> {
        let mut out = Vec::new();
        let mut i = 1;
        let z = self.max_index();
        while i <= z {
            if self.get(i) == 0 {
                i += 1;
                continue;
            }
            let lo = i;
            while i < z && self.get(i + 1) > 0 {
                i += 1;
            }
            out.push(Spread { lo, hi: i });
            i += 1;
        }
        out
    }

    /// `𝖫(f)`: `lo, lo+2, ...` within each spread. Sorted ascending.
    pub fn left_set(&self) -> Vec<usize> {
        self.spreads()
            .into_iter()
            .flat_map(|s| (s.lo..=s.hi).step_by(2))
            .collect()
    }

    /// `𝖱(f)`: `hi, hi-2, ...` within each spread. Sorted ascending.
    pub fn right_set(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .spreads()
            .into_iter()
            .flat_map(|s| (s.lo..=s.hi).rev().step_by(2))
            .collect();
        out.sort_unstable();
        out
    }

    /// Maximum length of a super-distinct subpartition.
    pub fn two_measure(&self) -> usize {
        self.spreads().iter().map(|s| s.len().div_ceil(2)).sum()
    }

    /// Drops the first `k` entries: `(f_{k+1}, f_{k+2}, ...)`.
    pub fn shifted(&self, k: usize) -> FrequencySeq {
        Self::from_vec(self.freq.iter().skip(k).copied().collect())
    }
}

impl fmt::Display for FrequencySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.freq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for FrequencySeq {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let trimmed = s.trim_start();
        let lead = s.len() - trimmed.len();
        let body = trimmed.strip_prefix("f:").unwrap_or(trimmed);
        parse_frequency_body(body, lead + (trimmed.len() - body.len()))
    }
}

impl Serialize for FrequencySeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.freq.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FrequencySeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<usize>::deserialize(deserializer).map(FrequencySeq::from_vec)
    }
}

impl From<&Partition> for FrequencySeq {
    fn from(p: &Partition) -> Self {
        p.to_frequency()
    }
}

impl From<&FrequencySeq> for Partition {
    fn from(f: &FrequencySeq) -> Self {
        f.to_partition()
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// All partitions of every size in `0..=max_n`, smallest sizes first.
pub fn partitions_up_to(max_n: usize) -> impl Iterator<Item = Partition> {
    (0..=max_n).flat_map(partitions_of)
}

/// Iterator returned by [`partitions_of`].
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor in reverse lex order: strip trailing 1s, decrement the
        // last part > 1, then refill greedily with that value.
        let mut parts = current.clone();
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.pop() {
            let m = last - 1;
            parts.push(m);
            let mut rem = ones + 1;
            while rem > 0 {
                let take = rem.min(m);
                parts.push(take);
                rem -= take;
            }
            self.next = Some(parts);
        }
        Some(Partition::from_sorted_unchecked(current))
    }
}
