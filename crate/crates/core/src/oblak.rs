//! The Oblak process phrased on frequency sequences: evaluation `val_i`,
//! annihilation `ann_i`, maximal indices, admissibility, and Oblak chains
//! with their `∂`-action.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::burge::apply_del;
use crate::error::{Error, Result};
use crate::partition::{FrequencySeq, Partition};

/// Default branch budget for [`oblak_all_chains`].
pub const DEFAULT_CHAIN_LIMIT: usize = 100_000;

/// `val_i(f) = i·f_i + (i+1)·f_{i+1} + 2·Σ_{j>i+1} f_j`, with `val_0 = val_1`.
pub fn evaluate(f: &FrequencySeq, i: usize) -> usize {
    let i = i.max(1);
    let tail: usize = f.entries().iter().skip(i + 1).sum();
    i * f.get(i) + (i + 1) * f.get(i + 1) + 2 * tail
}

/// `ann_i(f)`: splice out entries `i` and `i+1`; `ann_0 = ann_1`.
pub fn annihilate(f: &FrequencySeq, i: usize) -> FrequencySeq {
    let i = i.max(1);
    let e = f.entries();
    let mut out: Vec<usize> = e.iter().take(i - 1).copied().collect();
    out.extend(e.iter().skip(i + 1).copied());
    FrequencySeq::from_vec(out)
}

/// Every index in `[0, z]` (z the largest support index) with the largest
/// nonzero evaluation. Empty for ε.
pub fn maximal_indices(f: &FrequencySeq) -> Vec<usize> {
    if f.is_empty() {
        return Vec::new();
    }
    let vals: Vec<usize> = (0..=f.max_index()).map(|i| evaluate(f, i)).collect();
    let best = *vals.iter().max().unwrap();
    (0..vals.len()).filter(|&i| vals[i] == best).collect()
}

/// `i ≥ 1` with `f_i > 0` and either `f_{i+1} > 0` or `f_{i−1} = f_{i+1} = 0`.
pub fn right_admissible(f: &FrequencySeq) -> Vec<usize> {
    (1..=f.max_index())
        .filter(|&i| f.get(i) > 0 && (f.get(i + 1) > 0 || (f.get(i - 1) == 0 && f.get(i + 1) == 0)))
        .collect()
}

/// `i ≥ 0` with `f_{i+1} > 0` and either `f_i > 0` or `f_i = f_{i+2} = 0`.
pub fn left_admissible(f: &FrequencySeq) -> Vec<usize> {
    (0..f.max_index())
        .filter(|&i| f.get(i + 1) > 0 && (f.get(i) > 0 || f.get(i + 2) == 0))
        .collect()
}

pub fn is_left_admissible(f: &FrequencySeq, i: usize) -> bool {
    f.get(i + 1) > 0 && (f.get(i) > 0 || f.get(i + 2) == 0)
}

pub fn is_right_admissible(f: &FrequencySeq, i: usize) -> bool {
    i >= 1 && f.get(i) > 0 && (f.get(i + 1) > 0 || (f.get(i - 1) == 0 && f.get(i + 1) == 0))
}

/// Indices grouped by equal annihilation. Indices `>= tail_start` all give
/// `ann_i(f) = f` and form one unbounded class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexClasses {
    pub bounded: Vec<Vec<usize>>,
    pub tail_start: usize,
}

impl IndexClasses {
    /// The class containing `i`, truncated to `[0, tail_start]` for the tail.
    pub fn class_of(&self, i: usize) -> Vec<usize> {
        if i >= self.tail_start {
            return vec![self.tail_start];
        }
        self.bounded
            .iter()
            .find(|c| c.contains(&i))
            .cloned()
            .unwrap_or_default()
    }

    pub fn equivalent(&self, i: usize, j: usize) -> bool {
        if i >= self.tail_start || j >= self.tail_start {
            return i >= self.tail_start && j >= self.tail_start;
        }
        self.bounded.iter().any(|c| c.contains(&i) && c.contains(&j))
    }
}

pub fn equivalent_indices(f: &FrequencySeq) -> IndexClasses {
    let tail_start = if f.is_empty() { 0 } else { f.max_index() + 1 };
    let mut groups: BTreeMap<FrequencySeq, Vec<usize>> = BTreeMap::new();
    for i in 0..tail_start {
        groups.entry(annihilate(f, i)).or_default().push(i);
    }
    let mut bounded: Vec<Vec<usize>> = groups.into_values().collect();
    bounded.sort();
    IndexClasses { bounded, tail_start }
}

/// The Oblak process, always choosing the smallest maximal index.
pub fn oblak(f: &FrequencySeq) -> Partition {
    let mut parts = Vec::new();
    let mut cur = f.clone();
    while !cur.is_empty() {
        let i = maximal_indices(&cur)[0];
        parts.push(evaluate(&cur, i));
        cur = annihilate(&cur, i);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_sorted_unchecked(parts)
}

/// One run of the Oblak process: the states `f = f⁰, ..., f^k = ε` and the
/// maximal index used at each step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OblakChain {
    pub states: Vec<FrequencySeq>,
    pub indices: Vec<usize>,
}

impl OblakChain {
    /// Runs the process along a prescribed index sequence, checking every
    /// choice is maximal.
    pub fn from_indices(f: &FrequencySeq, indices: &[usize]) -> Result<Self> {
        let mut states = vec![f.clone()];
        for (step, &i) in indices.iter().enumerate() {
            let cur = states.last().unwrap();
            if !maximal_indices(cur).contains(&i) {
                return Err(Error::InvalidChain(format!(
                    "index {i} at step {} is not maximal for {cur}",
                    step + 1
                )));
            }
            let next = annihilate(cur, i);
            states.push(next);
        }
        let chain = Self {
            states,
            indices: indices.to_vec(),
        };
        chain.validate()?;
        Ok(chain)
    }

    pub fn start(&self) -> &FrequencySeq {
        &self.states[0]
    }

    /// Step values `|f^{r-1}| − |f^r|`, in chain order.
    pub fn valuation_sequence(&self) -> Vec<usize> {
        self.states.windows(2).map(|w| w[0].size() - w[1].size()).collect()
    }

    /// The valuation as a partition.
    pub fn valuation(&self) -> Partition {
        let mut v = self.valuation_sequence();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted_unchecked(v)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidChain(msg));
        if self.states.is_empty() {
            return bad("a chain has at least one state".into());
        }
        if !self.states.last().unwrap().is_empty() {
            return bad("the last state must be ε".into());
        }
        if self.indices.len() + 1 != self.states.len() {
            return bad(format!(
                "{} indices for {} states",
                self.indices.len(),
                self.states.len()
            ));
        }
        for (r, &i) in self.indices.iter().enumerate() {
            let prev = &self.states[r];
            if !maximal_indices(prev).contains(&i) {
                return bad(format!("index {i} is not maximal for {prev}"));
            }
            if annihilate(prev, i) != self.states[r + 1] {
                return bad(format!("ann_{i}({prev}) differs from the next state"));
            }
            if evaluate(prev, i) != prev.size() - self.states[r + 1].size() {
                return bad(format!("val_{i}({prev}) disagrees with the size drop"));
            }
        }
        Ok(())
    }

    /// `∂C`: apply `∂` to every state, dropping the last step when the
    /// penultimate state is `(1)`. Each index is replaced by an equivalent
    /// left admissible one, which stays maximal for the demoted state.
    pub fn del(&self) -> Result<OblakChain> {
        let k = self.indices.len();
        let one = FrequencySeq::from_vec(vec![1]);
        let keep = if k >= 1 && self.states[k - 1] == one { k - 1 } else { k };
        let mut states = Vec::with_capacity(keep + 1);
        let mut indices = Vec::with_capacity(keep);
        for r in 0..keep {
            let prev = &self.states[r];
            let classes = equivalent_indices(prev);
            let i = self.indices[r];
            let j = (0..=prev.max_index() + 1)
                .find(|&j| classes.equivalent(i, j) && is_left_admissible(prev, j))
                .ok_or_else(|| Error::InvalidChain(format!("no left admissible index equivalent to {i} in {prev}")))?;
            indices.push(j);
            states.push(apply_del(prev));
        }
        states.push(apply_del(&self.states[keep]));
        let out = OblakChain { states, indices };
        out.validate()?;
        Ok(out)
    }
}

pub fn del_chain(c: &OblakChain) -> Result<OblakChain> {
    c.del()
}

/// Every Oblak chain of `f`, branching over one representative (the
/// smallest) of each equivalence class of maximal indices. Sorted by index
/// sequence.
pub fn oblak_all_chains(f: &FrequencySeq, limit: usize) -> Result<Vec<OblakChain>> {
    let mut out = Vec::new();
    let mut visited = 0usize;
    let mut states = vec![f.clone()];
    let mut indices = Vec::new();
    walk(&mut states, &mut indices, &mut out, &mut visited, limit)?;
    out.sort_by(|a, b| a.indices.cmp(&b.indices));
    Ok(out)
}

fn walk(
    states: &mut Vec<FrequencySeq>,
    indices: &mut Vec<usize>,
    out: &mut Vec<OblakChain>,
    visited: &mut usize,
    limit: usize,
) -> Result<()> {
    *visited += 1;
    if *visited > limit {
        return Err(Error::BudgetExceeded {
            budget: limit as u128,
            needed: *visited as u128,
        });
    }
    let cur = states.last().unwrap().clone();
    if cur.is_empty() {
        out.push(OblakChain {
            states: states.clone(),
            indices: indices.clone(),
        });
        return Ok(());
    }
    let mut seen: Vec<FrequencySeq> = Vec::new();
    for i in maximal_indices(&cur) {
        let next = annihilate(&cur, i);
        if seen.contains(&next) {
            continue;
        }
        seen.push(next.clone());
        states.push(next);
        indices.push(i);
        walk(states, indices, out, visited, limit)?;
        states.pop();
        indices.pop();
    }
    Ok(())
}

/// Whether `val_i(∂f) = val_i(f) − 1` and `ann_i(∂f) = ∂(ann_i(f))`.
pub fn check_commuting_square(f: &FrequencySeq, i: usize) -> bool {
    let df = apply_del(f);
    evaluate(&df, i) + 1 == evaluate(f, i) && annihilate(&df, i) == apply_del(&annihilate(f, i))
}
