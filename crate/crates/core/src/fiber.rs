//! Fibers of the descent map over a super-distinct partition, indexed by
//! coordinates in a box.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::burge::{decode, descent_map, encode_partition, BurgeWord};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::word::{Letter, Word};

/// `(δ_1, ..., δ_k)` with `δ_1 = q_k` and `δ_i = q_{k−i+1} − q_{k−i+2} − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaVector(pub Vec<usize>);

impl DeltaVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of points in the box.
    pub fn volume(&self) -> usize {
        self.0.iter().product()
    }

    /// The super-distinct partition with this delta vector.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.0.len());
        let mut q = 0;
        for (i, &d) in self.0.iter().enumerate() {
            q += d + usize::from(i > 0);
            parts.push(q);
        }
        parts.reverse();
        Partition::from_sorted_unchecked(parts)
    }
}

/// A point `(i_1, ..., i_k)` of the box `[1, δ_1] × ... × [1, δ_k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoxCoordinates(pub Vec<usize>);

impl BoxCoordinates {
    pub fn ones(k: usize) -> Self {
        Self(vec![1; k])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn check(&self, d: &DeltaVector) -> Result<()> {
        let ok = self.0.len() == d.0.len() && self.0.iter().zip(&d.0).all(|(&i, &dj)| (1..=dj).contains(&i));
        if ok {
            Ok(())
        } else {
            Err(Error::CoordinatesOutOfRange {
                coords: self.0.clone(),
                deltas: d.0.clone(),
            })
        }
    }
}

impl fmt::Display for BoxCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, i) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

pub fn delta(q: &Partition) -> Result<DeltaVector> {
    if !q.is_super_distinct() {
        return Err(Error::NotSuperDistinct(q.to_string()));
    }
    let p = q.parts();
    let k = p.len();
    let mut d = Vec::with_capacity(k);
    if k > 0 {
        d.push(p[k - 1]);
    }
    for i in 2..=k {
        d.push(p[k - i] - p[k - i + 1] - 1);
    }
    Ok(DeltaVector(d))
}

/// `a^{δ_1−i_1} b^{i_1} a^{δ_2−i_2+1} b^{i_2} ... a^{δ_k−i_k+1} b^{i_k} a`.
pub fn fiber_code(q: &Partition, c: &BoxCoordinates) -> Result<BurgeWord> {
    let d = delta(q)?;
    c.check(&d)?;
    Ok(code_for(&d, c))
}

fn code_for(d: &DeltaVector, c: &BoxCoordinates) -> BurgeWord {
    let mut w = Word::default();
    for (j, (&dj, &ij)) in d.0.iter().zip(&c.0).enumerate() {
        w.push_run(Letter::A, dj - ij + usize::from(j > 0));
        w.push_run(Letter::B, ij);
    }
    w.push_run(Letter::A, 1);
    BurgeWord::new(w).expect("box codes end in a single a")
}

/// One element of a fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberEntry {
    pub coords: BoxCoordinates,
    pub code: BurgeWord,
    pub partition: Partition,
    pub parts: usize,
}

/// Every partition with descent map `q`, sorted by coordinates.
pub fn fiber(q: &Partition) -> Result<Vec<FiberEntry>> {
    let d = delta(q)?;
    let mut out = Vec::with_capacity(d.volume());
    let mut c = BoxCoordinates::ones(d.len());
    loop {
        let code = code_for(&d, &c);
        let partition = decode(&code).to_partition();
        out.push(FiberEntry {
            parts: partition.length(),
            coords: c.clone(),
            code,
            partition,
        });
        // odometer, last coordinate fastest, so the output is lexicographic
        let mut j = d.len();
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            if c.0[j] < d.0[j] {
                c.0[j] += 1;
                break;
            }
            c.0[j] = 1;
        }
    }
}

/// `(𝔇(P), c)` with `fiber_code(𝔇(P), c) = Ω(P)`.
pub fn coordinates_of(p: &Partition) -> (Partition, BoxCoordinates) {
    let q = descent_map(p);
    let c = BoxCoordinates(encode_partition(p).as_word().b_runs());
    (q, c)
}

/// The element of the fiber over `q` with the most parts.
pub fn max_parts_partition(q: &Partition) -> Result<Partition> {
    delta(q)?;
    let p = q.parts();
    let r = p.len();
    if r == 0 {
        return Ok(Partition::empty());
    }
    let mut parts: Vec<usize> = p[1..].iter().map(|x| x + 2).collect();
    parts.extend(std::iter::repeat_n(1, p[0] + 2 - 2 * r));
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Reflects `i_j ↦ δ_j − i_j + 1` for each 0-based position `j` in `positions`.
pub fn symmetry_map(q: &Partition, c: &BoxCoordinates, positions: &[usize]) -> Result<BoxCoordinates> {
    let d = delta(q)?;
    c.check(&d)?;
    let mut out = c.clone();
    for &j in positions {
        if j >= d.len() {
            return Err(Error::Dimension(format!(
                "position {j} outside a box of dimension {}",
                d.len()
            )));
        }
        out.0[j] = d.0[j] - c.0[j] + 1;
    }
    Ok(out)
}

/// Pairs the fiber over `q` with the fiber over `r` by sending `c` to
/// `c'` with `c'_j = c_{σ(j)}` (σ 0-based). Requires `δ(r)_j = δ(q)_{σ(j)}`.
pub fn fiber_bijection(q: &Partition, r: &Partition, sigma: &[usize]) -> Result<Vec<(FiberEntry, FiberEntry)>> {
    let dq = delta(q)?;
    let dr = delta(r)?;
    let mut seen = vec![false; dq.len()];
    let is_perm = sigma.len() == dq.len()
        && sigma
            .iter()
            .all(|&s| s < seen.len() && !std::mem::replace(&mut seen[s], true));
    if !is_perm || dr.len() != dq.len() || (0..dq.len()).any(|j| dr.0[j] != dq.0[sigma[j]]) {
        return Err(Error::DeltaMismatch { from: dq.0, to: dr.0 });
    }
    let target = fiber(r)?;
    let pairs = fiber(q)?
        .into_iter()
        .map(|e| {
            let image = BoxCoordinates(sigma.iter().map(|&s| e.coords.0[s]).collect());
            let t = target
                .iter()
                .find(|t| t.coords == image)
                .expect("image lies in the box")
                .clone();
            (e, t)
        })
        .collect();
    Ok(pairs)
}
