//! Matrices commuting with a nilpotent Jordan matrix `B`, written in the
//! two-step block structure `A_{ij}^{kl}` with Toeplitz blocks.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::dense::{gf2_nilpotent, MatrixGFp};
use super::field::PrimeField;
use crate::burge::{apply_del, descent_map};
use crate::error::{Error, Result};
use crate::partition::{FrequencySeq, Partition};

/// Default number of assembled candidates allowed in [`exhaustive_max_type`].
pub const DEFAULT_SCAN_BUDGET: u128 = 1 << 24;

/// Cap on the raw enumeration of one diagonal-coefficient block `A_i^D`.
const BLOCK_ENUM_LIMIT: u128 = 1 << 28;

/// One Toeplitz parameter `a_h^{kl}` of block `A_{ij}^{kl}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub i: usize,
    pub k: usize,
    pub j: usize,
    pub l: usize,
    pub h: usize,
    /// Zero in every element of `𝒰_B`.
    pub forced_zero: bool,
}

impl Slot {
    /// `a_1` of a same-size block, i.e. entry `(k, l)` of `A_i^D`.
    pub fn is_diagonal_coefficient(&self) -> bool {
        self.i == self.j && self.h == 1
    }
}

/// Block layout and parameter slots of the commutator of `B = J_P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorShape {
    pub partition: Partition,
    pub freq: FrequencySeq,
    /// `(i, k, offset)` for each Jordan block, sizes descending.
    pub blocks: Vec<(usize, usize, usize)>,
    pub slots: Vec<Slot>,
    pub n: usize,
}

impl CommutatorShape {
    pub fn new(p: &Partition) -> Self {
        let freq = p.to_frequency();
        let mut blocks = Vec::new();
        let mut off = 0;
        for i in (1..=freq.max_index()).rev() {
            for k in 1..=freq.get(i) {
                blocks.push((i, k, off));
                off += i;
            }
        }
        let mut slots = Vec::new();
        for &(i, k, _) in &blocks {
            for &(j, l, _) in &blocks {
                for h in 1..=i.min(j) {
                    let forced_zero = i == j && h == 1 && k <= l;
                    slots.push(Slot {
                        i,
                        k,
                        j,
                        l,
                        h,
                        forced_zero,
                    });
                }
            }
        }
        Self {
            partition: p.clone(),
            freq,
            blocks,
            slots,
            n: off,
        }
    }

    pub fn offset(&self, i: usize, k: usize) -> usize {
        self.blocks
            .iter()
            .find(|&&(bi, bk, _)| bi == i && bk == k)
            .map(|&(_, _, o)| o)
            .expect("block exists")
    }

    /// Matrix positions carrying parameter `slot`.
    pub fn positions(&self, s: &Slot) -> Vec<(usize, usize)> {
        let ro = self.offset(s.i, s.k);
        let co = self.offset(s.j, s.l);
        let (shift, rows) = if s.i <= s.j { (s.j - s.i, s.i) } else { (0, s.j) };
        (0..rows)
            .filter_map(|r| {
                let c = r + shift + s.h - 1;
                (c < s.j).then_some((ro + r, co + c))
            })
            .collect()
    }

    /// Number of parameters of `𝒞_B`: `Σ f_i f_j min(i, j)`.
    pub fn parameter_count(&self) -> usize {
        self.slots.len()
    }

    /// Writes `value` into every position of `slot`.
    pub fn set(&self, a: &mut MatrixGFp, s: &Slot, value: u64) {
        for (r, c) in self.positions(s) {
            a.set(r, c, value);
        }
    }

    /// Assembles `Σ params[t]·E(slots[t])`.
    pub fn assemble(&self, field: PrimeField, params: &[u64]) -> MatrixGFp {
        let mut a = MatrixGFp::zeros(field, self.n, self.n);
        for (s, &v) in self.slots.iter().zip(params) {
            if v != 0 {
                self.set(&mut a, s, v);
            }
        }
        a
    }
}

/// Block-diagonal Jordan matrix, superdiagonal ones, blocks by size descending.
pub fn jordan_matrix(p: &Partition, field: PrimeField) -> MatrixGFp {
    let n = p.size();
    let mut b = MatrixGFp::zeros(field, n, n);
    let mut off = 0;
    for &size in p.parts() {
        for r in 0..size - 1 {
            b.set(off + r, off + r + 1, 1);
        }
        off += size;
    }
    b
}

/// Jordan type of a nilpotent matrix from its rank sequence.
pub fn jordan_type(m: &MatrixGFp) -> Result<Partition> {
    let ranks = m.power_ranks()?.ok_or(Error::NotNilpotent)?;
    Ok(type_from_ranks(&ranks))
}

/// `f_k = r_{k−1} − 2r_k + r_{k+1}`, with the sequence padded by zeros.
fn type_from_ranks(ranks: &[usize]) -> Partition {
    let r = |k: usize| ranks.get(k).copied().unwrap_or(0);
    let mut parts = Vec::new();
    for k in (1..ranks.len()).rev() {
        let count = r(k - 1) + r(k + 1) - 2 * r(k);
        parts.extend(std::iter::repeat_n(k, count));
    }
    Partition::from_sorted_unchecked(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PivotKind {
    /// `A_{ii}^{k,k−1}`
    SubDiagonal,
    /// `A_{z,z−1}^{1l}`
    NextSize,
    /// `A_{zz}^{1 f_z}`
    Corner,
    /// `A_{ij}^{kl}` with `j > i`
    Larger,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pivot {
    pub kind: PivotKind,
    pub i: usize,
    pub k: usize,
    pub j: usize,
    pub l: usize,
}

impl Pivot {
    /// The Toeplitz parameter carrying the block's generic rank inside `𝒰_B`.
    pub fn rank_parameter(&self) -> usize {
        match self.kind {
            PivotKind::Corner => 2,
            _ => 1,
        }
    }
}

/// Pivot blocks of a generic element of `𝒰_B` for `f` whose largest support
/// index is `z`.
fn pivots_at(f: &FrequencySeq, z: usize) -> Vec<Pivot> {
    let mut out = Vec::new();
    let support: Vec<usize> = f.support().into_iter().filter(|&i| i <= z).collect();
    for &i in &support {
        for k in 2..=f.get(i) {
            out.push(Pivot {
                kind: PivotKind::SubDiagonal,
                i,
                k,
                j: i,
                l: k - 1,
            });
        }
    }
    if z >= 2 && f.get(z - 1) != 0 {
        for l in 1..=f.get(z - 1) {
            out.push(Pivot {
                kind: PivotKind::NextSize,
                i: z,
                k: 1,
                j: z - 1,
                l,
            });
        }
    }
    out.push(Pivot {
        kind: PivotKind::Corner,
        i: z,
        k: 1,
        j: z,
        l: f.get(z),
    });
    for &i in &support {
        for k in 1..=f.get(i) {
            for &j in support.iter().filter(|&&j| j > i) {
                for l in 1..=f.get(j) {
                    out.push(Pivot {
                        kind: PivotKind::Larger,
                        i,
                        k,
                        j,
                        l,
                    });
                }
            }
        }
    }
    out
}

/// The pivots of a generic element of `𝒰_B`, `B` of type `P`.
pub fn pivots(p: &Partition) -> Vec<Pivot> {
    if p.is_empty() {
        return Vec::new();
    }
    let f = p.to_frequency();
    pivots_at(&f, f.max_index())
}

/// Pivots used by [`witness_matrix`]: the pivots of every truncation of `f`
/// at a level `z ∈ R(f)`.
pub fn witness_pivots(p: &Partition) -> Vec<Pivot> {
    let f = p.to_frequency();
    let set: BTreeSet<Pivot> = f.right_set().into_iter().flat_map(|z| pivots_at(&f, z)).collect();
    set.into_iter().collect()
}

/// A 0/1 element of `𝒰_B` with `B|_{im A}` of type `∂P`: each witness pivot
/// carries a one on the diagonal of its generic rank.
pub fn witness_matrix(p: &Partition, field: PrimeField) -> MatrixGFp {
    let shape = CommutatorShape::new(p);
    let mut a = MatrixGFp::zeros(field, shape.n, shape.n);
    for pv in witness_pivots(p) {
        let h = pv.rank_parameter();
        if h > pv.i.min(pv.j) {
            continue;
        }
        let slot = Slot {
            i: pv.i,
            k: pv.k,
            j: pv.j,
            l: pv.l,
            h,
            forced_zero: false,
        };
        shape.set(&mut a, &slot, 1);
    }
    a
}

/// Uniform element of `𝒰_B`: every slot not forced to zero is drawn from `GF(p)`.
pub fn random_u_element<R: Rng + ?Sized>(p: &Partition, field: PrimeField, rng: &mut R) -> MatrixGFp {
    let shape = CommutatorShape::new(p);
    let params: Vec<u64> = shape
        .slots
        .iter()
        .map(|s| {
            if s.forced_zero {
                0
            } else {
                rng.gen_range(0..field.modulus())
            }
        })
        .collect();
    shape.assemble(field, &params)
}

/// Uniform element of the full commutator `𝒞_B`.
pub fn random_commutator<R: Rng + ?Sized>(p: &Partition, field: PrimeField, rng: &mut R) -> MatrixGFp {
    let shape = CommutatorShape::new(p);
    let params: Vec<u64> = shape.slots.iter().map(|_| rng.gen_range(0..field.modulus())).collect();
    shape.assemble(field, &params)
}

/// The diagonal-coefficient block `A_i^D = [a_1^{kl}]` read off a commutator element.
pub fn diagonal_coefficients(shape: &CommutatorShape, a: &MatrixGFp, i: usize) -> MatrixGFp {
    let m = shape.freq.get(i);
    let mut d = MatrixGFp::zeros(a.field(), m, m);
    for k in 1..=m {
        for l in 1..=m {
            d.set(k - 1, l - 1, a.get(shape.offset(i, k), shape.offset(i, l)));
        }
    }
    d
}

/// Jordan type of `B` restricted to `W = im A`, from `d_k = rank(B^k A)`.
pub fn restriction_type(b: &MatrixGFp, a: &MatrixGFp) -> Result<Partition> {
    if !b.is_square() {
        return Err(Error::NotSquare {
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "A has {} rows, B is {}x{}",
            a.rows(),
            b.rows(),
            b.cols()
        )));
    }
    if a.is_square() && !a.commutes_with(b)? {
        return Err(Error::NotCommuting);
    }
    let mut dims = vec![a.rank()];
    let mut w = a.clone();
    while *dims.last().unwrap() > 0 {
        if dims.len() > b.rows() + 1 {
            return Err(Error::NotNilpotent);
        }
        w = b.mul(&w)?;
        dims.push(w.rank());
    }
    Ok(type_from_ranks(&dims))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionReport {
    pub partition: Partition,
    pub field: PrimeField,
    pub expected: Partition,
    pub observed: Partition,
    pub random: Vec<Partition>,
    pub misses: usize,
    pub tolerance: usize,
    pub passed: bool,
}

/// Checks the witness and `trials` random elements of `𝒰_B` against `∂P`.
pub fn verify_restriction(
    p: &Partition,
    field: PrimeField,
    trials: usize,
    seed: u64,
    tolerance: usize,
) -> Result<RestrictionReport> {
    let expected = apply_del(&p.to_frequency()).to_partition();
    let b = jordan_matrix(p, field);
    let w = witness_matrix(p, field);
    if !w.is_nilpotent()? {
        return Err(Error::NotNilpotent);
    }
    let observed = restriction_type(&b, &w)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random = Vec::with_capacity(trials);
    for _ in 0..trials {
        let a = random_u_element(p, field, &mut rng);
        random.push(restriction_type(&b, &a)?);
    }
    let misses = random.iter().filter(|t| **t != expected).count();
    let passed = observed == expected && misses <= tolerance;
    Ok(RestrictionReport {
        partition: p.clone(),
        field,
        expected,
        observed,
        random,
        misses,
        tolerance,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxTypeReport {
    pub partition: Partition,
    pub field: PrimeField,
    /// Assembled candidates: elements of `𝒞_B` whose `A_i^D` are nilpotent.
    pub candidates: u128,
    /// Candidates with `A^n = 0`; equals `candidates` since nilpotent `A_i^D` force nilpotent `A`.
    pub nilpotent: u128,
    pub types: Vec<Partition>,
    pub maximum: Option<Partition>,
    pub expected: Partition,
    pub passed: bool,
}

/// Every nilpotent `m × m` matrix over `field`, row-major.
fn nilpotent_blocks(m: usize, field: PrimeField) -> Result<Vec<Vec<u64>>> {
    let p = field.modulus();
    let total = u128::from(p).checked_pow((m * m) as u32).unwrap_or(u128::MAX);
    if total > BLOCK_ENUM_LIMIT {
        return Err(Error::BudgetExceeded {
            budget: BLOCK_ENUM_LIMIT,
            needed: total,
        });
    }
    if p == 2 && m <= 5 {
        let mask = (1u32 << m) - 1;
        return Ok((0u32..1 << (m * m))
            .filter_map(|bits| {
                let rows: Vec<u8> = (0..m).map(|r| ((bits >> (r * m)) & mask) as u8).collect();
                gf2_nilpotent(&rows).then(|| (0..m * m).map(|t| u64::from((bits >> t) & 1)).collect())
            })
            .collect());
    }
    let mut out = Vec::new();
    for idx in 0..total as u64 {
        let entries = digits(idx, p, m * m);
        let rows: Vec<Vec<u64>> = entries.chunks(m.max(1)).map(<[u64]>::to_vec).collect();
        if MatrixGFp::from_rows(field, &rows)?.is_nilpotent()? {
            out.push(entries);
        }
    }
    Ok(out)
}

fn digits(mut x: u64, base: u64, len: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(len);
    for _ in 0..len {
        d.push(x % base);
        x /= base;
    }
    d
}

/// Jordan types of all of `𝒩_B` over a small field, found by enumerating
/// `𝒞_B` with the `A_i^D` restricted to nilpotent blocks; every candidate is
/// still checked for `A^n = 0`. `budget` bounds the number of candidates.
pub fn exhaustive_max_type(p: &Partition, field: PrimeField, budget: u128) -> Result<MaxTypeReport> {
    let shape = CommutatorShape::new(p);
    let q = u128::from(field.modulus());
    let support = shape.freq.support();

    // slot indices of A_i^D, ordered (k, l) row-major, per support index
    let diag: Vec<Vec<usize>> = support
        .iter()
        .map(|&i| {
            let m = shape.freq.get(i);
            let mut idx = vec![0; m * m];
            for (t, s) in shape.slots.iter().enumerate() {
                if s.i == i && s.is_diagonal_coefficient() {
                    idx[(s.k - 1) * m + (s.l - 1)] = t;
                }
            }
            idx
        })
        .collect();
    let free: Vec<usize> = (0..shape.slots.len())
        .filter(|&t| !shape.slots[t].is_diagonal_coefficient())
        .collect();

    let needed_free = q.checked_pow(free.len() as u32).unwrap_or(u128::MAX);
    let mut needed = needed_free;
    if needed > budget {
        return Err(Error::BudgetExceeded { budget, needed });
    }
    let mut choices = Vec::with_capacity(support.len());
    for &i in &support {
        let blocks = nilpotent_blocks(shape.freq.get(i), field)?;
        needed = needed.saturating_mul(blocks.len() as u128);
        if needed > budget {
            return Err(Error::BudgetExceeded { budget, needed });
        }
        choices.push(blocks);
    }

    let total = needed as u64;
    let b = jordan_matrix(p, field);
    let (types, nilpotent) = (0..total)
        .into_par_iter()
        .fold(
            || (BTreeSet::new(), 0u128),
            |(mut types, mut nil), mut idx| {
                let mut params = vec![0u64; shape.slots.len()];
                for (c, slots) in choices.iter().zip(&diag) {
                    let pick = &c[(idx % c.len() as u64) as usize];
                    idx /= c.len() as u64;
                    for (&t, &v) in slots.iter().zip(pick) {
                        params[t] = v;
                    }
                }
                for &t in &free {
                    params[t] = idx % field.modulus();
                    idx /= field.modulus();
                }
                let a = shape.assemble(field, &params);
                debug_assert!(a.commutes_with(&b).unwrap());
                if let Some(ranks) = a.power_ranks().expect("square") {
                    nil += 1;
                    types.insert(type_from_ranks(&ranks));
                }
                (types, nil)
            },
        )
        .reduce(
            || (BTreeSet::new(), 0u128),
            |(mut t1, n1), (t2, n2)| {
                t1.extend(t2);
                (t1, n1 + n2)
            },
        );

    let types: Vec<Partition> = types.into_iter().collect();
    let maximum = dominance_maximum(&types);
    let expected = descent_map(p);
    let passed = maximum.as_ref() == Some(&expected);
    Ok(MaxTypeReport {
        partition: p.clone(),
        field,
        candidates: needed,
        nilpotent,
        types,
        maximum,
        expected,
        passed,
    })
}

/// The element dominating all others, if one exists.
pub fn dominance_maximum(types: &[Partition]) -> Option<Partition> {
    types
        .iter()
        .find(|t| types.iter().all(|u| t.dominates(u).unwrap_or(false)))
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burge::apply_del;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn jordan_examples() {
        let f = gf(10007);
        let j3 = jordan_matrix(&p("3"), f);
        assert_eq!(j3.to_rows(), vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert!(jordan_matrix(&p("1,1"), f).is_zero());
        assert_eq!(jordan_type(&MatrixGFp::zeros(f, 4, 4)).unwrap(), p("[1^4]"));
        assert_eq!(jordan_type(&j3).unwrap(), p("3"));
        assert_eq!(jordan_type(&MatrixGFp::identity(f, 2)), Err(Error::NotNilpotent));
        let b = jordan_matrix(&p("4,4,3,2,2"), f);
        assert_eq!(b.rows(), 15);
        let ones: Vec<(usize, usize)> = (0..15)
            .flat_map(|r| (0..15).map(move |c| (r, c)))
            .filter(|&(r, c)| b.get(r, c) == 1)
            .collect();
        let want: Vec<(usize, usize)> = [0, 1, 2, 4, 5, 6, 8, 9, 11, 13].iter().map(|&r| (r, r + 1)).collect();
        assert_eq!(ones, want);
    }

    #[test]
    fn shape_counts() {
        let s = CommutatorShape::new(&p("4,4,3,2,2"));
        // Σ f_i f_j min(i,j) with f = (0,2,1,2)
        assert_eq!(s.parameter_count(), 16 + 12 + 16 + 3 + 8 + 8);
        assert_eq!(s.n, 15);
        assert_eq!(s.offset(3, 1), 8);
        assert_eq!(s.offset(2, 2), 13);
    }

    #[test]
    fn random_elements_match_the_generic_pattern() {
        // zero/nonzero mask of a generic element of 𝒰_B for P = [4^2,3,2^2]
        let mask = [
            "0xxx0xxxxxxxxxx",
            "00xx00xx0xx0x0x",
            "000x000x00x0000",
            "000000000000000",
            "xxxx0xxxxxxxxxx",
            "0xxx00xx0xx0x0x",
            "00xx000x00x0000",
            "000x00000000000",
            "0xxx0xxx0xxxxxx",
            "00xx00xx00x0x0x",
            "000x000x0000000",
            "00xx00xx0xx0x0x",
            "000x000x00x0000",
            "00xx00xx0xxxx0x",
            "000x000x00x0x00",
        ];
        let f = gf(10007);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_u_element(&p("4,4,3,2,2"), f, &mut rng);
        for (r, row) in mask.iter().enumerate() {
            for (c, ch) in row.chars().enumerate() {
                assert_eq!(a.get(r, c) != 0, ch == 'x', "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn generated_elements_commute_and_are_nilpotent() {
        let f = gf(10007);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for s in ["4,4,3,2,2", "3,1", "2,2,1,1", "5", "1,1,1"] {
            let q = p(s);
            let b = jordan_matrix(&q, f);
            for a in [
                witness_matrix(&q, f),
                random_u_element(&q, f, &mut rng),
                random_commutator(&q, f, &mut rng),
            ] {
                assert!(a.commutes_with(&b).unwrap(), "{s}");
            }
            assert!(witness_matrix(&q, f).is_nilpotent().unwrap());
            assert!(random_u_element(&q, f, &mut rng).is_nilpotent().unwrap());
        }
    }

    #[test]
    fn pivot_examples() {
        let pv = pivots(&p("4,4,3,2,2"));
        let has = |i, k, j, l| pv.iter().any(|x| (x.i, x.k, x.j, x.l) == (i, k, j, l));
        assert!(has(4, 2, 4, 1));
        assert!(has(4, 1, 3, 1));
        assert!(has(3, 1, 4, 2));
        let single = pivots(&p("5"));
        assert_eq!(
            single,
            vec![Pivot {
                kind: PivotKind::Corner,
                i: 5,
                k: 1,
                j: 5,
                l: 1
            }]
        );
        let two = pivots(&p("2,2"));
        assert!(two.contains(&Pivot {
            kind: PivotKind::SubDiagonal,
            i: 2,
            k: 2,
            j: 2,
            l: 1
        }));
        assert!(pivots(&Partition::empty()).is_empty());
    }

    #[test]
    fn restriction_examples() {
        let f = gf(10007);
        let q = p("4,4,3,2,2");
        let b = jordan_matrix(&q, f);
        let expected = FrequencySeq::from_vec(vec![1, 1, 2, 1]).to_partition();
        assert_eq!(expected, p("4,3,3,2,1"));
        assert_eq!(restriction_type(&b, &witness_matrix(&q, f)).unwrap(), expected);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert_eq!(
            restriction_type(&b, &random_u_element(&q, f, &mut rng)).unwrap(),
            expected
        );
        assert_eq!(restriction_type(&b, &MatrixGFp::identity(f, 15)).unwrap(), q);
        assert_eq!(
            restriction_type(&b, &MatrixGFp::zeros(f, 15, 15)).unwrap(),
            Partition::empty()
        );
        let mut nc = MatrixGFp::zeros(f, 15, 15);
        nc.set(3, 0, 1);
        assert_eq!(restriction_type(&b, &nc), Err(Error::NotCommuting));

        assert_eq!(
            restriction_type(&jordan_matrix(&p("2,1"), f), &witness_matrix(&p("2,1"), f)).unwrap(),
            p("1,1")
        );
        for n in 1..=6 {
            let q = Partition::new(vec![n]).unwrap();
            let r = restriction_type(&jordan_matrix(&q, f), &witness_matrix(&q, f)).unwrap();
            let want = if n == 1 {
                Partition::empty()
            } else {
                Partition::new(vec![n - 1]).unwrap()
            };
            assert_eq!(r, want);
        }
    }

    #[test]
    fn verify_report() {
        let r = verify_restriction(&p("4,4,3,2,2"), gf(10007), 5, 0, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.expected, apply_del(&p("4,4,3,2,2").to_frequency()).to_partition());
        assert_eq!(r.random.len(), 5);
    }

    #[test]
    fn diagonal_blocks_decide_nilpotency() {
        let f = gf(3);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for s in ["2,2,1", "3,3,1,1", "2,1,1"] {
            let q = p(s);
            let shape = CommutatorShape::new(&q);
            let mut seen = (0, 0);
            for _ in 0..300 {
                let a = random_commutator(&q, f, &mut rng);
                let blocks_nil = shape
                    .freq
                    .support()
                    .into_iter()
                    .all(|i| diagonal_coefficients(&shape, &a, i).is_nilpotent().unwrap());
                let nil = a.is_nilpotent().unwrap();
                assert_eq!(nil, blocks_nil, "{s}\n{a}");
                if nil {
                    seen.0 += 1;
                } else {
                    seen.1 += 1;
                }
            }
            assert!(seen.0 > 0 && seen.1 > 0, "{s}: {seen:?}");
        }
    }

    #[test]
    fn small_scans() {
        let two = gf(2);
        let r = exhaustive_max_type(&p("2,1"), two, DEFAULT_SCAN_BUDGET).unwrap();
        assert_eq!(r.maximum, Some(p("3")));
        assert!(r.passed);
        let r = exhaustive_max_type(&p("1,1"), two, DEFAULT_SCAN_BUDGET).unwrap();
        assert_eq!(r.maximum, Some(p("2")));
        assert_eq!(r.candidates, 4);
        for n in 1..=4 {
            let q = Partition::new(vec![n]).unwrap();
            let r = exhaustive_max_type(&q, two, DEFAULT_SCAN_BUDGET).unwrap();
            assert_eq!(r.maximum, Some(q));
        }
        assert!(matches!(
            exhaustive_max_type(&p("[1^4]"), two, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
