//! Foata images of fiber codes, lattice paths, and diagonal hooks.

use crate::error::Result;
use crate::fiber::{delta, BoxCoordinates};
use crate::partition::Partition;
use crate::word::{Letter, Word};

/// A word read right to left as a lattice path, `a` east and `b` north.
pub type LatticeWord = Word;

/// `b a^{δ_k−i_k} ... b a^{δ_1−i_1} b^{i_1−1} a ... b^{i_k−1} a`, and `a` for ε.
pub fn foata_fiber(q: &Partition, c: &BoxCoordinates) -> Result<LatticeWord> {
    let d = delta(q)?;
    c.check(&d)?;
    let mut w = Word::default();
    if d.is_empty() {
        w.push_run(Letter::A, 1);
        return Ok(w);
    }
    for (&dj, &ij) in d.0.iter().zip(&c.0).rev() {
        w.push_run(Letter::B, 1);
        w.push_run(Letter::A, dj - ij);
    }
    for &ij in &c.0 {
        w.push_run(Letter::B, ij - 1);
        w.push_run(Letter::A, 1);
    }
    Ok(w)
}

/// Traces the path right to left; each north step closes a row whose length
/// is the number of east steps taken so far. Empty rows are dropped.
pub fn path_to_partition(w: &LatticeWord) -> Partition {
    let mut east = 0;
    let mut rows = Vec::new();
    for &l in w.letters().iter().rev() {
        match l {
            Letter::A => east += 1,
            Letter::B if east > 0 => rows.push(east),
            Letter::B => {}
        }
    }
    rows.reverse();
    Partition::from_sorted_unchecked(rows)
}

/// Side of the Durfee square.
pub fn durfee(p: &Partition) -> usize {
    p.parts().iter().enumerate().take_while(|&(i, &x)| x > i).count()
}

/// Lengths of the hooks on the main diagonal.
pub fn diagonal_hooks(p: &Partition) -> Partition {
    let conj = p.conjugate();
    let hooks = (1..=durfee(p)).map(|i| p.part(i) + conj.part(i) + 1 - 2 * i).collect();
    Partition::from_sorted_unchecked(hooks)
}
