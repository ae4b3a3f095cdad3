use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Dense row-major matrix over `GF(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct MatrixGFp {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    field: PrimeField,
    entries: Vec<Vec<u64>>,
}

impl TryFrom<RawMatrix> for MatrixGFp {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        MatrixGFp::from_rows(raw.field, &raw.entries)
    }
}

impl From<MatrixGFp> for RawMatrix {
    fn from(m: MatrixGFp) -> Self {
        RawMatrix {
            field: m.field,
            entries: m.to_rows(),
        }
    }
}

impl MatrixGFp {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.modulus();
        }
        m
    }

    /// Entries are reduced mod `p`. Rows must have equal length.
    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&x| field.reduce(x)).collect();
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[u64]>::to_vec).collect()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = self.field.reduce(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &MatrixGFp) -> Result<MatrixGFp> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = MatrixGFp::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a == 0 {
                    continue;
                }
                let row = &other.data[t * other.cols..(t + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d = f.add(*d, f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for k in 0..cols {
                    m.swap(piv * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(m[r * cols + c]);
            for k in c..cols {
                m[r * cols + k] = f.mul(m[r * cols + k], inv);
            }
            for i in r + 1..rows {
                let t = m[i * cols + c];
                if t == 0 {
                    continue;
                }
                for k in c..cols {
                    let v = f.mul(t, m[r * cols + k]);
                    m[i * cols + k] = f.sub(m[i * cols + k], v);
                }
            }
            r += 1;
            if r == rows {
                break;
            }
        }
        r
    }

    /// Ranks of `M^0, M^1, ...` up to the first zero power, or `None` if
    /// `M^n ≠ 0`.
    pub fn power_ranks(&self) -> Result<Option<Vec<usize>>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut ranks = vec![n];
        if n == 0 {
            return Ok(Some(ranks));
        }
        let mut pow = self.clone();
        for _ in 0..n {
            let r = pow.rank();
            ranks.push(r);
            if r == 0 {
                return Ok(Some(ranks));
            }
            pow = pow.mul(self)?;
        }
        Ok(None)
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.power_ranks()?.is_some())
    }

    pub fn commutes_with(&self, other: &MatrixGFp) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }
}

impl fmt::Display for MatrixGFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Nilpotency of an `m × m` matrix over GF(2), `m ≤ 8`, packed one row per
/// byte with bit `c` holding column `c`.
pub(crate) fn gf2_nilpotent(rows: &[u8]) -> bool {
    let m = rows.len();
    debug_assert!(m <= 8);
    let mut a = [0u8; 8];
    a[..m].copy_from_slice(rows);
    let mut e = 1;
    while e < m {
        let mut sq = [0u8; 8];
        for i in 0..m {
            let mut acc = 0u8;
            let mut bits = a[i];
            while bits != 0 {
                let t = bits.trailing_zeros() as usize;
                acc ^= a[t];
                bits &= bits - 1;
            }
            sq[i] = acc;
        }
        a = sq;
        e *= 2;
    }
    a[..m].iter().all(|&r| r == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = gf(7);
        let m = MatrixGFp::from_rows(f, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(MatrixGFp::identity(f, 4).rank(), 4);
        assert_eq!(MatrixGFp::zeros(f, 3, 5).rank(), 0);
        let wide = MatrixGFp::from_rows(f, &[vec![0, 0, 1, 2], vec![0, 0, 2, 4]]).unwrap();
        assert_eq!(wide.rank(), 1);
        let m2 = MatrixGFp::from_rows(gf(2), &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m2.rank(), 1);
    }

    #[test]
    fn product_and_powers() {
        let f = gf(5);
        let j = MatrixGFp::from_rows(f, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
        assert_eq!(j.power_ranks().unwrap(), Some(vec![3, 2, 1, 0]));
        assert!(!MatrixGFp::identity(f, 2).is_nilpotent().unwrap());
        assert!(MatrixGFp::zeros(f, 0, 0).is_nilpotent().unwrap());
        let r = MatrixGFp::from_rows(f, &[vec![1, 2]]).unwrap();
        assert!(matches!(r.power_ranks(), Err(Error::NotSquare { .. })));
        assert!(r.mul(&r).is_err());
    }

    #[test]
    fn gf2_packed_agrees_with_generic() {
        let f = gf(2);
        for m in 1..=3usize {
            for bits in 0u32..(1 << (m * m)) {
                let rows: Vec<u8> = (0..m).map(|i| ((bits >> (i * m)) & ((1 << m) - 1)) as u8).collect();
                let dense: Vec<Vec<u64>> = rows
                    .iter()
                    .map(|&r| (0..m).map(|c| u64::from((r >> c) & 1)).collect())
                    .collect();
                let mat = MatrixGFp::from_rows(f, &dense).unwrap();
                assert_eq!(gf2_nilpotent(&rows), mat.is_nilpotent().unwrap(), "{rows:?}");
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let m = MatrixGFp::from_rows(gf(3), &[vec![1, 2], vec![0, 4]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<MatrixGFp>(&s).unwrap(), m);
    }
}
