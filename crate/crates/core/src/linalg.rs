//! Dense linear algebra over `F_p`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Checks that `p` is a prime below `2^31`, so products fit in `u64`.
pub(crate) fn check_field(p: u32) -> Result<()> {
    if !(2..1 << 31).contains(&p) {
        return Err(Error::NotPrime(p));
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return Err(Error::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Row-major dense matrix with entries in `[0, p)`.
pub(crate) struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub(crate) fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: alloc::vec![0; rows * cols] }
    }

    /// Sets entry `(r, c)` to `±1`.
    pub(crate) fn set_sign(&mut self, r: usize, c: usize, negative: bool, p: u32) {
        self.data[r * self.cols + c] = if negative { p - 1 } else { 1 % p };
    }

    #[cfg(test)]
    pub(crate) fn from_rows(rows: &[&[u32]], p: u32) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| x % p)).collect();
        Matrix { rows: rows.len(), cols, data }
    }

    /// Rank over `F_p` by Gaussian elimination; consumes the matrix.
    pub(crate) fn rank(mut self, p: u32) -> usize {
        let p64 = u64::from(p);
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pivot != rank {
                for k in 0..cols {
                    self.data.swap(pivot * cols + k, rank * cols + k);
                }
            }
            let inv = pow_mod(u64::from(self.data[rank * cols + c]), p64 - 2, p64);
            for r in rank + 1..rows {
                let lead = u64::from(self.data[r * cols + c]);
                if lead == 0 {
                    continue;
                }
                let factor = lead * inv % p64;
                for k in c..cols {
                    let top = u64::from(self.data[rank * cols + k]);
                    if top == 0 {
                        continue;
                    }
                    let cur = u64::from(self.data[r * cols + k]);
                    self.data[r * cols + k] = ((cur + p64 - factor * top % p64) % p64) as u32;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Homology dimensions of a finite complex
/// `0 <- C_0 <- C_1 <- ... <- C_k <- 0` given `dims[i] = dim C_i` and
/// `ranks[i] = rank(d_i : C_i -> C_{i-1})` (with `ranks[0] = 0`).
pub(crate) fn homology_dims(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..dims.len())
        .map(|i| {
            let out = ranks[i];
            let inc = ranks.get(i + 1).copied().unwrap_or(0);
            dims[i] - out - inc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_check() {
        assert!(check_field(2).is_ok());
        assert!(check_field(32003).is_ok());
        assert_eq!(check_field(32004), Err(Error::NotPrime(32004)));
        assert!(check_field(1).is_err());
        assert!(check_field(0).is_err());
    }

    #[test]
    fn rank_small() {
        let m = Matrix::from_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]], 7);
        assert_eq!(m.rank(7), 2);
        // det = 2 vanishes in characteristic 2 only
        let m = |p| Matrix::from_rows(&[&[1, 1], &[1, 3]], p);
        assert_eq!(m(2).rank(2), 1);
        assert_eq!(m(3).rank(3), 2);
        assert_eq!(Matrix::zeros(0, 4).rank(5), 0);
    }

    /// Rank over F_2 by brute force: `2^rank` distinct vectors in the row span.
    fn brute_rank_f2(rows: &[u32], cols: usize) -> usize {
        let mut span = alloc::collections::BTreeSet::new();
        for mask in 0u32..(1 << rows.len()) {
            let mut v = 0u32;
            for (k, r) in rows.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    v ^= r;
                }
            }
            span.insert(v & ((1 << cols) - 1));
        }
        span.len().trailing_zeros() as usize
    }

    #[test]
    fn rank_matches_brute_force_over_f2() {
        let mut seed = 0x2545F4914F6CDD1Du64;
        for _ in 0..300 {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            let nrows = (seed % 6) as usize + 1;
            let ncols = (seed >> 8) as usize % 6 + 1;
            let rows: Vec<u32> = (0..nrows)
                .map(|k| ((seed >> (16 + 5 * k)) as u32) & ((1 << ncols) - 1))
                .collect();
            let dense: Vec<Vec<u32>> =
                rows.iter().map(|r| (0..ncols).map(|c| r >> c & 1).collect()).collect();
            let refs: Vec<&[u32]> = dense.iter().map(|r| r.as_slice()).collect();
            assert_eq!(Matrix::from_rows(&refs, 2).rank(2), brute_rank_f2(&rows, ncols));
        }
    }
}
