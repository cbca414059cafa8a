use std::fmt;

use crate::{Error, Result};

/// A matrix over the natural numbers with checked arithmetic.
///
/// Every operation that could exceed `u64` reports [`Error::Overflow`]
/// instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl NatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![1; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// The 0/1 matrix of a total function `f: {0..n} → {0..target}`, one 1 per
    /// column: entry `(f(j), j)` is 1.
    pub fn from_function(f: &[usize], target: usize) -> Result<Self> {
        let mut m = Self::zeros(target, f.len());
        for (j, &fj) in f.iter().enumerate() {
            if fj >= target {
                return Err(Error::OutOfRange {
                    what: "function image",
                    index: fj,
                    size: target,
                });
            }
            m.data[fj * f.len() + j] = 1;
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn matmul(&self, other: &NatMatrix) -> Result<NatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a
                        .checked_mul(other.get(l, j))
                        .ok_or(Error::Overflow("matrix product"))?;
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = slot.checked_add(term).ok_or(Error::Overflow("matrix product"))?;
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, block `(i, j)` equal to `self[i][j] · other`.
    pub fn kron(&self, other: &NatMatrix) -> Result<NatMatrix> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![0u64; rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        data[(i * other.rows + k) * cols + j * other.cols + l] = a
                            .checked_mul(other.get(k, l))
                            .ok_or(Error::Overflow("Kronecker product"))?;
                    }
                }
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub fn transpose(&self) -> NatMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn checked_add(&self, other: &NatMatrix) -> Result<NatMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("matrix sum")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn trace(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        (0..self.rows).try_fold(0u64, |acc, i| {
            acc.checked_add(self.get(i, i)).ok_or(Error::Overflow("trace"))
        })
    }

    pub fn row_sums(&self) -> Result<Vec<u64>> {
        (0..self.rows)
            .map(|i| checked_sum(self.row(i).iter().copied(), "row sum"))
            .collect()
    }

    pub fn col_sums(&self) -> Result<Vec<u64>> {
        (0..self.cols)
            .map(|j| checked_sum((0..self.rows).map(|i| self.get(i, j)), "column sum"))
            .collect()
    }

    pub fn total(&self) -> Result<u64> {
        checked_sum(self.data.iter().copied(), "entry sum")
    }

    pub fn map(&self, f: impl Fn(u64) -> u64) -> NatMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// Same entries with columns reordered so that `out[:, j] = self[:, perm[j]]`.
    pub fn permute_columns(&self, perm: &[usize]) -> NatMatrix {
        let mut out = Self::zeros(self.rows, perm.len());
        for (j, &src) in perm.iter().enumerate() {
            for i in 0..self.rows {
                out.data[i * perm.len() + j] = self.get(i, src);
            }
        }
        out
    }

    /// Same entries with rows reordered so that `out[i, :] = self[perm[i], :]`.
    pub fn permute_rows(&self, perm: &[usize]) -> NatMatrix {
        let mut data = Vec::with_capacity(perm.len() * self.cols);
        for &src in perm {
            data.extend_from_slice(self.row(src));
        }
        Self {
            rows: perm.len(),
            cols: self.cols,
            data,
        }
    }

    /// Columns sorted lexicographically (descending), a canonical form under
    /// column permutation.
    pub fn sorted_columns(&self) -> NatMatrix {
        let mut order: Vec<usize> = (0..self.cols).collect();
        let cols: Vec<Vec<u64>> = (0..self.cols).map(|j| self.column(j)).collect();
        order.sort_by(|&a, &b| cols[b].cmp(&cols[a]));
        self.permute_columns(&order)
    }
}

fn checked_sum(it: impl Iterator<Item = u64>, what: &'static str) -> Result<u64> {
    it.into_iter()
        .try_fold(0u64, |acc, x| acc.checked_add(x).ok_or(Error::Overflow(what)))
}

impl fmt::Debug for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NatMatrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl fmt::Display for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(u64::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
