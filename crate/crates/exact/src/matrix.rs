//! Column-major sparse matrices over a single scalar ring.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{ExactError, Result};
use crate::scalar::{Ring, Scalar};

/// A sparse matrix stored as one ordered map per column. Stored entries are
/// always nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    ring: Ring,
    nrows: usize,
    ncols: usize,
    cols: Vec<BTreeMap<usize, Scalar>>,
}

impl SparseMatrix {
    pub fn zeros(ring: Ring, nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            ring,
            nrows,
            ncols,
            cols: vec![BTreeMap::new(); ncols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = SparseMatrix::zeros(ring.clone(), n, n);
        let one = Scalar::one(&ring);
        for (i, col) in m.cols.iter_mut().enumerate() {
            col.insert(i, one.clone());
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(
        ring: Ring,
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut m = SparseMatrix::zeros(ring, nrows, ncols);
        for (r, c, v) in triplets {
            m.add_entry(r, c, v)?;
        }
        Ok(m)
    }

    /// Builds a matrix from row-major dense data.
    pub fn from_dense(ring: Ring, rows: &[Vec<Scalar>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::zeros(ring, nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(ExactError::Dimension(format!(
                    "row {r} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for (c, v) in row.iter().enumerate() {
                m.add_entry(r, c, v.clone())?;
            }
        }
        Ok(m)
    }

    /// Integer matrix from small literals, converted into `ring`.
    pub fn from_ints(ring: Ring, rows: &[Vec<i64>]) -> Self {
        let dense: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(&ring, v)).collect())
            .collect();
        SparseMatrix::from_dense(ring, &dense).expect("rectangular literal")
    }

    /// Builds a matrix from sparse columns.
    pub fn from_columns(ring: Ring, nrows: usize, columns: Vec<BTreeMap<usize, Scalar>>) -> Result<Self> {
        for col in &columns {
            for (&r, v) in col {
                if r >= nrows {
                    return Err(ExactError::Dimension(format!("row {r} out of range {nrows}")));
                }
                if v.ring() != ring {
                    return Err(ExactError::MixedRing {
                        left: ring.clone(),
                        right: v.ring(),
                    });
                }
            }
        }
        let columns = columns
            .into_iter()
            .map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect::<Vec<_>>();
        Ok(SparseMatrix {
            ring,
            nrows,
            ncols: columns.len(),
            cols: columns,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, c: usize) -> &BTreeMap<usize, Scalar> {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[BTreeMap<usize, Scalar>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<BTreeMap<usize, Scalar>> {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.cols[c]
            .get(&r)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.ring))
    }

    /// Iterates stored entries as `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v)))
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: Scalar) -> Result<()> {
        if r >= self.nrows || c >= self.ncols {
            return Err(ExactError::Dimension(format!(
                "entry ({r},{c}) outside {}x{}",
                self.nrows, self.ncols
            )));
        }
        if v.is_zero() {
            if v.ring() != self.ring {
                return Err(ExactError::MixedRing {
                    left: self.ring.clone(),
                    right: v.ring(),
                });
            }
            return Ok(());
        }
        add_into(&mut self.cols[c], r, &v)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) -> Result<()> {
        self.cols[c].remove(&r);
        self.add_entry(r, c, v)
    }

    fn same_shape(&self, other: &SparseMatrix, what: &str) -> Result<()> {
        if self.ring != other.ring {
            return Err(ExactError::MixedRing {
                left: self.ring.clone(),
                right: other.ring.clone(),
            });
        }
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(ExactError::Dimension(format!(
                "{what}: {}x{} vs {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.same_shape(other, "add")?;
        let mut out = self.clone();
        for (c, col) in other.cols.iter().enumerate() {
            for (&r, v) in col {
                add_into(&mut out.cols[c], r, v)?;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparseMatrix {
        SparseMatrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            ncols: self.ncols,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(&r, v)| (r, -v)).collect())
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<SparseMatrix> {
        let mut cols = Vec::with_capacity(self.ncols);
        for col in &self.cols {
            let mut out = BTreeMap::new();
            for (&r, v) in col {
                let p = v.try_mul(s)?;
                if !p.is_zero() {
                    out.insert(r, p);
                }
            }
            cols.push(out);
        }
        Ok(SparseMatrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            ncols: self.ncols,
            cols,
        })
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &BTreeMap<usize, Scalar>) -> Result<BTreeMap<usize, Scalar>> {
        let mut out = BTreeMap::new();
        for (&c, x) in v {
            if c >= self.ncols {
                return Err(ExactError::Dimension(format!("index {c} outside {}", self.ncols)));
            }
            for (&r, a) in &self.cols[c] {
                add_into(&mut out, r, &a.try_mul(x)?)?;
            }
        }
        Ok(out)
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ring != rhs.ring {
            return Err(ExactError::MixedRing {
                left: self.ring.clone(),
                right: rhs.ring.clone(),
            });
        }
        if self.ncols != rhs.nrows {
            return Err(ExactError::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.nrows, self.ncols, rhs.nrows, rhs.ncols
            )));
        }
        let cols = rhs.cols.iter().map(|col| self.apply(col)).collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            ncols: rhs.ncols,
            cols,
        })
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![BTreeMap::new(); self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, v) in col {
                cols[r].insert(c, v.clone());
            }
        }
        SparseMatrix {
            ring: self.ring.clone(),
            nrows: self.ncols,
            ncols: self.nrows,
            cols,
        }
    }

    /// Kronecker product; the left factor's index is the more significant one.
    pub fn kron(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ring != rhs.ring {
            return Err(ExactError::MixedRing {
                left: self.ring.clone(),
                right: rhs.ring.clone(),
            });
        }
        let nrows = self.nrows * rhs.nrows;
        let ncols = self.ncols * rhs.ncols;
        let mut cols = vec![BTreeMap::new(); ncols];
        for (c1, col1) in self.cols.iter().enumerate() {
            for (c2, col2) in rhs.cols.iter().enumerate() {
                let target = &mut cols[c1 * rhs.ncols + c2];
                for (&r1, a) in col1 {
                    for (&r2, b) in col2 {
                        let p = a * b;
                        if !p.is_zero() {
                            target.insert(r1 * rhs.nrows + r2, p);
                        }
                    }
                }
            }
        }
        Ok(SparseMatrix {
            ring: self.ring.clone(),
            nrows,
            ncols,
            cols,
        })
    }

    /// Places blocks side by side.
    pub fn hstack(ring: Ring, nrows: usize, blocks: &[&SparseMatrix]) -> Result<SparseMatrix> {
        let mut cols = Vec::new();
        for b in blocks {
            if b.nrows != nrows || b.ring != ring {
                return Err(ExactError::Dimension(format!(
                    "hstack block has {} rows, expected {nrows}",
                    b.nrows
                )));
            }
            cols.extend(b.cols.iter().cloned());
        }
        Ok(SparseMatrix {
            ring,
            nrows,
            ncols: cols.len(),
            cols,
        })
    }

    /// Places blocks on top of each other.
    pub fn vstack(ring: Ring, ncols: usize, blocks: &[&SparseMatrix]) -> Result<SparseMatrix> {
        let mut cols = vec![BTreeMap::new(); ncols];
        let mut offset = 0;
        for b in blocks {
            if b.ncols != ncols || b.ring != ring {
                return Err(ExactError::Dimension(format!(
                    "vstack block has {} columns, expected {ncols}",
                    b.ncols
                )));
            }
            for (c, col) in b.cols.iter().enumerate() {
                for (&r, v) in col {
                    cols[c].insert(r + offset, v.clone());
                }
            }
            offset += b.nrows;
        }
        Ok(SparseMatrix {
            ring,
            nrows: offset,
            ncols,
            cols,
        })
    }

    /// Selects the given columns in order.
    pub fn select_columns(&self, which: &[usize]) -> SparseMatrix {
        SparseMatrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            ncols: which.len(),
            cols: which.iter().map(|&c| self.cols[c].clone()).collect(),
        }
    }

    /// Reorders rows: row `r` of `self` becomes row `perm[r]`.
    pub fn permute_rows(&self, perm: &[usize]) -> SparseMatrix {
        assert_eq!(perm.len(), self.nrows);
        SparseMatrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            ncols: self.ncols,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(&r, v)| (perm[r], v.clone())).collect())
                .collect(),
        }
    }

    pub fn to_ring(&self, target: &Ring) -> Result<SparseMatrix> {
        let mut cols = Vec::with_capacity(self.ncols);
        for col in &self.cols {
            let mut out = BTreeMap::new();
            for (&r, v) in col {
                out.insert(r, v.to_ring(target)?);
            }
            cols.push(out);
        }
        Ok(SparseMatrix {
            ring: target.clone(),
            nrows: self.nrows,
            ncols: self.ncols,
            cols,
        })
    }

    /// Maps every entry through `f`, dropping results that vanish.
    pub fn map_entries(&self, ring: Ring, f: impl Fn(&Scalar) -> Scalar) -> SparseMatrix {
        SparseMatrix {
            ring,
            nrows: self.nrows,
            ncols: self.ncols,
            cols: self
                .cols
                .iter()
                .map(|col| {
                    col.iter()
                        .filter_map(|(&r, v)| {
                            let w = f(v);
                            (!w.is_zero()).then_some((r, w))
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(c, col)| col.len() == 1 && col.get(&c).is_some_and(Scalar::is_one))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let zero = Scalar::zero(&self.ring);
        let mut rows = vec![vec![zero; self.ncols]; self.nrows];
        for (r, c, v) in self.triplets() {
            rows[r][c] = v.clone();
        }
        rows
    }
}

/// Adds `v` to entry `r` of a sparse vector, removing it when it cancels.
pub fn add_into(col: &mut BTreeMap<usize, Scalar>, r: usize, v: &Scalar) -> Result<()> {
    if v.is_zero() {
        return Ok(());
    }
    use std::collections::btree_map::Entry;
    match col.entry(r) {
        Entry::Vacant(e) => {
            e.insert(v.clone());
        }
        Entry::Occupied(mut e) => {
            let s = e.get().try_add(v)?;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
    Ok(())
}

impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
