use serde::{Deserialize, Serialize};

use super::prime::PrimeMatrix;
use super::LinalgError;
use crate::ring::{scalar_field, ModulusRing, Subfield};

#[derive(Serialize, Deserialize)]
struct MatrixRecord {
    n: u64,
    subfield: Vec<u64>,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct VectorRecord {
    n: u64,
    subfield: Vec<u64>,
    entries: Vec<u64>,
}

fn subfield_from_record(n: u64, elements: &[u64]) -> Result<Subfield, LinalgError> {
    let ring = ModulusRing::new(n)?;
    Ok(scalar_field(&ring, elements)?)
}

/// Matrix with entries in a subfield `k` of `Z_n`; arithmetic is mod `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MatrixRecord", try_from = "MatrixRecord")]
pub struct SubfieldMatrix {
    k: Subfield,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl From<SubfieldMatrix> for MatrixRecord {
    fn from(m: SubfieldMatrix) -> Self {
        MatrixRecord {
            n: m.k.modulus(),
            subfield: m.k.elements().to_vec(),
            rows: m.rows,
            cols: m.cols,
            entries: m.entries,
        }
    }
}

impl TryFrom<MatrixRecord> for SubfieldMatrix {
    type Error = LinalgError;
    fn try_from(r: MatrixRecord) -> Result<Self, LinalgError> {
        let k = subfield_from_record(r.n, &r.subfield)?;
        SubfieldMatrix::new(&k, r.rows, r.cols, r.entries)
    }
}

impl SubfieldMatrix {
    pub fn new(k: &Subfield, rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 {
            return Err(LinalgError::EmptyDimension);
        }
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&a| !k.contains(a)) {
            return Err(LinalgError::EntryOutsideSubfield {
                entry: entries[pos],
                row: pos / cols,
                col: pos % cols,
            });
        }
        Ok(SubfieldMatrix {
            k: k.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(k: &Subfield, rows: &[Vec<u64>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        Self::new(k, r, c, rows.concat())
    }

    pub fn zeros(k: &Subfield, rows: usize, cols: usize) -> Result<Self, LinalgError> {
        Self::new(k, rows, cols, vec![0; rows * cols])
    }

    /// `c * I_e`, the scalar matrix built on the subfield identity.
    pub fn scalar(k: &Subfield, n: usize, c: u64) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(k, n, n)?;
        let c = k.mul(c, k.identity());
        for i in 0..n {
            m.entries[i * n + i] = c;
        }
        Ok(m)
    }

    /// `I_e`.
    pub fn identity(k: &Subfield, n: usize) -> Result<Self, LinalgError> {
        Self::scalar(k, n, k.identity())
    }

    pub fn subfield(&self) -> &Subfield {
        &self.k
    }

    pub fn modulus(&self) -> u64 {
        self.k.modulus()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.cols).map(<[u64]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> SubfieldVector {
        SubfieldVector {
            k: self.k.clone(),
            entries: (0..self.rows).map(|i| self.get(i, j)).collect(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize, LinalgError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn check_subfield(&self, other: &Subfield) -> Result<(), LinalgError> {
        if self.k != *other {
            return Err(LinalgError::SubfieldMismatch);
        }
        Ok(())
    }

    fn with_entries(&self, rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        SubfieldMatrix {
            k: self.k.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_subfield(&other.k)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let e = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.k.add(a, b))
            .collect();
        Ok(self.with_entries(self.rows, self.cols, e))
    }

    pub fn neg(&self) -> Self {
        let e = self.entries.iter().map(|&a| self.k.neg(a)).collect();
        self.with_entries(self.rows, self.cols, e)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_subfield(&other.k)?;
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut e = vec![0; self.rows * other.cols];
        for i in 0..self.rows {
            for j in 0..other.cols {
                e[i * other.cols + j] = (0..self.cols).fold(0, |acc, t| {
                    self.k.add(acc, self.k.mul(self.get(i, t), other.get(t, j)))
                });
            }
        }
        Ok(self.with_entries(self.rows, other.cols, e))
    }

    /// `c * A` for `c` in `k`.
    pub fn scale(&self, c: u64) -> Result<Self, LinalgError> {
        if !self.k.contains(c) {
            return Err(LinalgError::ScalarOutsideSubfield(c));
        }
        let e = self.entries.iter().map(|&a| self.k.mul(a, c)).collect();
        Ok(self.with_entries(self.rows, self.cols, e))
    }

    pub fn transpose(&self) -> Self {
        let mut e = vec![0; self.entries.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                e[j * self.rows + i] = self.get(i, j);
            }
        }
        self.with_entries(self.cols, self.rows, e)
    }

    pub fn pow(&self, e: u32) -> Result<Self, LinalgError> {
        let n = self.require_square()?;
        let mut acc = Self::identity(&self.k, n)?;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn mul_vec(&self, v: &SubfieldVector) -> Result<SubfieldVector, LinalgError> {
        self.check_subfield(&v.k)?;
        if v.len() != self.cols {
            return Err(LinalgError::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(0, |acc, j| self.k.add(acc, self.k.mul(self.get(i, j), v.entries[j])))
            })
            .collect();
        Ok(SubfieldVector {
            k: self.k.clone(),
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&a| a == 0)
    }

    /// Entrywise image in `Z_q`.
    pub fn to_prime(&self) -> PrimeMatrix {
        let data = self
            .entries
            .iter()
            .map(|&a| self.k.to_prime(a).expect("entries lie in the subfield"))
            .collect();
        PrimeMatrix::new(self.k.prime_order(), self.rows, self.cols, data)
    }

    pub fn from_prime(k: &Subfield, m: &PrimeMatrix) -> Result<Self, LinalgError> {
        if m.modulus() != k.prime_order() {
            return Err(LinalgError::Shape(format!(
                "matrix over Z_{} cannot map into a subfield of order {}",
                m.modulus(),
                k.prime_order()
            )));
        }
        let e = m.data().iter().map(|&a| k.from_prime(a)).collect();
        Self::new(k, m.rows(), m.cols(), e)
    }
}

/// Vector with entries in a subfield `k` of `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "VectorRecord", try_from = "VectorRecord")]
pub struct SubfieldVector {
    k: Subfield,
    entries: Vec<u64>,
}

impl From<SubfieldVector> for VectorRecord {
    fn from(v: SubfieldVector) -> Self {
        VectorRecord {
            n: v.k.modulus(),
            subfield: v.k.elements().to_vec(),
            entries: v.entries,
        }
    }
}

impl TryFrom<VectorRecord> for SubfieldVector {
    type Error = LinalgError;
    fn try_from(r: VectorRecord) -> Result<Self, LinalgError> {
        let k = subfield_from_record(r.n, &r.subfield)?;
        SubfieldVector::new(&k, r.entries)
    }
}

impl SubfieldVector {
    pub fn new(k: &Subfield, entries: Vec<u64>) -> Result<Self, LinalgError> {
        if let Some(pos) = entries.iter().position(|&a| !k.contains(a)) {
            return Err(LinalgError::EntryOutsideSubfield {
                entry: entries[pos],
                row: pos,
                col: 0,
            });
        }
        Ok(SubfieldVector {
            k: k.clone(),
            entries,
        })
    }

    pub fn from_prime(k: &Subfield, v: &[u64]) -> Self {
        SubfieldVector {
            k: k.clone(),
            entries: v.iter().map(|&a| k.from_prime(a)).collect(),
        }
    }

    pub fn subfield(&self) -> &Subfield {
        &self.k
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&a| a == 0)
    }

    /// `c * v` computed in `Z_n`; `c` may lie outside `k`.
    pub fn scaled_in_ring(&self, c: u64) -> Vec<u64> {
        let ring = self.k.ring();
        self.entries.iter().map(|&a| ring.mul(c, a)).collect()
    }

    pub fn to_prime(&self) -> Vec<u64> {
        self.entries
            .iter()
            .map(|&a| self.k.to_prime(a).expect("entries lie in the subfield"))
            .collect()
    }
}
