//! Dense matrices over `Z_m`. Elimination needs `m` prime; the Berkowitz
//! characteristic polynomial and determinant work for any modulus.

use serde::Serialize;

use crate::ring::{inv_mod, mul_mod};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PrimeMatrix {
    /// Entries are reduced mod `modulus`. Panics on a length mismatch.
    pub fn new(modulus: u64, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        PrimeMatrix {
            modulus,
            rows,
            cols,
            data: data.into_iter().map(|a| a % modulus).collect(),
        }
    }

    pub fn zeros(modulus: u64, rows: usize, cols: usize) -> Self {
        Self::new(modulus, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(modulus: u64, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.modulus;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let m = self.modulus;
        let mut out = Self::zeros(m, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + mul_mod(a, other.get(k, j), m)) % m;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self.modulus;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a + m - b) % m)
            .collect();
        Self::new(m, self.rows, self.cols, data)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        let m = self.modulus;
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| (acc + mul_mod(self.get(i, j), v[j], m)) % m))
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form over a prime field, with pivot columns ascending.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let q = self.modulus;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = inv_mod(m.get(r, c), q).expect("modulus must be prime");
            for j in c..m.cols {
                let v = mul_mod(m.get(r, j), inv, q);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = (m.get(i, j) + q - mul_mod(f, m.get(r, j), q)) % q;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One basis vector per free column, ascending; that free variable is 1,
    /// the other free variables 0, pivots solved from the reduced form.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let q = self.modulus;
        let (r, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = (q - r.get(row, free)) % q;
                }
                v
            })
            .collect()
    }

    /// Inverse over a prime field, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let mut aug = Self::zeros(self.modulus, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.modulus, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Coefficients of `det(xI - M)`, ascending and monic, by Berkowitz's
    /// division-free recurrence. Valid over any commutative `Z_m`.
    pub fn char_poly(&self) -> Vec<u64> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let m = self.modulus;
        let neg = |a: u64| (m - a % m) % m;
        // descending coefficients of the leading r x r block
        let mut p = vec![1u64];
        for r in 0..n {
            let mut col = vec![0u64; r + 2];
            col[0] = 1;
            col[1] = neg(self.get(r, r));
            let mut v: Vec<u64> = (0..r).map(|i| self.get(i, r)).collect();
            for slot in col.iter_mut().skip(2) {
                let dot = (0..r).fold(0, |acc, j| (acc + mul_mod(self.get(r, j), v[j], m)) % m);
                *slot = neg(dot);
                v = (0..r)
                    .map(|i| (0..r).fold(0, |acc, j| (acc + mul_mod(self.get(i, j), v[j], m)) % m))
                    .collect();
            }
            let mut next = vec![0u64; r + 2];
            for (i, out) in next.iter_mut().enumerate() {
                for (j, &pj) in p.iter().enumerate().take(i + 1) {
                    *out = (*out + mul_mod(col[i - j], pj, m)) % m;
                }
            }
            p = next;
        }
        p.reverse();
        p
    }

    /// Determinant over any `Z_m`, read off the constant term of the characteristic polynomial.
    pub fn det(&self) -> u64 {
        let c0 = self.char_poly()[0];
        if self.rows.is_multiple_of(2) {
            c0
        } else {
            (self.modulus - c0) % self.modulus
        }
    }
}
