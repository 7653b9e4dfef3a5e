//! Polynomials with coefficients in `Z_n`, plus root-based criteria over `Z_p`.
//!
//! "Reducible" in this module means "has a root in the coefficient field".
//! That is the only notion the criteria here decide; a rootless polynomial of
//! degree four or more may still factor, and reports flag that case.

mod criteria;
mod parse;

pub use criteria::{
    block_transform, coeff_sum_hom, fermat_family_check, fermat_power_sum, kernel_of_hom,
    neutrosophic_classify, reducibility_report, roots_in, FermatCheck, FermatFamily, HomKernel,
    PowerSum, ReducibilityReport, RootClassification, RootVerdict, Truth, KERNEL_ENUMERATION_LIMIT,
};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::mul_mod;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("moduli differ: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("operation needs a prime modulus, got {0}")]
    CompositeModulus(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration of {count} polynomials exceeds the limit {limit}")]
    BoundExceeded { count: u128, limit: u128 },
    #[error("{m_plus_1} does not divide {n_plus_1}")]
    Divisibility { m_plus_1: usize, n_plus_1: usize },
    #[error("degree {degree} exceeds the source bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

impl PolyError {
    pub fn code(&self) -> &'static str {
        match self {
            PolyError::InvalidModulus(_) => "invalid_modulus",
            PolyError::ModulusMismatch { .. } => "modulus_mismatch",
            PolyError::CompositeModulus(_) => "composite_modulus",
            PolyError::Precondition(_) => "precondition",
            PolyError::BoundExceeded { .. } => "bound_exceeded",
            PolyError::Divisibility { .. } => "divisibility",
            PolyError::DegreeOverflow { .. } => "degree_overflow",
            PolyError::Parse { .. } => "parse",
        }
    }
}

/// Dense polynomial over `Z_n`, ascending degree, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyRecord")]
pub struct ModPolynomial {
    n: u64,
    coeffs: Vec<u64>,
}

#[derive(Deserialize)]
struct PolyRecord {
    n: u64,
    coeffs: Vec<u64>,
}

impl TryFrom<PolyRecord> for ModPolynomial {
    type Error = PolyError;
    fn try_from(r: PolyRecord) -> Result<Self, PolyError> {
        ModPolynomial::new(r.n, r.coeffs)
    }
}

impl ModPolynomial {
    /// Coefficients are reduced mod `n` and trailing zeros dropped.
    pub fn new(n: u64, coeffs: Vec<u64>) -> Result<Self, PolyError> {
        if n < 2 {
            return Err(PolyError::InvalidModulus(n));
        }
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % n).collect();
        trim(&mut coeffs);
        Ok(ModPolynomial { n, coeffs })
    }

    pub fn from_signed(n: u64, coeffs: &[i64]) -> Result<Self, PolyError> {
        if n < 2 {
            return Err(PolyError::InvalidModulus(n));
        }
        let reduced = coeffs.iter().map(|&c| c.rem_euclid(n as i64) as u64).collect();
        Self::new(n, reduced)
    }

    pub fn zero(n: u64) -> Result<Self, PolyError> {
        Self::new(n, Vec::new())
    }

    /// `c * x^degree`.
    pub fn monomial(n: u64, c: u64, degree: usize) -> Result<Self, PolyError> {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::new(n, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation mod `n`.
    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.n;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.n) + c) % self.n)
    }

    fn check_modulus(&self, other: &Self) -> Result<(), PolyError> {
        if self.n != other.n {
            return Err(PolyError::ModulusMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_modulus(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.n)
            .collect();
        Self::new(self.n, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_modulus(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + self.n - other.coeff(i)) % self.n)
            .collect();
        Self::new(self.n, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_modulus(other)?;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.n);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, self.n)) % self.n;
            }
        }
        Self::new(self.n, coeffs)
    }

    pub fn scale(&self, c: u64) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| mul_mod(a, c, self.n)).collect();
        Self::new(self.n, coeffs).expect("modulus already validated")
    }

    /// Coordinate-sum pairing `sum a_i b_i (mod n)`; the shorter operand is
    /// padded with zeros. It can vanish on nonzero arguments.
    pub fn pseudo_inner(&self, other: &Self) -> Result<u64, PolyError> {
        self.check_modulus(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0, |acc, (&a, &b)| (acc + mul_mod(a, b, self.n)) % self.n))
    }
}

fn trim(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl fmt::Display for ModPolynomial {
    /// Descending terms, e.g. `2x^3+x+1`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64, c: &[u64]) -> ModPolynomial {
        ModPolynomial::new(n, c.to_vec()).unwrap()
    }

    #[test]
    fn normalization() {
        let q = p(3, &[1, 2, 0, 3, 0]);
        assert_eq!(q.coeffs(), &[1, 2]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(5, &[0, 0]).degree(), None);
        assert!(ModPolynomial::new(1, vec![]).is_err());
    }

    #[test]
    fn addition_cancels_to_zero() {
        let sum = p(3, &[1, 2]).add(&p(3, &[2, 1])).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn cube_of_x_plus_one_mod_3() {
        let l = p(3, &[1, 1]);
        let cube = l.mul(&l).unwrap().mul(&l).unwrap();
        assert_eq!(cube, p(3, &[1, 0, 0, 1]));
    }

    #[test]
    fn factored_cubic_mod_3() {
        let prod = p(3, &[1, 0, 2]).mul(&p(3, &[1, 1])).unwrap();
        assert_eq!(prod, p(3, &[1, 1, 2, 2]));
    }

    #[test]
    fn mismatch_is_an_error() {
        assert_eq!(
            p(3, &[1]).mul(&p(5, &[1])),
            Err(PolyError::ModulusMismatch { left: 3, right: 5 })
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(3, &[1, 2, 0, 1]).to_string(), "x^3+2x+1");
        assert_eq!(p(7, &[2, 4, 0, 0, 0, 2, 0, 2]).to_string(), "2x^7+2x^5+4x+2");
        assert_eq!(p(7, &[]).to_string(), "0");
    }

    #[test]
    fn isotropic_pairing() {
        let q = p(3, &[1, 1, 1]);
        assert_eq!(q.pseudo_inner(&q).unwrap(), 0);
        assert_eq!(q.pseudo_inner(&p(3, &[])).unwrap(), 0);
    }

    #[test]
    fn json_shape() {
        let q = p(3, &[1, 2, 0, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"n":3,"coeffs":[1,2,0,1]}"#);
        let back: ModPolynomial = serde_json::from_str(r#"{"n":3,"coeffs":[4,0]}"#).unwrap();
        assert_eq!(back, p(3, &[1]));
    }
}
