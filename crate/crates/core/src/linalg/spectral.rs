use serde::Serialize;

use super::forms::pseudo_inner_product;
use super::matrix::{SubfieldMatrix, SubfieldVector};
use super::prime::PrimeMatrix;
use super::{entries_only, rows_only, LinalgError};
use crate::poly::ModPolynomial;
use crate::ring::{mul_mod, Subfield};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharPolyResult {
    pub prime_order: u64,
    /// `det(xI - A')` over `Z_q` for the prime image `A'`, ascending and monic.
    pub prime_coeffs: Vec<u64>,
    /// `det(λ·I_e - A)` over `Z_n`, indexed by `λ = 0..n`.
    pub zn_rendition: Vec<u64>,
}

impl CharPolyResult {
    pub fn prime_polynomial(&self) -> ModPolynomial {
        ModPolynomial::new(self.prime_order, self.prime_coeffs.clone()).expect("prime order is at least 2")
    }

    /// Roots in `Z_q`, ascending.
    pub fn prime_roots(&self) -> Vec<u64> {
        let p = self.prime_polynomial();
        (0..self.prime_order).filter(|&x| p.eval(x) == 0).collect()
    }

    /// `Σ from_prime(c_i) A^i` over `Z_n`, with `A^0 = I_e`.
    pub fn evaluate_at(&self, a: &SubfieldMatrix) -> Result<SubfieldMatrix, LinalgError> {
        let k = a.subfield();
        let dim = a.require_square()?;
        let mut acc = SubfieldMatrix::zeros(k, dim, dim)?;
        let mut power = SubfieldMatrix::identity(k, dim)?;
        for &c in &self.prime_coeffs {
            acc = acc.add(&power.scale(k.from_prime(c))?)?;
            power = power.mul(a)?;
        }
        Ok(acc)
    }
}

/// `λ·I_e - A` as a plain matrix over `Z_n`.
fn shifted_over_ring(a: &SubfieldMatrix, lambda: u64) -> PrimeMatrix {
    let k = a.subfield();
    let n = k.modulus();
    let dim = a.rows();
    let diag = mul_mod(lambda % n, k.identity(), n);
    let mut m = PrimeMatrix::zeros(n, dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let base = if i == j { diag } else { 0 };
            m.set(i, j, (base + n - a.get(i, j)) % n);
        }
    }
    m
}

pub fn char_poly(a: &SubfieldMatrix) -> Result<CharPolyResult, LinalgError> {
    a.require_square()?;
    let k = a.subfield();
    let prime_coeffs = a.to_prime().char_poly();
    let zn_rendition = (0..k.modulus()).map(|l| shifted_over_ring(a, l).det()).collect();
    Ok(CharPolyResult {
        prime_order: k.prime_order(),
        prime_coeffs,
        zn_rendition,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SValue {
    pub value: u64,
    pub algebraic_multiplicity: usize,
    pub geometric_multiplicity: usize,
    #[serde(serialize_with = "entries_only")]
    pub basis: Vec<SubfieldVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlienValue {
    pub value: u64,
    /// A vector over `k` with `A·v = λ·v (mod n)`, when one exists.
    pub witness: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenSystem {
    pub dimension: usize,
    pub characteristic: CharPolyResult,
    /// Descending by value.
    pub s_values: Vec<SValue>,
    pub alien_values: Vec<AlienValue>,
    pub diagonalizable: bool,
}

fn root_multiplicity(coeffs: &[u64], root: u64, q: u64) -> usize {
    let mut p = coeffs.to_vec();
    let mut mult = 0;
    while p.len() > 1 {
        // synthetic division by (x - root)
        let mut quotient = vec![0; p.len() - 1];
        let mut carry = 0;
        for i in (0..p.len()).rev() {
            let v = (p[i] + mul_mod(carry, root, q)) % q;
            if i == 0 {
                if v != 0 {
                    return mult;
                }
            } else {
                quotient[i - 1] = v;
            }
            carry = v;
        }
        mult += 1;
        p = quotient;
    }
    mult
}

fn verify_pair(a: &SubfieldMatrix, c: u64, v: &[u64]) -> bool {
    let ring = a.subfield().ring();
    (0..a.rows()).all(|i| {
        let lhs = (0..a.cols()).fold(0, |acc, j| ring.add(acc, ring.mul(a.get(i, j), v[j])));
        lhs == ring.mul(c, v[i])
    })
}

pub fn eigen_system(a: &SubfieldMatrix) -> Result<EigenSystem, LinalgError> {
    let dim = a.require_square()?;
    let k = a.subfield();
    let characteristic = char_poly(a)?;
    let q = k.prime_order();
    let ap = a.to_prime();

    let mut s_values = Vec::new();
    for r in characteristic.prime_roots() {
        let shifted = ap.sub(&scalar_prime(q, dim, r));
        let basis: Vec<SubfieldVector> = shifted
            .nullspace()
            .iter()
            .map(|v| SubfieldVector::from_prime(k, v))
            .collect();
        let value = k.from_prime(r);
        if let Some(bad) = basis.iter().find(|v| !verify_pair(a, value, v.entries())) {
            return Err(LinalgError::Verification(format!(
                "A·v != {value}·v for v = {:?}",
                bad.entries()
            )));
        }
        s_values.push(SValue {
            value,
            algebraic_multiplicity: root_multiplicity(&characteristic.prime_coeffs, r, q),
            geometric_multiplicity: basis.len(),
            basis,
        });
    }
    s_values.sort_by_key(|s| std::cmp::Reverse(s.value));

    let mut alien_values = Vec::new();
    for (lambda, &d) in characteristic.zn_rendition.iter().enumerate() {
        let lambda = lambda as u64;
        if d != 0 || k.contains(lambda) {
            continue;
        }
        // λ·v = (λe)·v for v over k, so any eigenvector of λe serves
        let shadow = k.mul(lambda, k.identity());
        let witness = s_values
            .iter()
            .find(|s| s.value == shadow)
            .and_then(|s| s.basis.first())
            .map(|v| v.entries().to_vec())
            .filter(|v| verify_pair(a, lambda, v));
        alien_values.push(AlienValue { value: lambda, witness });
    }

    let diagonalizable = s_values.iter().map(|s| s.geometric_multiplicity).sum::<usize>() == dim;
    Ok(EigenSystem {
        dimension: dim,
        characteristic,
        s_values,
        alien_values,
        diagonalizable,
    })
}

fn scalar_prime(q: u64, dim: usize, c: u64) -> PrimeMatrix {
    let mut m = PrimeMatrix::zeros(q, dim, dim);
    for i in 0..dim {
        m.set(i, i, c);
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralTerm {
    pub value: u64,
    pub rank: usize,
    #[serde(serialize_with = "rows_only")]
    pub projection: SubfieldMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityCheck {
    pub left: u64,
    pub right: u64,
    pub orthogonal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralDecomposition {
    pub terms: Vec<SpectralTerm>,
    /// Idempotence, mutual annihilation, `Σ E_i = I_e` and `Σ c_i E_i = A` all hold mod `n`.
    pub residual_ok: bool,
    pub orthogonality: Vec<OrthogonalityCheck>,
    /// Basis vectors `v != 0` with `<v, v> = 0`.
    pub isotropic_vectors: Vec<Vec<u64>>,
}

fn require_symmetric(a: &SubfieldMatrix) -> Result<(), LinalgError> {
    let dim = a.require_square()?;
    for i in 0..dim {
        for j in i + 1..dim {
            if a.get(i, j) != a.get(j, i) {
                return Err(LinalgError::NotSymmetric { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// `A = Σ c_i E_i` for a symmetric matrix diagonalizable over `k`. The
/// projections come from the eigenbasis: `E_i = P D_i P^{-1}` over `Z_q`.
pub fn spectral_decompose(a: &SubfieldMatrix) -> Result<SpectralDecomposition, LinalgError> {
    require_symmetric(a)?;
    let dim = a.rows();
    let k = a.subfield();
    let q = k.prime_order();
    let eig = eigen_system(a)?;

    let split: usize = eig.s_values.iter().map(|s| s.algebraic_multiplicity).sum();
    if split < dim {
        return Err(LinalgError::NotSplit {
            split_degree: split,
            dimension: dim,
        });
    }
    if let Some(s) = eig
        .s_values
        .iter()
        .find(|s| s.geometric_multiplicity < s.algebraic_multiplicity)
    {
        return Err(LinalgError::NotDiagonalizable {
            eigenvalue: s.value,
            algebraic: s.algebraic_multiplicity,
            geometric: s.geometric_multiplicity,
        });
    }

    let columns: Vec<Vec<u64>> = eig
        .s_values
        .iter()
        .flat_map(|s| s.basis.iter().map(SubfieldVector::to_prime))
        .collect();
    let mut p = PrimeMatrix::zeros(q, dim, dim);
    for (j, col) in columns.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            p.set(i, j, x);
        }
    }
    let p_inv = p
        .inverse()
        .ok_or_else(|| LinalgError::Verification("eigenbasis is not invertible".into()))?;

    let mut terms = Vec::new();
    let mut offset = 0;
    for s in &eig.s_values {
        let mut d = PrimeMatrix::zeros(q, dim, dim);
        for i in offset..offset + s.basis.len() {
            d.set(i, i, 1);
        }
        offset += s.basis.len();
        let e = SubfieldMatrix::from_prime(k, &p.mul(&d).mul(&p_inv))?;
        terms.push(SpectralTerm {
            value: s.value,
            rank: s.basis.len(),
            projection: e,
        });
    }

    let residual_ok = check_residual(a, &terms)?;
    if !residual_ok {
        return Err(LinalgError::Verification(
            "projections fail to reconstruct the matrix".into(),
        ));
    }

    let mut orthogonality = Vec::new();
    for (i, si) in eig.s_values.iter().enumerate() {
        for sj in &eig.s_values[i + 1..] {
            let mut orthogonal = true;
            for u in &si.basis {
                for v in &sj.basis {
                    orthogonal &= pseudo_inner_product(u, v)? == 0;
                }
            }
            orthogonality.push(OrthogonalityCheck {
                left: si.value,
                right: sj.value,
                orthogonal,
            });
        }
    }
    let mut isotropic_vectors = Vec::new();
    for v in eig.s_values.iter().flat_map(|s| &s.basis) {
        if !v.is_zero() && pseudo_inner_product(v, v)? == 0 {
            isotropic_vectors.push(v.entries().to_vec());
        }
    }

    Ok(SpectralDecomposition {
        terms,
        residual_ok,
        orthogonality,
        isotropic_vectors,
    })
}

fn check_residual(a: &SubfieldMatrix, terms: &[SpectralTerm]) -> Result<bool, LinalgError> {
    let k: &Subfield = a.subfield();
    let dim = a.rows();
    let mut sum = SubfieldMatrix::zeros(k, dim, dim)?;
    let mut weighted = SubfieldMatrix::zeros(k, dim, dim)?;
    for (i, ti) in terms.iter().enumerate() {
        let e = &ti.projection;
        if e.mul(e)? != *e {
            return Ok(false);
        }
        for (j, tj) in terms.iter().enumerate() {
            if i != j && !e.mul(&tj.projection)?.is_zero() {
                return Ok(false);
            }
        }
        sum = sum.add(e)?;
        weighted = weighted.add(&e.scale(ti.value)?)?;
    }
    Ok(sum == SubfieldMatrix::identity(k, dim)? && weighted == *a)
}
