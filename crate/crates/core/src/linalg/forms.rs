use serde::Serialize;

use super::matrix::{SubfieldMatrix, SubfieldVector};
use super::{rref_and_nullspace, rows_only, LinalgError};

/// `Σ u_i v_i (mod n)`. Nonzero vectors can pair to zero with themselves.
pub fn pseudo_inner_product(u: &SubfieldVector, v: &SubfieldVector) -> Result<u64, LinalgError> {
    if u.subfield() != v.subfield() {
        return Err(LinalgError::SubfieldMismatch);
    }
    if u.len() != v.len() {
        return Err(LinalgError::Shape(format!("lengths {} and {}", u.len(), v.len())));
    }
    let k = u.subfield();
    Ok(u.entries()
        .iter()
        .zip(v.entries())
        .fold(0, |acc, (&a, &b)| k.add(acc, k.mul(a, b))))
}

/// Whether `A` equals its transpose, the adjoint for the coordinate pairing.
pub fn self_adjoint_check(a: &SubfieldMatrix) -> Result<bool, LinalgError> {
    a.require_square()?;
    Ok(a.transpose() == *a)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BilinearForm {
    #[serde(serialize_with = "rows_only")]
    pub gram: SubfieldMatrix,
    pub rank: usize,
    pub symmetric: bool,
    pub skew: bool,
}

impl BilinearForm {
    /// `f(α, β) = αᵀ G β (mod n)`.
    pub fn eval(&self, alpha: &SubfieldVector, beta: &SubfieldVector) -> Result<u64, LinalgError> {
        let g_beta = self.gram.mul_vec(beta)?;
        pseudo_inner_product(alpha, &g_beta)
    }

    /// `q(α) = f(α, α)`.
    pub fn quadratic(&self, alpha: &SubfieldVector) -> Result<u64, LinalgError> {
        self.eval(alpha, alpha)
    }
}

pub fn bilinear_form_analyze(g: &SubfieldMatrix) -> Result<BilinearForm, LinalgError> {
    g.require_square()?;
    let t = g.transpose();
    Ok(BilinearForm {
        rank: rref_and_nullspace(g).rank,
        symmetric: t == *g,
        skew: t.neg() == *g,
        gram: g.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{certify_subfield, ModulusRing, Subfield};

    fn k(n: u64, el: &[u64]) -> Subfield {
        certify_subfield(&ModulusRing::new(n).unwrap(), el).unwrap()
    }

    fn v(kk: &Subfield, e: &[u64]) -> SubfieldVector {
        SubfieldVector::new(kk, e.to_vec()).unwrap()
    }

    #[test]
    fn pairings() {
        let kk = k(6, &[0, 2, 4]);
        assert_eq!(pseudo_inner_product(&v(&kk, &[0, 4, 4]), &v(&kk, &[0, 2, 4])).unwrap(), 0);
        assert_eq!(pseudo_inner_product(&v(&kk, &[2, 4]), &v(&kk, &[0, 0])).unwrap(), 0);
        assert!(pseudo_inner_product(&v(&kk, &[2]), &v(&kk, &[2, 2])).is_err());
    }

    #[test]
    fn adjointness() {
        let kk = k(6, &[0, 2, 4]);
        let a = SubfieldMatrix::from_rows(&kk, &[vec![4, 0, 0], vec![0, 2, 2], vec![0, 2, 2]]).unwrap();
        assert!(self_adjoint_check(&a).unwrap());
        let k2 = k(6, &[0, 3]);
        let u = SubfieldMatrix::from_rows(&k2, &[vec![0, 3], vec![0, 0]]).unwrap();
        assert!(!self_adjoint_check(&u).unwrap());
    }

    #[test]
    fn forms() {
        let kk = k(6, &[0, 2, 4]);
        let f = bilinear_form_analyze(&SubfieldMatrix::identity(&kk, 3).unwrap()).unwrap();
        assert_eq!((f.rank, f.symmetric, f.skew), (3, true, false));
        assert_eq!(f.quadratic(&v(&kk, &[4, 0, 0])).unwrap(), 4);

        let z = bilinear_form_analyze(&SubfieldMatrix::zeros(&kk, 2, 2).unwrap()).unwrap();
        assert_eq!((z.rank, z.symmetric, z.skew), (0, true, true));
        assert_eq!(z.quadratic(&v(&kk, &[2, 4])).unwrap(), 0);

        let g = SubfieldMatrix::from_rows(&kk, &[vec![0, 4], vec![2, 0]]).unwrap();
        let f = bilinear_form_analyze(&g).unwrap();
        assert!(!f.symmetric && f.skew);
        assert_eq!(f.rank, 2);
    }
}
