use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::rep::{averaged_projection, commutant, coordinate_projection, Representation};
use super::SemigroupError;
use crate::rational::{span_rank, Rational, RationalMatrix};

pub const DECOMPOSE_DEGREE_LIMIT: usize = 8;

/// One summand of the decomposition. `irreducible` is over the rationals and
/// is only set when `certificate` names a proof:
/// `scalar_commutant` (the commutant is `Q`), or `field_commutant` (the
/// commutant is a field, found as `Q[X]` for one of its elements). Blocks
/// whose commutant is non-commutative with no zero divisor found among the
/// tested elements are reported with `unresolved`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBlock {
    #[serde(with = "crate::rational::serde_vecs")]
    pub basis: Vec<Vec<Rational>>,
    pub dimension: usize,
    pub irreducible: bool,
    pub certificate: &'static str,
}

pub fn decompose_invariants(rep: &Representation) -> Result<Vec<InvariantBlock>, SemigroupError> {
    let d = rep.degree;
    if d > DECOMPOSE_DEGREE_LIMIT {
        return Err(SemigroupError::DegreeBound {
            degree: d,
            limit: DECOMPOSE_DEGREE_LIMIT,
        });
    }
    let full: Vec<Vec<Rational>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let mut blocks = Vec::new();
    split(rep, full, &mut blocks)?;
    blocks.sort_by_key(|b| b.dimension);

    let all: Vec<Vec<Rational>> = blocks.iter().flat_map(|b| b.basis.iter().cloned()).collect();
    if all.len() != d || span_rank(&all) != d {
        return Err(SemigroupError::Verification("blocks do not form a basis".into()));
    }
    for b in &blocks {
        for m in rep.matrices() {
            for v in &b.basis {
                if !crate::rational::in_span(&b.basis, &m.mul_vec(v)?) {
                    return Err(SemigroupError::Verification("emitted block is not invariant".into()));
                }
            }
        }
    }
    Ok(blocks)
}

fn restrict(rep: &Representation, basis: &[Vec<Rational>]) -> Result<Representation, SemigroupError> {
    let b = RationalMatrix::from_columns(basis)?;
    let bt = b.transpose();
    let gram_inv = bt.mul(&b)?.inverse()?.expect("independent basis has invertible Gram matrix");
    let left = gram_inv.mul(&bt)?;
    let ms = rep
        .matrices()
        .iter()
        .map(|m| left.mul(m)?.mul(&b))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::new(rep.subgroup.clone(), ms)
}

fn split(rep: &Representation, basis: Vec<Vec<Rational>>, out: &mut Vec<InvariantBlock>) -> Result<(), SemigroupError> {
    let local = restrict(rep, &basis)?;
    let lift = |vs: &[Vec<Rational>]| -> Result<Vec<Vec<Rational>>, SemigroupError> {
        let b = RationalMatrix::from_columns(&basis)?;
        vs.iter().map(|v| b.mul_vec(v).map_err(Into::into)).collect()
    };
    match find_split(&local)? {
        Search::Split(sub) => {
            let p0 = coordinate_projection(&sub, local.degree)?;
            let avg = averaged_projection(&local, &sub, &p0)?;
            split(rep, lift(&sub)?, out)?;
            split(rep, lift(&avg.complement)?, out)
        }
        Search::Irreducible(certificate) | Search::Unresolved(certificate) => {
            let irreducible = certificate != "unresolved";
            let basis = canonical(&basis)?;
            out.push(InvariantBlock {
                dimension: basis.len(),
                basis,
                irreducible,
                certificate,
            });
            Ok(())
        }
    }
}

fn canonical(basis: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, SemigroupError> {
    let (r, pivots) = RationalMatrix::from_rows(basis.to_vec())?.rref();
    Ok((0..pivots.len()).map(|i| r.row(i).to_vec()).collect())
}

enum Search {
    Split(Vec<Vec<Rational>>),
    Irreducible(&'static str),
    Unresolved(&'static str),
}

fn find_split(rep: &Representation) -> Result<Search, SemigroupError> {
    let w = rep.degree;
    if w == 1 {
        return Ok(Search::Irreducible("scalar_commutant"));
    }
    let comm = commutant(rep)?;
    if comm.len() == 1 {
        return Ok(Search::Irreducible("scalar_commutant"));
    }
    for x in candidates(rep, &comm)? {
        let x = integral(&x);
        if is_scalar(&x) {
            continue;
        }
        if x.det()?.is_zero() {
            return Ok(Search::Split(x.nullspace()));
        }
        let m = minimal_polynomial(&x)?;
        match factor_shape(&m) {
            Shape::Factor(g) => {
                let gx = eval_at(&g, &x)?;
                return Ok(Search::Split(gx.nullspace()));
            }
            Shape::Irreducible if m.len() - 1 == comm.len() => {
                return Ok(Search::Irreducible("field_commutant"));
            }
            _ => {}
        }
    }
    Ok(Search::Unresolved("unresolved"))
}

/// Class sums first (they are central), then commutant basis elements,
/// their products, and weighted sums `Σ s^i C_i`.
fn candidates(rep: &Representation, comm: &[RationalMatrix]) -> Result<Vec<RationalMatrix>, SemigroupError> {
    let h = &rep.subgroup;
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for i in 0..h.order() {
        let class: BTreeSet<usize> = (0..h.order())
            .map(|j| h.local_mul(h.local_mul(j, i), h.local_inverse(j)))
            .collect();
        if seen.insert(class.clone()) {
            let mut s = RationalMatrix::zeros(rep.degree, rep.degree);
            for &c in &class {
                s = s.add(&rep.matrices()[c])?;
            }
            out.push(s);
        }
    }
    out.extend(comm.iter().cloned());
    for a in comm {
        for b in comm {
            out.push(a.mul(b)?);
        }
    }
    for s in 2..=6i64 {
        let mut t = RationalMatrix::zeros(rep.degree, rep.degree);
        let mut weight = Rational::one();
        for b in comm {
            t = t.add(&b.scale(&weight))?;
            weight *= Rational::from_integer(BigInt::from(s));
        }
        out.push(t);
    }
    Ok(out)
}

fn is_scalar(x: &RationalMatrix) -> bool {
    let c = &x[(0, 0)];
    x.is_zero() || *x == RationalMatrix::identity(x.rows()).scale(c)
}

/// Clears denominators so the minimal polynomial is monic over the integers.
fn integral(x: &RationalMatrix) -> RationalMatrix {
    let l = x.entries().iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    x.scale(&Rational::from_integer(l))
}

/// Ascending coefficients, trailing zeros trimmed.
type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn minimal_polynomial(x: &RationalMatrix) -> Result<Poly, SemigroupError> {
    let d = x.rows();
    let mut powers = vec![RationalMatrix::identity(d)];
    loop {
        let next = powers.last().unwrap().mul(x)?;
        let cols: Vec<Vec<Rational>> = powers.iter().map(|p| p.entries().to_vec()).collect();
        let a = RationalMatrix::from_columns(&cols)?;
        if let Some(c) = a.solve_any(next.entries())? {
            let mut m: Poly = c.into_iter().map(|v| -v).collect();
            m.push(Rational::one());
            return Ok(m);
        }
        powers.push(next);
    }
}

fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = trim(a.clone());
    let b = trim(b.clone());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        q[k] = c;
        r.pop();
        r = trim(r);
    }
    (q, r)
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let (_, r) = divmod(&a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().cloned().unwrap_or_else(Rational::one);
    a.iter().map(|c| c / &lead).collect()
}

fn derivative(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn eval_at(p: &Poly, x: &RationalMatrix) -> Result<RationalMatrix, SemigroupError> {
    let d = x.rows();
    let mut acc = RationalMatrix::zeros(d, d);
    for c in p.iter().rev() {
        acc = acc.mul(x)?.add(&RationalMatrix::identity(d).scale(c))?;
    }
    Ok(acc)
}

enum Shape {
    Factor(Poly),
    Irreducible,
    Unknown,
}

/// `m` is monic with integer coefficients. Repeated factors are found
/// exactly via `gcd(m, m')`; otherwise monic integer factors are products
/// of subsets of the complex roots, which are rounded and confirmed by
/// exact division.
fn factor_shape(m: &Poly) -> Shape {
    let deg = m.len() - 1;
    if deg <= 1 {
        return Shape::Irreducible;
    }
    let g = gcd(m, &derivative(m));
    if g.len() > 1 {
        return Shape::Factor(g);
    }
    let Some(coeffs) = m.iter().map(|c| c.to_f64()).collect::<Option<Vec<f64>>>() else {
        return Shape::Unknown;
    };
    let Some(roots) = roots(&coeffs) else {
        return Shape::Unknown;
    };
    for mask in 1u32..(1 << deg) {
        let size = mask.count_ones() as usize;
        if size > deg / 2 {
            continue;
        }
        let mut f = vec![Complex64::new(1.0, 0.0)];
        for (i, r) in roots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let mut next = vec![Complex64::new(0.0, 0.0); f.len() + 1];
                for (k, c) in f.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * r;
                }
                f = next;
            }
        }
        if f.iter().any(|c| c.im.abs() > 0.25 || (c.re - c.re.round()).abs() > 0.25) {
            continue;
        }
        let candidate: Poly = f
            .iter()
            .map(|c| Rational::from_integer(BigInt::from(c.re.round() as i64)))
            .collect();
        if divmod(m, &candidate).1.is_empty() {
            return Shape::Factor(candidate);
        }
    }
    Shape::Irreducible
}

/// Durand–Kerner for a monic polynomial with distinct roots, then Newton polish.
fn roots(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let eval = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let deriv = |z: Complex64| {
        coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (i, &c)| acc * z + c * i as f64)
    };
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    let mut converged = false;
    for _ in 0..10_000 {
        let mut step = 0.0f64;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            if denom.norm() == 0.0 {
                return None;
            }
            let delta = eval(z[i]) / denom;
            z[i] -= delta;
            step = step.max(delta.norm() / (1.0 + z[i].norm()));
        }
        if step < 1e-14 {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let d = deriv(*r);
            if d.norm() == 0.0 {
                break;
            }
            *r -= eval(*r) / d;
        }
    }
    Some(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::semigroup::catalog;
    use crate::semigroup::rep::{regular_representation, Side};
    use crate::semigroup::SubgroupRecord;

    fn regular(t: &catalog::NamedSemigroup) -> Representation {
        regular_representation(&SubgroupRecord::whole_group(&t.table).unwrap(), Side::Left)
    }

    #[test]
    fn z2_splits_into_constants_and_zero_sum() {
        let blocks = decompose_invariants(&regular(&catalog::cyclic_group(2))).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.irreducible && b.dimension == 1));
        let bases: BTreeSet<Vec<Rational>> = blocks.iter().map(|b| b.basis[0].clone()).collect();
        assert!(bases.contains(&vec![int(1), int(1)]));
        assert!(bases.contains(&vec![int(1), int(-1)]));
    }

    #[test]
    fn z3_keeps_the_zero_sum_plane() {
        let blocks = decompose_invariants(&regular(&catalog::cyclic_group(3))).unwrap();
        let dims: Vec<usize> = blocks.iter().map(|b| b.dimension).collect();
        assert_eq!(dims, vec![1, 2]);
        assert_eq!(blocks[0].basis, vec![vec![int(1), int(1), int(1)]]);
        assert_eq!(blocks[1].certificate, "field_commutant");
        assert!(blocks[1].irreducible);
    }

    #[test]
    fn trivial_degree_one() {
        let h = SubgroupRecord::whole_group(&catalog::cyclic_group(4).table).unwrap();
        let blocks = decompose_invariants(&Representation::trivial(&h)).unwrap();
        assert_eq!(blocks.len(), 1);
        assert!(blocks[0].irreducible);
    }

    #[test]
    fn s3_regular() {
        // trivial + sign + two copies of the 2-dimensional representation
        let blocks = decompose_invariants(&regular(&catalog::symmetric_group(3))).unwrap();
        let dims: Vec<usize> = blocks.iter().map(|b| b.dimension).collect();
        assert_eq!(dims, vec![1, 1, 2, 2]);
        assert!(blocks.iter().all(|b| b.irreducible));
    }

    #[test]
    fn c4_and_c6() {
        // over Q: C4 = 1 + 1 + 2, C6 = 1 + 1 + 2 + 2
        let dims = |m| -> Vec<usize> {
            decompose_invariants(&regular(&catalog::cyclic_group(m)))
                .unwrap()
                .iter()
                .map(|b| b.dimension)
                .collect()
        };
        assert_eq!(dims(4), vec![1, 1, 2]);
        assert_eq!(dims(6), vec![1, 1, 2, 2]);
        assert_eq!(dims(5), vec![1, 4]);
    }

    #[test]
    fn degree_limit() {
        let blocks = decompose_invariants(&regular(&catalog::cyclic_group(9)));
        assert!(matches!(blocks, Err(SemigroupError::DegreeBound { degree: 9, limit: 8 })));
    }

    #[test]
    fn factor_helpers() {
        // (x^2 + x + 1)(x^2 - 2)
        let m: Poly = [-2, -2, -1, 1, 1].iter().map(|&c| int(c)).collect();
        match factor_shape(&m) {
            Shape::Factor(g) => assert!(divmod(&m, &g).1.is_empty() && g.len() == 3),
            _ => panic!("expected a quadratic factor"),
        }
        let irr: Poly = [1, 1, 1].iter().map(|&c| int(c)).collect();
        assert!(matches!(factor_shape(&irr), Shape::Irreducible));
        let sq: Poly = [1, 2, 1].iter().map(|&c| int(c)).collect();
        assert!(matches!(factor_shape(&sq), Shape::Factor(_)));
    }
}
