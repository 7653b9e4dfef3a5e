use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::table::SubgroupRecord;
use super::SemigroupError;
use crate::rational::{in_span, int, span_rank, Rational, RationalMatrix};

/// A homomorphism from a finite group into invertible rational matrices.
/// `matrices[i]` is the image of `subgroup.elements[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub subgroup: SubgroupRecord,
    pub degree: usize,
    #[serde(serialize_with = "by_element")]
    matrices: Vec<RationalMatrix>,
    #[serde(skip)]
    elements: Vec<usize>,
}

fn by_element<S: Serializer>(ms: &[RationalMatrix], s: S) -> Result<S::Ok, S::Error> {
    // keys are positions; the subgroup field names the elements
    let map: BTreeMap<usize, &RationalMatrix> = ms.iter().enumerate().collect();
    map.serialize(s)
}

impl Representation {
    /// Checks shapes, `M(e) = I`, the homomorphism law and `M(x)M(x⁻¹) = I`.
    pub fn new(subgroup: SubgroupRecord, matrices: Vec<RationalMatrix>) -> Result<Self, SemigroupError> {
        let h = subgroup.order();
        if matrices.len() != h {
            return Err(SemigroupError::Malformed(format!("{} matrices for a group of order {h}", matrices.len())));
        }
        let degree = matrices[0].rows();
        if matrices.iter().any(|m| m.rows() != degree || m.cols() != degree) {
            return Err(SemigroupError::Malformed("matrices must share one square shape".into()));
        }
        let id = RationalMatrix::identity(degree);
        let e = subgroup.position(subgroup.identity).expect("identity is a member");
        if matrices[e] != id {
            return Err(SemigroupError::NotHomomorphism {
                x: subgroup.identity,
                y: subgroup.identity,
            });
        }
        for i in 0..h {
            for j in 0..h {
                let prod = matrices[i].mul(&matrices[j])?;
                if prod != matrices[subgroup.local_mul(i, j)] {
                    return Err(SemigroupError::NotHomomorphism {
                        x: subgroup.elements[i],
                        y: subgroup.elements[j],
                    });
                }
            }
            if matrices[i].mul(&matrices[subgroup.local_inverse(i)])? != id {
                return Err(SemigroupError::NotHomomorphism {
                    x: subgroup.elements[i],
                    y: subgroup.inverse(subgroup.elements[i]),
                });
            }
        }
        Ok(Representation {
            elements: subgroup.elements.clone(),
            subgroup,
            degree,
            matrices,
        })
    }

    pub fn matrix(&self, x: usize) -> &RationalMatrix {
        &self.matrices[self.subgroup.position(x).expect("member of the subgroup")]
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Degree-1 representation sending every element to `[1]`.
    pub fn trivial(subgroup: &SubgroupRecord) -> Self {
        let ms = vec![RationalMatrix::identity(1); subgroup.order()];
        Self::new(subgroup.clone(), ms).expect("constant identity is a homomorphism")
    }

    /// Same group acting through `P⁻¹ M(x) P`.
    pub fn conjugate(&self, p: &RationalMatrix) -> Result<Self, SemigroupError> {
        let inv = p
            .inverse()?
            .ok_or_else(|| SemigroupError::Malformed("change of basis is singular".into()))?;
        let ms = self
            .matrices
            .iter()
            .map(|m| inv.mul(m)?.mul(p))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.subgroup.clone(), ms)
    }
}

fn permutation_matrix(images: &[usize]) -> RationalMatrix {
    // column b carries e_b to e_{images[b]}
    let d = images.len();
    let mut m = RationalMatrix::zeros(d, d);
    for (b, &t) in images.iter().enumerate() {
        m[(t, b)] = Rational::one();
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Basis `φ_w` indexed like `subgroup.elements`. Left sends `φ_w` to
/// `φ_{xw}`; right sends `φ_w` to `φ_{wx⁻¹}`, which is what `f ↦ f(·x)`
/// does to indicators and keeps `M(x)M(y) = M(xy)`.
pub fn regular_representation(h: &SubgroupRecord, side: Side) -> Representation {
    let n = h.order();
    let ms = (0..n)
        .map(|x| {
            let images: Vec<usize> = (0..n)
                .map(|w| match side {
                    Side::Left => h.local_mul(x, w),
                    Side::Right => h.local_mul(w, h.local_inverse(x)),
                })
                .collect();
            permutation_matrix(&images)
        })
        .collect();
    Representation::new(h.clone(), ms).expect("regular action is a homomorphism")
}

/// `action[x]` lists `π_x(b)` for each point `b`; the matrices send `ψ_b` to `ψ_{π_x(b)}`.
pub fn permutation_representation(
    h: &SubgroupRecord,
    action: &BTreeMap<usize, Vec<usize>>,
) -> Result<Representation, SemigroupError> {
    let mut perms = Vec::with_capacity(h.order());
    let mut points = None;
    for &x in &h.elements {
        let p = action
            .get(&x)
            .ok_or_else(|| SemigroupError::Malformed(format!("no action given for {x}")))?;
        let size = *points.get_or_insert(p.len());
        let mut seen = vec![false; size];
        if p.len() != size || p.iter().any(|&b| b >= size || std::mem::replace(&mut seen[b], true)) {
            return Err(SemigroupError::ActionNotBijective { element: x });
        }
        perms.push(p.clone());
    }
    for (i, &x) in h.elements.iter().enumerate() {
        for (j, &y) in h.elements.iter().enumerate() {
            let xy = &perms[h.local_mul(i, j)];
            if let Some(b) = (0..xy.len()).find(|&b| perms[i][perms[j][b]] != xy[b]) {
                return Err(SemigroupError::ActionNotHomomorphic { x, y, point: b });
            }
        }
    }
    let ms = perms.iter().map(|p| permutation_matrix(p)).collect();
    Representation::new(h.clone(), ms)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Intertwiner {
    pub matrix: RationalMatrix,
    pub invertible: bool,
    /// `T·R(x) = L(x)·T` for every `x`.
    pub intertwines: bool,
}

/// `T(φ_a) = φ_{a⁻¹}`, carrying the right regular representation onto the left.
pub fn left_right_intertwiner(h: &SubgroupRecord) -> Result<Intertwiner, SemigroupError> {
    let images: Vec<usize> = (0..h.order()).map(|a| h.local_inverse(a)).collect();
    let t = permutation_matrix(&images);
    let left = regular_representation(h, Side::Left);
    let right = regular_representation(h, Side::Right);
    let mut intertwines = true;
    for (l, r) in left.matrices().iter().zip(right.matrices()) {
        intertwines &= t.mul(r)? == l.mul(&t)?;
    }
    Ok(Intertwiner {
        invertible: t.det()? != Rational::zero(),
        intertwines,
        matrix: t,
    })
}

/// Projection onto `span(w_basis)` along the span of the unit vectors not
/// needed to complete it to a basis.
pub fn coordinate_projection(w_basis: &[Vec<Rational>], dim: usize) -> Result<RationalMatrix, SemigroupError> {
    let mut cols: Vec<Vec<Rational>> = w_basis.to_vec();
    let w = span_rank(&cols);
    if w != cols.len() {
        return Err(SemigroupError::Malformed("subspace basis is dependent".into()));
    }
    for i in 0..dim {
        let mut unit = vec![Rational::zero(); dim];
        unit[i] = Rational::one();
        if !in_span(&cols, &unit) {
            cols.push(unit);
        }
    }
    let q = RationalMatrix::from_columns(&cols)?;
    let mut d = RationalMatrix::zeros(dim, dim);
    for i in 0..w {
        d[(i, i)] = Rational::one();
    }
    let q_inv = q.inverse()?.expect("completed basis is invertible");
    Ok(q.mul(&d)?.mul(&q_inv)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AveragedProjection {
    pub projection: RationalMatrix,
    #[serde(with = "crate::rational::serde_vecs")]
    pub complement: Vec<Vec<Rational>>,
}

/// `P = (1/|H|) Σ M(x) P0 M(x)⁻¹`, a projection onto `W` commuting with
/// the representation; its kernel is an invariant complement.
pub fn averaged_projection(
    rep: &Representation,
    w_basis: &[Vec<Rational>],
    p0: &RationalMatrix,
) -> Result<AveragedProjection, SemigroupError> {
    let d = rep.degree;
    if p0.rows() != d || p0.cols() != d {
        return Err(SemigroupError::NotProjection("P0 has the wrong shape".into()));
    }
    if w_basis.iter().any(|v| v.len() != d) || span_rank(w_basis) != w_basis.len() {
        return Err(SemigroupError::Malformed("W needs an independent basis of the right length".into()));
    }
    for (&x, m) in rep.elements().iter().zip(rep.matrices()) {
        for b in w_basis {
            if !in_span(w_basis, &m.mul_vec(b)?) {
                return Err(SemigroupError::NotInvariant { element: x });
            }
        }
    }
    if p0.mul(p0)? != *p0 {
        return Err(SemigroupError::NotProjection("P0 is not idempotent".into()));
    }
    if p0.rank() != w_basis.len() || (0..d).any(|j| !in_span(w_basis, &p0.col(j))) {
        return Err(SemigroupError::NotProjection("range of P0 is not W".into()));
    }

    let h = &rep.subgroup;
    let mut sum = RationalMatrix::zeros(d, d);
    for i in 0..h.order() {
        let m = &rep.matrices()[i];
        let m_inv = &rep.matrices()[h.local_inverse(i)];
        sum = sum.add(&m.mul(p0)?.mul(m_inv)?)?;
    }
    let p = sum.scale(&Rational::new(1.into(), (h.order() as i64).into()));

    let check = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(SemigroupError::Verification(what.to_string()))
        }
    };
    check(p.mul(&p)? == p, "averaged operator is not idempotent")?;
    for b in w_basis {
        check(p.mul_vec(b)? == *b, "averaged operator moves W")?;
    }
    check(p.rank() == w_basis.len(), "range of the averaged operator is not W")?;
    for m in rep.matrices() {
        check(m.mul(&p)? == p.mul(m)?, "averaged operator does not commute")?;
    }
    let complement = p.nullspace();
    let mut all = w_basis.to_vec();
    all.extend(complement.iter().cloned());
    check(span_rank(&all) == d, "W and the complement do not fill the space")?;
    for m in rep.matrices() {
        for z in &complement {
            check(in_span(&complement, &m.mul_vec(z)?), "complement is not invariant")?;
        }
    }
    Ok(AveragedProjection { projection: p, complement })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub isomorphic: bool,
    pub reason: String,
    /// Dimension of `{T : T·M1(x) = M2(x)·T}`.
    pub solution_dimension: usize,
    pub intertwiner: Option<RationalMatrix>,
}

fn intertwiner_space(m1: &[RationalMatrix], m2: &[RationalMatrix]) -> Result<Vec<RationalMatrix>, SemigroupError> {
    let (d1, d2) = (m1[0].rows(), m2[0].rows());
    // unknown T[i][k] at index i * d1 + k
    let mut rows = Vec::new();
    for (a, b) in m1.iter().zip(m2) {
        for i in 0..d2 {
            for j in 0..d1 {
                let mut eq = vec![Rational::zero(); d2 * d1];
                for k in 0..d1 {
                    eq[i * d1 + k] += &a[(k, j)];
                }
                for k in 0..d2 {
                    eq[k * d1 + j] -= &b[(i, k)];
                }
                rows.push(eq);
            }
        }
    }
    let system = RationalMatrix::from_rows(rows)?;
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            RationalMatrix::from_rows(v.chunks(d1).map(<[Rational]>::to_vec).collect()).map_err(Into::into)
        })
        .collect()
}

/// Solves `T·M1(x) = M2(x)·T` and looks for an invertible solution by
/// evaluating `det(Σ s^i B_i)` at `d·dim + 1` integer points `s`.
pub fn rep_isomorphic(rep1: &Representation, rep2: &Representation) -> Result<IsomorphismReport, SemigroupError> {
    if !rep1.subgroup.same_group(&rep2.subgroup) {
        return Err(SemigroupError::SubgroupMismatch);
    }
    let space = intertwiner_space(rep1.matrices(), rep2.matrices())?;
    if rep1.degree != rep2.degree {
        return Ok(IsomorphismReport {
            isomorphic: false,
            reason: format!("degrees differ: {} vs {}", rep1.degree, rep2.degree),
            solution_dimension: space.len(),
            intertwiner: None,
        });
    }
    let d = rep1.degree;
    if space.is_empty() {
        return Ok(IsomorphismReport {
            isomorphic: false,
            reason: "only the zero map intertwines".into(),
            solution_dimension: 0,
            intertwiner: None,
        });
    }
    let points = d * space.len() + 1;
    for s in (d + 1)..(d + 1 + points) {
        let mut t = RationalMatrix::zeros(d, d);
        let mut weight = Rational::one();
        for b in &space {
            t = t.add(&b.scale(&weight))?;
            weight *= int(s as i64);
        }
        if t.det()? != Rational::zero() {
            return Ok(IsomorphismReport {
                isomorphic: true,
                reason: format!("invertible intertwiner at weight base {s}"),
                solution_dimension: space.len(),
                intertwiner: Some(t),
            });
        }
    }
    Ok(IsomorphismReport {
        isomorphic: false,
        reason: format!("det vanishes at all {points} sample points, so it vanishes identically"),
        solution_dimension: space.len(),
        intertwiner: None,
    })
}

/// Basis of the commutant `{X : X·M(x) = M(x)·X}`.
pub fn commutant(rep: &Representation) -> Result<Vec<RationalMatrix>, SemigroupError> {
    intertwiner_space(rep.matrices(), rep.matrices())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::semigroup::catalog;
    use crate::semigroup::table::{find_subgroups, SubgroupRecord};

    fn group(t: &catalog::NamedSemigroup) -> SubgroupRecord {
        SubgroupRecord::whole_group(&t.table).unwrap()
    }

    #[test]
    fn z2_regular() {
        let h = &find_subgroups(&catalog::full_transformation_monoid(2).table)[0];
        let l = regular_representation(h, Side::Left);
        assert_eq!(l.matrix(1), &RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]));
        assert!(l.matrix(0).is_identity());
    }

    #[test]
    fn s3_left_and_right_commute() {
        let h = group(&catalog::symmetric_group(3));
        let l = regular_representation(&h, Side::Left);
        let r = regular_representation(&h, Side::Right);
        for a in l.matrices() {
            for b in r.matrices() {
                assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
            }
        }
    }

    #[test]
    fn right_rule_with_wx_fails_for_s3() {
        // φ_w ↦ φ_{wx} reverses products on a non-abelian group
        let h = group(&catalog::symmetric_group(3));
        let ms: Vec<RationalMatrix> = (0..6)
            .map(|x| permutation_matrix(&(0..6).map(|w| h.local_mul(w, x)).collect::<Vec<_>>()))
            .collect();
        assert!(matches!(Representation::new(h, ms), Err(SemigroupError::NotHomomorphism { .. })));
    }

    #[test]
    fn permutation_reps() {
        let s3 = group(&catalog::symmetric_group(3));
        let labels = catalog::symmetric_group(3).labels;
        let action: BTreeMap<usize, Vec<usize>> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (i, serde_json::from_str(l).unwrap()))
            .collect();
        let rep = permutation_representation(&s3, &action).unwrap();
        assert_eq!(rep.degree, 3);

        let trivial: BTreeMap<usize, Vec<usize>> = (0..6).map(|i| (i, vec![0, 1, 2])).collect();
        let rep = permutation_representation(&s3, &trivial).unwrap();
        assert!(rep.matrices().iter().all(RationalMatrix::is_identity));

        let mut broken = trivial.clone();
        broken.insert(1, vec![0, 0, 2]);
        assert!(matches!(
            permutation_representation(&s3, &broken),
            Err(SemigroupError::ActionNotBijective { element: 1 })
        ));
        let mut bad_hom = trivial;
        bad_hom.insert(1, vec![1, 0, 2]);
        assert!(matches!(
            permutation_representation(&s3, &bad_hom),
            Err(SemigroupError::ActionNotHomomorphic { .. })
        ));
    }

    #[test]
    fn z2_action_matches_regular() {
        let h = group(&catalog::cyclic_group(2));
        let action: BTreeMap<usize, Vec<usize>> = [(0, vec![0, 1]), (1, vec![1, 0])].into();
        let p = permutation_representation(&h, &action).unwrap();
        assert_eq!(p.matrices(), regular_representation(&h, Side::Left).matrices());
    }

    #[test]
    fn intertwiners() {
        let z3 = group(&catalog::cyclic_group(3));
        let t = left_right_intertwiner(&z3).unwrap();
        assert!(t.invertible && t.intertwines);
        assert_eq!(t.matrix, RationalMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]));
        let z1 = group(&catalog::cyclic_group(1));
        assert_eq!(left_right_intertwiner(&z1).unwrap().matrix, RationalMatrix::identity(1));
    }

    #[test]
    fn mean_projection_on_z2() {
        let h = group(&catalog::cyclic_group(2));
        let rep = regular_representation(&h, Side::Left);
        let w = vec![vec![int(1), int(1)]];
        let p0 = RationalMatrix::from_i64_rows(&[&[1, 0], &[1, 0]]);
        let avg = averaged_projection(&rep, &w, &p0).unwrap();
        let half = rat(1, 2);
        assert_eq!(
            avg.projection,
            RationalMatrix::from_rows(vec![vec![half.clone(), half.clone()], vec![half.clone(), half]]).unwrap()
        );
        assert_eq!(avg.complement, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn full_space_projection_is_identity() {
        let h = group(&catalog::symmetric_group(3));
        let rep = regular_representation(&h, Side::Right);
        let w: Vec<Vec<Rational>> = (0..6)
            .map(|i| (0..6).map(|j| if i == j { int(1) } else { int(0) }).collect())
            .collect();
        let avg = averaged_projection(&rep, &w, &RationalMatrix::identity(6)).unwrap();
        assert!(avg.projection.is_identity());
        assert!(avg.complement.is_empty());
    }

    #[test]
    fn s3_constants() {
        let h = group(&catalog::symmetric_group(3));
        let rep = regular_representation(&h, Side::Left);
        let w = vec![vec![int(1); 6]];
        let p0 = coordinate_projection(&w, 6).unwrap();
        let avg = averaged_projection(&rep, &w, &p0).unwrap();
        let sixth = rat(1, 6);
        assert!(avg.projection.entries().iter().all(|a| *a == sixth));
        assert_eq!(avg.complement.len(), 5);
        for z in &avg.complement {
            assert_eq!(z.iter().sum::<Rational>(), int(0));
        }
    }

    #[test]
    fn projection_preconditions() {
        let h = group(&catalog::cyclic_group(2));
        let rep = regular_representation(&h, Side::Left);
        let w = vec![vec![int(1), int(0)]];
        let p0 = RationalMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]);
        assert_eq!(
            averaged_projection(&rep, &w, &p0),
            Err(SemigroupError::NotInvariant { element: 1 })
        );
        let w = vec![vec![int(1), int(1)]];
        let bad = RationalMatrix::from_i64_rows(&[&[2, 0], &[0, 0]]);
        assert!(matches!(averaged_projection(&rep, &w, &bad), Err(SemigroupError::NotProjection(_))));
    }

    #[test]
    fn isomorphism_checks() {
        let z3 = group(&catalog::cyclic_group(3));
        let l = regular_representation(&z3, Side::Left);
        let r = regular_representation(&z3, Side::Right);
        let rep = rep_isomorphic(&r, &l).unwrap();
        assert!(rep.isomorphic);
        let t = rep.intertwiner.unwrap();
        for (a, b) in r.matrices().iter().zip(l.matrices()) {
            assert_eq!(t.mul(a).unwrap(), b.mul(&t).unwrap());
        }

        let z2 = group(&catalog::cyclic_group(2));
        let rep = rep_isomorphic(&Representation::trivial(&z2), &regular_representation(&z2, Side::Left)).unwrap();
        assert!(!rep.isomorphic);

        let a: BTreeMap<usize, Vec<usize>> = [(0, vec![0, 1]), (1, vec![1, 0])].into();
        let p1 = permutation_representation(&z2, &a).unwrap();
        let relabeled = p1.conjugate(&RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(rep_isomorphic(&p1, &relabeled).unwrap().isomorphic);

        // sign and trivial of Z2 are not isomorphic
        let sign = Representation::new(
            z2.clone(),
            vec![RationalMatrix::identity(1), RationalMatrix::from_i64_rows(&[&[-1]])],
        )
        .unwrap();
        let rep = rep_isomorphic(&sign, &Representation::trivial(&z2)).unwrap();
        assert!(!rep.isomorphic);
        assert_eq!(rep.solution_dimension, 0);

        let z3b = group(&catalog::cyclic_group(3));
        assert!(rep_isomorphic(&Representation::trivial(&z2), &Representation::trivial(&z3b)).is_err());
    }
}
