//! Worked examples replayed as executable checks, one anchor each.

use serde_json::{json, Value};

use smaralg_core::econ::{self, ModelPath, NON_PRODUCTIVE_LABEL};
use smaralg_core::linalg::{self, PrimeMatrix, SubfieldMatrix, SubfieldVector};
use smaralg_core::poly::{self as criteria, FermatFamily, RootVerdict, Truth};
use smaralg_core::poly::ModPolynomial;
use smaralg_core::rational::{int, rat, RationalMatrix};
use smaralg_core::ring::{self, ModulusRing, Subfield};
use smaralg_core::semigroup::{self, catalog, Side, SubgroupRecord};
use smaralg_core::semivector::{self, FiniteLattice, Semifield, SemivectorTuple, Space};

type Check = Result<(), String>;

pub struct Case {
    pub anchor: &'static str,
    pub check: fn() -> Check,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn zn(n: u64) -> ModulusRing {
    ModulusRing::new(n).expect("modulus >= 2")
}

fn field(n: u64, elements: &[u64]) -> Subfield {
    ring::scalar_field(&zn(n), elements).expect("fixed subfield")
}

fn poly(expr: &str, n: u64) -> Result<ModPolynomial, String> {
    ModPolynomial::parse_terms(expr, n).map_err(err)
}

fn element_sets(n: u64) -> Vec<(Vec<u64>, u64)> {
    ring::find_subfields(&zn(n))
        .into_iter()
        .map(|k| (k.elements().to_vec(), k.identity()))
        .collect()
}

fn z3_matrix() -> SubfieldMatrix {
    let k = field(3, &[0, 1, 2]);
    SubfieldMatrix::from_rows(&k, &[vec![1, 0, 0], vec![0, 2, 2], vec![0, 2, 2]]).expect("fixed matrix")
}

fn z6_matrix() -> SubfieldMatrix {
    let k = field(6, &[0, 2, 4]);
    SubfieldMatrix::from_rows(&k, &[vec![4, 0, 0], vec![0, 2, 2], vec![0, 2, 2]]).expect("fixed matrix")
}

fn is_eigenpair(a: &SubfieldMatrix, c: u64, v: &[u64]) -> Result<bool, String> {
    let vec = SubfieldVector::new(a.subfield(), v.to_vec()).map_err(err)?;
    let av = a.mul_vec(&vec).map_err(err)?;
    Ok(!vec.is_zero() && av.entries() == vec.scaled_in_ring(c))
}

/// Rank over the prime field of the given vectors, all inside `k`.
fn prime_rank(k: &Subfield, vs: &[Vec<u64>]) -> usize {
    let q = k.prime_order();
    let cols = vs[0].len();
    let data: Vec<u64> = vs
        .iter()
        .flat_map(|v| v.iter().map(|&x| k.to_prime(x).expect("in subfield")))
        .collect();
    PrimeMatrix::new(q, vs.len(), cols, data).rank()
}

fn nonneg(vs: &[&[u64]]) -> Vec<SemivectorTuple> {
    vs.iter().map(|v| SemivectorTuple::nonneg(v)).collect()
}

fn c4(ranks: &[u64]) -> Vec<SemivectorTuple> {
    let sf = Semifield::chain(4).expect("chain");
    ranks
        .iter()
        .map(|&r| SemivectorTuple::new(sf, vec![r]).expect("rank in chain"))
        .collect()
}

// ranks in the chain 0 < b < a < 1
const B: u64 = 1;
const A: u64 = 2;
const ONE: u64 = 3;
const C2_SCALARS: [u64; 2] = [0, 3];

fn whole_group(name: &str) -> SubgroupRecord {
    let s = catalog::by_name(name).expect("catalog name");
    SubgroupRecord::whole_group(&s.table).expect("group")
}

pub fn cases() -> Vec<Case> {
    vec![
        Case { anchor: "z6-subfields", check: || {
            let got = element_sets(6);
            ensure!(got == vec![(vec![0, 3], 3), (vec![0, 2, 4], 4)], "got {got:?}");
            Ok(())
        }},
        Case { anchor: "z12-subfield", check: || {
            let got = element_sets(12);
            ensure!(got == vec![(vec![0, 4, 8], 4)], "got {got:?}");
            Ok(())
        }},
        Case { anchor: "z15-subfields", check: || {
            let mut got = element_sets(15);
            got.sort();
            let want = vec![(vec![0, 3, 6, 9, 12], 6), (vec![0, 5, 10], 10)];
            ensure!(got == want, "got {got:?}");
            let q: Vec<u64> = ring::find_subfields(&zn(15)).iter().map(|k| k.prime_order()).collect();
            ensure!(q.contains(&3) && q.contains(&5), "prime orders {q:?}");
            Ok(())
        }},
        Case { anchor: "z6-subfield-0-3", check: || {
            let k = ring::certify_subfield(&zn(6), &[0, 3]).map_err(err)?;
            ensure!(k.identity() == 3 && k.prime_order() == 2, "got {k}");
            Ok(())
        }},
        Case { anchor: "z18-subfield-0-9", check: || {
            let got = element_sets(18);
            ensure!(got.contains(&(vec![0, 9], 9)), "got {got:?}");
            Ok(())
        }},
        Case { anchor: "cube-of-x-plus-1", check: || {
            let f = poly("x+1", 3)?;
            let p = f.mul(&f).map_err(err)?.mul(&f).map_err(err)?;
            ensure!(p == poly("x^3+1", 3)?, "got {p}");
            Ok(())
        }},
        Case { anchor: "product-with-coefficient-sum-zero", check: || {
            let p = poly("2x^2+1", 3)?.mul(&poly("x+1", 3)?).map_err(err)?;
            ensure!(p == poly("2x^3+2x^2+x+1", 3)?, "got {p}");
            Ok(())
        }},
        Case { anchor: "roots-x2-plus-1-z5", check: || {
            let r = criteria::roots_in(&poly("x^2+1", 5)?, &[0, 1, 2, 3, 4]);
            ensure!(r == vec![2, 3], "got {r:?}");
            Ok(())
        }},
        Case { anchor: "roots-x2-plus-2-z6", check: || {
            let r = criteria::roots_in(&poly("x^2+2", 6)?, &[0, 1, 2, 3, 4, 5]);
            ensure!(r == vec![2, 4], "got {r:?}");
            Ok(())
        }},
        Case { anchor: "rootless-x3-2x-1-z3", check: || {
            let r = criteria::roots_in(&poly("x^3+2x+1", 3)?, &[0, 1, 2]);
            ensure!(r.is_empty(), "got {r:?}");
            Ok(())
        }},
        Case { anchor: "coefficient-sum-criterion", check: || {
            let r = criteria::reducibility_report(&poly("2x^3+2x^2+x+1", 3)?).map_err(err)?;
            ensure!(r.criterion_coeff_sum && r.verdict == RootVerdict::HasRoot, "got {r:?}");
            ensure!(r.roots.contains(&2) && r.roots.contains(&1), "roots {:?}", r.roots);
            Ok(())
        }},
        Case { anchor: "xp-plus-1-criterion", check: || {
            let r = criteria::reducibility_report(&poly("x^3+1", 3)?).map_err(err)?;
            ensure!(r.criterion_xp_plus_1 && r.roots == vec![2] && r.verdict == RootVerdict::HasRoot, "got {r:?}");
            Ok(())
        }},
        Case { anchor: "rootless-degree-7-z7", check: || {
            let r = criteria::reducibility_report(&poly("2x^7+2x^5+4x+2", 7)?).map_err(err)?;
            let any = r.criterion_root || r.criterion_coeff_sum || r.criterion_equal_odd || r.criterion_xp_plus_1;
            ensure!(!any && r.roots.is_empty() && r.verdict == RootVerdict::Rootless, "got {r:?}");
            Ok(())
        }},
        Case { anchor: "xp-linear-c1-z3", check: || {
            let r = criteria::fermat_family_check(3, FermatFamily::XpLinear, 1).map_err(err)?;
            ensure!(r.verdict == RootVerdict::Rootless && r.polynomial == poly("x^3+2x+1", 3)?, "got {r:?}");
            Ok(())
        }},
        Case { anchor: "geometric-sum-c2-z5", check: || {
            let r = criteria::fermat_family_check(5, FermatFamily::GeometricSum, 2).map_err(err)?;
            ensure!(r.verdict == RootVerdict::Rootless && r.polynomial == poly("x^4+x^3+x^2+x+2", 5)?, "got {r:?}");
            Ok(())
        }},
        Case { anchor: "xp-linear-c2-z3", check: || {
            let r = criteria::fermat_family_check(3, FermatFamily::XpLinear, 2).map_err(err)?;
            ensure!(r.verdict == RootVerdict::Rootless && r.polynomial == poly("x^3+2x+2", 3)?, "got {r:?}");
            Ok(())
        }},
        Case { anchor: "power-sum-base-2-mod-5", check: || {
            let s = criteria::fermat_power_sum(5, 2, 5).map_err(err)?;
            ensure!(s.sum == 0 && s.congruent && s.equivalence_holds, "got {s:?}");
            Ok(())
        }},
        Case { anchor: "coefficient-sum-1-plus-2x", check: || {
            ensure!(criteria::coeff_sum_hom(&poly("1+2x", 3)?) == 0, "nonzero image");
            Ok(())
        }},
        Case { anchor: "coefficient-sum-2-plus-x", check: || {
            ensure!(criteria::coeff_sum_hom(&poly("2+x", 3)?) == 0, "nonzero image");
            Ok(())
        }},
        Case { anchor: "coefficient-sum-kernel-z3", check: || {
            let k = criteria::kernel_of_hom(3, 1).map_err(err)?;
            let want = vec![ModPolynomial::zero(3).map_err(err)?, poly("1+2x", 3)?, poly("2+x", 3)?];
            let mut got = k.kernel.clone();
            got.sort_by_key(|p| p.coeffs().to_vec());
            let mut want = want;
            want.sort_by_key(|p| p.coeffs().to_vec());
            ensure!(got == want, "got {:?}", k.kernel);
            Ok(())
        }},
        Case { anchor: "neutrosophic-x2-plus-2", check: || {
            let c = criteria::neutrosophic_classify(&poly("x^2+2", 6)?, &field(6, &[0, 3])).map_err(err)?;
            ensure!(c.truth == Truth::Indeterminate && c.alien_roots == vec![2, 4], "got {c:?}");
            Ok(())
        }},
        Case { anchor: "z6-eigenvector-0-4-4", check: || {
            ensure!(is_eigenpair(&z6_matrix(), 4, &[0, 4, 4])?, "A·v != 4v");
            Ok(())
        }},
        Case { anchor: "z6-kernel-vector-0-2-4", check: || {
            let a = z6_matrix();
            let v = SubfieldVector::new(a.subfield(), vec![0, 2, 4]).map_err(err)?;
            let av = a.mul_vec(&v).map_err(err)?;
            ensure!(av.is_zero(), "A·v = {:?}", av.entries());
            Ok(())
        }},
        Case { anchor: "z6-eigenspace-of-4", check: || {
            let a = z6_matrix();
            let k = a.subfield().clone();
            let shifted = a.sub(&SubfieldMatrix::scalar(&k, 3, 4).map_err(err)?).map_err(err)?;
            let r = linalg::rref_and_nullspace(&shifted);
            ensure!(r.nullspace.len() == 2, "nullity {}", r.nullspace.len());
            let expected = vec![vec![0, 4, 4], vec![4, 4, 4]];
            ensure!(prime_rank(&k, &expected) == 2, "expected vectors dependent");
            for v in &r.nullspace {
                let mut all = expected.clone();
                all.push(v.entries().to_vec());
                ensure!(prime_rank(&k, &all) == 2, "{:?} outside the expected span", v.entries());
            }
            Ok(())
        }},
        Case { anchor: "z3-characteristic-polynomial", check: || {
            let c = linalg::char_poly(&z3_matrix()).map_err(err)?;
            ensure!(c.prime_coeffs == vec![0, 1, 1, 1], "got {:?}", c.prime_coeffs);
            Ok(())
        }},
        Case { anchor: "z6-characteristic-roots", check: || {
            let c = linalg::char_poly(&z6_matrix()).map_err(err)?;
            let k = field(6, &[0, 2, 4]);
            let roots: Vec<u64> = k.elements().iter().copied().filter(|&l| c.zn_rendition[l as usize] == 0).collect();
            ensure!(roots == vec![0, 4], "got {roots:?}");
            Ok(())
        }},
        Case { anchor: "z3-characteristic-values", check: || {
            let a = z3_matrix();
            let e = linalg::eigen_system(&a).map_err(err)?;
            let vals: Vec<(u64, usize, usize)> = e
                .s_values
                .iter()
                .map(|s| (s.value, s.algebraic_multiplicity, s.geometric_multiplicity))
                .collect();
            ensure!(vals == vec![(1, 2, 2), (0, 1, 1)], "got {vals:?}");
            for v in [[0, 1, 1], [1, 1, 1]] {
                ensure!(is_eigenpair(&a, 1, &v)?, "{v:?} not in the 1-space");
            }
            ensure!(is_eigenpair(&a, 0, &[0, 2, 1])?, "(0,2,1) not in the 0-space");
            Ok(())
        }},
        Case { anchor: "z6-characteristic-values", check: || {
            let e = linalg::eigen_system(&z6_matrix()).map_err(err)?;
            let vals: Vec<(u64, usize)> = e.s_values.iter().map(|s| (s.value, s.algebraic_multiplicity)).collect();
            ensure!(vals == vec![(4, 2), (0, 1)] && e.diagonalizable, "got {vals:?}");
            Ok(())
        }},
        Case { anchor: "isotropic-polynomial-z3", check: || {
            let p = poly("1+x+x^2", 3)?;
            ensure!(!p.is_zero() && p.pseudo_inner(&p).map_err(err)? == 0, "nonzero product");
            Ok(())
        }},
        Case { anchor: "z3-spectral", check: || {
            let d = linalg::spectral_decompose(&z3_matrix()).map_err(err)?;
            let terms: Vec<(u64, usize)> = d.terms.iter().map(|t| (t.value, t.rank)).collect();
            ensure!(terms == vec![(1, 2), (0, 1)] && d.residual_ok, "got {terms:?}");
            Ok(())
        }},
        Case { anchor: "z6-spectral", check: || {
            let d = linalg::spectral_decompose(&z6_matrix()).map_err(err)?;
            let values: Vec<u64> = d.terms.iter().map(|t| t.value).collect();
            ensure!(values == vec![4, 0] && d.residual_ok, "got {values:?}");
            ensure!(d.orthogonality.iter().all(|o| o.orthogonal), "eigenspaces not orthogonal");
            Ok(())
        }},
        Case { anchor: "z6-self-adjoint", check: || {
            ensure!(linalg::self_adjoint_check(&z6_matrix()).map_err(err)?, "not self-adjoint");
            Ok(())
        }},
        Case { anchor: "z3-self-adjoint", check: || {
            ensure!(linalg::self_adjoint_check(&z3_matrix()).map_err(err)?, "not self-adjoint");
            Ok(())
        }},
        Case { anchor: "z3-left-right-isomorphic", check: || {
            let h = whole_group("C3");
            let left = semigroup::regular_representation(&h, Side::Left);
            let right = semigroup::regular_representation(&h, Side::Right);
            let report = semigroup::rep_isomorphic(&right, &left).map_err(err)?;
            ensure!(report.isomorphic, "reported non-isomorphic");
            let t = semigroup::left_right_intertwiner(&h).map_err(err)?;
            ensure!(t.invertible && t.intertwines, "inversion map fails");
            Ok(())
        }},
        Case { anchor: "semivector-1-3-not-in-span", check: || {
            let g = nonneg(&[&[1, 1], &[2, 1], &[3, 0]]);
            let r = semivector::span_membership(&SemivectorTuple::nonneg(&[1, 3]), &g, None).map_err(err)?;
            ensure!(!r.member, "found {:?}", r.coefficients);
            Ok(())
        }},
        Case { anchor: "semivector-three-independent", check: || {
            let v = nonneg(&[&[1, 1], &[2, 1], &[3, 0]]);
            let r = semivector::independence_check(&v, None).map_err(err)?;
            ensure!(r.independent, "witness {:?}", r.witness);
            Ok(())
        }},
        Case { anchor: "semivector-four-independent", check: || {
            let v = nonneg(&[&[1, 1], &[2, 1], &[3, 0], &[1, 3]]);
            let r = semivector::independence_check(&v, None).map_err(err)?;
            ensure!(r.independent, "witness {:?}", r.witness);
            Ok(())
        }},
        Case { anchor: "unit-vectors-span-dim-3", check: || {
            let g = nonneg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
            let r = semivector::spans_space(&g, &Space::FullTuples { dim: 3 }, None).map_err(err)?;
            ensure!(r.spans, "missing {:?}", r.missing);
            Ok(())
        }},
        Case { anchor: "independent-set-does-not-span", check: || {
            let g = nonneg(&[&[1, 1], &[2, 1], &[3, 0]]);
            let r = semivector::spans_space(&g, &Space::FullTuples { dim: 2 }, None).map_err(err)?;
            ensure!(!r.spans && r.missing.is_some(), "reported spanning");
            let m = semivector::span_membership(&SemivectorTuple::nonneg(&[1, 3]), &g, None).map_err(err)?;
            ensure!(!m.member, "(1,3) generated");
            Ok(())
        }},
        Case { anchor: "chain-c4-spanned-over-c2", check: || {
            let g = c4(&[ONE, A, B]);
            let r = semivector::spans_space(&g, &Space::Chain { size: 4 }, Some(&C2_SCALARS)).map_err(err)?;
            ensure!(r.spans, "missing {:?}", r.missing);
            Ok(())
        }},
        Case { anchor: "chain-c4-representations-of-top", check: || {
            let reps = semivector::enumerate_representations(&c4(&[ONE])[0], &c4(&[A, B, ONE]), Some(&C2_SCALARS))
                .map_err(err)?;
            ensure!(reps.len() == 4, "got {reps:?}");
            Ok(())
        }},
        Case { anchor: "chain-c4-representations-of-a", check: || {
            let reps = semivector::enumerate_representations(&c4(&[A])[0], &c4(&[A, B, ONE]), Some(&C2_SCALARS))
                .map_err(err)?;
            ensure!(reps.len() == 2, "got {reps:?}");
            Ok(())
        }},
        Case { anchor: "chain-lattice-semivector", check: || {
            let c = semivector::lattice_semivector_check(&FiniteLattice::chain(4).map_err(err)?);
            ensure!(c.holds, "failure {:?}", c.failure);
            Ok(())
        }},
        Case { anchor: "diamond-lattice-semivector", check: || {
            let c = semivector::lattice_semivector_check(&FiniteLattice::diamond());
            ensure!(c.holds, "failure {:?}", c.failure);
            Ok(())
        }},
        Case { anchor: "closed-exchange-ray", check: || {
            let a = RationalMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 4)], vec![rat(1, 2), rat(3, 4)]]).map_err(err)?;
            let s = econ::closed_solve(&a).map_err(err)?;
            ensure!(s.path == ModelPath::Classical && s.unique, "got {s:?}");
            ensure!(s.representative == Some(vec![rat(1, 3), rat(2, 3)]), "got {:?}", s.representative);
            Ok(())
        }},
        Case { anchor: "open-productive-2x2", check: || {
            let c = RationalMatrix::from_rows(vec![vec![rat(1, 5), rat(3, 10)], vec![rat(2, 5), rat(1, 10)]]).map_err(err)?;
            let s = econ::open_solve(&c, &[int(10), int(10)]).map_err(err)?;
            ensure!(s.productive && s.row_sums_below_one && s.x == vec![int(20), int(20)], "got {s:?}");
            Ok(())
        }},
        Case { anchor: "open-non-productive-label", check: || {
            let c = RationalMatrix::from_i64_rows(&[&[2, 0], &[0, 0]]);
            let s = econ::open_solve(&c, &[int(1), int(1)]).map_err(err)?;
            ensure!(!s.productive && s.label == Some(NON_PRODUCTIVE_LABEL), "got {s:?}");
            Ok(())
        }},
        Case { anchor: "cli-subfields-6", check: || {
            let out = crate::execute(["smaralg", "subfields", "6"]);
            ensure!(out.exit == 0, "exit {}", out.exit);
            let v: Value = serde_json::from_str(&out.stdout).map_err(err)?;
            let sets: Vec<Value> = v["payload"]["subfields"]
                .as_array()
                .ok_or("no subfield list")?
                .iter()
                .map(|k| k["elements"].clone())
                .collect();
            ensure!(sets == vec![json!([0, 3]), json!([0, 2, 4])], "got {sets:?}");
            Ok(())
        }},
        Case { anchor: "cli-z6-spectral", check: || {
            let m = r#"{"n":6,"subfield":[0,2,4],"rows":3,"cols":3,"entries":[4,0,0,0,2,2,0,2,2]}"#;
            let out = crate::execute(["smaralg", "spectral", "--matrix", m]);
            ensure!(out.exit == 0, "exit {}", out.exit);
            let v: Value = serde_json::from_str(&out.stdout).map_err(err)?;
            let values: Vec<Value> = v["payload"]["terms"]
                .as_array()
                .ok_or("no terms")?
                .iter()
                .map(|t| t["value"].clone())
                .collect();
            ensure!(values == vec![json!(4), json!(0)], "got {values:?}");
            Ok(())
        }},
    ]
}

pub fn replay() -> Value {
    let results: Vec<Value> = cases()
        .into_iter()
        .map(|c| match (c.check)() {
            Ok(()) => json!({ "anchor": c.anchor, "passed": true }),
            Err(detail) => json!({ "anchor": c.anchor, "passed": false, "detail": detail }),
        })
        .collect();
    let failed = results.iter().filter(|r| r["passed"] == json!(false)).count();
    json!({
        "total": results.len(),
        "failed": failed,
        "all_passed": failed == 0,
        "cases": results,
    })
}

/// `PASS anchor` / `FAIL anchor: detail` lines for `--pretty`.
pub fn table(payload: &Value) -> String {
    let mut out = String::new();
    for c in payload["cases"].as_array().into_iter().flatten() {
        let anchor = c["anchor"].as_str().unwrap_or("?");
        if c["passed"] == json!(true) {
            out.push_str(&format!("PASS {anchor}\n"));
        } else {
            out.push_str(&format!("FAIL {anchor}: {}\n", c["detail"].as_str().unwrap_or("")));
        }
    }
    out
}
