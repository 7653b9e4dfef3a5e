//! Acceptance criteria 1-11. Each prints one PASS/FAIL line; the test fails
//! if any criterion fails or exceeds its time limit.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use smaralg_core::econ::{self, NON_PRODUCTIVE_LABEL};
use smaralg_core::linalg::{self, PrimeMatrix, SubfieldMatrix, SubfieldVector};
use smaralg_core::poly::{self, FermatFamily, ModPolynomial, RootVerdict, Truth};
use smaralg_core::rational::{int, rat, Rational, RationalMatrix};
use smaralg_core::ring::{self, ModulusRing, Subfield};
use smaralg_core::semigroup::{self, catalog, Side, SubgroupRecord};
use smaralg_core::semivector::{self, Semifield, SemivectorTuple, Space};

type Check = Result<(), String>;

/// (id, name, time limit in ms, check)
type Criterion = (u32, &'static str, u64, fn() -> Check);

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
    ModulusRing::new(n).unwrap()
}

fn field(n: u64, el: &[u64]) -> Subfield {
    ring::scalar_field(&zn(n), el).unwrap()
}

fn p(expr: &str, n: u64) -> ModPolynomial {
    ModPolynomial::parse_terms(expr, n).unwrap()
}

fn sets(n: u64) -> BTreeSet<(Vec<u64>, u64)> {
    ring::find_subfields(&zn(n))
        .into_iter()
        .map(|k| (k.elements().to_vec(), k.identity()))
        .collect()
}

// ---- 1 ----

fn subfield_discovery() -> Check {
    let want6: BTreeSet<_> = [(vec![0, 3], 3), (vec![0, 2, 4], 4)].into_iter().collect();
    ensure!(sets(6) == want6, "Z6: {:?}", sets(6));
    ensure!(sets(12).contains(&(vec![0, 4, 8], 4)), "Z12: {:?}", sets(12));
    let want15: BTreeSet<_> = [(vec![0, 5, 10], 10), (vec![0, 3, 6, 9, 12], 6)].into_iter().collect();
    ensure!(sets(15) == want15, "Z15: {:?}", sets(15));
    ensure!(sets(18).contains(&(vec![0, 9], 9)), "Z18: {:?}", sets(18));
    for n in 2..=64 {
        let fast = ring::find_subfields(&zn(n));
        let slow = ring::subfield_oracle(&zn(n)).map_err(err)?;
        ensure!(fast == slow, "n = {n}: {fast:?} vs oracle {slow:?}");
    }
    Ok(())
}

// ---- 2, 3 ----

fn z3_matrix() -> SubfieldMatrix {
    SubfieldMatrix::from_rows(&field(3, &[0, 1, 2]), &[vec![1, 0, 0], vec![0, 2, 2], vec![0, 2, 2]]).unwrap()
}

fn z6_matrix() -> SubfieldMatrix {
    SubfieldMatrix::from_rows(&field(6, &[0, 2, 4]), &[vec![4, 0, 0], vec![0, 2, 2], vec![0, 2, 2]]).unwrap()
}

fn eigenpair(a: &SubfieldMatrix, c: u64, v: &[u64]) -> bool {
    let v = SubfieldVector::new(a.subfield(), v.to_vec()).unwrap();
    !v.is_zero() && a.mul_vec(&v).unwrap().entries() == v.scaled_in_ring(c)
}

fn reconstruct(d: &linalg::SpectralDecomposition, like: &SubfieldMatrix) -> Result<SubfieldMatrix, String> {
    let k = like.subfield();
    let mut sum = SubfieldMatrix::zeros(k, like.rows(), like.cols()).map_err(err)?;
    for t in &d.terms {
        sum = sum.add(&t.projection.scale(t.value).map_err(err)?).map_err(err)?;
    }
    Ok(sum)
}

fn prime_rank(k: &Subfield, vs: &[Vec<u64>]) -> usize {
    let data: Vec<u64> = vs.iter().flatten().map(|&x| k.to_prime(x).unwrap()).collect();
    PrimeMatrix::new(k.prime_order(), vs.len(), vs[0].len(), data).rank()
}

fn z3_spectral() -> Check {
    let a = z3_matrix();
    let c = linalg::char_poly(&a).map_err(err)?;
    // λ³ + λ² + λ, ascending
    ensure!(c.prime_coeffs == vec![0, 1, 1, 1], "char poly {:?}", c.prime_coeffs);
    let e = linalg::eigen_system(&a).map_err(err)?;
    let vals: Vec<_> = e
        .s_values
        .iter()
        .map(|s| (s.value, s.algebraic_multiplicity, s.basis.len()))
        .collect();
    ensure!(vals == vec![(1, 2, 2), (0, 1, 1)], "s-values {vals:?}");
    ensure!(eigenpair(&a, 1, &[0, 1, 1]) && eigenpair(&a, 1, &[1, 1, 1]), "1-space vectors");
    ensure!(eigenpair(&a, 0, &[0, 2, 1]), "0-space vector");
    let d = linalg::spectral_decompose(&a).map_err(err)?;
    let terms: Vec<_> = d.terms.iter().map(|t| (t.value, t.rank)).collect();
    ensure!(terms == vec![(1, 2), (0, 1)], "terms {terms:?}");
    ensure!(d.residual_ok && reconstruct(&d, &a)? == a, "reconstruction");
    Ok(())
}

fn z6_spectral() -> Check {
    let a = z6_matrix();
    let k = a.subfield().clone();
    let e = linalg::eigen_system(&a).map_err(err)?;
    let mut vals: Vec<u64> = Vec::new();
    for s in &e.s_values {
        vals.extend(std::iter::repeat_n(s.value, s.algebraic_multiplicity));
    }
    ensure!(vals == vec![4, 4, 0], "s-values {vals:?}");
    ensure!(a.transpose() == a, "not symmetric");
    let bases: Vec<Vec<u64>> = e
        .s_values
        .iter()
        .flat_map(|s| s.basis.iter().map(|v| v.entries().to_vec()))
        .collect();
    // W1 ∩ W2 = {0} iff the joint basis stays independent
    ensure!(prime_rank(&k, &bases) == bases.len(), "eigenspaces intersect");
    let d = linalg::spectral_decompose(&a).map_err(err)?;
    let values: Vec<u64> = d.terms.iter().map(|t| t.value).collect();
    ensure!(values == vec![4, 0], "terms {values:?}");
    ensure!(d.residual_ok && reconstruct(&d, &a)? == a, "reconstruction");
    ensure!(!d.orthogonality.is_empty() && d.orthogonality.iter().all(|o| o.orthogonal), "orthogonality");
    let (w1, w2) = (&e.s_values[0].basis, &e.s_values[1].basis);
    for u in w1 {
        for v in w2 {
            ensure!(linalg::pseudo_inner_product(u, v).map_err(err)? == 0, "<u,v> != 0");
        }
    }
    Ok(())
}

// ---- 4 ----

fn polynomial_criteria() -> Check {
    for q in [3u64, 5, 7, 11] {
        for c in 1..q {
            let r = poly::fermat_family_check(q, FermatFamily::XpLinear, c).map_err(err)?;
            ensure!(r.verdict == RootVerdict::Rootless, "x^p family p={q} c={c}: {:?}", r.witnesses);
        }
        for c in 2..q {
            let r = poly::fermat_family_check(q, FermatFamily::GeometricSum, c).map_err(err)?;
            ensure!(r.verdict == RootVerdict::Rootless, "geometric p={q} c={c}: {:?}", r.witnesses);
        }
    }
    ensure!(poly::roots_in(&p("x^2+1", 5), &[0, 1, 2, 3, 4]) == vec![2, 3], "x^2+1 mod 5");
    let r = poly::reducibility_report(&p("2x^3+2x^2+x+1", 3)).map_err(err)?;
    ensure!(r.criterion_coeff_sum && r.verdict == RootVerdict::HasRoot, "coefficient-sum example");
    let f = p("x+1", 3);
    ensure!(f.mul(&f).unwrap().mul(&f).unwrap() == p("x^3+1", 3), "cube");
    let r = poly::reducibility_report(&p("x^3+1", 3)).map_err(err)?;
    ensure!(r.criterion_xp_plus_1 && r.roots == vec![2], "x^p+1 example");
    let r = poly::reducibility_report(&p("2x^7+2x^5+4x+2", 7)).map_err(err)?;
    ensure!(r.verdict == RootVerdict::Rootless && r.roots.is_empty(), "degree-7 example");
    for (c, text) in [(1, "x^3+2x+1"), (2, "x^3+2x+2")] {
        let r = poly::fermat_family_check(3, FermatFamily::XpLinear, c).map_err(err)?;
        ensure!(r.polynomial == p(text, 3) && r.verdict == RootVerdict::Rootless, "{text}");
    }
    let r = poly::fermat_family_check(5, FermatFamily::GeometricSum, 2).map_err(err)?;
    ensure!(r.polynomial == p("x^4+x^3+x^2+x+2", 5) && r.verdict == RootVerdict::Rootless, "geometric example");
    let kernel: BTreeSet<Vec<u64>> = poly::kernel_of_hom(3, 1)
        .map_err(err)?
        .kernel
        .iter()
        .map(|q| q.coeffs().to_vec())
        .collect();
    let want: BTreeSet<Vec<u64>> = [vec![], vec![1, 2], vec![2, 1]].into_iter().collect();
    ensure!(kernel == want, "kernel {kernel:?}");
    Ok(())
}

// ---- 5 ----

fn neutrosophic() -> Check {
    let c = poly::neutrosophic_classify(&p("x^2+2", 6), &field(6, &[0, 3])).map_err(err)?;
    ensure!(c.truth == Truth::Indeterminate && c.alien_roots == vec![2, 4], "{c:?}");
    Ok(())
}

// ---- 6 ----

fn random_matrix(rng: &mut ChaCha8Rng, k: &Subfield, dim: usize) -> SubfieldMatrix {
    let el = k.elements();
    let entries = (0..dim * dim).map(|_| el[rng.gen_range(0..el.len())]).collect();
    SubfieldMatrix::new(k, dim, dim, entries).unwrap()
}

fn cayley_hamilton() -> Check {
    let pairs = [
        field(6, &[0, 2, 4]),
        field(6, &[0, 3]),
        field(15, &[0, 5, 10]),
        field(21, &[0, 3, 6, 9, 12, 15, 18]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in &pairs {
        for i in 0..200 {
            let a = random_matrix(&mut rng, k, 1 + i % 4);
            let c = linalg::char_poly(&a).map_err(err)?;
            ensure!(c.evaluate_at(&a).map_err(err)?.is_zero(), "not annihilated: {:?}", a.to_rows());
        }
    }
    Ok(())
}

// ---- 7 ----

fn projection_checks(rep: &semigroup::Representation, w: &[Vec<Rational>]) -> Check {
    let p0 = semigroup::coordinate_projection(w, rep.degree).map_err(err)?;
    let pr = semigroup::averaged_projection(rep, w, &p0).map_err(err)?.projection;
    ensure!(pr.mul(&pr).map_err(err)? == pr, "P^2 != P");
    for m in rep.matrices() {
        ensure!(pr.mul(m).map_err(err)? == m.mul(&pr).map_err(err)?, "P does not commute");
    }
    Ok(())
}

fn representation_suite() -> Check {
    for name in ["T2", "S3"] {
        let s = catalog::by_name(name).unwrap().table;
        for h in semigroup::all_subgroups(&s).map_err(err)? {
            let left = semigroup::regular_representation(&h, Side::Left);
            let right = semigroup::regular_representation(&h, Side::Right);
            let t = semigroup::left_right_intertwiner(&h).map_err(err)?;
            ensure!(t.invertible && t.intertwines, "{name} {:?}: inversion map", h.elements);
            for (r, l) in right.matrices().iter().zip(left.matrices()) {
                ensure!(t.matrix.mul(r).unwrap() == l.mul(&t.matrix).unwrap(), "T R != L T");
            }
            ensure!(semigroup::rep_isomorphic(&right, &left).map_err(err)?.isomorphic, "not isomorphic");
            let d = h.order();
            let ones = vec![vec![int(1); d]];
            projection_checks(&left, &ones)?;
            if d > 1 {
                // augmentation subspace: coordinates summing to zero
                let aug: Vec<Vec<Rational>> = (1..d)
                    .map(|i| (0..d).map(|j| if j == 0 { int(1) } else if j == i { int(-1) } else { int(0) }).collect())
                    .collect();
                projection_checks(&right, &aug)?;
            }
        }
    }
    for (name, want) in [("C3", vec![1, 2]), ("C2", vec![1, 1])] {
        let s = catalog::by_name(name).unwrap().table;
        let h = SubgroupRecord::whole_group(&s).map_err(err)?;
        let blocks = semigroup::decompose_invariants(&semigroup::regular_representation(&h, Side::Left)).map_err(err)?;
        let dims: Vec<usize> = blocks.iter().map(|b| b.dimension).collect();
        ensure!(dims == want && blocks.iter().all(|b| b.irreducible), "{name}: {dims:?}");
    }
    Ok(())
}

// ---- 8 ----

fn nonneg(vs: &[&[u64]]) -> Vec<SemivectorTuple> {
    vs.iter().map(|v| SemivectorTuple::nonneg(v)).collect()
}

fn semivector_phenomena() -> Check {
    let u = nonneg(&[&[1, 1], &[2, 1], &[3, 0]]);
    ensure!(semivector::independence_check(&u, None).map_err(err)?.independent, "U dependent");
    let m = semivector::span_membership(&SemivectorTuple::nonneg(&[1, 3]), &u, None).map_err(err)?;
    ensure!(!m.member, "(1,3) in span");
    ensure!(!semivector::spans_space(&u, &Space::FullTuples { dim: 2 }, None).map_err(err)?.spans, "U spans");

    let sf = Semifield::chain(4).map_err(err)?;
    let c4 = |r: u64| SemivectorTuple::new(sf, vec![r]).unwrap();
    let (b, a, one) = (1, 2, 3);
    let scalars = [0, 3];
    let gens = vec![c4(one), c4(a), c4(b)];
    let r = semivector::spans_space(&gens, &Space::Chain { size: 4 }, Some(&scalars)).map_err(err)?;
    ensure!(r.spans, "{{1,a,b}} misses {:?}", r.missing);
    let basis = vec![c4(a), c4(b), c4(one)];
    let n1 = semivector::enumerate_representations(&c4(one), &basis, Some(&scalars)).map_err(err)?.len();
    let na = semivector::enumerate_representations(&c4(a), &basis, Some(&scalars)).map_err(err)?.len();
    ensure!((n1, na) == (4, 2), "representation counts ({n1}, {na})");

    let units = nonneg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    ensure!(semivector::spans_space(&units, &Space::FullTuples { dim: 3 }, None).map_err(err)?.spans, "units");
    // uniqueness: a spanning set must contain every unit vector
    let drop_one = nonneg(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1], &[0, 1, 1]]);
    let r = semivector::spans_space(&drop_one, &Space::FullTuples { dim: 3 }, None).map_err(err)?;
    ensure!(!r.spans && r.missing == Some(vec![0, 0, 1]), "spanning without e3: {r:?}");
    Ok(())
}

// ---- 9 ----

fn rm(rows: &[&[(i64, i64)]]) -> RationalMatrix {
    RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&(a, b)| rat(a, b)).collect()).collect()).unwrap()
}

fn leontief() -> Check {
    let s = econ::closed_solve(&rm(&[&[(1, 2), (1, 4)], &[(1, 2), (3, 4)]])).map_err(err)?;
    ensure!(s.unique && s.representative == Some(vec![rat(1, 3), rat(2, 3)]), "closed: {s:?}");
    let c = rm(&[&[(1, 5), (3, 10)], &[(2, 5), (1, 10)]]);
    let o = econ::open_solve(&c, &[int(10), int(10)]).map_err(err)?;
    ensure!(o.x == vec![int(20), int(20)], "x = {:?}", o.x);
    ensure!(o.productive && o.leontief_inverse.is_nonnegative(), "inverse criterion");
    ensure!(o.row_sums_below_one, "row-sum criterion");
    let bad = rm(&[&[(3, 2), (1, 2)], &[(0, 1), (1, 2)]]);
    let o = econ::open_solve(&bad, &[int(1), int(1)]).map_err(err)?;
    ensure!(!o.productive && o.label == Some(NON_PRODUCTIVE_LABEL), "non-productive: {o:?}");
    Ok(())
}

// ---- 10 ----

fn all_vectors(k: &Subfield, dim: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| k.elements().iter().map(move |&x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

fn eigen_oracle(k: &Subfield) -> Check {
    for dim in 1..=2 {
        let vectors = all_vectors(k, dim);
        for entries in all_vectors(k, dim * dim) {
            let a = SubfieldMatrix::new(k, dim, dim, entries).unwrap();
            let mut brute: Vec<(u64, usize)> = Vec::new();
            for &c in k.elements().iter().rev() {
                let count = vectors.iter().filter(|v| eigenpair(&a, c, v)).count();
                if count > 0 {
                    // eigenspace of dimension g has q^g - 1 nonzero vectors
                    let g = ((count + 1) as f64).log(k.prime_order() as f64).round() as usize;
                    brute.push((c, g));
                }
            }
            let e = linalg::eigen_system(&a).map_err(err)?;
            let got: Vec<(u64, usize)> = e.s_values.iter().map(|s| (s.value, s.geometric_multiplicity)).collect();
            ensure!(got == brute, "{:?}: {got:?} vs {brute:?}", a.to_rows());
        }
    }
    Ok(())
}

fn capped_search(target: &[u64], gens: &[Vec<u64>], cap: u64) -> bool {
    fn go(i: usize, acc: &mut Vec<u64>, target: &[u64], gens: &[Vec<u64>], cap: u64) -> bool {
        if i == gens.len() {
            return acc.as_slice() == target;
        }
        for c in 0..=cap {
            let next: Vec<u64> = acc.iter().zip(&gens[i]).map(|(a, g)| a + c * g).collect();
            if next.iter().zip(target).any(|(x, t)| x > t) {
                break;
            }
            let saved = std::mem::replace(acc, next);
            if go(i + 1, acc, target, gens, cap) {
                return true;
            }
            *acc = saved;
        }
        false
    }
    go(0, &mut vec![0; target.len()], target, gens, cap)
}

fn span_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut done = 0;
    while done < 500 {
        let dim = rng.gen_range(1..=3);
        let ngen = rng.gen_range(1..=3);
        let gens: Vec<Vec<u64>> = (0..ngen)
            .map(|_| (0..dim).map(|_| rng.gen_range(0..=6)).collect())
            .collect();
        if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
            continue;
        }
        let target: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..=6)).collect();
        let tuples: Vec<SemivectorTuple> = gens.iter().map(|g| SemivectorTuple::nonneg(g)).collect();
        let r = semivector::span_membership(&SemivectorTuple::nonneg(&target), &tuples, None).map_err(err)?;
        let brute = capped_search(&target, &gens, 50);
        ensure!(r.member == brute, "target {target:?} gens {gens:?}: {} vs {brute}", r.member);
        done += 1;
    }
    Ok(())
}

/// Every proper subset of Z_n that is a field under the inherited operations,
/// found by enumerating all 2^n subsets.
fn literal_subset_search(n: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) - 1 {
        let s: Vec<u64> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let has = |x: u64| mask >> x & 1 == 1;
        if s.len() < 2 || !s.iter().all(|&a| s.iter().all(|&b| has((a + b) % n) && has(a * b % n))) {
            continue;
        }
        let Some(&e) = s.iter().find(|&&e| e != 0 && s.iter().all(|&a| a * e % n == a)) else {
            continue;
        };
        if s.iter().filter(|&&a| a != 0).all(|&a| s.iter().any(|&b| a * b % n == e)) {
            out.insert(s);
        }
    }
    out
}

fn oracle_equivalence() -> Check {
    for n in 2..=16 {
        let found: BTreeSet<Vec<u64>> = sets(n).into_iter().map(|(el, _)| el).collect();
        let brute = literal_subset_search(n);
        ensure!(found == brute, "Z_{n}: {found:?} vs all-subsets {brute:?}");
    }
    for n in 2..=64 {
        ensure!(
            ring::find_subfields(&zn(n)) == ring::subfield_oracle(&zn(n)).map_err(err)?,
            "subfields of Z_{n}"
        );
    }
    for k in [field(6, &[0, 3]), field(6, &[0, 2, 4]), field(10, &[0, 5]), field(15, &[0, 5, 10]), field(3, &[0, 1, 2])] {
        eigen_oracle(&k)?;
    }
    span_oracle()
}

// ---- 11 ----

fn golden_cli() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_smaralg")).arg("golden").output().map_err(err)?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(err)?;
    let failed: Vec<&Value> = v["payload"]["cases"]
        .as_array()
        .ok_or("no cases")?
        .iter()
        .filter(|c| c["passed"] != Value::Bool(true))
        .collect();
    ensure!(failed.is_empty(), "failed anchors: {failed:?}");
    ensure!(out.status.code() == Some(0), "exit {:?}", out.status.code());
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        (1, "subfield discovery", 1_000, subfield_discovery),
        (2, "spectral theorem over Z3", 1_000, z3_spectral),
        (3, "spectral theorem over {0,2,4} in Z6", 1_000, z6_spectral),
        (4, "polynomial criteria", 5_000, polynomial_criteria),
        (5, "neutrosophic root classification", 1_000, neutrosophic),
        (6, "Cayley-Hamilton suite", 10_000, cayley_hamilton),
        (7, "representation suite", 5_000, representation_suite),
        (8, "semivector phenomena", 2_000, semivector_phenomena),
        (9, "Leontief models", 1_000, leontief),
        (10, "oracle equivalence", 30_000, oracle_equivalence),
        (11, "golden replay via the CLI", 30_000, golden_cli),
    ];
    let mut failures = Vec::new();
    for (id, name, limit_ms, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let limit = Duration::from_millis(limit_ms);
        let verdict = match result {
            Ok(()) if elapsed <= limit => Ok(()),
            Ok(()) => Err(format!("took {elapsed:?}, limit {limit:?}")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("PASS criterion {id}: {name} ({elapsed:.2?})"),
            Err(e) => {
                println!("FAIL criterion {id}: {name}: {e}");
                failures.push(id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
