use serde::Serialize;

use super::{ModPolynomial, PolyError};
use crate::ring::{is_prime, pow_mod, Subfield};

/// All `a` in `domain` with `p(a) = 0 (mod n)`, sorted, by exhaustive evaluation.
pub fn roots_in(p: &ModPolynomial, domain: &[u64]) -> Vec<u64> {
    let mut roots: Vec<u64> = domain
        .iter()
        .map(|&a| a % p.modulus())
        .filter(|&a| p.eval(a) == 0)
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots
}

fn all_residues(n: u64) -> Vec<u64> {
    (0..n).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootVerdict {
    HasRoot,
    Rootless,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibilityReport {
    pub roots: Vec<u64>,
    /// Some residue is a root.
    pub criterion_root: bool,
    /// Coefficients sum to a multiple of the modulus, so 1 is a root.
    pub criterion_coeff_sum: bool,
    /// Odd degree with every coefficient equal and nonzero, so -1 is a root.
    pub criterion_equal_odd: bool,
    /// The polynomial is exactly `x^p + 1`.
    pub criterion_xp_plus_1: bool,
    pub verdict: RootVerdict,
    /// Set when the verdict is `Rootless` but the degree is at least 4, where
    /// rootlessness does not rule out a product of higher-degree factors.
    pub rootless_not_irreducible: bool,
}

/// Root-existence report over a prime field, with the four sufficient
/// criteria for a root evaluated independently of the root search.
pub fn reducibility_report(p: &ModPolynomial) -> Result<ReducibilityReport, PolyError> {
    let n = p.modulus();
    if !is_prime(n) {
        return Err(PolyError::CompositeModulus(n));
    }
    let roots = roots_in(p, &all_residues(n));
    let coeff_sum = p.coeffs().iter().fold(0, |acc, &c| (acc + c) % n);
    let criterion_coeff_sum = !p.is_zero() && coeff_sum == 0;
    let criterion_equal_odd = match p.degree() {
        Some(d) if d % 2 == 1 => {
            let c0 = p.coeff(0);
            c0 != 0 && p.coeffs().iter().all(|&c| c == c0)
        }
        _ => false,
    };
    let criterion_xp_plus_1 = *p == x_pow_plus(n, n as usize, 1)?;
    let verdict = if roots.is_empty() {
        RootVerdict::Rootless
    } else {
        RootVerdict::HasRoot
    };
    Ok(ReducibilityReport {
        criterion_root: !roots.is_empty(),
        rootless_not_irreducible: verdict == RootVerdict::Rootless
            && p.degree().is_some_and(|d| d >= 4),
        roots,
        criterion_coeff_sum,
        criterion_equal_odd,
        criterion_xp_plus_1,
        verdict,
    })
}

fn x_pow_plus(n: u64, degree: usize, c: u64) -> Result<ModPolynomial, PolyError> {
    let mut coeffs = vec![0; degree + 1];
    coeffs[degree] = 1;
    coeffs[0] = (coeffs[0] + c) % n;
    ModPolynomial::new(n, coeffs)
}

/// The two polynomial families that are rootless by Fermat's little theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FermatFamily {
    /// `x^p + (p-1)x + c`, `c != 0`.
    XpLinear,
    /// `x^(p-1) + x^(p-2) + ... + x + c`, `c` not in `{0, 1}`, `p > 2`.
    GeometricSum,
}

impl FermatFamily {
    pub fn polynomial(self, p: u64, c: u64) -> Result<ModPolynomial, PolyError> {
        match self {
            FermatFamily::XpLinear => {
                let mut coeffs = vec![0; p as usize + 1];
                coeffs[p as usize] = 1;
                coeffs[1] = p - 1;
                coeffs[0] = c;
                ModPolynomial::new(p, coeffs)
            }
            FermatFamily::GeometricSum => {
                let mut coeffs = vec![1; p as usize];
                coeffs[0] = c;
                ModPolynomial::new(p, coeffs)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FermatCheck {
    pub polynomial: ModPolynomial,
    pub verdict: RootVerdict,
    /// Roots found, which would contradict the family's rootlessness.
    pub witnesses: Vec<u64>,
}

pub fn fermat_family_check(p: u64, family: FermatFamily, c: u64) -> Result<FermatCheck, PolyError> {
    if !is_prime(p) {
        return Err(PolyError::CompositeModulus(p));
    }
    if c >= p {
        return Err(PolyError::Precondition(format!("c = {c} is not a residue mod {p}")));
    }
    match family {
        FermatFamily::XpLinear if c == 0 => {
            return Err(PolyError::Precondition("x^p + (p-1)x + c needs c != 0".into()))
        }
        FermatFamily::GeometricSum if p == 2 => {
            return Err(PolyError::Precondition("geometric-sum family needs p > 2".into()))
        }
        FermatFamily::GeometricSum if c <= 1 => {
            return Err(PolyError::Precondition(
                "geometric-sum family needs c not in {0, 1}".into(),
            ))
        }
        _ => {}
    }
    let polynomial = family.polynomial(p, c)?;
    let witnesses = roots_in(&polynomial, &all_residues(p));
    let verdict = if witnesses.is_empty() {
        RootVerdict::Rootless
    } else {
        RootVerdict::HasRoot
    };
    Ok(FermatCheck {
        polynomial,
        verdict,
        witnesses,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PowerSum {
    /// `a + a^2 + ... + a^(r-1) (mod p)`.
    pub sum: u64,
    /// `a^r = a (mod p)`.
    pub congruent: bool,
    /// Both sides agree: `congruent` holds exactly when `sum` vanishes.
    pub equivalence_holds: bool,
}

pub fn fermat_power_sum(p: u64, a: u64, r: u64) -> Result<PowerSum, PolyError> {
    if !is_prime(p) {
        return Err(PolyError::CompositeModulus(p));
    }
    if a >= p {
        return Err(PolyError::Precondition(format!("a = {a} is not a residue mod {p}")));
    }
    if a == 1 {
        return Err(PolyError::Precondition("a = 1 is excluded".into()));
    }
    if r < 2 {
        return Err(PolyError::Precondition("r must be at least 2".into()));
    }
    let mut sum = 0;
    let mut power = 1;
    for _ in 1..r {
        power = power * a % p;
        sum = (sum + power) % p;
    }
    let congruent = pow_mod(a, r, p) == a;
    Ok(PowerSum {
        sum,
        congruent,
        equivalence_holds: congruent == (sum == 0),
    })
}

/// Sum of coefficients mod `n`, i.e. evaluation at 1.
pub fn coeff_sum_hom(p: &ModPolynomial) -> u64 {
    p.coeffs().iter().fold(0, |acc, &c| (acc + c) % p.modulus())
}

pub const KERNEL_ENUMERATION_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomKernel {
    pub kernel: Vec<ModPolynomial>,
    /// Number of distinct cosets of the kernel among the enumerated polynomials.
    pub coset_count: u64,
    /// Every coset has the same size as the kernel.
    pub cosets_balanced: bool,
}

/// Polynomials of degree at most `max_degree` over `Z_q` with zero coefficient sum.
pub fn kernel_of_hom(q: u64, max_degree: usize) -> Result<HomKernel, PolyError> {
    if !is_prime(q) {
        return Err(PolyError::CompositeModulus(q));
    }
    let len = max_degree + 1;
    let count = (q as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if count > KERNEL_ENUMERATION_LIMIT {
        return Err(PolyError::BoundExceeded {
            count,
            limit: KERNEL_ENUMERATION_LIMIT,
        });
    }
    let mut coset_sizes = vec![0u64; q as usize];
    let mut kernel = Vec::new();
    let mut digits = vec![0u64; len];
    for _ in 0..count {
        let sum = digits.iter().sum::<u64>() % q;
        coset_sizes[sum as usize] += 1;
        if sum == 0 {
            kernel.push(ModPolynomial::new(q, digits.clone())?);
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    let kernel_size = kernel.len() as u64;
    Ok(HomKernel {
        coset_count: coset_sizes.iter().filter(|&&s| s > 0).count() as u64,
        cosets_balanced: coset_sizes.iter().all(|&s| s == kernel_size),
        kernel,
    })
}

/// Linear map from degree `<= source_bound` to degree `<= target_bound`
/// polynomials: the coefficients are cut into `target_bound + 1` consecutive
/// chunks of equal size and chunk `j` sums to the coefficient of `x^j`.
pub fn block_transform(
    p: &ModPolynomial,
    source_bound: usize,
    target_bound: usize,
) -> Result<ModPolynomial, PolyError> {
    if !is_prime(p.modulus()) {
        return Err(PolyError::CompositeModulus(p.modulus()));
    }
    if source_bound <= target_bound {
        return Err(PolyError::Precondition(format!(
            "source bound {source_bound} must exceed target bound {target_bound}"
        )));
    }
    let (n1, m1) = (source_bound + 1, target_bound + 1);
    if n1 % m1 != 0 {
        return Err(PolyError::Divisibility {
            m_plus_1: m1,
            n_plus_1: n1,
        });
    }
    if let Some(d) = p.degree().filter(|&d| d > source_bound) {
        return Err(PolyError::DegreeOverflow {
            degree: d,
            bound: source_bound,
        });
    }
    let chunk = n1 / m1;
    let q = p.modulus();
    let coeffs = (0..m1)
        .map(|j| (j * chunk..(j + 1) * chunk).fold(0, |acc, i| (acc + p.coeff(i)) % q))
        .collect();
    ModPolynomial::new(q, coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Truth {
    True,
    False,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootClassification {
    pub truth: Truth,
    pub in_field_roots: Vec<u64>,
    pub alien_roots: Vec<u64>,
}

/// Three-valued answer to "does `p` have a root in `k`": true on a root in
/// `k`, indeterminate when the only roots lie in `Z_n \ k`, false otherwise.
pub fn neutrosophic_classify(
    p: &ModPolynomial,
    k: &Subfield,
) -> Result<RootClassification, PolyError> {
    if p.modulus() != k.modulus() {
        return Err(PolyError::ModulusMismatch {
            left: p.modulus(),
            right: k.modulus(),
        });
    }
    let (in_field_roots, alien_roots): (Vec<u64>, Vec<u64>) = roots_in(p, &all_residues(p.modulus()))
        .into_iter()
        .partition(|&a| k.contains(a));
    let truth = match (in_field_roots.is_empty(), alien_roots.is_empty()) {
        (false, _) => Truth::True,
        (true, false) => Truth::Indeterminate,
        (true, true) => Truth::False,
    };
    Ok(RootClassification {
        truth,
        in_field_roots,
        alien_roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{certify_subfield, ModulusRing};

    fn p(n: u64, c: &[u64]) -> ModPolynomial {
        ModPolynomial::new(n, c.to_vec()).unwrap()
    }

    #[test]
    fn roots_examples() {
        assert_eq!(roots_in(&p(5, &[1, 0, 1]), &all_residues(5)), vec![2, 3]);
        assert_eq!(roots_in(&p(6, &[2, 0, 1]), &all_residues(6)), vec![2, 4]);
        assert!(roots_in(&p(3, &[1, 2, 0, 1]), &all_residues(3)).is_empty());
    }

    #[test]
    fn report_on_coefficient_sum_case() {
        let r = reducibility_report(&p(3, &[1, 1, 2, 2])).unwrap();
        assert!(r.criterion_coeff_sum);
        // the coefficient sum vanishes, so 1 is a root alongside 2
        assert_eq!(r.roots, vec![1, 2]);
        assert_eq!(r.verdict, RootVerdict::HasRoot);
    }

    #[test]
    fn report_on_x_cubed_plus_one() {
        let r = reducibility_report(&p(3, &[1, 0, 0, 1])).unwrap();
        assert!(r.criterion_xp_plus_1);
        assert_eq!(r.roots, vec![2]);
    }

    #[test]
    fn report_on_equal_odd_coefficients() {
        let r = reducibility_report(&p(5, &[2, 2, 2, 2])).unwrap();
        assert!(r.criterion_equal_odd);
        // 2(x+1)(x^2+1)
        assert_eq!(r.roots, vec![2, 3, 4]);
    }

    #[test]
    fn report_on_rootless_septic() {
        let r = reducibility_report(&p(7, &[2, 4, 0, 0, 0, 2, 0, 2])).unwrap();
        assert!(!r.criterion_coeff_sum && !r.criterion_equal_odd && !r.criterion_xp_plus_1);
        assert!(r.roots.is_empty());
        assert_eq!(r.verdict, RootVerdict::Rootless);
        assert!(r.rootless_not_irreducible);
    }

    #[test]
    fn report_needs_prime() {
        assert_eq!(
            reducibility_report(&p(6, &[1, 1])),
            Err(PolyError::CompositeModulus(6))
        );
    }

    #[test]
    fn fermat_examples() {
        let c = fermat_family_check(3, FermatFamily::XpLinear, 1).unwrap();
        assert_eq!(c.polynomial, p(3, &[1, 2, 0, 1]));
        assert_eq!(c.verdict, RootVerdict::Rootless);
        let c = fermat_family_check(5, FermatFamily::GeometricSum, 2).unwrap();
        assert_eq!(c.polynomial, p(5, &[2, 1, 1, 1, 1]));
        assert_eq!(c.verdict, RootVerdict::Rootless);
        let c = fermat_family_check(3, FermatFamily::XpLinear, 2).unwrap();
        assert_eq!(c.polynomial, p(3, &[2, 2, 0, 1]));
        assert!(c.witnesses.is_empty());
    }

    #[test]
    fn fermat_preconditions() {
        assert!(fermat_family_check(3, FermatFamily::XpLinear, 0).is_err());
        assert!(fermat_family_check(5, FermatFamily::GeometricSum, 1).is_err());
        assert!(fermat_family_check(2, FermatFamily::GeometricSum, 1).is_err());
        assert!(fermat_family_check(4, FermatFamily::XpLinear, 1).is_err());
        assert!(fermat_family_check(5, FermatFamily::XpLinear, 5).is_err());
    }

    #[test]
    fn power_sum_examples() {
        let s = fermat_power_sum(5, 2, 5).unwrap();
        assert_eq!((s.sum, s.congruent), (0, true));
        let s = fermat_power_sum(7, 3, 7).unwrap();
        assert_eq!((s.sum, s.congruent), (0, true));
        let s = fermat_power_sum(5, 0, 5).unwrap();
        assert_eq!((s.sum, s.congruent), (0, true));
        // 2^3 = 3 != 2 (mod 5) and 2 + 4 = 1 != 0
        let s = fermat_power_sum(5, 2, 3).unwrap();
        assert_eq!((s.sum, s.congruent, s.equivalence_holds), (1, false, true));
        assert!(fermat_power_sum(5, 1, 5).is_err());
    }

    #[test]
    fn coefficient_sum_values() {
        assert_eq!(coeff_sum_hom(&p(3, &[1, 2])), 0);
        assert_eq!(coeff_sum_hom(&p(3, &[2, 1])), 0);
        assert_eq!(coeff_sum_hom(&p(3, &[1, 1, 1])), 0);
        assert_eq!(coeff_sum_hom(&p(5, &[1, 1, 1])), 3);
    }

    #[test]
    fn kernels() {
        let k = kernel_of_hom(3, 1).unwrap();
        let mut got: Vec<Vec<u64>> = k.kernel.iter().map(|q| q.coeffs().to_vec()).collect();
        got.sort();
        assert_eq!(got, vec![vec![], vec![1, 2], vec![2, 1]]);
        assert_eq!(k.coset_count, 3);
        assert!(k.cosets_balanced);

        let k = kernel_of_hom(2, 1).unwrap();
        assert_eq!(k.kernel.len(), 2);
        assert!(k.kernel.contains(&p(2, &[1, 1])));

        let k = kernel_of_hom(3, 0).unwrap();
        assert_eq!(k.kernel, vec![p(3, &[])]);

        assert!(matches!(kernel_of_hom(7, 8), Err(PolyError::BoundExceeded { .. })));
    }

    #[test]
    fn block_transform_examples() {
        assert!(block_transform(&p(3, &[1, 2, 1, 2]), 3, 1).unwrap().is_zero());
        assert_eq!(block_transform(&p(3, &[1, 0, 2, 0]), 3, 1).unwrap(), p(3, &[1, 2]));
        assert!(block_transform(&p(3, &[]), 5, 2).unwrap().is_zero());
        // chunk size 3 when 3 blocks cover 9 coefficients
        assert_eq!(
            block_transform(&p(5, &[1, 1, 1, 2, 2, 2, 0, 0, 4]), 8, 2).unwrap(),
            p(5, &[3, 1, 4])
        );
    }

    #[test]
    fn block_transform_errors() {
        assert!(matches!(
            block_transform(&p(3, &[1]), 4, 1),
            Err(PolyError::Divisibility { .. })
        ));
        assert!(matches!(
            block_transform(&p(3, &[1, 1, 1, 1, 1]), 3, 1),
            Err(PolyError::DegreeOverflow { .. })
        ));
        assert!(block_transform(&p(3, &[1]), 1, 1).is_err());
    }

    #[test]
    fn classification_examples() {
        let z6 = ModulusRing::new(6).unwrap();
        let k = certify_subfield(&z6, &[0, 3]).unwrap();
        let c = neutrosophic_classify(&p(6, &[2, 0, 1]), &k).unwrap();
        assert_eq!(c.truth, Truth::Indeterminate);
        assert_eq!(c.alien_roots, vec![2, 4]);
        let c = neutrosophic_classify(&p(6, &[3, 1]), &k).unwrap();
        assert_eq!(c.truth, Truth::True);
        assert_eq!(c.in_field_roots, vec![3]);
        let c = neutrosophic_classify(&p(6, &[1, 1, 1]), &k).unwrap();
        assert_eq!(c.truth, Truth::False);
        assert!(neutrosophic_classify(&p(5, &[1]), &k).is_err());
    }
}
