//! Semivector spaces over the semifields `Z⁰` (nonnegative integers) and
//! chain lattices, plus the check that finite lattices are semivector
//! spaces over the two-element chain.
//!
//! Chain elements are ranks `0..m`, join is `max` and meet is `min`.
//! Spans, independence and representations are decided by exhaustive
//! search; over `Z⁰` each coefficient is capped by the first coordinate
//! where it would overshoot the target.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemivectorError {
    #[error("generator {index} is zero, so its coefficient is unbounded")]
    ZeroGenerator { index: usize },
    #[error("tuple lengths differ: {0}")]
    LengthMismatch(String),
    #[error("{value} is not an element of the chain of size {size}")]
    NotInCarrier { value: u64, size: usize },
    #[error("tuples live over different semifields")]
    SemifieldMismatch,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("search exceeded {limit} nodes")]
    SearchBound { limit: u64 },
}

impl SemivectorError {
    pub fn code(&self) -> &'static str {
        match self {
            SemivectorError::ZeroGenerator { .. } => "zero_generator",
            SemivectorError::LengthMismatch(_) => "length_mismatch",
            SemivectorError::NotInCarrier { .. } => "not_in_carrier",
            SemivectorError::SemifieldMismatch => "semifield_mismatch",
            SemivectorError::Malformed(_) => "malformed",
            SemivectorError::SearchBound { .. } => "search_bound",
        }
    }
}

pub const SEARCH_NODE_LIMIT: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Semifield {
    #[serde(rename = "nonneg_int")]
    NonNegInt,
    #[serde(rename = "chain")]
    ChainLattice {
        size: usize,
    },
}

impl Semifield {
    pub fn chain(size: usize) -> Result<Self, SemivectorError> {
        if size < 2 {
            return Err(SemivectorError::Malformed("a chain semifield needs at least 0 and 1".into()));
        }
        Ok(Semifield::ChainLattice { size })
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        match self {
            Semifield::NonNegInt => 1,
            Semifield::ChainLattice { size } => *size as u64 - 1,
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            Semifield::NonNegInt => a + b,
            Semifield::ChainLattice { .. } => a.max(b),
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            Semifield::NonNegInt => a * b,
            Semifield::ChainLattice { .. } => a.min(b),
        }
    }

    pub fn contains(&self, a: u64) -> bool {
        match self {
            Semifield::NonNegInt => true,
            Semifield::ChainLattice { size } => a < *size as u64,
        }
    }

    /// All elements, for finite semifields.
    pub fn carrier(&self) -> Option<Vec<u64>> {
        match self {
            Semifield::NonNegInt => None,
            Semifield::ChainLattice { size } => Some((0..*size as u64).collect()),
        }
    }

    fn check(&self, a: u64) -> Result<u64, SemivectorError> {
        match self {
            Semifield::ChainLattice { size } if a >= *size as u64 => {
                Err(SemivectorError::NotInCarrier { value: a, size: *size })
            }
            _ => Ok(a),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemivectorTuple {
    pub semifield: Semifield,
    pub entries: Vec<u64>,
}

impl SemivectorTuple {
    pub fn new(semifield: Semifield, entries: Vec<u64>) -> Result<Self, SemivectorError> {
        for &e in &entries {
            semifield.check(e)?;
        }
        Ok(SemivectorTuple { semifield, entries })
    }

    pub fn nonneg(entries: &[u64]) -> Self {
        SemivectorTuple {
            semifield: Semifield::NonNegInt,
            entries: entries.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }
}

/// `Σ c_i g_i` in the semifield of the generators.
pub fn combine(semifield: Semifield, coefficients: &[u64], generators: &[SemivectorTuple]) -> Vec<u64> {
    let len = generators.first().map_or(0, SemivectorTuple::len);
    let mut acc = vec![semifield.zero(); len];
    for (c, g) in coefficients.iter().zip(generators) {
        for (a, &x) in acc.iter_mut().zip(&g.entries) {
            *a = semifield.add(*a, semifield.mul(*c, x));
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanResult {
    pub member: bool,
    /// Lexicographically first coefficient tuple reaching the target.
    pub coefficients: Option<Vec<u64>>,
    /// Largest coefficient tried per generator; with `member = false` this
    /// box was searched exhaustively.
    pub bounds: Vec<u64>,
}

fn validate(
    target: &SemivectorTuple,
    generators: &[SemivectorTuple],
) -> Result<Semifield, SemivectorError> {
    let sf = target.semifield;
    for (i, g) in generators.iter().enumerate() {
        if g.semifield != sf {
            return Err(SemivectorError::SemifieldMismatch);
        }
        if g.len() != target.len() {
            return Err(SemivectorError::LengthMismatch(format!(
                "target has {} entries, generator {i} has {}",
                target.len(),
                g.len()
            )));
        }
    }
    Ok(sf)
}

/// Allowed coefficients for each generator, ascending. `scalars` restricts
/// the coefficient set (e.g. `{0, top}` for a chain seen over `C₂`).
fn coefficient_ranges(
    sf: Semifield,
    target: &SemivectorTuple,
    generators: &[SemivectorTuple],
    scalars: Option<&[u64]>,
) -> Result<Vec<Vec<u64>>, SemivectorError> {
    let mut allowed = scalars.map(<[u64]>::to_vec);
    if let Some(s) = allowed.as_mut() {
        for &c in s.iter() {
            sf.check(c)?;
        }
        s.sort_unstable();
        s.dedup();
    }
    generators
        .iter()
        .enumerate()
        .map(|(i, g)| match sf {
            Semifield::NonNegInt => {
                let bound = g
                    .entries
                    .iter()
                    .zip(&target.entries)
                    .filter(|(&gj, _)| gj > 0)
                    .map(|(&gj, &tj)| tj / gj)
                    .min();
                match (bound, &allowed) {
                    (Some(b), Some(s)) => Ok(s.iter().copied().filter(|&c| c <= b).collect()),
                    (Some(b), None) => Ok((0..=b).collect()),
                    (None, Some(s)) => Ok(s.clone()),
                    (None, None) => Err(SemivectorError::ZeroGenerator { index: i }),
                }
            }
            Semifield::ChainLattice { .. } => Ok(allowed.clone().unwrap_or_else(|| sf.carrier().unwrap())),
        })
        .collect()
}

/// Depth-first search in lexicographic order. Partial sums only grow under
/// `+` in both semifields, so a branch is cut once it exceeds the target.
fn search(
    sf: Semifield,
    target: &[u64],
    generators: &[SemivectorTuple],
    ranges: &[Vec<u64>],
    first_only: bool,
) -> Result<Vec<Vec<u64>>, SemivectorError> {
    struct State<'a> {
        sf: Semifield,
        target: &'a [u64],
        generators: &'a [SemivectorTuple],
        ranges: &'a [Vec<u64>],
        first_only: bool,
        nodes: u64,
        chosen: Vec<u64>,
        found: Vec<Vec<u64>>,
    }
    fn go(s: &mut State, i: usize, partial: Vec<u64>) -> Result<bool, SemivectorError> {
        s.nodes += 1;
        if s.nodes > SEARCH_NODE_LIMIT {
            return Err(SemivectorError::SearchBound {
                limit: SEARCH_NODE_LIMIT,
            });
        }
        if i == s.generators.len() {
            if partial == s.target {
                s.found.push(s.chosen.clone());
                return Ok(s.first_only);
            }
            return Ok(false);
        }
        for &c in &s.ranges[i] {
            let next: Vec<u64> = partial
                .iter()
                .zip(&s.generators[i].entries)
                .map(|(&a, &g)| s.sf.add(a, s.sf.mul(c, g)))
                .collect();
            if next.iter().zip(s.target).any(|(a, t)| a > t) {
                continue;
            }
            s.chosen.push(c);
            let stop = go(s, i + 1, next)?;
            s.chosen.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
    let mut state = State {
        sf,
        target,
        generators,
        ranges,
        first_only,
        nodes: 0,
        chosen: Vec::new(),
        found: Vec::new(),
    };
    go(&mut state, 0, vec![sf.zero(); target.len()])?;
    Ok(state.found)
}

pub fn span_membership(
    target: &SemivectorTuple,
    generators: &[SemivectorTuple],
    scalars: Option<&[u64]>,
) -> Result<SpanResult, SemivectorError> {
    let sf = validate(target, generators)?;
    if target.is_zero() {
        return Ok(SpanResult {
            member: true,
            coefficients: Some(vec![0; generators.len()]),
            bounds: vec![0; generators.len()],
        });
    }
    let ranges = coefficient_ranges(sf, target, generators, scalars)?;
    let bounds = ranges.iter().map(|r| r.last().copied().unwrap_or(0)).collect();
    let found = search(sf, &target.entries, generators, &ranges, true)?;
    let coefficients = found.into_iter().next();
    if let Some(c) = &coefficients {
        debug_assert_eq!(combine(sf, c, generators), target.entries);
    }
    Ok(SpanResult {
        member: coefficients.is_some(),
        coefficients,
        bounds,
    })
}

/// Every coefficient tuple reaching `target`, in lexicographic order.
pub fn enumerate_representations(
    target: &SemivectorTuple,
    basis: &[SemivectorTuple],
    scalars: Option<&[u64]>,
) -> Result<Vec<Vec<u64>>, SemivectorError> {
    let sf = validate(target, basis)?;
    let ranges = coefficient_ranges(sf, target, basis, scalars)?;
    search(sf, &target.entries, basis, &ranges, false)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dependence {
    pub index: usize,
    /// Indices of the other vectors, matching `coefficients`.
    pub others: Vec<usize>,
    pub coefficients: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DependenceReport {
    pub independent: bool,
    pub witness: Option<Dependence>,
}

/// Independent iff no vector lies in the span of the others.
pub fn independence_check(
    vectors: &[SemivectorTuple],
    scalars: Option<&[u64]>,
) -> Result<DependenceReport, SemivectorError> {
    for j in 0..vectors.len() {
        let others: Vec<usize> = (0..vectors.len()).filter(|&i| i != j).collect();
        let gens: Vec<SemivectorTuple> = others.iter().map(|&i| vectors[i].clone()).collect();
        let r = span_membership(&vectors[j], &gens, scalars)?;
        if let Some(coefficients) = r.coefficients {
            return Ok(DependenceReport {
                independent: false,
                witness: Some(Dependence {
                    index: j,
                    others,
                    coefficients,
                }),
            });
        }
    }
    Ok(DependenceReport {
        independent: true,
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Space {
    /// `(Z⁰)^dim`; spanned iff every unit vector is generated.
    FullTuples { dim: usize },
    /// The chain itself as 1-tuples.
    Chain { size: usize },
    Finite { elements: Vec<Vec<u64>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub spans: bool,
    pub missing: Option<Vec<u64>>,
}

pub fn spans_space(
    generators: &[SemivectorTuple],
    space: &Space,
    scalars: Option<&[u64]>,
) -> Result<SpanReport, SemivectorError> {
    let sf = match (space, generators.first()) {
        (_, Some(g)) => g.semifield,
        (Space::Chain { size }, None) => Semifield::chain(*size)?,
        _ => Semifield::NonNegInt,
    };
    let required: Vec<Vec<u64>> = match space {
        Space::FullTuples { dim } => {
            if sf != Semifield::NonNegInt {
                return Err(SemivectorError::SemifieldMismatch);
            }
            (0..*dim)
                .map(|i| (0..*dim).map(|j| u64::from(i == j)).collect())
                .collect()
        }
        Space::Chain { size } => {
            if sf != Semifield::chain(*size)? {
                return Err(SemivectorError::SemifieldMismatch);
            }
            (0..*size as u64).map(|r| vec![r]).collect()
        }
        Space::Finite { elements } => elements.clone(),
    };
    for r in required {
        let t = SemivectorTuple::new(sf, r)?;
        if !span_membership(&t, generators, scalars)?.member {
            return Ok(SpanReport {
                spans: false,
                missing: Some(t.entries),
            });
        }
    }
    Ok(SpanReport {
        spans: true,
        missing: None,
    })
}

pub const LATTICE_SIZE_LIMIT: usize = 64;

#[derive(Deserialize)]
#[serde(untagged)]
enum LatticeRecord {
    Chain { kind: String, size: usize },
    Tables { join: Vec<Vec<usize>>, meet: Vec<Vec<usize>> },
}

/// Finite lattice given by join and meet tables. Construction only checks
/// shape and range; the lattice laws are checked by
/// [`lattice_semivector_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LatticeRecord")]
pub struct FiniteLattice {
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
}

impl TryFrom<LatticeRecord> for FiniteLattice {
    type Error = SemivectorError;
    fn try_from(r: LatticeRecord) -> Result<Self, SemivectorError> {
        match r {
            LatticeRecord::Chain { kind, size } if kind == "chain" => FiniteLattice::chain(size),
            LatticeRecord::Chain { kind, .. } => Err(SemivectorError::Malformed(format!("unknown lattice kind {kind:?}"))),
            LatticeRecord::Tables { join, meet } => FiniteLattice::new(join, meet),
        }
    }
}

impl FiniteLattice {
    pub fn new(join: Vec<Vec<usize>>, meet: Vec<Vec<usize>>) -> Result<Self, SemivectorError> {
        let m = join.len();
        if m == 0 || m > LATTICE_SIZE_LIMIT {
            return Err(SemivectorError::Malformed(format!(
                "lattice size {m} outside 1..={LATTICE_SIZE_LIMIT}"
            )));
        }
        if meet.len() != m || join.iter().chain(&meet).any(|row| row.len() != m) {
            return Err(SemivectorError::Malformed("join and meet must be square tables of one size".into()));
        }
        if join.iter().chain(&meet).flatten().any(|&v| v >= m) {
            return Err(SemivectorError::Malformed("table entry out of range".into()));
        }
        Ok(FiniteLattice { join, meet })
    }

    pub fn chain(size: usize) -> Result<Self, SemivectorError> {
        let t = |f: fn(usize, usize) -> usize| (0..size).map(|a| (0..size).map(|b| f(a, b)).collect()).collect();
        Self::new(t(usize::max), t(usize::min))
    }

    /// `M₃`: bottom 0, atoms 1, 2, 3, top 4.
    pub fn diamond() -> Self {
        let leq = |a: usize, b: usize| a == b || a == 0 || b == 4;
        let mut join = vec![vec![0; 5]; 5];
        let mut meet = vec![vec![0; 5]; 5];
        for a in 0..5 {
            for b in 0..5 {
                join[a][b] = if leq(a, b) { b } else if leq(b, a) { a } else { 4 };
                meet[a][b] = if leq(a, b) { a } else if leq(b, a) { b } else { 0 };
            }
        }
        FiniteLattice { join, meet }
    }

    pub fn size(&self) -> usize {
        self.join.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    /// Elements (and scalars, as 0/1) at which the law fails.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeCheck {
    pub holds: bool,
    pub failure: Option<AxiomFailure>,
}

/// Checks the ten semivector-space axioms for `L` over `{0, 1}`, with
/// addition the join and `s·α` the meet of `α` with the bottom or top,
/// then the lattice laws themselves.
pub fn lattice_semivector_check(l: &FiniteLattice) -> LatticeCheck {
    match check_axioms(l) {
        Ok(()) => LatticeCheck {
            holds: true,
            failure: None,
        },
        Err(f) => LatticeCheck {
            holds: false,
            failure: Some(f),
        },
    }
}

fn check_axioms(l: &FiniteLattice) -> Result<(), AxiomFailure> {
    let m = l.size();
    let j = |a: usize, b: usize| l.join[a][b];
    let mt = |a: usize, b: usize| l.meet[a][b];
    let fail = |axiom, witness| Err(AxiomFailure { axiom, witness });
    let all = || (0..m).flat_map(move |a| (0..m).map(move |b| (a, b)));

    // i: tables are total and in range by construction
    for (a, b) in all() {
        for c in 0..m {
            if j(j(a, b), c) != j(a, j(b, c)) {
                return fail("addition_associative", vec![a, b, c]);
            }
        }
    }
    let Some(bottom) = (0..m).find(|&z| (0..m).all(|a| j(z, a) == a && j(a, z) == a)) else {
        return fail("additive_zero", vec![]);
    };
    for (a, b) in all() {
        if j(a, b) != j(b, a) {
            return fail("addition_commutative", vec![a, b]);
        }
    }
    let top = (0..m).find(|&t| (0..m).all(|a| mt(t, a) == a && mt(a, t) == a));
    let Some(top) = top else {
        return fail("unit_scalar", vec![]);
    };
    let scalar = |s: usize| if s == 1 { top } else { bottom };
    let act = |s: usize, a: usize| mt(scalar(s), a);
    for a in 0..m {
        if act(0, a) != bottom {
            return fail("zero_scalar", vec![0, a]);
        }
    }
    // vi: the action is a table lookup, so it is a function
    for s in 0..2 {
        for t in 0..2 {
            for a in 0..m {
                if act(s & t, a) != act(s, act(t, a)) {
                    return fail("scalar_associative", vec![s, t, a]);
                }
                if act(s | t, a) != j(act(s, a), act(t, a)) {
                    return fail("scalar_distributive", vec![s, t, a]);
                }
            }
        }
        for (a, b) in all() {
            if act(s, j(a, b)) != j(act(s, a), act(s, b)) {
                return fail("vector_distributive", vec![s, a, b]);
            }
        }
    }
    for a in 0..m {
        if act(1, a) != a {
            return fail("unit_scalar", vec![1, a]);
        }
    }

    for (a, b) in all() {
        if mt(a, b) != mt(b, a) {
            return fail("meet_commutative", vec![a, b]);
        }
        for c in 0..m {
            if mt(mt(a, b), c) != mt(a, mt(b, c)) {
                return fail("meet_associative", vec![a, b, c]);
            }
        }
        if j(a, mt(a, b)) != a || mt(a, j(a, b)) != a {
            return fail("absorption", vec![a, b]);
        }
    }
    for a in 0..m {
        if j(a, a) != a || mt(a, a) != a {
            return fail("idempotent", vec![a]);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: &[u64]) -> SemivectorTuple {
        SemivectorTuple::nonneg(e)
    }

    fn u() -> Vec<SemivectorTuple> {
        vec![t(&[1, 1]), t(&[2, 1]), t(&[3, 0])]
    }

    #[test]
    fn membership() {
        let r = span_membership(&t(&[1, 3]), &u(), None).unwrap();
        assert!(!r.member);
        let r = span_membership(&t(&[5, 3]), &[t(&[1, 1]), t(&[2, 1])], None).unwrap();
        assert_eq!(r.coefficients, Some(vec![1, 2]));
        let r = span_membership(&t(&[0, 0]), &u(), None).unwrap();
        assert_eq!(r.coefficients, Some(vec![0, 0, 0]));
        assert_eq!(
            span_membership(&t(&[1, 1]), &[t(&[0, 0])], None),
            Err(SemivectorError::ZeroGenerator { index: 0 })
        );
        assert!(span_membership(&t(&[1]), &[t(&[1, 1])], None).is_err());
    }

    #[test]
    fn independence() {
        assert!(independence_check(&u(), None).unwrap().independent);
        let mut four = u();
        four.push(t(&[1, 3]));
        assert!(independence_check(&four, None).unwrap().independent);
        let r = independence_check(&[t(&[1, 0]), t(&[2, 0])], None).unwrap();
        assert_eq!(
            r.witness,
            Some(Dependence {
                index: 1,
                others: vec![0],
                coefficients: vec![2]
            })
        );
    }

    #[test]
    fn spanning() {
        let units = vec![t(&[1, 0, 0]), t(&[0, 1, 0]), t(&[0, 0, 1])];
        assert!(spans_space(&units, &Space::FullTuples { dim: 3 }, None).unwrap().spans);
        let r = spans_space(&u(), &Space::FullTuples { dim: 2 }, None).unwrap();
        assert_eq!(r.missing, Some(vec![1, 0]));
        assert!(!span_membership(&t(&[1, 3]), &u(), None).unwrap().member);
    }

    fn c4(ranks: &[u64]) -> Vec<SemivectorTuple> {
        let sf = Semifield::chain(4).unwrap();
        ranks.iter().map(|&r| SemivectorTuple::new(sf, vec![r]).unwrap()).collect()
    }

    #[test]
    fn chain_over_two_element_scalars() {
        // C4 = {0 < b < a < 1} as ranks 0..4; C2 acts as {0, 3}
        let (b, a, one) = (1, 2, 3);
        let scalars = [0, 3];
        let r = spans_space(&c4(&[one, a, b]), &Space::Chain { size: 4 }, Some(&scalars)).unwrap();
        assert!(r.spans);
        let basis = c4(&[a, b, one]);
        let reps = enumerate_representations(&c4(&[one])[0], &basis, Some(&scalars)).unwrap();
        assert_eq!(reps, vec![vec![0, 0, 3], vec![0, 3, 3], vec![3, 0, 3], vec![3, 3, 3]]);
        let reps = enumerate_representations(&c4(&[a])[0], &basis, Some(&scalars)).unwrap();
        assert_eq!(reps, vec![vec![3, 0, 0], vec![3, 3, 0]]);
        assert!(SemivectorTuple::new(Semifield::chain(4).unwrap(), vec![4]).is_err());
    }

    #[test]
    fn unit_representation_is_unique() {
        let reps = enumerate_representations(&t(&[1, 0]), &[t(&[1, 0]), t(&[0, 1])], None).unwrap();
        assert_eq!(reps, vec![vec![1, 0]]);
    }

    #[test]
    fn lattices() {
        assert!(lattice_semivector_check(&FiniteLattice::chain(4).unwrap()).holds);
        assert!(lattice_semivector_check(&FiniteLattice::diamond()).holds);
        // 1 ∧ 1 = 0 keeps the scalar action intact but breaks absorption
        let mut broken = FiniteLattice::chain(3).unwrap();
        broken.meet[1][1] = 0;
        let r = lattice_semivector_check(&broken);
        assert!(!r.holds);
        assert_eq!(
            r.failure,
            Some(AxiomFailure {
                axiom: "absorption",
                witness: vec![1, 0]
            })
        );

        let l: FiniteLattice = serde_json::from_str(r#"{"kind":"chain","size":4}"#).unwrap();
        assert_eq!(l, FiniteLattice::chain(4).unwrap());
        assert!(serde_json::from_str::<FiniteLattice>(r#"{"join":[[0]],"meet":[[1]]}"#).is_err());
    }

    #[test]
    fn semifield_json() {
        let s: Semifield = serde_json::from_str(r#"{"kind":"chain","size":4}"#).unwrap();
        assert_eq!(s, Semifield::ChainLattice { size: 4 });
        let s: Semifield = serde_json::from_str(r#"{"kind":"nonneg_int"}"#).unwrap();
        assert_eq!(s, Semifield::NonNegInt);
    }
}
