//! Exact Markov chains and Leontief input-output models, with the relaxed
//! ("S-") variants that allow negative entries and column sums other
//! than one.

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::rational::{format_rational, int, parse_rational, Rational, RationalError, RationalMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EconError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("not a transition matrix: {0}")]
    NotTransition(String),
    #[error("I - C is singular")]
    Singular { nullspace: Vec<Vec<Rational>> },
    #[error("no equilibrium: I - A is invertible, so only p = 0 solves (I - A)p = 0")]
    NoEquilibrium,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl EconError {
    pub fn code(&self) -> &'static str {
        match self {
            EconError::NotSquare { .. } => "not_square",
            EconError::Shape(_) => "shape_mismatch",
            EconError::NotTransition(_) => "not_transition",
            EconError::Singular { .. } => "singular",
            EconError::NoEquilibrium => "no_equilibrium",
            EconError::Malformed(_) => "malformed",
            EconError::Verification(_) => "verification_failed",
        }
    }
}

impl From<RationalError> for EconError {
    fn from(e: RationalError) -> Self {
        match e {
            RationalError::NotSquare { rows, cols } => EconError::NotSquare { rows, cols },
            RationalError::Shape(s) => EconError::Shape(s),
            RationalError::Parse(s) => EconError::Malformed(format!("cannot parse rational {s:?}")),
        }
    }
}

fn one() -> Rational {
    Rational::one()
}

fn column_sums(m: &RationalMatrix) -> Vec<Rational> {
    (0..m.cols()).map(|j| m.col(j).iter().sum()).collect()
}

fn row_sums(m: &RationalMatrix) -> Vec<Rational> {
    (0..m.rows()).map(|i| m.row(i).iter().sum()).collect()
}

fn in_unit_interval(r: &Rational) -> bool {
    r.abs() <= one()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransitionKind {
    ClassicalMarkov,
    SmarandacheMarkov,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EntryOutOfRange {
        row: usize,
        col: usize,
        #[serde(with = "crate::rational::serde_scalar")]
        value: Rational,
    },
    NegativeEntry {
        row: usize,
        col: usize,
        #[serde(with = "crate::rational::serde_scalar")]
        value: Rational,
    },
    ColumnSumDeviation {
        col: usize,
        #[serde(with = "crate::rational::serde_scalar")]
        sum: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitionClassification {
    pub kind: TransitionKind,
    pub violations: Vec<Violation>,
}

/// Classical: entries `≥ 0`, every column sums to 1. Relaxed: entries and
/// column sums in `[−1, 1]`. Anything else is invalid.
pub fn classify_transition(p: &RationalMatrix) -> Result<TransitionClassification, EconError> {
    p.require_square()?;
    let mut violations = Vec::new();
    for i in 0..p.rows() {
        for j in 0..p.cols() {
            let v = &p[(i, j)];
            if !in_unit_interval(v) {
                violations.push(Violation::EntryOutOfRange {
                    row: i,
                    col: j,
                    value: v.clone(),
                });
            } else if v.is_negative() {
                violations.push(Violation::NegativeEntry {
                    row: i,
                    col: j,
                    value: v.clone(),
                });
            }
        }
    }
    for (j, sum) in column_sums(p).into_iter().enumerate() {
        if sum != one() {
            violations.push(Violation::ColumnSumDeviation { col: j, sum });
        }
    }
    let kind = if violations.is_empty() {
        TransitionKind::ClassicalMarkov
    } else if violations.iter().all(|v| match v {
        Violation::EntryOutOfRange { .. } => false,
        Violation::NegativeEntry { .. } => true,
        Violation::ColumnSumDeviation { sum, .. } => in_unit_interval(sum),
    }) {
        TransitionKind::SmarandacheMarkov
    } else {
        TransitionKind::Invalid
    };
    Ok(TransitionClassification { kind, violations })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkovStep {
    #[serde(with = "crate::rational::serde_vec")]
    pub state: Vec<Rational>,
    #[serde(with = "crate::rational::serde_scalar")]
    pub sum: Rational,
    pub has_negative: bool,
    pub sum_below_one: bool,
    /// Some entry left `[−1, 1]`; reported, never clamped.
    pub outside_unit_interval: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkovRun {
    pub kind: TransitionKind,
    pub steps: Vec<MarkovStep>,
}

/// Iterates `x ← P x` for both classical and relaxed matrices.
pub fn markov_step(p: &RationalMatrix, x0: &[Rational], steps: usize) -> Result<MarkovRun, EconError> {
    let class = classify_transition(p)?;
    if class.kind == TransitionKind::Invalid {
        return Err(EconError::NotTransition(
            "entries or column sums outside [-1, 1]".into(),
        ));
    }
    if x0.len() != p.cols() {
        return Err(EconError::Shape(format!("matrix has {} columns, state has {} entries", p.cols(), x0.len())));
    }
    let probability = x0.iter().all(|v| !v.is_negative()) && x0.iter().sum::<Rational>() == one();
    let mut x = x0.to_vec();
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        x = p.mul_vec(&x)?;
        let sum: Rational = x.iter().sum();
        let has_negative = x.iter().any(Signed::is_negative);
        if class.kind == TransitionKind::ClassicalMarkov && probability && (has_negative || sum != one()) {
            return Err(EconError::Verification("classical step left the probability simplex".into()));
        }
        out.push(MarkovStep {
            sum_below_one: sum < one(),
            outside_unit_interval: x.iter().any(|v| !in_unit_interval(v)),
            state: x.clone(),
            sum,
            has_negative,
        });
    }
    Ok(MarkovRun {
        kind: class.kind,
        steps: out,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelPath {
    Classical,
    Smarandache,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedSolution {
    pub model: &'static str,
    pub path: ModelPath,
    /// Basis of `{p : (I − A)p = 0}`.
    #[serde(with = "crate::rational::serde_vecs")]
    pub nullspace: Vec<Vec<Rational>>,
    pub nullity: usize,
    pub unique: bool,
    /// For nullity 1, the ray normalized to sum 1 when it has a
    /// nonnegative representative.
    #[serde(with = "crate::rational::serde_opt_vec")]
    pub representative: Option<Vec<Rational>>,
    pub nonnegative_representative: Option<bool>,
    pub multiplicity_warning: bool,
    /// Smallest `m ≤ dim` with `A^m` entrywise positive.
    pub first_positive_power: Option<usize>,
    /// Relaxed path only: the pick of [`best_solution`].
    #[serde(with = "crate::rational::serde_opt_vec")]
    pub best_solution: Option<Vec<Rational>>,
}

fn is_exchange(a: &RationalMatrix) -> bool {
    a.is_nonnegative() && column_sums(a).iter().all(|s| *s == one())
}

fn first_positive_power(a: &RationalMatrix) -> Result<Option<usize>, EconError> {
    let mut power = a.clone();
    for m in 1..=a.rows() {
        if power.is_positive() {
            return Ok(Some(m));
        }
        power = power.mul(a)?;
    }
    Ok(None)
}

fn l1(v: &[Rational]) -> Rational {
    v.iter().map(Signed::abs).sum()
}

/// Among `Σ w_i b_i` with integer weights in `[−2, 2]` (not all zero),
/// scaled to unit 1-norm: least negative mass, then largest sum, then
/// lexicographically smallest.
pub fn best_solution(basis: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let dim = basis.first()?.len();
    let mut best: Option<(Rational, Rational, Vec<Rational>)> = None;
    let total = 5usize.pow(k as u32);
    for code in 0..total {
        let mut c = code;
        let mut v = vec![Rational::zero(); dim];
        for b in basis {
            let w = int((c % 5) as i64 - 2);
            c /= 5;
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += &w * bi;
            }
        }
        let norm = l1(&v);
        if norm.is_zero() {
            continue;
        }
        let v: Vec<Rational> = v.iter().map(|x| x / &norm).collect();
        let negative: Rational = v.iter().filter(|x| x.is_negative()).map(|x| -x).sum();
        let sum: Rational = v.iter().sum();
        let better = match &best {
            None => true,
            Some((bn, bs, bv)) => (&negative, std::cmp::Reverse(&sum), &v) < (bn, std::cmp::Reverse(bs), bv),
        };
        if better {
            best = Some((negative, sum, v));
        }
    }
    best.map(|(_, _, v)| v)
}

/// Equilibria of the closed model `(I − A)p = 0`.
pub fn closed_solve(a: &RationalMatrix) -> Result<ClosedSolution, EconError> {
    let n = a.require_square()?;
    let i_minus_a = RationalMatrix::identity(n).sub(a)?;
    let nullspace = i_minus_a.nullspace();
    for p in &nullspace {
        if i_minus_a.mul_vec(p)?.iter().any(|x| !x.is_zero()) {
            return Err(EconError::Verification("nullspace vector fails (I - A)p = 0".into()));
        }
    }
    let path = if is_exchange(a) {
        ModelPath::Classical
    } else {
        ModelPath::Smarandache
    };
    if nullspace.is_empty() {
        return Err(EconError::NoEquilibrium);
    }
    let nullity = nullspace.len();
    let (representative, nonnegative_representative) = if nullity == 1 {
        let v = &nullspace[0];
        let nonneg = v.iter().all(|x| !x.is_negative()) || v.iter().all(|x| !x.is_positive());
        let sum: Rational = v.iter().sum();
        let rep = (nonneg && !sum.is_zero()).then(|| v.iter().map(|x| x / &sum).collect());
        (rep, Some(nonneg))
    } else {
        (None, None)
    };
    let best = match path {
        ModelPath::Smarandache => best_solution(&nullspace),
        ModelPath::Classical => None,
    };
    Ok(ClosedSolution {
        model: "closed",
        path,
        unique: nullity == 1,
        multiplicity_warning: nullity > 1,
        first_positive_power: first_positive_power(a)?,
        nullity,
        nullspace,
        representative,
        nonnegative_representative,
        best_solution: best,
    })
}

pub const NON_PRODUCTIVE_LABEL: &str = "non-productive or not up to satisfaction";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenSolution {
    pub model: &'static str,
    pub path: ModelPath,
    /// `(I − C)⁻¹` exists and is entrywise nonnegative.
    pub productive: bool,
    pub row_sums_below_one: bool,
    pub column_sums_below_one: bool,
    #[serde(with = "crate::rational::serde_vec")]
    pub x: Vec<Rational>,
    pub leontief_inverse: RationalMatrix,
    pub label: Option<&'static str>,
}

/// Solves `(I − C)x = d`.
pub fn open_solve(c: &RationalMatrix, d: &[Rational]) -> Result<OpenSolution, EconError> {
    let n = c.require_square()?;
    if d.len() != n {
        return Err(EconError::Shape(format!("matrix is {n}x{n}, demand has {} entries", d.len())));
    }
    let i_minus_c = RationalMatrix::identity(n).sub(c)?;
    let Some(inv) = i_minus_c.inverse()? else {
        return Err(EconError::Singular {
            nullspace: i_minus_c.nullspace(),
        });
    };
    let x = inv.mul_vec(d)?;
    if i_minus_c.mul_vec(&x)? != d {
        return Err(EconError::Verification("(I - C)x differs from d".into()));
    }
    let classical = c.is_nonnegative() && d.iter().all(|v| !v.is_negative());
    let productive = inv.is_nonnegative();
    if classical && productive && x.iter().any(Signed::is_negative) {
        return Err(EconError::Verification("productive classical model gave negative output".into()));
    }
    Ok(OpenSolution {
        model: "open",
        path: if classical {
            ModelPath::Classical
        } else {
            ModelPath::Smarandache
        },
        productive,
        row_sums_below_one: row_sums(c).iter().all(|s| *s < one()),
        column_sums_below_one: column_sums(c).iter().all(|s| *s < one()),
        x,
        leontief_inverse: inv,
        label: (!productive).then_some(NON_PRODUCTIVE_LABEL),
    })
}

/// Consumption matrix from CSV: a header row of industry names, then one
/// row of rationals per industry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsumptionTable {
    pub industries: Vec<String>,
    pub matrix: RationalMatrix,
}

impl ConsumptionTable {
    pub fn from_csv(text: &str) -> Result<Self, EconError> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let industries: Vec<String> = reader
            .headers()
            .map_err(|e| EconError::Malformed(e.to_string()))?
            .iter()
            .map(str::to_string)
            .collect();
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| EconError::Malformed(e.to_string()))?;
            rows.push(record.iter().map(parse_rational).collect::<Result<Vec<_>, _>>()?);
        }
        if rows.len() != industries.len() {
            return Err(EconError::Malformed(format!(
                "{} industries but {} rows",
                industries.len(),
                rows.len()
            )));
        }
        let matrix = RationalMatrix::from_rows(rows)?;
        Ok(ConsumptionTable { industries, matrix })
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.industries.join(",");
        out.push('\n');
        for i in 0..self.matrix.rows() {
            let row: Vec<String> = self.matrix.row(i).iter().map(format_rational).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}
