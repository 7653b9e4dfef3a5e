use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use smaralg_core::econ::{self, ConsumptionTable};
use smaralg_core::linalg::{self, SubfieldMatrix};
use smaralg_core::poly::{self as criteria, FermatFamily};
use smaralg_core::poly::ModPolynomial;
use smaralg_core::rational::{serde_vec, serde_vecs, Rational, RationalMatrix};
use smaralg_core::ring::{self, ModulusRing};
use smaralg_core::semigroup::{self, catalog, SemigroupError, SemigroupTable, Side, SubgroupRecord};
use smaralg_core::semivector::{self, FiniteLattice, Semifield, SemivectorTuple, Space};

use crate::report::{to_payload, Failure};
use crate::{
    Command, FamilyArg, JsonInput, LeontiefArgs, MarkovArgs, ModelArg, PolyArgs, RepAction, RepArgs, SemigroupArgs,
    SideArg, SpectralArgs, SpectralMode, TableSource,
};

type Outcome = Result<Value, Failure>;

fn cite(ids: &[&str]) -> Vec<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

pub fn dispatch(cmd: &Command) -> (Outcome, Vec<String>) {
    match cmd {
        Command::Subfields { n } => (subfields(*n), cite(&["subfields-of-zn"])),
        Command::Certify { n, elements } => (certify(*n, elements), cite(&["subfield-certification"])),
        Command::Poly(args) => poly(args),
        Command::Spectral(args) => spectral(args),
        Command::ClassifyRoots { modulus, subfield, poly } => {
            (classify_roots(*modulus, subfield, poly), cite(&["neutrosophic-roots"]))
        }
        Command::Semigroup(args) => (semigroup_cmd(args), cite(&["maximal-subgroups"])),
        Command::Rep(args) => rep(args),
        Command::Semivec(input) => semivec(input),
        Command::Markov(args) => (markov(args), cite(&["smarandache-markov"])),
        Command::Leontief(args) => leontief(args),
        Command::Golden => (Ok(crate::golden::replay()), cite(&["golden-replay"])),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn source_text(file: Option<&Path>, inline: Option<&str>) -> Result<String, Failure> {
    match (file, inline) {
        (Some(p), _) => read_file(p),
        (None, Some(s)) => Ok(s.to_string()),
        (None, None) => Err(Failure::usage("no input given")),
    }
}

fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::usage(format!("malformed {what}: {e}")))
}

#[derive(Deserialize)]
struct RationalRows(#[serde(with = "serde_vecs")] Vec<Vec<Rational>>);

#[derive(Deserialize)]
struct RationalVec(#[serde(with = "serde_vec")] Vec<Rational>);

fn rational_matrix(text: &str) -> Result<RationalMatrix, Failure> {
    let RationalRows(rows) = parse_json(text, "matrix")?;
    Ok(RationalMatrix::from_rows(rows)?)
}

fn rational_vector(text: &str, what: &str) -> Result<Vec<Rational>, Failure> {
    let RationalVec(v) = parse_json(text, what)?;
    Ok(v)
}

// ---- ring-core ----

fn subfields(n: u64) -> Outcome {
    let ring = ModulusRing::new(n)?;
    let list = ring::find_subfields(&ring);
    Ok(json!({ "n": n, "count": list.len(), "subfields": list }))
}

fn certify(n: u64, elements: &[u64]) -> Outcome {
    let ring = ModulusRing::new(n)?;
    let k = ring::certify_subfield(&ring, elements)?;
    Ok(json!({ "n": n, "subfield": k }))
}

// ---- poly-lab ----

fn parse_poly(expr: &str, n: u64) -> Result<ModPolynomial, Failure> {
    ModPolynomial::parse_terms(expr, n).map_err(|e| match e {
        smaralg_core::poly::PolyError::Parse { .. } => Failure::usage(e),
        other => other.into(),
    })
}

fn poly(args: &PolyArgs) -> (Outcome, Vec<String>) {
    let n = args.modulus;
    if let Some(expr) = &args.expr {
        let ids = if args.times.is_empty() {
            cite(&["root-criteria"])
        } else {
            cite(&["polynomial-arithmetic", "root-criteria"])
        };
        return (poly_report(n, expr, &args.times), ids);
    }
    if let Some(family) = args.family {
        let fam = match family {
            FamilyArg::XpLinear => FermatFamily::XpLinear,
            FamilyArg::GeometricSum => FermatFamily::GeometricSum,
        };
        let c = args.c.unwrap_or_default();
        let out = criteria::fermat_family_check(n, fam, c).map(|r| to_payload(&r)).map_err(Failure::from);
        return (out, cite(&["fermat-rootless-families"]));
    }
    if let Some(max_degree) = args.kernel {
        let out = criteria::kernel_of_hom(n, max_degree)
            .map(|k| {
                let text: Vec<String> = k.kernel.iter().map(|p| p.to_string()).collect();
                let mut v = to_payload(&k);
                v["kernel_text"] = json!(text);
                v
            })
            .map_err(Failure::from);
        return (out, cite(&["coefficient-sum-kernel"]));
    }
    if let Some(a) = args.power_sum {
        let r = args.exponent.unwrap_or_default();
        let out = criteria::fermat_power_sum(n, a, r).map(|s| to_payload(&s)).map_err(Failure::from);
        return (out, cite(&["fermat-power-sum"]));
    }
    (Err(Failure::usage("no polynomial mode selected")), Vec::new())
}

fn poly_report(n: u64, expr: &str, times: &[String]) -> Outcome {
    let mut p = parse_poly(expr, n)?;
    for f in times {
        p = p.mul(&parse_poly(f, n)?)?;
    }
    let mut out = json!({
        "polynomial": p,
        "text": p.to_string(),
        "degree": p.degree(),
        "coeff_sum": criteria::coeff_sum_hom(&p),
    });
    if ring::is_prime(n) {
        out["report"] = to_payload(&criteria::reducibility_report(&p)?);
    } else {
        let all: Vec<u64> = (0..n).collect();
        out["roots"] = json!(criteria::roots_in(&p, &all));
    }
    Ok(out)
}

fn classify_roots(n: u64, subfield: &[u64], expr: &str) -> Outcome {
    let ring = ModulusRing::new(n)?;
    let k = ring::scalar_field(&ring, subfield)?;
    let p = parse_poly(expr, n)?;
    let c = criteria::neutrosophic_classify(&p, &k)?;
    Ok(json!({ "polynomial": p.to_string(), "subfield": k, "classification": c }))
}

// ---- subfield-linalg ----

#[derive(Deserialize)]
struct MatrixInput {
    n: u64,
    subfield: Vec<u64>,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

fn subfield_matrix(text: &str) -> Result<SubfieldMatrix, Failure> {
    let m: MatrixInput = parse_json(text, "matrix")?;
    let ring = ModulusRing::new(m.n)?;
    let k = ring::scalar_field(&ring, &m.subfield)?;
    Ok(SubfieldMatrix::new(&k, m.rows, m.cols, m.entries)?)
}

fn spectral(args: &SpectralArgs) -> (Outcome, Vec<String>) {
    let ids = match args.mode {
        SpectralMode::Decompose => cite(&["finite-field-spectral-theorem"]),
        SpectralMode::Eigen => cite(&["characteristic-values"]),
        SpectralMode::Charpoly => cite(&["characteristic-polynomial"]),
        SpectralMode::Rref => cite(&["echelon-nullspace"]),
        SpectralMode::Adjoint => cite(&["self-adjoint"]),
        SpectralMode::Form => cite(&["bilinear-forms"]),
    };
    (spectral_run(args), ids)
}

fn spectral_run(args: &SpectralArgs) -> Outcome {
    let text = source_text(args.file.as_deref(), args.matrix.as_deref())?;
    let a = subfield_matrix(&text)?;
    Ok(match args.mode {
        SpectralMode::Decompose => to_payload(&linalg::spectral_decompose(&a)?),
        SpectralMode::Eigen => to_payload(&linalg::eigen_system(&a)?),
        SpectralMode::Charpoly => to_payload(&linalg::char_poly(&a)?),
        SpectralMode::Rref => to_payload(&linalg::rref_and_nullspace(&a)),
        SpectralMode::Adjoint => json!({ "self_adjoint": linalg::self_adjoint_check(&a)? }),
        SpectralMode::Form => to_payload(&linalg::bilinear_form_analyze(&a)?),
    })
}

// ---- semigroup-rep ----

#[derive(Deserialize)]
struct TableInput {
    table: Vec<Vec<usize>>,
    #[serde(default)]
    order: Option<usize>,
}

fn table_from_json(text: &str) -> Result<SemigroupTable, Failure> {
    let t: TableInput = parse_json(text, "table")?;
    if let Some(order) = t.order {
        if order != t.table.len() {
            return Err(SemigroupError::Malformed(format!("order {order} but {} rows", t.table.len())).into());
        }
    }
    Ok(semigroup::validate_table(t.table)?)
}

fn load_table(src: &TableSource) -> Result<(SemigroupTable, Option<Vec<String>>), Failure> {
    if let Some(name) = &src.named {
        let s = catalog::by_name(name).ok_or_else(|| Failure::usage(format!("unknown semigroup name {name:?}")))?;
        return Ok((s.table, Some(s.labels)));
    }
    if let Some(path) = &src.file {
        let text = read_file(path)?;
        let csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
        let table = if csv {
            SemigroupTable::from_csv(&text)?
        } else {
            table_from_json(&text)?
        };
        return Ok((table, None));
    }
    match &src.table {
        Some(text) => Ok((table_from_json(text)?, None)),
        None => Err(Failure::usage("no semigroup given")),
    }
}

fn semigroup_cmd(args: &SemigroupArgs) -> Outcome {
    let (s, labels) = load_table(&args.source)?;
    let groups = if args.all {
        semigroup::all_subgroups(&s)?
    } else {
        semigroup::find_subgroups(&s)
    };
    let mut out = json!({
        "order": s.order(),
        "idempotents": s.idempotents(),
        "subgroups": groups,
    });
    if let Some(l) = labels {
        out["labels"] = json!(l);
    }
    Ok(out)
}

fn pick_subgroup(s: &SemigroupTable, identity: Option<usize>) -> Result<SubgroupRecord, Failure> {
    match identity {
        Some(e) => Ok(s.maximal_subgroup(e)?),
        None => {
            let groups = semigroup::find_subgroups(s);
            let best = groups.iter().map(|g| g.order()).max().unwrap_or(0);
            groups
                .into_iter()
                .find(|g| g.order() == best)
                .ok_or_else(|| Failure::domain("no_subgroup", "semigroup has no idempotent"))
        }
    }
}

fn rep(args: &RepArgs) -> (Outcome, Vec<String>) {
    let ids = match args.action {
        RepAction::Matrices => cite(&["regular-representations"]),
        RepAction::Intertwiner | RepAction::Isomorphic => cite(&["left-right-isomorphism"]),
        RepAction::Decompose => cite(&["invariant-decomposition"]),
        RepAction::Project => cite(&["averaged-projection"]),
    };
    (rep_run(args), ids)
}

fn rep_run(args: &RepArgs) -> Outcome {
    let (s, _) = load_table(&args.source)?;
    let h = pick_subgroup(&s, args.identity)?;
    let side = match args.side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let r = semigroup::regular_representation(&h, side);
    match args.action {
        RepAction::Matrices => Ok(to_payload(&r)),
        RepAction::Intertwiner => Ok(json!({
            "subgroup": h,
            "intertwiner": semigroup::left_right_intertwiner(&h)?,
        })),
        RepAction::Isomorphic => {
            let left = semigroup::regular_representation(&h, Side::Left);
            let right = semigroup::regular_representation(&h, Side::Right);
            Ok(json!({
                "subgroup": h,
                "report": semigroup::rep_isomorphic(&right, &left)?,
            }))
        }
        RepAction::Decompose => {
            let blocks = semigroup::decompose_invariants(&r)?;
            let dims: Vec<usize> = blocks.iter().map(|b| b.dimension).collect();
            Ok(json!({ "subgroup": h, "dimensions": dims, "blocks": blocks }))
        }
        RepAction::Project => {
            let text = args
                .subspace
                .as_deref()
                .ok_or_else(|| Failure::usage("--action project needs --subspace"))?;
            let RationalRows(w) = parse_json(text, "subspace")?;
            let p0 = semigroup::coordinate_projection(&w, r.degree)?;
            Ok(json!({
                "subgroup": h,
                "result": semigroup::averaged_projection(&r, &w, &p0)?,
            }))
        }
    }
}

// ---- semivector ----

fn default_semifield() -> Semifield {
    Semifield::NonNegInt
}

#[derive(Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
enum SemivecQuery {
    Span {
        #[serde(default = "default_semifield")]
        semifield: Semifield,
        target: Vec<u64>,
        generators: Vec<Vec<u64>>,
        #[serde(default)]
        scalars: Option<Vec<u64>>,
    },
    Independence {
        #[serde(default = "default_semifield")]
        semifield: Semifield,
        vectors: Vec<Vec<u64>>,
        #[serde(default)]
        scalars: Option<Vec<u64>>,
    },
    Spans {
        #[serde(default = "default_semifield")]
        semifield: Semifield,
        generators: Vec<Vec<u64>>,
        space: Space,
        #[serde(default)]
        scalars: Option<Vec<u64>>,
    },
    Representations {
        #[serde(default = "default_semifield")]
        semifield: Semifield,
        target: Vec<u64>,
        basis: Vec<Vec<u64>>,
        #[serde(default)]
        scalars: Option<Vec<u64>>,
    },
    Lattice {
        lattice: FiniteLattice,
    },
}

fn tuples(sf: Semifield, vs: &[Vec<u64>]) -> Result<Vec<SemivectorTuple>, Failure> {
    vs.iter()
        .map(|v| SemivectorTuple::new(sf, v.clone()).map_err(Failure::from))
        .collect()
}

fn semivec(input: &JsonInput) -> (Outcome, Vec<String>) {
    let query = source_text(input.file.as_deref(), input.json.as_deref())
        .and_then(|t| parse_json::<SemivecQuery>(&t, "semivector request"));
    let query = match query {
        Ok(q) => q,
        Err(e) => return (Err(e), cite(&["semivector-spaces"])),
    };
    let ids = match &query {
        SemivecQuery::Span { .. } => cite(&["semivector-span"]),
        SemivecQuery::Independence { .. } => cite(&["semivector-independence"]),
        SemivecQuery::Spans { .. } => cite(&["semivector-spanning"]),
        SemivecQuery::Representations { .. } => cite(&["chain-representations"]),
        SemivecQuery::Lattice { .. } => cite(&["lattice-semivector-space"]),
    };
    (semivec_run(query), ids)
}

fn semivec_run(query: SemivecQuery) -> Outcome {
    match query {
        SemivecQuery::Span {
            semifield,
            target,
            generators,
            scalars,
        } => {
            let t = SemivectorTuple::new(semifield, target)?;
            let g = tuples(semifield, &generators)?;
            Ok(to_payload(&semivector::span_membership(&t, &g, scalars.as_deref())?))
        }
        SemivecQuery::Independence {
            semifield,
            vectors,
            scalars,
        } => {
            let v = tuples(semifield, &vectors)?;
            Ok(to_payload(&semivector::independence_check(&v, scalars.as_deref())?))
        }
        SemivecQuery::Spans {
            semifield,
            generators,
            space,
            scalars,
        } => {
            let g = tuples(semifield, &generators)?;
            Ok(to_payload(&semivector::spans_space(&g, &space, scalars.as_deref())?))
        }
        SemivecQuery::Representations {
            semifield,
            target,
            basis,
            scalars,
        } => {
            let t = SemivectorTuple::new(semifield, target)?;
            let b = tuples(semifield, &basis)?;
            let reps = semivector::enumerate_representations(&t, &b, scalars.as_deref())?;
            Ok(json!({ "count": reps.len(), "representations": reps }))
        }
        SemivecQuery::Lattice { lattice } => Ok(json!({
            "size": lattice.size(),
            "check": semivector::lattice_semivector_check(&lattice),
        })),
    }
}

// ---- econ-models ----

fn markov(args: &MarkovArgs) -> Outcome {
    let text = source_text(args.file.as_deref(), args.matrix.as_deref())?;
    let p = rational_matrix(&text)?;
    let classification = econ::classify_transition(&p)?;
    let mut out = json!({ "classification": classification });
    if let Some(state) = &args.state {
        let x0 = rational_vector(state, "state")?;
        out["run"] = to_payload(&econ::markov_step(&p, &x0, args.steps)?);
    }
    Ok(out)
}

fn leontief(args: &LeontiefArgs) -> (Outcome, Vec<String>) {
    let ids = match args.model {
        ModelArg::Closed => cite(&["leontief-closed"]),
        ModelArg::Open => cite(&["leontief-open"]),
    };
    (leontief_run(args), ids)
}

fn leontief_run(args: &LeontiefArgs) -> Outcome {
    let (matrix, industries) = match &args.csv {
        Some(path) => {
            let t = ConsumptionTable::from_csv(&read_file(path)?)?;
            (t.matrix, Some(t.industries))
        }
        None => {
            let text = source_text(args.file.as_deref(), args.matrix.as_deref())?;
            (rational_matrix(&text)?, None)
        }
    };
    let mut out = match args.model {
        ModelArg::Closed => {
            if args.demand.is_some() {
                return Err(Failure::usage("--demand applies only to the open model"));
            }
            to_payload(&econ::closed_solve(&matrix)?)
        }
        ModelArg::Open => {
            let d = args
                .demand
                .as_deref()
                .ok_or_else(|| Failure::usage("the open model needs --demand"))?;
            let d = rational_vector(d, "demand")?;
            to_payload(&econ::open_solve(&matrix, &d)?)
        }
    };
    if let Some(names) = industries {
        out["industries"] = json!(names);
    }
    Ok(out)
}
