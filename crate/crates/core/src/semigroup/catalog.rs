//! Small named semigroups used by tests, the CLI and the golden replay.

use serde::Serialize;

use super::table::{validate_table, SemigroupTable};

#[derive(Debug, Clone, Serialize)]
pub struct NamedSemigroup {
    pub name: String,
    pub labels: Vec<String>,
    pub table: SemigroupTable,
}

fn maps_to_table(maps: &[Vec<usize>]) -> SemigroupTable {
    let index = |f: &Vec<usize>| maps.iter().position(|g| g == f).expect("closed under composition");
    let raw = maps
        .iter()
        .map(|f| {
            maps.iter()
                .map(|g| index(&g.iter().map(|&i| f[i]).collect()))
                .collect()
        })
        .collect();
    validate_table(raw).expect("composition is associative")
}

fn label(f: &[usize]) -> String {
    let parts: Vec<String> = f.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn all_maps(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

fn is_permutation(f: &[usize]) -> bool {
    let mut seen = vec![false; f.len()];
    f.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

/// All maps `{0..m} -> {0..m}` under composition `(f·g)(i) = f(g(i))`.
/// Permutations come first, then the rest, each block lexicographic; for
/// `m = 2` that is `id, swap, const0, const1`.
pub fn full_transformation_monoid(m: usize) -> NamedSemigroup {
    let (mut perms, rest): (Vec<_>, Vec<_>) = all_maps(m).into_iter().partition(|f| is_permutation(f));
    perms.extend(rest);
    NamedSemigroup {
        name: format!("T{m}"),
        labels: perms.iter().map(|f| label(f)).collect(),
        table: maps_to_table(&perms),
    }
}

/// Permutations of `{0..m}` in lexicographic order under composition.
pub fn symmetric_group(m: usize) -> NamedSemigroup {
    let perms: Vec<Vec<usize>> = all_maps(m).into_iter().filter(|f| is_permutation(f)).collect();
    NamedSemigroup {
        name: format!("S{m}"),
        labels: perms.iter().map(|f| label(f)).collect(),
        table: maps_to_table(&perms),
    }
}

/// `Z_m` under addition.
pub fn cyclic_group(m: usize) -> NamedSemigroup {
    let raw = (0..m).map(|x| (0..m).map(|y| (x + y) % m).collect()).collect();
    NamedSemigroup {
        name: format!("C{m}"),
        labels: (0..m).map(|x| x.to_string()).collect(),
        table: validate_table(raw).expect("addition is associative"),
    }
}

/// `x·y = 0` for all `x, y`.
pub fn null_semigroup(m: usize) -> NamedSemigroup {
    NamedSemigroup {
        name: format!("N{m}"),
        labels: (0..m).map(|x| x.to_string()).collect(),
        table: validate_table(vec![vec![0; m]; m]).expect("constant product is associative"),
    }
}

pub fn by_name(name: &str) -> Option<NamedSemigroup> {
    let (kind, size) = name.split_at(name.find(|c: char| c.is_ascii_digit())?);
    let m: usize = size.parse().ok()?;
    if m == 0 || m > 6 {
        return None;
    }
    match kind {
        "T" if m <= 3 => Some(full_transformation_monoid(m)),
        "S" if m <= 4 => Some(symmetric_group(m)),
        "C" => Some(cyclic_group(m)),
        "N" => Some(null_semigroup(m)),
        _ => None,
    }
}
