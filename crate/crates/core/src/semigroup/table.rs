use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::SemigroupError;

#[derive(Serialize, Deserialize)]
struct TableRecord {
    order: usize,
    table: Vec<Vec<usize>>,
}

/// Finite semigroup given by its multiplication table, row `x`, column `y`
/// holding `x·y`. Associativity is checked on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TableRecord", try_from = "TableRecord")]
pub struct SemigroupTable {
    table: Vec<Vec<usize>>,
}

impl From<SemigroupTable> for TableRecord {
    fn from(s: SemigroupTable) -> Self {
        TableRecord {
            order: s.order(),
            table: s.table,
        }
    }
}

impl TryFrom<TableRecord> for SemigroupTable {
    type Error = SemigroupError;
    fn try_from(r: TableRecord) -> Result<Self, SemigroupError> {
        if r.table.len() != r.order {
            return Err(SemigroupError::Malformed(format!(
                "order {} but {} rows",
                r.order,
                r.table.len()
            )));
        }
        validate_table(r.table)
    }
}

/// Checks shape, range and associativity; the first failing triple is the witness.
pub fn validate_table(raw: Vec<Vec<usize>>) -> Result<SemigroupTable, SemigroupError> {
    let m = raw.len();
    if m == 0 {
        return Err(SemigroupError::Malformed("empty table".into()));
    }
    for (x, row) in raw.iter().enumerate() {
        if row.len() != m {
            return Err(SemigroupError::Malformed(format!(
                "row {x} has {} entries, expected {m}",
                row.len()
            )));
        }
        if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= m) {
            return Err(SemigroupError::EntryOutOfRange { x, y, value: v });
        }
    }
    for x in 0..m {
        for y in 0..m {
            let xy = raw[x][y];
            for z in 0..m {
                if raw[xy][z] != raw[x][raw[y][z]] {
                    return Err(SemigroupError::NonAssociative { x, y, z });
                }
            }
        }
    }
    Ok(SemigroupTable { table: raw })
}

impl SemigroupTable {
    /// CSV with `m` rows of `m` indices and no header.
    pub fn from_csv(text: &str) -> Result<Self, SemigroupError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| SemigroupError::Malformed(e.to_string()))?;
            let row = record
                .iter()
                .map(|f| {
                    f.parse::<usize>()
                        .map_err(|_| SemigroupError::Malformed(format!("not an index: {f:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        validate_table(rows)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order()).filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Group of units of the local monoid `eSe`: the largest subgroup with identity `e`.
    pub fn maximal_subgroup(&self, e: usize) -> Result<SubgroupRecord, SemigroupError> {
        if self.mul(e, e) != e {
            return Err(SemigroupError::NotSubgroup(format!("{e} is not idempotent")));
        }
        let mut local: Vec<usize> = (0..self.order()).map(|s| self.mul(self.mul(e, s), e)).collect();
        local.sort_unstable();
        local.dedup();
        let units: Vec<usize> = local
            .iter()
            .copied()
            .filter(|&x| {
                local
                    .iter()
                    .any(|&y| self.mul(x, y) == e && self.mul(y, x) == e)
            })
            .collect();
        SubgroupRecord::from_subset(self, &units)
    }
}

/// A subset of a semigroup that is a group under the inherited product.
/// Carries its own Cayley table in local positions (order of `elements`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupRecord {
    pub identity: usize,
    pub elements: Vec<usize>,
    pub inverse_map: BTreeMap<usize, usize>,
    #[serde(skip)]
    local: Vec<Vec<usize>>,
}

impl SubgroupRecord {
    /// Verifies closure, a two-sided identity and two-sided inverses.
    pub fn from_subset(s: &SemigroupTable, subset: &[usize]) -> Result<Self, SemigroupError> {
        let mut elements = subset.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() {
            return Err(SemigroupError::NotSubgroup("empty subset".into()));
        }
        if let Some(&x) = elements.iter().find(|&&x| x >= s.order()) {
            return Err(SemigroupError::NotSubgroup(format!("{x} is not an element")));
        }
        let pos = |x: usize| elements.binary_search(&x).ok();
        let mut local = vec![vec![0; elements.len()]; elements.len()];
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                let p = s.mul(x, y);
                local[i][j] = pos(p).ok_or_else(|| {
                    SemigroupError::NotSubgroup(format!("{x}·{y} = {p} leaves the subset"))
                })?;
            }
        }
        let identity = elements
            .iter()
            .copied()
            .find(|&e| elements.iter().all(|&x| s.mul(e, x) == x && s.mul(x, e) == x))
            .ok_or_else(|| SemigroupError::NotSubgroup("no identity".into()))?;
        let mut inverse_map = BTreeMap::new();
        for &x in &elements {
            let inv = elements
                .iter()
                .copied()
                .find(|&y| s.mul(x, y) == identity && s.mul(y, x) == identity)
                .ok_or_else(|| SemigroupError::NotSubgroup(format!("{x} has no inverse")))?;
            inverse_map.insert(x, inv);
        }
        Ok(SubgroupRecord {
            identity,
            elements,
            inverse_map,
            local,
        })
    }

    /// The whole table, which must be a group.
    pub fn whole_group(s: &SemigroupTable) -> Result<Self, SemigroupError> {
        Self::from_subset(s, &(0..s.order()).collect::<Vec<_>>())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// Product of two members, in global indices.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (i, j) = (self.position(x).expect("member"), self.position(y).expect("member"));
        self.elements[self.local[i][j]]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse_map[&x]
    }

    /// Product in local positions.
    pub fn local_mul(&self, i: usize, j: usize) -> usize {
        self.local[i][j]
    }

    pub fn local_inverse(&self, i: usize) -> usize {
        self.position(self.inverse(self.elements[i])).expect("member")
    }

    pub fn same_group(&self, other: &Self) -> bool {
        self.elements == other.elements && self.local == other.local
    }
}

/// Maximal subgroups, one per idempotent, in ascending identity order.
pub fn find_subgroups(s: &SemigroupTable) -> Vec<SubgroupRecord> {
    s.idempotents()
        .into_iter()
        .map(|e| s.maximal_subgroup(e).expect("units of eSe form a group"))
        .collect()
}

pub const ALL_SUBGROUPS_LIMIT: usize = 12;

/// Every subset that is a group, by exhaustive search over subsets. Sorted
/// by identity, then size descending, then elements.
pub fn all_subgroups(s: &SemigroupTable) -> Result<Vec<SubgroupRecord>, SemigroupError> {
    let m = s.order();
    if m > ALL_SUBGROUPS_LIMIT {
        return Err(SemigroupError::OrderBound {
            order: m,
            limit: ALL_SUBGROUPS_LIMIT,
        });
    }
    let mut out: Vec<SubgroupRecord> = (1u32..1 << m)
        .filter_map(|mask| {
            let subset: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            SubgroupRecord::from_subset(s, &subset).ok()
        })
        .collect();
    out.sort_by(|a, b| {
        a.identity
            .cmp(&b.identity)
            .then(b.order().cmp(&a.order()))
            .then(a.elements.cmp(&b.elements))
    });
    Ok(out)
}
