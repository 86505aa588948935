//! Built-in algebras.

use super::{AlgebraData, AlgebraError, Bialgebra, CoalgebraData, HopfData, Structure};
use crate::linalg::{Field, LinMap, Space};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresetId {
    /// Group algebra of a group given by its Cayley table.
    GroupAlgebra(GroupTable),
    /// Dual of a group algebra: functions on the group.
    DualGroupAlgebra(GroupTable),
    /// Sweedler's four-dimensional Hopf algebra.
    SweedlerH4,
    /// `k{1, e}` with `e² = e`, `Δe = e⊗e`; a bialgebra without antipode.
    IdempotentMonoid,
    /// `k[x]/(x²)`, an algebra only.
    DualNumbers,
}

/// A finite group by Cayley table, with display labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn cyclic(n: usize) -> GroupTable {
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        GroupTable { name: format!("Z{n}"), labels, table }
    }

    /// The symmetric group on three letters, elements `r^a s^b` with `s r = r² s`.
    pub fn s3() -> GroupTable {
        let idx = |a: usize, b: usize| a + 3 * b;
        let mut table = vec![vec![0; 6]; 6];
        for a1 in 0..3 {
            for b1 in 0..2 {
                for a2 in 0..3 {
                    for b2 in 0..2 {
                        // r^a1 s^b1 r^a2 s^b2 = r^(a1 + (-1)^b1 a2) s^(b1+b2)
                        let a = if b1 == 0 { (a1 + a2) % 3 } else { (a1 + 3 - a2) % 3 };
                        table[idx(a1, b1)][idx(a2, b2)] = idx(a, (b1 + b2) % 2);
                    }
                }
            }
        }
        let labels = ["1", "r", "r2", "s", "rs", "r2s"].iter().map(|s| s.to_string()).collect();
        GroupTable { name: "S3".into(), labels, table }
    }

    pub fn klein() -> GroupTable {
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        let labels = ["1", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        GroupTable { name: "V4".into(), labels, table }
    }

    /// Validates a raw table: closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<GroupTable, AlgebraError> {
        let n = table.len();
        if n == 0 {
            return Err(AlgebraError::Input("empty Cayley table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::Input(format!("row {i} of the Cayley table has length {}", row.len())));
            }
            if let Some(j) = row.iter().position(|&x| x >= n) {
                return Err(AlgebraError::Input(format!("entry ({i},{j}) is not an element")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(AlgebraError::Input(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| AlgebraError::Input("no identity element".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == e) {
                return Err(AlgebraError::Input(format!("element {a} has no inverse")));
            }
        }
        let labels = (0..n).map(|i| if i == e { "1".to_string() } else { format!("g{i}") }).collect();
        Ok(GroupTable { name: "table".into(), labels, table })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|x| self.table[e][x] == x)).unwrap()
    }

    pub fn inverse(&self, a: usize) -> usize {
        let e = self.identity();
        (0..self.order()).find(|&b| self.table[a][b] == e).unwrap()
    }
}

impl FromStr for GroupTable {
    type Err = AlgebraError;
    /// `Zn`, `S3`, `V4`, `trivial`, or a JSON Cayley table such as `[[0,1],[1,0]]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.starts_with('[') {
            let table: Vec<Vec<usize>> =
                serde_json::from_str(t).map_err(|e| AlgebraError::Input(format!("Cayley table: {e}")))?;
            return GroupTable::from_table(table);
        }
        match t {
            "trivial" | "Z1" | "1" => return Ok(GroupTable::cyclic(1)),
            "S3" => return Ok(GroupTable::s3()),
            "V4" | "Z2xZ2" => return Ok(GroupTable::klein()),
            _ => {}
        }
        if let Some(n) = t.strip_prefix('Z').and_then(|d| d.parse::<usize>().ok()) {
            if n >= 1 {
                return Ok(GroupTable::cyclic(n));
            }
        }
        Err(AlgebraError::Input(format!("unknown group `{s}`")))
    }
}

impl FromStr for PresetId {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(g) = t.strip_prefix("group_algebra:") {
            return Ok(PresetId::GroupAlgebra(g.parse()?));
        }
        if let Some(g) = t.strip_prefix("dual_group_algebra:") {
            return Ok(PresetId::DualGroupAlgebra(g.parse()?));
        }
        match t {
            "sweedler_h4" => Ok(PresetId::SweedlerH4),
            "idempotent_monoid_algebra" => Ok(PresetId::IdempotentMonoid),
            "dual_numbers" => Ok(PresetId::DualNumbers),
            _ => Err(AlgebraError::Input(format!("unknown preset `{s}`"))),
        }
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetId::GroupAlgebra(g) => write!(f, "group_algebra:{}", g.name),
            PresetId::DualGroupAlgebra(g) => write!(f, "dual_group_algebra:{}", g.name),
            PresetId::SweedlerH4 => write!(f, "sweedler_h4"),
            PresetId::IdempotentMonoid => write!(f, "idempotent_monoid_algebra"),
            PresetId::DualNumbers => write!(f, "dual_numbers"),
        }
    }
}

/// Collects `(row, col, value)` triples from integer entries.
fn map_from(field: Field, dom: &Space, cod: &Space, entries: &[(usize, usize, i64)]) -> LinMap {
    LinMap::from_triples(
        field,
        dom.clone(),
        cod.clone(),
        entries.iter().map(|(i, j, v)| (*i, *j, field.from_int(*v))),
    )
}

struct Raw {
    n: usize,
    // (i, j) -> [(k, c)] for e_i e_j
    mult: Vec<(usize, usize, usize, i64)>,
    unit: Vec<(usize, i64)>,
    // i -> [(j, k, c)]
    comult: Vec<(usize, usize, usize, i64)>,
    counit: Vec<(usize, i64)>,
    antipode: Vec<(usize, usize, i64)>, // S(e_i) has coefficient c on e_j: (i, j, c)
}

fn build(field: Field, name: &str, labels: Vec<String>, raw: &Raw) -> Result<(AlgebraData, CoalgebraData, LinMap), AlgebraError> {
    let sp = Space::new(labels);
    let n = raw.n;
    let hh = sp.tensor(&sp);
    let k = Space::ground();
    let mult = map_from(field, &hh, &sp, &raw.mult.iter().map(|(i, j, r, c)| (*r, i * n + j, *c)).collect::<Vec<_>>());
    let unit = map_from(field, &k, &sp, &raw.unit.iter().map(|(r, c)| (*r, 0, *c)).collect::<Vec<_>>());
    let comult = map_from(field, &sp, &hh, &raw.comult.iter().map(|(i, j, l, c)| (j * n + l, *i, *c)).collect::<Vec<_>>());
    let counit = map_from(field, &sp, &k, &raw.counit.iter().map(|(i, c)| (0, *i, *c)).collect::<Vec<_>>());
    let antipode = map_from(field, &sp, &sp, &raw.antipode.iter().map(|(i, j, c)| (*j, *i, *c)).collect::<Vec<_>>());
    let _ = name;
    Ok((AlgebraData::new(sp.clone(), mult, unit)?, CoalgebraData::new(sp, comult, counit)?, antipode))
}

fn group_raw(g: &GroupTable) -> Raw {
    let n = g.order();
    let e = g.identity();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mult.push((i, j, g.table[i][j], 1));
        }
    }
    Raw {
        n,
        mult,
        unit: vec![(e, 1)],
        comult: (0..n).map(|i| (i, i, i, 1)).collect(),
        counit: (0..n).map(|i| (i, 1)).collect(),
        antipode: (0..n).map(|i| (i, g.inverse(i), 1)).collect(),
    }
}

fn dual_group_raw(g: &GroupTable) -> Raw {
    let n = g.order();
    let e = g.identity();
    let mut comult = Vec::new();
    for a in 0..n {
        for b in 0..n {
            comult.push((g.table[a][b], a, b, 1));
        }
    }
    Raw {
        n,
        mult: (0..n).map(|i| (i, i, i, 1)).collect(),
        unit: (0..n).map(|i| (i, 1)).collect(),
        comult,
        counit: vec![(e, 1)],
        antipode: (0..n).map(|i| (i, g.inverse(i), 1)).collect(),
    }
}

fn sweedler_raw() -> Raw {
    // basis 0 = 1, 1 = g, 2 = x, 3 = gx
    let mut mult = Vec::new();
    for j in 0..4 {
        mult.push((0, j, j, 1));
    }
    mult.extend([(1, 0, 1, 1), (1, 1, 0, 1), (1, 2, 3, 1), (1, 3, 2, 1)]);
    mult.extend([(2, 0, 2, 1), (2, 1, 3, -1)]);
    mult.extend([(3, 0, 3, 1), (3, 1, 2, -1)]);
    Raw {
        n: 4,
        mult,
        unit: vec![(0, 1)],
        comult: vec![
            (0, 0, 0, 1),
            (1, 1, 1, 1),
            (2, 2, 0, 1),
            (2, 1, 2, 1),
            (3, 3, 1, 1),
            (3, 0, 3, 1),
        ],
        counit: vec![(0, 1), (1, 1)],
        antipode: vec![(0, 0, 1), (1, 1, 1), (2, 3, -1), (3, 2, 1)],
    }
}

fn group_labels(g: &GroupTable) -> Vec<String> {
    g.labels.clone()
}

/// Instantiates a preset over `field`, validated at its declared strength.
pub fn make_preset(id: &PresetId, field: Field) -> Result<Structure, AlgebraError> {
    let name = id.to_string();
    match id {
        PresetId::GroupAlgebra(g) => {
            let (a, c, s) = build(field, &name, group_labels(g), &group_raw(g))?;
            Ok(Structure::Hopf(HopfData::new(Bialgebra::new(name, a, c)?, s)?))
        }
        PresetId::DualGroupAlgebra(g) => {
            let labels = g.labels.iter().map(|l| format!("δ{l}")).collect();
            let (a, c, s) = build(field, &name, labels, &dual_group_raw(g))?;
            Ok(Structure::Hopf(HopfData::new(Bialgebra::new(name, a, c)?, s)?))
        }
        PresetId::SweedlerH4 => {
            if field.characteristic() == 2 {
                return Err(AlgebraError::Input("sweedler_h4 needs characteristic ≠ 2".into()));
            }
            let labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
            let (a, c, s) = build(field, &name, labels, &sweedler_raw())?;
            Ok(Structure::Hopf(HopfData::new(Bialgebra::new(name, a, c)?, s)?))
        }
        PresetId::IdempotentMonoid => {
            let raw = Raw {
                n: 2,
                mult: vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)],
                unit: vec![(0, 1)],
                comult: vec![(0, 0, 0, 1), (1, 1, 1, 1)],
                counit: vec![(0, 1), (1, 1)],
                antipode: vec![],
            };
            let labels = vec!["1".to_string(), "e".to_string()];
            let (a, c, _) = build(field, &name, labels, &raw)?;
            let b = Bialgebra::new(name, a, c)?;
            if let Some(e) = b.check(super::Strength::Bialgebra).failures().next() {
                return Err(AlgebraError::Structural(e.name.clone()));
            }
            Ok(Structure::Bialgebra(b))
        }
        PresetId::DualNumbers => {
            let raw = Raw {
                n: 2,
                mult: vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
                unit: vec![(0, 1)],
                comult: vec![],
                counit: vec![],
                antipode: vec![],
            };
            let labels = vec!["1".to_string(), "x".to_string()];
            let (a, _, _) = build(field, &name, labels, &raw)?;
            Ok(Structure::Algebra(a))
        }
    }
}

/// Shorthand used throughout the tests and the CLI: a Hopf preset by name.
pub fn hopf_preset(name: &str, field: Field) -> Result<HopfData, AlgebraError> {
    make_preset(&name.parse()?, field)?.into_hopf()
}
