//! Semigroups as Eilenberg–Moore algebras of `L⁺`, the lift `V` and the left machine
//! expansion `ρ`.

use super::bimonad::enumerate_terms;
use super::{comult, counit, map, theta, unit, SetError, Term};
use crate::report::CheckReport;
use rayon::prelude::*;
use serde::Serialize;

/// A multiplication table on `{0..n}`, validated associative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SemigroupTable {
    n: usize,
    op: Vec<Vec<usize>>,
}

impl SemigroupTable {
    pub fn new(op: Vec<Vec<usize>>) -> Result<Self, SetError> {
        let n = op.len();
        for (a, row) in op.iter().enumerate() {
            if row.len() != n {
                return Err(SetError::Table(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(SetError::Table(format!("entry {x} in row {a} is outside 0..{n}")));
            }
        }
        let t = SemigroupTable { n, op };
        match t.first_non_associative() {
            Some((a, b, c)) => Err(SetError::NotAssociative { a, b, c }),
            None => Ok(t),
        }
    }

    /// `ℤ/n` written multiplicatively, as a semigroup.
    pub fn cyclic_group(n: usize) -> Self {
        SemigroupTable { n, op: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect() }
    }

    fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        (0..n * n * n)
            .map(|i| (i / (n * n), i / n % n, i % n))
            .find(|&(a, b, c)| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.op
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.op[a][b]
    }
}

/// A nonempty list over a finite carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FinList(Vec<usize>);

impl FinList {
    pub fn new(v: Vec<usize>) -> Result<Self, SetError> {
        if v.is_empty() {
            return Err(SetError::Empty("FinList"));
        }
        Ok(FinList(v))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_term(&self) -> Term {
        Term::atoms(&self.0)
    }
}

/// The algebra map `L⁺X → X`, multiplying left to right.
pub fn em_fold(table: &SemigroupTable, xs: &[usize]) -> Result<usize, SetError> {
    let (&first, rest) = xs.split_first().ok_or(SetError::Empty("fold"))?;
    Ok(rest.iter().fold(first, |acc, &x| table.mul(acc, x)))
}

/// `[x₁,…,x_m][y₁,…,y_n] = [x₁y₁,…,x_my₁, y₁,…,y_n]`.
pub fn lift_v(table: &SemigroupTable, x: &FinList, y: &FinList) -> FinList {
    let y1 = y.0[0];
    let mut out: Vec<usize> = x.0.iter().map(|&a| table.mul(a, y1)).collect();
    out.extend_from_slice(&y.0);
    FinList(out)
}

/// `ρ[x₁,…,x_n] = [x₁⋯x_n, x₂⋯x_n, …, x_n]`.
pub fn rho_left_machine(table: &SemigroupTable, x: &FinList) -> FinList {
    let mut out = x.0.clone();
    for i in (0..out.len().saturating_sub(1)).rev() {
        out[i] = table.mul(out[i], out[i + 1]);
    }
    FinList(out)
}

fn lists(table: &SemigroupTable, bound: usize) -> Vec<FinList> {
    enumerate_terms(table.size(), 1, bound)
        .into_iter()
        .map(|t| FinList(t.as_atoms().expect("depth one")))
        .collect()
}

fn fold_term(table: &SemigroupTable, t: &Term) -> Result<Term, SetError> {
    let xs = t.as_atoms().ok_or(SetError::NotAList("fold"))?;
    Ok(Term::Atom(em_fold(table, &xs)?))
}

fn rho_term(table: &SemigroupTable, t: &Term) -> Result<Term, SetError> {
    let xs = FinList::new(t.as_atoms().ok_or(SetError::NotAList("rho"))?)?;
    Ok(rho_left_machine(table, &xs).to_term())
}

fn first_witness<T: std::fmt::Display>(
    inputs: impl IntoIterator<Item = T>,
    test: impl Fn(&T) -> Result<Option<String>, SetError>,
) -> Option<String> {
    inputs.into_iter().find_map(|x| match test(&x) {
        Ok(None) => None,
        Ok(Some(w)) => Some(format!("at {x}: {w}")),
        Err(e) => Some(format!("at {x}: {e}")),
    })
}

fn differ(l: Term, r: Term) -> Option<String> {
    (l != r).then(|| format!("{l} ≠ {r}"))
}

/// Eilenberg–Moore laws for the fold, on lists with at most `bound` atoms.
pub fn check_em_algebra(table: &SemigroupTable, bound: usize) -> CheckReport {
    let mut r = CheckReport::new();
    let w = first_witness(0..table.size(), |&x| Ok(differ(fold_term(table, &unit(&Term::Atom(x)))?, Term::Atom(x))));
    r.push("fold∘η = id", w.is_none(), w);
    let w = first_witness(enumerate_terms(table.size(), 2, bound), |t| {
        let lhs = fold_term(table, &super::mult(t)?)?;
        let rhs = fold_term(table, &map(t, |l| fold_term(table, l))?)?;
        Ok(differ(lhs, rhs))
    });
    r.push("fold∘μ = fold∘L⁺fold", w.is_none(), w);
    r
}

/// Associativity of the lifted product on triples of lists with total length at most `bound`.
pub fn check_lift_v(table: &SemigroupTable, bound: usize) -> CheckReport {
    let by_len = lists_by_len(table, bound);
    let mut w = None;
    'outer: for (i, j, k) in splits(bound, 3).into_iter().map(|v| (v[0], v[1], v[2])) {
        for a in &by_len[i] {
            for b in &by_len[j] {
                for c in &by_len[k] {
                    let l = lift_v(table, &lift_v(table, a, b), c);
                    let r = lift_v(table, a, &lift_v(table, b, c));
                    if l != r {
                        w = Some(format!(
                            "at ({}, {}, {}): {} ≠ {}",
                            a.to_term(),
                            b.to_term(),
                            c.to_term(),
                            l.to_term(),
                            r.to_term()
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    let mut r = CheckReport::new();
    r.push("lifted product is associative", w.is_none(), w);
    r
}

/// Lists grouped by length, index 0 empty.
fn lists_by_len(table: &SemigroupTable, bound: usize) -> Vec<Vec<FinList>> {
    let mut out = vec![Vec::new(); bound + 1];
    for l in lists(table, bound) {
        out[l.0.len()].push(l);
    }
    out
}

/// Length vectors of `parts` positive entries with sum at most `bound`, smallest sums first.
fn splits(bound: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..parts {
        out = out
            .into_iter()
            .flat_map(|v| {
                let used: usize = v.iter().sum();
                (1..=bound.saturating_sub(used)).map(move |k| [v.clone(), vec![k]].concat())
            })
            .collect();
    }
    out.sort_by_key(|v| v.iter().sum::<usize>());
    out
}

/// Both coalgebra diagrams for `ρ` and its compatibility with the products, on lists with at
/// most `bound` elements.
pub fn check_rho(table: &SemigroupTable, bound: usize) -> CheckReport {
    let terms = enumerate_terms(table.size(), 1, bound);
    let mut r = CheckReport::new();
    let w = first_witness(terms.iter(), |t| Ok(differ(counit(&rho_term(table, t)?)?, fold_term(table, t)?)));
    r.push("ε∘ρ = fold", w.is_none(), w);
    let w = first_witness(terms.iter(), |t| {
        let lhs = comult(&rho_term(table, t)?)?;
        let split = map(t, |x| Ok(unit(x)))?;
        let rhs = map(&theta(&map(&split, |l| rho_term(table, l))?)?, |l| rho_term(table, l))?;
        Ok(differ(lhs, rhs))
    });
    r.push("Δ∘ρ = L⁺ρ∘θ∘L⁺ρ∘L⁺η", w.is_none(), w);
    let by_len = lists_by_len(table, bound);
    let mut w = None;
    'outer: for (i, j) in splits(bound, 2).into_iter().map(|v| (v[0], v[1])) {
        for (a, b) in by_len[i].iter().flat_map(|a| by_len[j].iter().map(move |b| (a, b))) {
            let mut ab = a.0.clone();
            ab.extend_from_slice(&b.0);
            let l = rho_left_machine(table, &FinList(ab));
            let rr = lift_v(table, &rho_left_machine(table, a), &rho_left_machine(table, b));
            if l != rr {
                w = Some(format!("at ({}, {}): {} ≠ {}", a.to_term(), b.to_term(), l.to_term(), rr.to_term()));
                break 'outer;
            }
        }
    }
    r.push("ρ(ab) = ρ(a)ρ(b)", w.is_none(), w);
    r
}

/// Every associative table on `{0..n}`, sharded over the first row.
pub fn all_semigroups(n: usize) -> Vec<SemigroupTable> {
    if n == 0 {
        return vec![SemigroupTable { n: 0, op: Vec::new() }];
    }
    let cells = n * n;
    let rest = n.pow((cells - n) as u32);
    let decode = |mut code: usize, len: usize| -> Vec<usize> {
        (0..len)
            .map(|_| {
                let d = code % n;
                code /= n;
                d
            })
            .collect()
    };
    (0..n.pow(n as u32))
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let first = decode(prefix, n);
            (0..rest).filter_map(move |code| {
                let flat = [first.clone(), decode(code, cells - n)].concat();
                let op = flat.chunks(n).map(<[usize]>::to_vec).collect();
                SemigroupTable::new(op).ok()
            })
        })
        .collect()
}

pub fn count_semigroups(n: usize) -> usize {
    all_semigroups(n).len()
}
