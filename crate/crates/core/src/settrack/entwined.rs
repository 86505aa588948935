//! Exhaustive search for `θ`-entwined semigroups on small carriers.
//!
//! An `L⁺`-coalgebra on a finite set is a forest: `β(x)` lists `x` followed by its
//! predecessors. The pair (semigroup, forest) is entwined when `β∘fold = L⁺fold∘θ∘L⁺β`.

use super::semigroup::{all_semigroups, em_fold, SemigroupTable};
use super::{map, theta, SetError, Term};
use rayon::prelude::*;
use serde::Serialize;

/// An acyclic predecessor map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Forest {
    pub pred: Vec<Option<usize>>,
}

impl Forest {
    pub fn new(pred: Vec<Option<usize>>) -> Result<Self, SetError> {
        let n = pred.len();
        if pred.iter().flatten().any(|&p| p >= n) {
            return Err(SetError::Table("predecessor outside the carrier".into()));
        }
        let f = Forest { pred };
        if (0..n).any(|x| f.chain_len(x).is_none()) {
            return Err(SetError::Table("predecessor map has a cycle".into()));
        }
        Ok(f)
    }

    fn chain_len(&self, x: usize) -> Option<usize> {
        let mut len = 1;
        let mut cur = x;
        while let Some(p) = self.pred[cur] {
            len += 1;
            if len > self.pred.len() {
                return None;
            }
            cur = p;
        }
        Some(len)
    }

    /// `β(x) = [x, pred(x), pred²(x), …]`.
    pub fn beta(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        while let Some(p) = self.pred[*out.last().unwrap()] {
            out.push(p);
        }
        out
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.pred.len()).filter(|&x| self.pred[x].is_none())
    }
}

/// All forests on `{0..n}`.
pub fn enumerate_forests(n: usize) -> Vec<Forest> {
    let total = (n + 1).pow(n as u32);
    (0..total)
        .filter_map(|mut code| {
            let pred = (0..n)
                .map(|_| {
                    let d = code % (n + 1);
                    code /= n + 1;
                    (d < n).then_some(d)
                })
                .collect();
            Forest::new(pred).ok()
        })
        .collect()
}

/// Counit and coassociativity for a candidate coalgebra `β : X → L⁺X`.
pub fn is_coalgebra(beta: &[Vec<usize>]) -> bool {
    beta.iter().enumerate().all(|(x, l)| {
        l.first() == Some(&x) && (0..l.len()).all(|i| beta.get(l[i]).is_some_and(|b| b[..] == l[i..]))
    })
}

/// Both sides of the entwining condition on the pair `(x, y)`: `β(xy)` and
/// `L⁺fold(θ[β(x), β(y)])`.
pub fn entwining_sides(table: &SemigroupTable, f: &Forest, x: usize, y: usize) -> (Vec<usize>, Vec<usize>) {
    let beta = |a: usize| Term::atoms(&f.beta(a));
    let fold = |t: &Term| -> Result<Term, SetError> {
        Ok(Term::Atom(em_fold(table, &t.as_atoms().ok_or(SetError::NotAList("fold"))?)?))
    };
    let pair = Term::atoms(&[x, y]);
    let rhs = map(&pair, |t| match t {
        Term::Atom(a) => Ok(beta(*a)),
        Term::List(_) => Err(SetError::NotAList("beta")),
    })
    .and_then(|t| theta(&t))
    .and_then(|t| map(&t, fold))
    .expect("nonempty lists");
    (f.beta(table.mul(x, y)), rhs.as_atoms().expect("atoms"))
}

/// `[xy, xy₁, …, xy_n, y, y₁, …, y_n]` with `β(y) = [y, y₁, …, y_n]`.
pub fn displayed_condition(table: &SemigroupTable, f: &Forest, x: usize, y: usize) -> Vec<usize> {
    let by = f.beta(y);
    let mut out: Vec<usize> = by.iter().map(|&b| table.mul(x, b)).collect();
    out.extend(by);
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub table: Vec<Vec<usize>>,
    pub pred: Vec<Option<usize>>,
    pub x: usize,
    pub y: usize,
    pub beta_xy: Vec<usize>,
    pub required: Vec<usize>,
    pub root_square: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub semigroups: usize,
    pub forests_checked: usize,
    pub entwined: usize,
    /// Entwined pairs under `β(xy) = [xy, xy₁, …, y, y₁, …]`, predecessors taken from `y`.
    pub entwined_displayed: usize,
    /// Structures whose first violation is `r·r` for a root `r`.
    pub failing_at_root_square: usize,
    pub witnesses: Vec<Witness>,
}

/// Pairs in checking order: root squares first, then everything else.
fn pairs(f: &Forest, n: usize) -> Vec<(usize, usize, bool)> {
    let mut v: Vec<(usize, usize, bool)> = f.roots().map(|r| (r, r, true)).collect();
    v.extend((0..n * n).map(|i| (i / n, i % n, false)).filter(|&(x, y, _)| !(x == y && f.pred[x].is_none())));
    v
}

fn first_violation(table: &SemigroupTable, f: &Forest) -> Option<Witness> {
    pairs(f, table.size()).into_iter().find_map(|(x, y, root_square)| {
        let (beta_xy, required) = entwining_sides(table, f, x, y);
        (beta_xy != required).then(|| Witness {
            table: table.table().to_vec(),
            pred: f.pred.clone(),
            x,
            y,
            beta_xy,
            required,
            root_square,
        })
    })
}

/// Every associative table on `{0..n}` against every forest; keeps at most `witness_limit`
/// violations.
pub fn search_entwined(n: usize, witness_limit: usize) -> SearchReport {
    let tables = all_semigroups(n);
    let forests = enumerate_forests(n);
    let outcomes: Vec<(Option<Witness>, bool)> = tables
        .par_iter()
        .flat_map_iter(|t| {
            forests.iter().map(move |f| {
                let displayed = (0..n * n).all(|i| {
                    let (x, y) = (i / n, i % n);
                    f.beta(t.mul(x, y)) == displayed_condition(t, f, x, y)
                });
                (first_violation(t, f), displayed)
            })
        })
        .collect();
    SearchReport {
        n,
        semigroups: tables.len(),
        forests_checked: outcomes.len(),
        entwined: outcomes.iter().filter(|(w, _)| w.is_none()).count(),
        entwined_displayed: outcomes.iter().filter(|(_, d)| *d).count(),
        failing_at_root_square: outcomes.iter().filter(|(w, _)| w.as_ref().is_some_and(|w| w.root_square)).count(),
        witnesses: outcomes.into_iter().filter_map(|(w, _)| w).take(witness_limit).collect(),
    }
}
