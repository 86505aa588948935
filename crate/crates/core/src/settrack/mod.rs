//! The nonempty-list bimonad on finite sets: list (co)monad maps, the mixed law `θ`,
//! semigroups as its Eilenberg–Moore algebras, the lift `V`, the left machine expansion and
//! the exhaustive search for entwined algebras.

pub mod bimonad;
pub mod entwined;
pub mod semigroup;

pub use bimonad::{check_bimonad, enumerate_terms, BimonadOps};
pub use entwined::{enumerate_forests, is_coalgebra, search_entwined, Forest, SearchReport, Witness};
pub use semigroup::{
    all_semigroups, check_em_algebra, check_lift_v, check_rho, count_semigroups, em_fold, lift_v, rho_left_machine, FinList,
    SemigroupTable,
};

use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetError {
    #[error("{0}: empty list")]
    Empty(&'static str),
    #[error("{0}: expected a list, found an element")]
    NotAList(&'static str),
    #[error("not associative: ({a}{b}){c} ≠ {a}({b}{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("invalid table: {0}")]
    Table(String),
}

/// An element of `X`, or a nonempty list of terms. Nested lists model `L⁺L⁺⋯X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Term {
    Atom(usize),
    List(Vec<Term>),
}

impl Term {
    pub fn list(items: Vec<Term>) -> Term {
        Term::List(items)
    }

    pub fn atoms(xs: &[usize]) -> Term {
        Term::List(xs.iter().map(|&x| Term::Atom(x)).collect())
    }

    pub fn items(&self, op: &'static str) -> Result<&[Term], SetError> {
        match self {
            Term::List(v) if v.is_empty() => Err(SetError::Empty(op)),
            Term::List(v) => Ok(v),
            Term::Atom(_) => Err(SetError::NotAList(op)),
        }
    }

    /// Number of atoms.
    pub fn size(&self) -> usize {
        match self {
            Term::Atom(_) => 1,
            Term::List(v) => v.iter().map(Term::size).sum(),
        }
    }

    /// Atoms in order, if every item is an atom.
    pub fn as_atoms(&self) -> Option<Vec<usize>> {
        match self {
            Term::List(v) => v
                .iter()
                .map(|t| match t {
                    Term::Atom(x) => Some(*x),
                    Term::List(_) => None,
                })
                .collect(),
            Term::Atom(_) => None,
        }
    }
}

fn letter(x: usize) -> String {
    if x < 26 {
        char::from(b'a' + x as u8).to_string()
    } else {
        format!("x{x}")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Atom(x) => write!(f, "{}", letter(*x)),
            Term::List(v) => {
                write!(f, "[")?;
                for (i, t) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// `η(x) = [x]`.
pub fn unit(t: &Term) -> Term {
    Term::List(vec![t.clone()])
}

/// Concatenation.
pub fn mult(t: &Term) -> Result<Term, SetError> {
    let mut out = Vec::new();
    for l in t.items("mult")? {
        out.extend_from_slice(l.items("mult")?);
    }
    Ok(Term::List(out))
}

/// `Δ[x₁,…,xₙ] = [[x₁,…,xₙ],[x₂,…,xₙ],…,[xₙ]]`.
pub fn comult(t: &Term) -> Result<Term, SetError> {
    let v = t.items("comult")?;
    Ok(Term::List((0..v.len()).map(|i| Term::List(v[i..].to_vec())).collect()))
}

/// `ε[x₁,…,xₙ] = x₁`.
pub fn counit(t: &Term) -> Result<Term, SetError> {
    Ok(t.items("counit")?[0].clone())
}

/// `L⁺f`: apply `f` to every item.
pub fn map(t: &Term, f: impl Fn(&Term) -> Result<Term, SetError>) -> Result<Term, SetError> {
    Ok(Term::List(t.items("map")?.iter().map(f).collect::<Result<_, _>>()?))
}

/// `θ[[x_{1,1},…],…,[x_{m,1},…]]` lists `[x_{i,j}, x_{i+1,1}, …, x_{m,1}]` for `i = 1..m` and
/// `j = 1..n_i`, in that order.
pub fn theta(t: &Term) -> Result<Term, SetError> {
    let rows: Vec<&[Term]> = t.items("theta")?.iter().map(|r| r.items("theta")).collect::<Result<_, _>>()?;
    let heads: Vec<&Term> = rows.iter().map(|r| &r[0]).collect();
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for x in row.iter() {
            let mut l = vec![x.clone()];
            l.extend(heads[i + 1..].iter().map(|&h| h.clone()));
            out.push(Term::List(l));
        }
    }
    Ok(Term::List(out))
}

/// `Σ_i n_i (m − i + 1)` for a list of lists with lengths `n_1, …, n_m`.
pub fn theta_count(lengths: &[usize]) -> usize {
    let m = lengths.len();
    lengths.iter().enumerate().map(|(i, n)| n * (m - i)).sum()
}

#[cfg(test)]
mod tests;
