//! Bounded-exhaustive checks of the bimonad structure on `L⁺`.

use super::{comult, counit, map, mult, theta, unit, SetError, Term};
use crate::report::CheckReport;
use std::collections::HashMap;

type Eval = fn(&Term) -> Result<Term, SetError>;

/// The structure maps under test. `Default` is the genuine one; tests swap in corrupted maps.
#[derive(Clone, Copy)]
pub struct BimonadOps {
    pub mult: Eval,
    pub comult: Eval,
    pub counit: Eval,
    pub theta: Eval,
}

impl Default for BimonadOps {
    fn default() -> Self {
        BimonadOps { mult, comult, counit, theta }
    }
}

/// Every term of nesting depth `depth` (0 = elements of `X`) over `X = {0..x_size}` with at
/// most `bound` atoms, ordered by size and then lexicographically.
pub fn enumerate_terms(x_size: usize, depth: usize, bound: usize) -> Vec<Term> {
    let mut memo = HashMap::new();
    let mut out = Vec::new();
    for s in 1..=bound {
        let mut level = exact(x_size, depth, s, &mut memo);
        level.sort();
        out.extend(level);
    }
    out
}

fn exact(x: usize, depth: usize, size: usize, memo: &mut HashMap<(usize, usize), Vec<Term>>) -> Vec<Term> {
    if let Some(v) = memo.get(&(depth, size)) {
        return v.clone();
    }
    let v = if depth == 0 {
        if size == 1 {
            (0..x).map(Term::Atom).collect()
        } else {
            Vec::new()
        }
    } else {
        // first item has size k, the rest is again a list of size `size − k`
        let mut v = Vec::new();
        for k in 1..=size {
            let heads = exact(x, depth - 1, k, memo);
            if heads.is_empty() {
                continue;
            }
            if k == size {
                v.extend(heads.into_iter().map(|h| Term::List(vec![h])));
                continue;
            }
            let tails = exact(x, depth, size - k, memo);
            for h in &heads {
                for t in &tails {
                    let Term::List(rest) = t else { unreachable!() };
                    let mut l = vec![h.clone()];
                    l.extend(rest.iter().cloned());
                    v.push(Term::List(l));
                }
            }
        }
        v
    };
    memo.insert((depth, size), v.clone());
    v
}

type Law<'a> = (&'static str, usize, Box<dyn Fn(&Term) -> Result<(Term, Term), SetError> + 'a>);

/// Monad, comonad and mixed-law axioms plus the compatibility square
/// `Δ∘μ = L⁺μ ∘ θL⁺ ∘ L⁺Δ`, over every nested list on `x_size` letters with at most
/// `size_bound` atoms. Each failing law carries its smallest counterexample.
pub fn check_bimonad(x_size: usize, size_bound: usize, ops: &BimonadOps) -> CheckReport {
    let BimonadOps { mult, comult, counit, theta } = *ops;
    let laws: Vec<Law> = vec![
        ("ε∘η = id", 0, Box::new(move |t| Ok((counit(&unit(t))?, t.clone())))),
        ("Δ∘η = ηη", 0, Box::new(move |t| Ok((comult(&unit(t))?, unit(&unit(t)))))),
        ("monad unit: μ∘ηL⁺ = id", 1, Box::new(move |t| Ok((mult(&unit(t))?, t.clone())))),
        ("monad unit: μ∘L⁺η = id", 1, Box::new(move |t| Ok((mult(&map(t, |x| Ok(unit(x)))?)?, t.clone())))),
        (
            "monad associativity: μ∘μL⁺ = μ∘L⁺μ",
            3,
            Box::new(move |t| Ok((mult(&mult(t)?)?, mult(&map(t, mult)?)?))),
        ),
        ("comonad counit: εL⁺∘Δ = id", 1, Box::new(move |t| Ok((counit(&comult(t)?)?, t.clone())))),
        ("comonad counit: L⁺ε∘Δ = id", 1, Box::new(move |t| Ok((map(&comult(t)?, counit)?, t.clone())))),
        (
            "comonad coassociativity: ΔL⁺∘Δ = L⁺Δ∘Δ",
            1,
            Box::new(move |t| Ok((comult(&comult(t)?)?, map(&comult(t)?, comult)?))),
        ),
        (
            "θ∘ηL⁺ = L⁺η",
            1,
            Box::new(move |t| Ok((theta(&unit(t))?, map(t, |x| Ok(unit(x)))?))),
        ),
        (
            "θ∘μL⁺ = L⁺μ∘θL⁺∘L⁺θ",
            3,
            Box::new(move |t| Ok((theta(&mult(t)?)?, map(&theta(&map(t, theta)?)?, mult)?))),
        ),
        ("εL⁺∘θ = L⁺ε", 2, Box::new(move |t| Ok((counit(&theta(t)?)?, map(t, counit)?)))),
        (
            "ΔL⁺∘θ = L⁺θ∘θL⁺∘L⁺Δ",
            2,
            Box::new(move |t| Ok((comult(&theta(t)?)?, map(&theta(&map(t, comult)?)?, theta)?))),
        ),
        ("ε∘μ = ε∘εL⁺", 2, Box::new(move |t| Ok((counit(&mult(t)?)?, counit(&counit(t)?)?)))),
        (
            "compatibility: Δ∘μ = L⁺μ∘θL⁺∘L⁺Δ",
            2,
            Box::new(move |t| Ok((comult(&mult(t)?)?, map(&theta(&map(t, comult)?)?, mult)?))),
        ),
    ];
    let inputs: Vec<Vec<Term>> = (0..=3).map(|d| enumerate_terms(x_size, d, size_bound)).collect();
    let mut report = CheckReport::new();
    for (name, depth, law) in laws {
        let witness = inputs[depth].iter().find_map(|t| match law(t) {
            Ok((l, r)) if l == r => None,
            Ok((l, r)) => Some(format!("at {t}: {l} ≠ {r}")),
            Err(e) => Some(format!("at {t}: {e}")),
        });
        report.push(name, witness.is_none(), witness);
    }
    report
}
