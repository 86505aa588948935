//! Contracting homotopies for towers with an entwined coefficient.

use super::mixed::hochschild_b;
use super::HomologyError;
use crate::coefficients::EntwinedWitness;
use crate::duplicial::{towers, Calculus, DuplicialTower, Letter, Outer, TowerConfig};
use crate::linalg::LinMap;
use crate::report::CheckReport;

/// Which coefficient carries the entwining.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntwinedSide {
    /// `N`, with `δ : N → H⊗N` and `ℓ = δ`.
    Left,
    /// `M`, with `∇ : M → H⊗M` and `ρ = ∇ ∘ act`.
    Right,
}

/// `h_n : C_n → C_{n+1}` on `CC_T(N,M)`: `∇T^nM`, or `λT^{n+1}M ∘ Nχ^{n+1}M ∘ NT^{n+1}∇` when
/// `M` is entwined.
pub fn homotopy_t(calc: &Calculus, side: EntwinedSide, nabla: &LinMap, n: usize) -> Result<LinMap, HomologyError> {
    let p = calc.path(&vec![Letter::T; n + 1])?;
    let p = match side {
        EntwinedSide::Left => p.nabla_n(nabla)?,
        EntwinedSide::Right => p.nabla_m(nabla)?.move_s_out(n + 1, 0)?.lambda()?,
    };
    Ok(p.finish())
}

/// `h_n` on `CC_S^op(N,M)`: `NS^{n+1}ρ ∘ Nχ^{n+1}M ∘ ∇S^{n+1}M`, or `NS^{n+1}∇` when `M` is
/// entwined.
pub fn homotopy_s(calc: &Calculus, side: EntwinedSide, nabla: &LinMap, n: usize) -> Result<LinMap, HomologyError> {
    let p = calc.path(&vec![Letter::S; n + 1])?;
    let p = match side {
        EntwinedSide::Left => p.nabla_n(nabla)?.move_t_in(0, n + 1)?.rho()?,
        EntwinedSide::Right => p.nabla_m(nabla)?,
    };
    Ok(p.finish())
}

fn check_tower(
    r: &mut CheckReport,
    tower: &DuplicialTower,
    h: impl Fn(usize) -> Result<LinMap, HomologyError>,
) -> Result<(), HomologyError> {
    let top = tower.n_max();
    let hs: Vec<LinMap> = (0..top).map(&h).collect::<Result<_, _>>()?;
    for n in 1..top {
        let b = |k: usize| hochschild_b(&tower.simplicial, k);
        let lhs = b(n + 1).then_after(&hs[n]).add(&hs[n - 1].then_after(&b(n)))?;
        let id = LinMap::identity(lhs.field(), lhs.domain().clone());
        r.push_eq(format!("{}: hb + bh = id (degree {n})", tower.name()), &lhs, &id);
    }
    Ok(())
}

/// Verifies `hb + bh = id` in degrees `1..n_max` on both towers, with the homotopies built
/// from the witness of the entwined coefficient.
pub fn check_contractible(
    calc: &Calculus,
    side: EntwinedSide,
    witness: &EntwinedWitness,
    n_max: usize,
) -> Result<CheckReport, HomologyError> {
    let h = calc.h.space().clone();
    let space = match (side, &calc.outer) {
        (EntwinedSide::Left, Outer::Coeff(n)) => n.space.clone(),
        (EntwinedSide::Left, Outer::Forget) => return Err(HomologyError::Usage("no left coefficient".into())),
        (EntwinedSide::Right, _) => calc.m.module.space.clone(),
    };
    let dim = space.dim();
    if witness.space.dim() != dim || witness.nabla.codomain().dim() != h.dim() * dim {
        return Err(HomologyError::Usage(format!(
            "witness on a space of dimension {} for a coefficient of dimension {dim}",
            witness.space.dim()
        )));
    }
    let nabla = witness.nabla.clone().relabel(space.clone(), h.tensor(&space));
    let (ct, cs) = towers::cc_towers_from(calc, &TowerConfig::new(n_max))?;
    let mut r = CheckReport::new();
    check_tower(&mut r, &ct, |n| homotopy_t(calc, side, &nabla, n))?;
    check_tower(&mut r, &cs, |n| homotopy_s(calc, side, &nabla, n))?;
    Ok(r)
}
