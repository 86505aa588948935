//! Bar and opbar resolutions and the duplicial towers `CC_T(N,M)`, `CC_S^op(N,M)`.

use super::words::{Calculus, Letter, Outer};
use super::{DuplicialError, DuplicialTower, SimplicialTower};
use crate::algebra::HopfData;
use crate::coefficients::{LeftCoefficient, RightCoefficient};
use crate::linalg::LinMap;
use rayon::prelude::*;

pub const DEFAULT_DIM_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TowerConfig {
    pub n_max: usize,
    /// Largest admissible dimension of a single degree.
    pub dim_cap: usize,
}

impl TowerConfig {
    pub fn new(n_max: usize) -> TowerConfig {
        TowerConfig { n_max, dim_cap: DEFAULT_DIM_CAP }
    }
}

fn check_cap(calc: &Calculus, cfg: &TowerConfig, extra: usize) -> Result<(), DuplicialError> {
    for n in 0..=cfg.n_max + extra {
        let dim = calc.coord_dim(&vec![Letter::T; n + 1]);
        if dim > cfg.dim_cap {
            return Err(DuplicialError::DimensionCap { degree: n, dim, cap: cfg.dim_cap });
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Bar,
    OpBar,
}

struct Degree {
    faces: Vec<LinMap>,
    degeneracies: Vec<LinMap>,
    t: Option<LinMap>,
}

fn faces_at(calc: &Calculus, x: Letter, kind: Kind, n: usize) -> Result<Vec<LinMap>, DuplicialError> {
    let w = vec![x; n + 1];
    if n == 0 {
        return Ok(Vec::new());
    }
    (0..=n)
        .map(|i| {
            let pos = if kind == Kind::Bar { i } else { n - i };
            Ok(calc.path(&w)?.eps(pos)?.finish())
        })
        .collect()
}

fn degeneracies_at(calc: &Calculus, x: Letter, kind: Kind, n: usize) -> Result<Vec<LinMap>, DuplicialError> {
    let w = vec![x; n + 1];
    (0..=n)
        .map(|j| {
            let pos = if kind == Kind::Bar { j } else { n - j };
            Ok(calc.path(&w)?.delta(pos)?.finish())
        })
        .collect()
}

/// `t^T_n = λT^nM ∘ Nχ^nM ∘ NT^nρ`.
pub fn t_bar(calc: &Calculus, n: usize) -> Result<LinMap, DuplicialError> {
    Ok(calc.path(&vec![Letter::T; n + 1])?.rho()?.move_s_out(n, 0)?.lambda()?.finish())
}

/// `t^S_n = NS^nρ ∘ Nχ^nM ∘ λS^nM`.
pub fn t_opbar(calc: &Calculus, n: usize) -> Result<LinMap, DuplicialError> {
    Ok(calc.path(&vec![Letter::S; n + 1])?.lambda()?.move_t_in(0, n)?.rho()?.finish())
}

fn build(calc: &Calculus, x: Letter, kind: Kind, cfg: &TowerConfig, with_t: bool) -> Result<(SimplicialTower, Vec<LinMap>), DuplicialError> {
    check_cap(calc, cfg, 0)?;
    let degrees: Vec<Degree> = (0..=cfg.n_max)
        .into_par_iter()
        .map(|n| {
            let faces = faces_at(calc, x, kind, n)?;
            let degeneracies = if n < cfg.n_max { degeneracies_at(calc, x, kind, n)? } else { Vec::new() };
            let t = if with_t {
                Some(match x {
                    Letter::T => t_bar(calc, n)?,
                    Letter::S => t_opbar(calc, n)?,
                })
            } else {
                None
            };
            Ok(Degree { faces, degeneracies, t })
        })
        .collect::<Result<_, DuplicialError>>()?;
    let spaces = (0..=cfg.n_max).map(|n| calc.coords(&vec![x; n + 1])).collect::<Result<_, _>>()?;
    let name = match (x, kind, &calc.outer) {
        (Letter::T, Kind::Bar, Outer::Coeff(_)) => "CC_T(N,M)",
        (Letter::S, Kind::OpBar, Outer::Coeff(_)) => "CC_S^op(N,M)",
        (Letter::T, Kind::Bar, Outer::Forget) => "bar(T,M)",
        (Letter::S, Kind::OpBar, Outer::Forget) => "opbar(S,M)",
        (Letter::T, Kind::OpBar, _) => "opbar(T,M)",
        (Letter::S, Kind::Bar, _) => "bar(S,M)",
    };
    let augmentation = match calc.outer {
        Outer::Forget => Some(calc.path(&[x])?.eps(0)?.finish()),
        Outer::Coeff(_) => None,
    };
    let mut faces = Vec::new();
    let mut degeneracies = Vec::new();
    let mut ts = Vec::new();
    for d in degrees {
        faces.push(d.faces);
        degeneracies.push(d.degeneracies);
        ts.extend(d.t);
    }
    Ok((SimplicialTower { name: name.into(), spaces, faces, degeneracies, augmentation }, ts))
}

/// `T^{n+1}M` with `d_i = T^i ε T^{n−i}M` and `s_j = T^j Δ T^{n−j}M`, for `T = −⊗H`.
pub fn bar_resolution(h: &HopfData, m: &RightCoefficient, cfg: &TowerConfig) -> Result<SimplicialTower, DuplicialError> {
    let calc = Calculus::new(h, m.chi_coalgebra(), Outer::Forget)?;
    Ok(build(&calc, Letter::T, Kind::Bar, cfg, false)?.0)
}

/// `S^{n+1}M` with the reversed faces `d_i = S^{n−i} ε S^iM` and degeneracies
/// `s_j = S^{n−j} Δ S^jM`, for the lifted `S = H⊗−`.
pub fn opbar_resolution(h: &HopfData, m: &RightCoefficient, cfg: &TowerConfig) -> Result<SimplicialTower, DuplicialError> {
    let calc = Calculus::new(h, m.chi_coalgebra(), Outer::Forget)?;
    Ok(build(&calc, Letter::S, Kind::OpBar, cfg, false)?.0)
}

/// The towers `CC_T(N,M)` and `CC_S^op(N,M)` for the Yetter–Drinfeld braiding of `h`.
pub fn cc_towers(
    h: &HopfData,
    n: &LeftCoefficient,
    m: &RightCoefficient,
    cfg: &TowerConfig,
) -> Result<(DuplicialTower, DuplicialTower), DuplicialError> {
    let calc = Calculus::new(h, m.chi_coalgebra(), Outer::Coeff(n.clone()))?;
    cc_towers_from(&calc, cfg)
}

pub fn cc_towers_from(calc: &Calculus, cfg: &TowerConfig) -> Result<(DuplicialTower, DuplicialTower), DuplicialError> {
    let (st, tt) = build(calc, Letter::T, Kind::Bar, cfg, true)?;
    let (ss, ts) = build(calc, Letter::S, Kind::OpBar, cfg, true)?;
    Ok((DuplicialTower { simplicial: st, t: tt }, DuplicialTower { simplicial: ss, t: ts }))
}
