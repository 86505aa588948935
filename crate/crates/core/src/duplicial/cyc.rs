//! The comparison maps `R : CC_T(N,M) → CC_S^op(N,M)` and `L` back, and the cyclicity checks.

use super::words::{Calculus, Letter};
use super::{power, DuplicialError, DuplicialTower};
use crate::linalg::LinMap;
use crate::report::CheckReport;
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct ComparisonMaps {
    /// `R_n : NT^{n+1}M → NS^{n+1}M`.
    pub r: Vec<LinMap>,
    /// `L_n : NS^{n+1}M → NT^{n+1}M`.
    pub l: Vec<LinMap>,
}

/// `R_n = r_{n,n} ∘ ⋯ ∘ r_{0,n}` with `r_{i,n} = NS^iχ^{n−i}M ∘ NS^iT^{n−i}ρ`.
pub fn r_map(calc: &Calculus, n: usize) -> Result<LinMap, DuplicialError> {
    let mut p = calc.path(&vec![Letter::T; n + 1])?;
    for i in 0..=n {
        p = p.rho()?.move_s_out(n, i)?;
    }
    Ok(p.finish())
}

/// `L_n = l_{n,n} ∘ ⋯ ∘ l_{0,n}` with `l_{i,n} = λT^iS^{n−i}M ∘ Nχ^iS^{n−i}M`.
pub fn l_map(calc: &Calculus, n: usize) -> Result<LinMap, DuplicialError> {
    let mut p = calc.path(&vec![Letter::S; n + 1])?;
    for i in 0..=n {
        p = p.move_s_out(i, 0)?.lambda()?;
    }
    Ok(p.finish())
}

pub fn build_r_l(calc: &Calculus, n_max: usize) -> Result<ComparisonMaps, DuplicialError> {
    let pairs: Vec<(LinMap, LinMap)> = (0..=n_max)
        .into_par_iter()
        .map(|n| Ok((r_map(calc, n)?, l_map(calc, n)?)))
        .collect::<Result<_, DuplicialError>>()?;
    let (r, l) = pairs.into_iter().unzip();
    Ok(ComparisonMaps { r, l })
}

/// `t^{n+1} = id` per degree.
pub fn check_cyclicity(tower: &DuplicialTower) -> CheckReport {
    let mut r = CheckReport::new();
    for n in 0..=tower.n_max() {
        let id = LinMap::identity(tower.t[n].field(), tower.t[n].domain().clone());
        r.push_eq(format!("{}: t^{} = id (degree {n})", tower.name(), n + 1), &tower.big_t(n), &id);
    }
    r
}

fn check_morphism(name: &str, f: &[LinMap], src: &DuplicialTower, dst: &DuplicialTower, r: &mut CheckReport) {
    let top = src.n_max().min(dst.n_max()).min(f.len() - 1);
    for n in 0..=top {
        r.push_eq_result(format!("{name} t = t {name} (degree {n})"), f[n].compose(&src.t[n]), dst.t[n].compose(&f[n]));
        if n >= 1 {
            for i in 0..=n {
                r.push_eq_result(
                    format!("{name} d_{i} = d_{i} {name} (degree {n})"),
                    f[n - 1].compose(src.face(n, i)),
                    dst.face(n, i).compose(&f[n]),
                );
            }
        }
        if n < top {
            for j in 0..=n {
                r.push_eq_result(
                    format!("{name} s_{j} = s_{j} {name} (degree {n})"),
                    f[n + 1].compose(src.degeneracy(n, j)),
                    dst.degeneracy(n, j).compose(&f[n]),
                );
            }
        }
    }
}

/// `R` and `L` are duplicial morphisms, `(L∘R)_n = (t^T_n)^{n+1}` and `(R∘L)_n = (t^S_n)^{n+1}`,
/// and `L∘R = id` exactly when `CC_T` is cyclic (likewise for `R∘L`) through the top degree.
pub fn check_prop_cyc(maps: &ComparisonMaps, cc_t: &DuplicialTower, cc_s: &DuplicialTower) -> CheckReport {
    let mut r = CheckReport::new();
    check_morphism("R", &maps.r, cc_t, cc_s, &mut r);
    check_morphism("L", &maps.l, cc_s, cc_t, &mut r);
    let top = cc_t.n_max().min(maps.r.len() - 1);
    let (mut lr_id, mut rl_id, mut t_cyc, mut s_cyc) = (true, true, true, true);
    for n in 0..=top {
        let lr = maps.l[n].then_after(&maps.r[n]);
        let rl = maps.r[n].then_after(&maps.l[n]);
        r.push_eq(format!("(L R)_{n} = (t^T_{n})^{}", n + 1), &lr, &power(&cc_t.t[n], n + 1));
        r.push_eq(format!("(R L)_{n} = (t^S_{n})^{}", n + 1), &rl, &power(&cc_s.t[n], n + 1));
        lr_id &= lr.is_identity();
        rl_id &= rl.is_identity();
        t_cyc &= cc_t.big_t(n).is_identity();
        s_cyc &= cc_s.big_t(n).is_identity();
    }
    let w = |a: bool, b: bool| (a != b).then(|| format!("identity: {a}, cyclic: {b}"));
    r.push("L R = id iff CC_T cyclic", lr_id == t_cyc, w(lr_id, t_cyc));
    r.push("R L = id iff CC_S^op cyclic", rl_id == s_cyc, w(rl_id, s_cyc));
    r
}
