//! Hochschild and cyclic homology dimensions.

use super::mixed::{boundaries, hochschild_b, mixed_complex, normalize, MixedComplex};
use super::HomologyError;
use crate::duplicial::{DuplicialTower, SimplicialTower};
use crate::linalg::{rank, LinMap, Space};
use crate::report::CheckReport;
use rayon::prelude::*;
use serde::Serialize;

/// `dim ker ∂_n − rank ∂_{n+1}` for `n = 0..=top`; `ds[n] : C_n → C_{n−1}`. When `ds` has no
/// entry `top + 1` the top value is `dim ker ∂_top`, an upper bound.
fn homology(ds: &[LinMap], top: usize) -> Vec<usize> {
    let ranks: Vec<usize> = ds.par_iter().map(rank).collect();
    (0..=top)
        .map(|n| {
            let incoming = ranks.get(n + 1).copied().unwrap_or(0);
            ds[n].domain().dim() - ranks[n] - incoming
        })
        .collect()
}

fn require_below_top(n_max: usize, top: usize) -> Result<(), HomologyError> {
    if n_max >= top {
        return Err(HomologyError::Usage(format!(
            "degree {n_max} needs the tower through degree {}, but it stops at {top}",
            n_max + 1
        )));
    }
    Ok(())
}

/// Hochschild homology through degree `n_max`, from normalized chains.
pub fn hh_dims(tower: &SimplicialTower, n_max: usize) -> Result<Vec<usize>, HomologyError> {
    require_below_top(n_max, tower.n_max())?;
    let norm = normalize(tower);
    let ds: Vec<LinMap> = (0..=n_max + 1)
        .into_par_iter()
        .map(|n| {
            let raw = hochschild_b(tower, n);
            if n == 0 {
                raw.then_after(&norm.section[0])
            } else {
                norm.induced(n, n - 1, &raw)
            }
        })
        .collect();
    Ok(homology(&ds, n_max))
}

/// Hochschild homology from all chains, without normalizing.
pub fn hh_dims_unnormalized(tower: &SimplicialTower, n_max: usize) -> Result<Vec<usize>, HomologyError> {
    require_below_top(n_max, tower.n_max())?;
    let ds: Vec<LinMap> = (0..=n_max + 1).into_par_iter().map(|n| hochschild_b(tower, n)).collect();
    Ok(homology(&ds, n_max))
}

/// `Tot_n = ⊕_p N_{n−2p}` with differential `b + B`; block `p` of `Tot_n` is `N_{n−2p}`.
fn total_differential(mc: &MixedComplex, n: usize) -> LinMap {
    let f = mc.b[0].field();
    let blocks = |m: usize| -> Vec<usize> { (0..=m / 2).map(|p| m - 2 * p).collect() };
    let space = |m: usize| Space::numbered("tot", blocks(m).iter().map(|&k| mc.spaces[k].dim()).sum());
    if n == 0 {
        return LinMap::zero(f, space(0), Space::zero());
    }
    let offsets = |m: usize| -> Vec<usize> {
        let mut acc = 0;
        blocks(m)
            .iter()
            .map(|&k| {
                let o = acc;
                acc += mc.spaces[k].dim();
                o
            })
            .collect()
    };
    let (src, dst) = (offsets(n), offsets(n - 1));
    let mut triples = Vec::new();
    for (p, &k) in blocks(n).iter().enumerate() {
        if k >= 1 {
            for (i, row) in mc.b[k].rows().iter().enumerate() {
                triples.extend(row.iter().map(|(j, x)| (dst[p] + i, src[p] + j, x.clone())));
            }
        }
        if p >= 1 {
            for (i, row) in mc.big_b[k].rows().iter().enumerate() {
                triples.extend(row.iter().map(|(j, x)| (dst[p - 1] + i, src[p] + j, x.clone())));
            }
        }
    }
    LinMap::from_triples(f, space(n), space(n - 1), triples)
}

fn hc_from(mc: &MixedComplex, top: usize) -> Vec<usize> {
    let last = (top + 1).min(mc.n_max());
    let ds: Vec<LinMap> = (0..=last).into_par_iter().map(|n| total_differential(mc, n)).collect();
    homology(&ds, top)
}

fn require_cyclic(mc: &MixedComplex) -> Result<(), HomologyError> {
    if let Some(n) = mc.big_t.iter().position(|t| !t.is_identity()) {
        return Err(HomologyError::Usage(format!(
            "{} is not cyclic in degree {n}: bB + Bb = id - T is nonzero there, so b + B is not a differential",
            mc.name
        )));
    }
    Ok(())
}

/// Cyclic homology through degree `n_max` from the `(b, B)` bicomplex; needs a cyclic tower.
pub fn hc_dims(tower: &DuplicialTower, n_max: usize) -> Result<Vec<usize>, HomologyError> {
    require_below_top(n_max, tower.n_max())?;
    let mc = boundaries(tower)?;
    require_cyclic(&mc)?;
    Ok(hc_from(&mc, n_max))
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub hh: Vec<usize>,
    /// Absent when the tower is not cyclic.
    pub hc: Option<Vec<usize>>,
    /// Degrees whose values are upper bounds because the next chain group was not built.
    pub truncation_flagged: Vec<usize>,
    pub checks: CheckReport,
}

/// Both homologies through the top degree of `tower`, with the mixed-complex identities.
pub fn homology_report(tower: &DuplicialTower) -> HomologyReport {
    homology_report_to(tower, tower.n_max()).expect("top degree is in range")
}

/// Both homologies through degree `n_max ≤ top`. Values are exact below the top degree.
pub fn homology_report_to(tower: &DuplicialTower, n_max: usize) -> Result<HomologyReport, HomologyError> {
    let top = tower.n_max();
    if n_max > top {
        return Err(HomologyError::Usage(format!("degree {n_max} is above the top degree {top} of the tower")));
    }
    let norm = normalize(&tower.simplicial);
    let mc = mixed_complex(tower, &norm);
    let mut checks = tower.check();
    checks.extend_prefixed("", mc.check());
    let hh = homology(&mc.b, n_max);
    let hc = require_cyclic(&mc).ok().map(|()| hc_from(&mc, n_max));
    let truncation_flagged = if n_max == top { vec![top] } else { Vec::new() };
    Ok(HomologyReport { hh, hc, truncation_flagged, checks })
}
