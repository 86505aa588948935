//! Axiom checks for lifts and distributive laws, run on probe objects.

use super::{Adjunction, Extension, LawContext, Lift, Module, SlotLaw};
use crate::linalg::{LinMap, LinalgError};
use crate::report::CheckReport;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LawKind {
    /// `χ : TS → ST` between two comonads on modules.
    Comonad,
    /// `θ : BC → CB` between a monad and a comonad on vector spaces.
    Mixed,
}

/// `SY` is a module for every probe, and when `C` is a comonad, `ε^S` and `Δ^S` are module maps.
pub fn check_lift(adj: &Adjunction, lift: &Lift) -> CheckReport {
    let mut r = CheckReport::new();
    for y in adj.probe_modules() {
        let d = y.space.dim();
        let sy = match lift.apply(adj, &y) {
            Ok(s) => s,
            Err(e) => {
                r.push(format!("lift: S applies (probe dim {d})"), false, Some(e.to_string()));
                continue;
            }
        };
        r.extend_prefixed(&format!("lift (probe dim {d}) "), adj.check_module(&sy));
        if let (Some(eps), Some(delta)) = (lift.s_eps(&y.space), lift.s_delta(&y.space)) {
            r.push_eq_result(
                format!("lift: counit is a module map (probe dim {d})"),
                eps.compose(&sy.action),
                y.action.compose(&adj.b_map(&eps)),
            );
            let ssy = lift.apply(adj, &sy);
            let rhs = ssy.and_then(|m| m.action.compose(&adj.b_map(&delta)));
            r.push_eq_result(
                format!("lift: comultiplication is a module map (probe dim {d})"),
                delta.compose(&sy.action),
                rhs,
            );
        }
    }
    r
}

/// Checks the four squares of a distributive law. For [`LawKind::Comonad`] the law is
/// `χ : TS → ST` with `T = FU`; for [`LawKind::Mixed`] it is `θ : BC → CB`.
pub fn check_distlaw(ctx: &LawContext, kind: LawKind) -> CheckReport {
    let mut r = CheckReport::new();
    match kind {
        LawKind::Comonad => {
            for y in ctx.adj.probe_modules() {
                if let Err(e) = comonad_squares(ctx, &y, &mut r) {
                    r.push(format!("comonad law (probe dim {})", y.space.dim()), false, Some(e.to_string()));
                }
            }
        }
        LawKind::Mixed => {
            for x in ctx.adj.probe_spaces() {
                if let Err(e) = mixed_squares(&ctx.adj, &ctx.lift.ext, &ctx.law, &x, &mut r) {
                    r.push(format!("mixed law (probe dim {})", x.dim()), false, Some(e.to_string()));
                }
            }
        }
    }
    r
}

fn comonad_squares(ctx: &LawContext, y: &Module, r: &mut CheckReport) -> Result<(), LinalgError> {
    let (adj, lift) = (&ctx.adj, &ctx.lift);
    let d = y.space.dim();
    let uy = &y.space;
    let chi = ctx.chi(uy);
    let sy = lift.apply(adj, y)?;
    let ty = adj.free(uy);
    // χ is a module map TSY → STY
    let sty = lift.apply(adj, &ty)?;
    r.push_eq(
        format!("comonad law: module map (probe dim {d})"),
        &chi.compose(&adj.mu(&sy.space))?,
        &sty.action.compose(&adj.b_map(&chi))?,
    );
    r.push_eq(
        format!("comonad law: counit of T (probe dim {d})"),
        &lift.ext.c_map(&y.action).compose(&chi)?,
        &sy.action,
    );
    let dt = |z| ctx.t_delta(z);
    r.push_eq(
        format!("comonad law: comultiplication of T (probe dim {d})"),
        &lift.ext.c_map(&dt(uy)).compose(&chi)?,
        &ctx.chi(&ty.space).compose(&adj.b_map(&chi))?.compose(&dt(&sy.space))?,
    );
    if let (Some(eps), Some(eps_t), Some(delta), Some(delta_t)) =
        (lift.s_eps(uy), lift.s_eps(&ty.space), lift.s_delta(uy), lift.s_delta(&ty.space))
    {
        r.push_eq(
            format!("comonad law: counit of S (probe dim {d})"),
            &eps_t.compose(&chi)?,
            &adj.b_map(&eps),
        );
        r.push_eq(
            format!("comonad law: comultiplication of S (probe dim {d})"),
            &delta_t.compose(&chi)?,
            &lift.ext.c_map(&chi).compose(&ctx.chi(&sy.space))?.compose(&adj.b_map(&delta))?,
        );
    }
    Ok(())
}

pub(crate) fn mixed_squares(
    adj: &Adjunction,
    ext: &Extension,
    law: &SlotLaw,
    x: &crate::linalg::Space,
    r: &mut CheckReport,
) -> Result<(), LinalgError> {
    let d = x.dim();
    let th = law.at(x);
    let cx = ext.c_space(x);
    let bx = adj.b_space(x);
    r.push_eq(
        format!("mixed law: unit of B (probe dim {d})"),
        &th.compose(&adj.eta(&cx))?,
        &ext.c_map(&adj.eta(x)),
    );
    r.push_eq(
        format!("mixed law: multiplication of B (probe dim {d})"),
        &th.compose(&adj.mu(&cx))?,
        &ext.c_map(&adj.mu(x)).compose(&law.at(&bx))?.compose(&adj.b_map(&th))?,
    );
    if let (Some(eb), Some(ex), Some(db), Some(dx)) = (ext.c_eps(&bx), ext.c_eps(x), ext.c_delta(&bx), ext.c_delta(x)) {
        r.push_eq(format!("mixed law: counit of C (probe dim {d})"), &eb.compose(&th)?, &adj.b_map(&ex));
        r.push_eq(
            format!("mixed law: comultiplication of C (probe dim {d})"),
            &db.compose(&th)?,
            &ext.c_map(&th).compose(&law.at(&cx))?.compose(&adj.b_map(&dx))?,
        );
    }
    Ok(())
}

/// The law with one kernel entry negated, for exercising failure paths.
pub fn flip_one_sign(law: &SlotLaw) -> SlotLaw {
    let k = &law.kernel;
    let cols = k.columns();
    let (j, (i, v)) = cols
        .iter()
        .enumerate()
        .rev()
        .find_map(|(j, c)| c.first().map(|e| (j, e.clone())))
        .expect("nonzero kernel");
    let mut triples: Vec<_> = cols
        .into_iter()
        .enumerate()
        .flat_map(|(jj, c)| c.into_iter().map(move |(ii, vv)| (ii, jj, vv)))
        .filter(|(ii, jj, _)| !(*ii == i && *jj == j))
        .collect();
    triples.push((i, j, -v));
    let k2 = LinMap::from_triples(k.field(), k.domain().clone(), k.codomain().clone(), triples);
    SlotLaw { kernel: k2, ..law.clone() }
}
