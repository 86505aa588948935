//! Coefficients for the cyclic towers: a right module and left comodule `M` with its
//! `ρ : M⊗H → H⊗M`, and a left module `N` with the map `ℓ : N → H⊗N` that drives `λ`.

pub mod json;

use crate::algebra::{AlgebraError, HopfData};
use crate::distlaw::{yd_context, Adjunction, ChiCoalgebra, Module, OneCell, Side};
use crate::linalg::{self, LinMap, LinalgError, Space};
use crate::report::CheckReport;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("{what} fails{}", witness.as_ref().map(|w| format!(" {w}")).unwrap_or_default())]
    Invalid { what: String, witness: Option<String> },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<LinalgError> for CoeffError {
    fn from(e: LinalgError) -> Self {
        CoeffError::Algebra(e.into())
    }
}

fn first_failure(r: &CheckReport) -> Result<(), CoeffError> {
    match r.failures().next() {
        Some(e) => Err(CoeffError::Invalid { what: e.name.clone(), witness: e.witness.clone() }),
        None => Ok(()),
    }
}

/// Coassociativity and counitality of a left coaction `δ : V → H⊗V`.
pub fn check_left_comodule(h: &HopfData, space: &Space, coaction: &LinMap) -> CheckReport {
    let mut r = CheckReport::new();
    let f = h.field();
    let idv = LinMap::identity(f, space.clone());
    let lhs = h.comult().kron(&idv).and_then(|d| d.compose(coaction));
    let rhs = h.id().kron(coaction).and_then(|d| d.compose(coaction));
    r.push_eq_result("comodule: coassociative", lhs, rhs);
    let c = h.counit().kron(&idv).and_then(|e| e.compose(coaction)).map(|m| m.relabel(space.clone(), space.clone()));
    r.push_eq_result("comodule: counital", c, Ok(idv));
    r
}

fn check_shapes(h: &HopfData, space: &Space, action: &LinMap, coaction: Option<&LinMap>) -> Result<(), CoeffError> {
    let n = h.dim();
    let d = space.dim();
    let bad = |what: &str| Err(CoeffError::Invalid { what: format!("{what} has the wrong shape"), witness: None });
    if action.domain().dim() != d * n || action.codomain().dim() != d {
        return bad("action");
    }
    if let Some(c) = coaction {
        if c.domain().dim() != d || c.codomain().dim() != d * n {
            return bad("coaction");
        }
    }
    if action.field() != h.field() || coaction.is_some_and(|c| c.field() != h.field()) {
        return Err(CoeffError::Algebra(LinalgError::FieldMismatch.into()));
    }
    Ok(())
}

fn relabel_action(h: &HopfData, space: &Space, action: &LinMap, side: Side) -> LinMap {
    let dom = match side {
        Side::Right => space.tensor(h.space()),
        Side::Left => h.space().tensor(space),
    };
    action.clone().relabel(dom, space.clone())
}

#[derive(Clone, Debug)]
pub struct RightCoefficient {
    pub space: Space,
    /// `M⊗H → M`.
    pub action: LinMap,
    /// `M → H⊗M`.
    pub coaction: LinMap,
    /// `M⊗H → H⊗M`.
    pub rho: LinMap,
}

/// `ρ(m⊗h) = h₋ m₍₋₁₎ ⊗ m₍₀₎ h₊`.
pub fn rho_formula(h: &HopfData, space: &Space, action: &LinMap, coaction: &LinMap) -> LinMap {
    let n = h.dim();
    let d = space.dim();
    let act = action.columns();
    let coact = coaction.columns();
    let trans: Vec<_> = (0..n).map(|i| h.translation_basis(i)).collect();
    LinMap::from_columns(h.field(), space.tensor(h.space()), h.space().tensor(space), |j| {
        let (m, hh) = (j / n, j % n);
        let mut out = Vec::new();
        for (p, q, c) in &trans[hh] {
            for (idx, x) in &coact[m] {
                let (a, m0) = (idx / d, idx % d);
                let cx = c * x;
                for (r, y) in h.mul_basis(*q, a) {
                    for (mm, z) in &act[m0 * n + p] {
                        out.push((r * d + mm, &(&cx * y) * z));
                    }
                }
            }
        }
        out
    })
}

pub fn check_right_data(h: &HopfData, space: &Space, action: &LinMap, coaction: &LinMap) -> CheckReport {
    let adj = Adjunction::of_bialgebra(h, Side::Right);
    let mut r = adj.check_module(&Module { space: space.clone(), action: action.clone() });
    r.extend_prefixed("", check_left_comodule(h, space, coaction));
    r
}

/// Validates module and comodule axioms, builds `ρ`, and checks it is a χ-coalgebra for the
/// Yetter–Drinfeld braiding.
pub fn make_right_coeff(h: &HopfData, space: Space, action: LinMap, coaction: LinMap) -> Result<RightCoefficient, CoeffError> {
    check_shapes(h, &space, &action, Some(&coaction))?;
    let action = relabel_action(h, &space, &action, Side::Right);
    let coaction = coaction.relabel(space.clone(), h.space().tensor(&space));
    first_failure(&check_right_data(h, &space, &action, &coaction))?;
    let rho = rho_formula(h, &space, &action, &coaction);
    let c = RightCoefficient { space, action, coaction, rho };
    first_failure(&c.check(h))?;
    Ok(c)
}

impl RightCoefficient {
    /// `M = k` with `m·h = ε(h)m` and `m ↦ 1⊗m`.
    pub fn trivial(h: &HopfData) -> RightCoefficient {
        let k = Space::new(["m"]);
        let action = h.counit().clone();
        let coaction = h.unit().clone();
        make_right_coeff(h, k, action, coaction).expect("trivial coefficient is valid")
    }

    pub fn zero(h: &HopfData) -> RightCoefficient {
        let z = Space::zero();
        let f = h.field();
        let action = LinMap::zero(f, z.tensor(h.space()), z.clone());
        let coaction = LinMap::zero(f, z.clone(), h.space().tensor(&z));
        make_right_coeff(h, z, action, coaction).expect("zero coefficient is valid")
    }

    pub fn module(&self) -> Module {
        Module { space: self.space.clone(), action: self.action.clone() }
    }

    pub fn chi_coalgebra(&self) -> ChiCoalgebra {
        ChiCoalgebra { module: self.module(), rho: self.rho.clone() }
    }

    /// The two χ-coalgebra diagrams and the module-map condition on `ρ`.
    pub fn check(&self, h: &HopfData) -> CheckReport {
        self.chi_coalgebra().check(&yd_context(h))
    }

    /// Recovers the coefficient from a χ-coalgebra: the coaction is `ρ(−⊗1)`, and `ρ` must
    /// agree with the formula built from it.
    pub fn from_chi(h: &HopfData, chi: &ChiCoalgebra) -> Result<RightCoefficient, CoeffError> {
        let space = chi.module.space.clone();
        let idm = LinMap::identity(h.field(), space.clone());
        let coaction = chi.rho.compose(&idm.kron(h.unit())?.relabel(space.clone(), space.tensor(h.space())))?;
        let c = make_right_coeff(h, space, chi.module.action.clone(), coaction)?;
        if c.rho != chi.rho {
            return Err(CoeffError::Invalid { what: "rho is not determined by its coaction".into(), witness: None });
        }
        Ok(c)
    }
}

#[derive(Clone, Debug)]
pub struct LeftCoefficient {
    pub space: Space,
    /// `H⊗N → N`.
    pub action: LinMap,
    /// `N → H⊗N`, when `N` comes from a Yetter–Drinfeld module.
    pub coaction: Option<LinMap>,
    /// `ℓ : N → H⊗N`; in tower coordinates `λ(z⊗n) = z·a ⊗ n'` for `ℓ(n) = Σ a⊗n'`.
    pub ell: LinMap,
}

/// `ℓ(n) = n₍₋₁₎₍₁₎ ⊗ S(n₍₋₁₎₍₂₎) n₍₀₎`.
pub fn ell_formula(h: &HopfData, space: &Space, action: &LinMap, coaction: &LinMap) -> LinMap {
    let d = space.dim();
    let act = action.columns();
    let coact = coaction.columns();
    LinMap::from_columns(h.field(), space.clone(), h.space().tensor(space), |j| {
        let mut out = Vec::new();
        for (idx, x) in &coact[j] {
            let (a, n0) = (idx / d, idx % d);
            for (a1, a2, y) in h.comult_basis(a) {
                let xy = x * y;
                for (s, z) in h.antipode_basis(*a2) {
                    for (r, w) in &act[s * d + n0] {
                        out.push((a1 * d + r, &(&xy * z) * w));
                    }
                }
            }
        }
        out
    })
}

/// `(hn)₍₋₁₎ ⊗ (hn)₍₀₎ = h₊₍₁₎ n₍₋₁₎ h₋ ⊗ h₊₍₂₎ n₍₀₎` on `H⊗N`.
pub fn check_yd(h: &HopfData, space: &Space, action: &LinMap, coaction: &LinMap) -> CheckReport {
    let d = space.dim();
    let act = action.columns();
    let coact = coaction.columns();
    let hn = h.space().tensor(space);
    let lhs = coaction.then_after(action);
    let rhs = LinMap::from_columns(h.field(), hn.clone(), hn.clone(), |j| {
        let (hh, nn) = (j / d, j % d);
        let mut out = Vec::new();
        for (p, q, c) in h.translation_basis(hh) {
            for (p1, p2, x) in h.comult_basis(p) {
                let cx = &c * x;
                for (idx, y) in &coact[nn] {
                    let (a, n0) = (idx / d, idx % d);
                    let cxy = &cx * y;
                    for (pa, u) in h.mul_basis(*p1, a) {
                        for (r, v) in h.mul_basis(*pa, q) {
                            for (s, w) in &act[p2 * d + n0] {
                                out.push((r * d + s, &(&(&cxy * u) * v) * w));
                            }
                        }
                    }
                }
            }
        }
        out
    });
    let mut r = CheckReport::new();
    match lhs.first_difference(&rhs) {
        Ok(None) => r.push("Yetter-Drinfeld condition", true, None),
        Ok(Some((_, j))) => {
            let w = format!("at (h, n) = ({}, {})", h.space().label(j / d), space.label(j % d));
            r.push("Yetter-Drinfeld condition", false, Some(w));
        }
        Err(e) => r.push("Yetter-Drinfeld condition", false, Some(e.to_string())),
    }
    r
}

/// Validates a Yetter–Drinfeld module and builds `ℓ`. With `force`, a failing compatibility
/// condition is reported through the returned report instead of an error.
pub fn make_left_coeff(
    h: &HopfData,
    space: Space,
    action: LinMap,
    coaction: LinMap,
    force: bool,
) -> Result<(LeftCoefficient, CheckReport), CoeffError> {
    check_shapes(h, &space, &action, Some(&coaction))?;
    let action = relabel_action(h, &space, &action, Side::Left);
    let coaction = coaction.relabel(space.clone(), h.space().tensor(&space));
    let adj = Adjunction::of_bialgebra(h, Side::Left);
    let mut r = adj.check_module(&Module { space: space.clone(), action: action.clone() });
    r.extend_prefixed("", check_left_comodule(h, &space, &coaction));
    first_failure(&r)?;
    let yd = check_yd(h, &space, &action, &coaction);
    if !force {
        first_failure(&yd)?;
    }
    r.extend_prefixed("", yd);
    let ell = ell_formula(h, &space, &action, &coaction);
    Ok((LeftCoefficient { space, action, coaction: Some(coaction), ell }, r))
}

impl LeftCoefficient {
    pub fn trivial(h: &HopfData) -> LeftCoefficient {
        let k = Space::new(["n"]);
        make_left_coeff(h, k, h.counit().clone(), h.unit().clone(), false).expect("trivial coefficient is valid").0
    }

    pub fn zero(h: &HopfData) -> LeftCoefficient {
        let z = Space::zero();
        let f = h.field();
        let action = LinMap::zero(f, h.space().tensor(&z), z.clone());
        let coaction = LinMap::zero(f, z.clone(), h.space().tensor(&z));
        make_left_coeff(h, z, action, coaction, false).expect("zero coefficient is valid").0
    }

    /// `act ∘ ℓ = id`, the counit condition in tower coordinates.
    pub fn check_counit(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let id = LinMap::identity(self.action.field(), self.space.clone());
        r.push_eq_result("ell counit", self.action.compose(&self.ell), Ok(id));
        r
    }
}

/// `m₍₀₎(n₍₋₁₎m₍₋₁₎)₊ ⊗ (n₍₋₁₎m₍₋₁₎)₋n₍₀₎ = m⊗n` on `M⊗N`. Needs the coaction of `N`.
pub fn check_sayd(h: &HopfData, m: &RightCoefficient, n: &LeftCoefficient) -> bool {
    sayd_map(h, m, n).map(|f| f.is_identity()).unwrap_or(false)
}

pub fn sayd_map(h: &HopfData, m: &RightCoefficient, n: &LeftCoefficient) -> Option<LinMap> {
    let ncoact = n.coaction.as_ref()?.columns();
    let mcoact = m.coaction.columns();
    let mact = m.action.columns();
    let nact = n.action.columns();
    let (dm, dn, nh) = (m.space.dim(), n.space.dim(), h.dim());
    let trans: Vec<_> = (0..nh).map(|i| h.translation_basis(i)).collect();
    let mn = m.space.tensor(&n.space);
    Some(LinMap::from_columns(h.field(), mn.clone(), mn, |j| {
        let (mi, ni) = (j / dn, j % dn);
        let mut out = Vec::new();
        for (ia, x) in &ncoact[ni] {
            let (a, n0) = (ia / dn, ia % dn);
            for (ib, y) in &mcoact[mi] {
                let (b, m0) = (ib / dm, ib % dm);
                for (ab, z) in h.mul_basis(a, b) {
                    let c0 = &(x * y) * z;
                    for (p, q, c) in &trans[*ab] {
                        let c1 = &c0 * c;
                        for (mm, u) in &mact[m0 * nh + p] {
                            for (nn, v) in &nact[q * dn + n0] {
                                out.push((mm * dn + nn, &(&c1 * u) * v));
                            }
                        }
                    }
                }
            }
        }
        out
    }))
}

/// The anti-Yetter–Drinfeld compatibility `(mh)₍₋₁₎⊗(mh)₍₀₎ = S(h₍₃₎)m₍₋₁₎h₍₁₎ ⊗ m₍₀₎h₍₂₎` of `M`.
/// Stability alone does not make the towers cyclic; this compatibility is the missing half.
pub fn check_anti_yd(h: &HopfData, m: &RightCoefficient) -> CheckReport {
    let (dm, nh) = (m.space.dim(), h.dim());
    let mcoact = m.coaction.columns();
    let mact = m.action.columns();
    let mh = m.space.tensor(h.space());
    let lhs = m.coaction.compose(&m.action);
    let rhs = LinMap::from_columns(h.field(), mh, h.space().tensor(&m.space), |j| {
        let (mi, hi) = (j / nh, j % nh);
        let mut out = Vec::new();
        for (h1, h23, x) in h.comult_basis(hi) {
            for (h2, h3, y) in h.comult_basis(*h23) {
                for (s3, z) in h.antipode_basis(*h3) {
                    for (im, u) in &mcoact[mi] {
                        let (a, m0) = (im / dm, im % dm);
                        for (sa, v) in h.mul_basis(*s3, a) {
                            for (left, w) in h.mul_basis(*sa, *h1) {
                                for (mm, q) in &mact[m0 * nh + *h2] {
                                    let c = &(&(&(&(x * y) * z) * u) * v) * &(w * q);
                                    out.push((left * dm + mm, c));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    });
    let mut r = CheckReport::new();
    r.push_eq_result("anti-Yetter-Drinfeld compatibility", lhs, Ok(rhs));
    r
}

/// `H` as a left module over itself with `ρ(h⊗m) = h₍₁₎m₍₁₎ ⊗ h₍₂₎m₍₂₎`, a χ-coalgebra for the
/// codiagonal law and the usual input of the antipode 1-cell.
pub fn regular_source(h: &HopfData) -> ChiCoalgebra {
    let sp = h.space();
    let module = Module { space: sp.clone(), action: h.mult().clone() };
    let n = h.dim();
    let rho = LinMap::from_columns(h.field(), sp.tensor(sp), sp.tensor(sp), |j| {
        let (a, m) = (j / n, j % n);
        let mut out = Vec::new();
        for (a1, a2, x) in h.comult_basis(a) {
            for (m1, m2, y) in h.comult_basis(m) {
                for (p, u) in h.mul_basis(*a1, *m1) {
                    for (q, v) in h.mul_basis(*a2, *m2) {
                        out.push((p * n + q, &(&(x * y) * u) * v));
                    }
                }
            }
        }
        out
    });
    ChiCoalgebra { module, rho }
}

/// `(ΣM, γM ∘ Σρ ∘ σM)` for a 1-cell landing in the Yetter–Drinfeld law, validated as a right
/// coefficient.
pub fn twist_coefficient(h: &HopfData, cell: &OneCell, m: &ChiCoalgebra) -> Result<RightCoefficient, CoeffError> {
    first_failure(&cell.check())?;
    let twisted = cell.twist(m)?;
    first_failure(&twisted.check(&yd_context(h)))?;
    RightCoefficient::from_chi(h, &twisted)
}

/// An (op)coalgebra structure from which a coefficient is built.
#[derive(Clone, Debug)]
pub struct EntwinedWitness {
    pub space: Space,
    /// Right action `M⊗H → M` or left action `H⊗N → N`.
    pub action: LinMap,
    /// `∇ : V → H⊗V`.
    pub nabla: LinMap,
}

/// A right coefficient whose `ρ = ∇ ∘ act` factors through an `S`-coalgebra `∇`.
pub fn entwined_right(h: &HopfData, w: &EntwinedWitness) -> Result<(RightCoefficient, CheckReport), CoeffError> {
    check_shapes(h, &w.space, &w.action, Some(&w.nabla))?;
    let sp = &w.space;
    let action = relabel_action(h, sp, &w.action, Side::Right);
    let nabla = w.nabla.clone().relabel(sp.clone(), h.space().tensor(sp));
    let ctx = yd_context(h);
    let module = Module { space: sp.clone(), action: action.clone() };
    let mut r = check_right_data(h, sp, &action, &nabla);
    let sm = ctx.s_module(&module)?;
    r.push_eq_result(
        "nabla is a module map",
        nabla.compose(&action),
        sm.action.compose(&ctx.adj.b_map(&nabla)),
    );
    // ∇ ∘ β = Cβ ∘ θ_M ∘ B∇
    let rhs = ctx.lift.ext.c_map(&action).compose(&ctx.law.at(sp)).and_then(|x| x.compose(&ctx.adj.b_map(&nabla)));
    r.push_eq_result("entwined algebra condition", nabla.compose(&action), rhs);
    first_failure(&r)?;
    let c = make_right_coeff(h, sp.clone(), action.clone(), nabla.clone())?;
    r.push_eq("rho factors through nabla", &c.rho, &nabla.then_after(&action));
    first_failure(&r)?;
    Ok((c, r))
}

/// A left coefficient with `ℓ = δ` for a left-linear `δ : N → H⊗N`.
pub fn entwined_left(h: &HopfData, w: &EntwinedWitness) -> Result<(LeftCoefficient, CheckReport), CoeffError> {
    check_shapes(h, &w.space, &w.action, Some(&w.nabla))?;
    let sp = &w.space;
    let f = h.field();
    let action = relabel_action(h, sp, &w.action, Side::Left);
    let delta = w.nabla.clone().relabel(sp.clone(), h.space().tensor(sp));
    let adj = Adjunction::of_bialgebra(h, Side::Left);
    let mut r = adj.check_module(&Module { space: sp.clone(), action: action.clone() });
    let idn = LinMap::identity(f, sp.clone());
    // δ(hn) = h n₍₋₁₎ ⊗ n₍₀₎
    let rhs = h.mult().kron(&idn).and_then(|m| m.compose(&h.id().kron(&delta)?));
    r.push_eq_result("delta is left linear", delta.compose(&action), rhs);
    r.push_eq_result("delta counit", action.compose(&delta), Ok(idn.clone()));
    let insert = h.id().kron(h.unit()).and_then(|u| u.kron(&idn));
    r.push_eq_result(
        "delta coassociative",
        h.id().kron(&delta).and_then(|d| d.compose(&delta)),
        insert.and_then(|u| u.compose(&delta)),
    );
    first_failure(&r)?;
    Ok((LeftCoefficient { space: sp.clone(), action, coaction: None, ell: delta }, r))
}

/// `X ⊗_H N` as the coequalizer of `x⊗h⊗n ↦ xh⊗n` and `x⊗h⊗n ↦ x⊗hn`.
#[derive(Clone, Debug)]
pub struct TensorOverMonad {
    pub space: Space,
    pub projection: LinMap,
    pub section: LinMap,
}

pub fn tensor_over_monad(h_dim_space: &Space, n: &Module, x: &Module) -> Result<TensorOverMonad, LinalgError> {
    let f = n.action.field();
    let idx = LinMap::identity(f, x.space.clone());
    let idn = LinMap::identity(f, n.space.clone());
    let dom = Space::tensor_all([&x.space, h_dim_space, &n.space]);
    let cod = x.space.tensor(&n.space);
    let omega = idx.kron(&n.action)?.relabel(dom.clone(), cod.clone());
    let alpha = x.action.kron(&idn)?.relabel(dom, cod);
    let (q, s) = linalg::coequalizer_with_section(&omega, &alpha)?;
    Ok(TensorOverMonad { space: q.codomain().clone(), projection: q, section: s })
}

impl TensorOverMonad {
    /// `N_B(f)` for a module map `f : X → Y`.
    pub fn induced(&self, target: &TensorOverMonad, f: &LinMap, n: &Module) -> Result<LinMap, LinalgError> {
        let g = f.kron(&LinMap::identity(f.field(), n.space.clone()))?;
        target.projection.compose(&g)?.compose(&self.section)
    }
}

#[cfg(test)]
mod tests;
