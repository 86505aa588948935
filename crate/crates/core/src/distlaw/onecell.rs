//! 1-cells between mixed laws whose underlying functor is the identity of vector spaces, and
//! the induced transport of χ-coalgebras.

use super::checks::mixed_squares;
use super::{Adjunction, ChiCoalgebra, Extension, LawContext, Side, SlotLaw};
use crate::algebra::{AlgebraError, HopfData};
use crate::linalg::{LinMap, LinalgError, Space};
use crate::report::CheckReport;

/// A monad, a comonad and a mixed law `BC → CB` between them.
#[derive(Clone, Debug)]
pub struct MixedLaw {
    pub adj: Adjunction,
    pub ext: Extension,
    pub law: SlotLaw,
}

impl From<&LawContext> for MixedLaw {
    fn from(ctx: &LawContext) -> MixedLaw {
        MixedLaw { adj: ctx.adj.clone(), ext: ctx.lift.ext.clone(), law: ctx.law.clone() }
    }
}

/// `σ : A → B` and `γ : C → D`, from a source law `(B, C)` to a target law `(A, D)`, both given
/// by kernels on the carrier slots.
#[derive(Clone, Debug)]
pub struct OneCell {
    pub name: String,
    pub source: MixedLaw,
    pub target: MixedLaw,
    /// `E_A → E_B`.
    pub sigma: LinMap,
    /// `W_C → W_D`.
    pub gamma: LinMap,
}

fn slot_move(k: &LinMap, from: (&Space, Side), to: (&Space, Side), x: &Space) -> Result<LinMap, LinalgError> {
    let blocks = |s: &Space, side| match side {
        Side::Right => (vec![x.clone(), s.clone()], 1),
        Side::Left => (vec![s.clone(), x.clone()], 0),
    };
    let (d, i) = blocks(from.0, from.1);
    let (c, o) = blocks(to.0, to.1);
    LinMap::embed_blocks(k, &[&d[0], &d[1]], &[i], &[&c[0], &c[1]], &[o])
}

impl OneCell {
    /// `σ_X : AX → BX`.
    pub fn sigma_at(&self, x: &Space) -> LinMap {
        let (a, b) = (&self.target.adj, &self.source.adj);
        slot_move(&self.sigma, (a.e(), a.side), (b.e(), b.side), x).expect("sigma kernel fits")
    }

    /// `γ_X : CX → DX`.
    pub fn gamma_at(&self, x: &Space) -> LinMap {
        let (c, d) = (&self.source.ext, &self.target.ext);
        slot_move(&self.gamma, (&c.carrier, c.side), (&d.carrier, d.side), x).expect("gamma kernel fits")
    }

    /// Lax monad morphism, colax comonad morphism, and the hexagon
    /// `γB ∘ θ ∘ σC = Dσ ∘ ψ ∘ Aγ : ACX → DBX`.
    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        for x in self.target.adj.probe_spaces() {
            if let Err(e) = self.check_at(&x, &mut r) {
                r.push(format!("1-cell (probe dim {})", x.dim()), false, Some(e.to_string()));
            }
        }
        r
    }

    fn check_at(&self, x: &Space, r: &mut CheckReport) -> Result<(), LinalgError> {
        let d = x.dim();
        let (a, b) = (&self.target.adj, &self.source.adj);
        let (c, dd) = (&self.source.ext, &self.target.ext);
        let s = self.sigma_at(x);
        r.push_eq(format!("sigma unit (probe dim {d})"), &s.compose(&a.eta(x))?, &b.eta(x));
        let bx = b.b_space(x);
        let rhs = b.mu(x).compose(&self.sigma_at(&bx))?.compose(&a.b_map(&s))?;
        r.push_eq(format!("sigma multiplication (probe dim {d})"), &s.compose(&a.mu(x))?, &rhs);
        let g = self.gamma_at(x);
        if let (Some(ec), Some(ed), Some(dc), Some(ddx)) = (c.c_eps(x), dd.c_eps(x), c.c_delta(x), dd.c_delta(x)) {
            r.push_eq(format!("gamma counit (probe dim {d})"), &ed.compose(&g)?, &ec);
            let dx = dd.c_space(x);
            let rhs = self.gamma_at(&dx).compose(&c.c_map(&g))?.compose(&dc)?;
            r.push_eq(format!("gamma comultiplication (probe dim {d})"), &ddx.compose(&g)?, &rhs);
        }
        let cx = c.c_space(x);
        let lhs = self.gamma_at(&bx).compose(&self.source.law.at(x))?.compose(&self.sigma_at(&cx))?;
        let rhs = dd.c_map(&s).compose(&self.target.law.at(x))?.compose(&a.b_map(&g))?;
        r.push_eq(format!("Yang-Baxter hexagon (probe dim {d})"), &lhs, &rhs);
        Ok(())
    }

    /// Transports a χ-coalgebra over the source to one over the target: the module becomes
    /// `AM → BM → M` and `ρ` becomes `γ ∘ ρ ∘ σ`.
    pub fn twist(&self, m: &ChiCoalgebra) -> Result<ChiCoalgebra, AlgebraError> {
        let um = &m.module.space;
        let s = self.sigma_at(um);
        let action = m.module.action.compose(&s)?;
        let rho = self.gamma_at(um).compose(&m.rho)?.compose(&s)?;
        Ok(ChiCoalgebra { module: super::Module { space: um.clone(), action }, rho })
    }

    /// Both mixed laws are valid.
    pub fn check_endpoints(&self) -> CheckReport {
        let mut r = CheckReport::new();
        for (tag, m) in [("source", &self.source), ("target", &self.target)] {
            for x in m.adj.probe_spaces() {
                let mut sub = CheckReport::new();
                if let Err(e) = mixed_squares(&m.adj, &m.ext, &m.law, &x, &mut sub) {
                    sub.push("mixed law", false, Some(e.to_string()));
                }
                r.extend_prefixed(&format!("{tag} "), sub);
            }
        }
        r
    }
}

/// `σ(x⊗h) = S(h)⊗x` with `γ = id`: from left modules with the codiagonal law to right
/// modules with the Yetter–Drinfeld braiding.
pub fn antipode_one_cell(h: &HopfData) -> Result<OneCell, AlgebraError> {
    let source = MixedLaw::from(&super::codiagonal_context(h)?);
    let target = MixedLaw::from(&super::yd_context(h));
    Ok(OneCell {
        name: "antipode".into(),
        source,
        target,
        sigma: h.antipode.clone(),
        gamma: h.id(),
    })
}

/// `σ(h⊗x) = x⊗S⁻¹(h)` with `γ = id`, in the opposite direction.
pub fn inverse_antipode_one_cell(h: &HopfData) -> Result<OneCell, AlgebraError> {
    let source = MixedLaw::from(&super::yd_context(h));
    let target = MixedLaw::from(&super::codiagonal_context(h)?);
    Ok(OneCell {
        name: "inverse antipode".into(),
        source,
        target,
        sigma: h.antipode_inv().clone(),
        gamma: h.id(),
    })
}

pub fn check_yang_baxter(cell: &OneCell) -> CheckReport {
    cell.check()
}
